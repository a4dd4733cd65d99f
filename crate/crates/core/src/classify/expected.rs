//! Expected cominuscule parabolic sets, one entry per orbit, written as
//! coordinate predicates for L and N⁺ so that one description serves every rank.

use num_traits::{One, Zero};

use crate::classify::modules::{LeviContext, ModuleExpr, ModuleWeights};
use crate::error::{Error, Result};
use crate::rootset::RootSet;
use crate::rootsys::{Family, RootSystem};
use crate::weight::{Weight, Q};

/// A claimed 𝔩-module structure of 𝔫⁺.
#[derive(Clone, Debug)]
pub struct ModuleClaim {
    pub text: String,
    pub expr: ModuleExpr,
    pub context: LeviContext,
    /// Compare supports only (multiplicities are recorded, not asserted).
    pub support_only: bool,
}

#[derive(Clone, Debug)]
pub struct ExpectedEntry {
    pub label: String,
    pub l: RootSet,
    pub nplus: RootSet,
    pub levi: Vec<String>,
    pub module: Option<ModuleClaim>,
}

impl ExpectedEntry {
    pub fn set(&self) -> RootSet {
        self.l.union(self.nplus)
    }
}

fn c(w: &Weight, i: usize) -> i64 {
    let x = w.0[i];
    assert!(x.is_integer(), "integral coordinate expected");
    x.to_integer()
}

fn sum(w: &Weight) -> Q {
    w.0.iter().sum()
}

fn unit(dim: usize, i: usize, s: i64) -> Weight {
    Weight::unit(dim, i, s)
}

struct Builder<'a> {
    rs: &'a RootSystem,
    out: Vec<ExpectedEntry>,
}

impl<'a> Builder<'a> {
    fn push<L, N>(&mut self, label: String, l: L, n: N, levi: &[String], module: Option<ModuleClaim>)
    where
        L: Fn(&Weight) -> bool,
        N: Fn(&Weight) -> bool,
    {
        self.out.push(ExpectedEntry {
            label,
            l: self.rs.select(l),
            nplus: self.rs.select(n),
            levi: levi.to_vec(),
            module,
        });
    }
}

fn claim(text: String, expr: ModuleExpr, mods: Vec<(String, ModuleWeights)>) -> Option<ModuleClaim> {
    Some(ModuleClaim { text, expr, context: mods.into_iter().collect(), support_only: false })
}

/// Positions of the +1 and −1 coordinates of a gl-type root ε_a − ε_b.
fn gl_ends(w: &Weight) -> (usize, usize) {
    let p = (0..w.dim()).find(|&i| c(w, i) == 1).expect("positive end");
    let q = (0..w.dim()).find(|&i| c(w, i) == -1).expect("negative end");
    (p, q)
}

/// P(m0|n0) for gl-type coordinates (ε_1..ε_m, δ_1..δ_n).
fn sl_type(b: &mut Builder, m: usize, m0: usize, n0: usize, levi: &[String], module: Option<ModuleClaim>) {
    let first = move |pos: usize| if pos < m { pos < m0 } else { pos - m < n0 };
    b.push(
        format!("P({m0}|{n0})"),
        move |w| {
            let (p, q) = gl_ends(w);
            first(p) == first(q)
        },
        move |w| {
            let (p, q) = gl_ends(w);
            first(p) && !first(q)
        },
        levi,
        module,
    );
}

fn sl_claim(m: usize, n: usize, m0: usize, n0: usize) -> Option<ModuleClaim> {
    let d = m + n;
    let a = format!("V1^{{{m0}|{n0}}}");
    let bname = format!("V2^{{{}|{}}}", m - m0, n - n0);
    let va = ModuleWeights::from_parts(
        &(0..m0).map(|i| unit(d, i, 1)).collect::<Vec<_>>(),
        &(0..n0).map(|k| unit(d, m + k, 1)).collect::<Vec<_>>(),
    );
    let vb = ModuleWeights::from_parts(
        &(m0..m).map(|i| unit(d, i, 1)).collect::<Vec<_>>(),
        &(n0..n).map(|k| unit(d, m + k, 1)).collect::<Vec<_>>(),
    );
    claim(
        format!("{a} (x) ({bname})*"),
        ModuleExpr::module(&a).tensor(ModuleExpr::module(&bname).dual()),
        vec![(a, va), (bname, vb)],
    )
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum PRoot {
    /// ε_a − ε_b
    Even(usize, usize),
    /// ε_a + ε_b with a ≤ b
    Plus(usize, usize),
    /// −ε_a − ε_b with a < b
    Minus(usize, usize),
}

fn p_root(w: &Weight) -> PRoot {
    let nz: Vec<(usize, i64)> = (0..w.dim()).map(|i| (i, c(w, i))).filter(|x| x.1 != 0).collect();
    match nz.as_slice() {
        [(a, 2)] => PRoot::Plus(*a, *a),
        [(a, 1), (b, 1)] => PRoot::Plus(*a, *b),
        [(a, -1), (b, -1)] => PRoot::Minus(*a, *b),
        [(a, 1), (b, -1)] => PRoot::Even(*a, *b),
        [(a, -1), (b, 1)] => PRoot::Even(*b, *a),
        _ => panic!("not a root of p(n)"),
    }
}

/// A root of W(n) or S(n): ε_I − ε_j, or ε_I when `j` is `None`.
struct WRoot {
    i: u32,
    j: Option<usize>,
}

fn w_root(w: &Weight) -> WRoot {
    let mut i = 0u32;
    let mut j = None;
    for k in 0..w.dim() {
        match c(w, k) {
            1 => i |= 1 << k,
            -1 => j = Some(k),
            _ => {}
        }
    }
    WRoot { i, j }
}

/// L_{W(n)}(n0), N⁺_{W(n)}(n0), N⁻_{W(n)}(n0) with 0-based split at `n0`.
fn w_l(r: &WRoot, n0: usize) -> bool {
    let low: u32 = (1 << n0) - 1;
    let high_part = r.i & !low;
    match r.j {
        None => high_part == 0,
        Some(j) if j < n0 => high_part == 0,
        Some(_) => high_part.count_ones() == 1,
    }
}

fn w_nplus(r: &WRoot, n0: usize) -> bool {
    let low: u32 = (1 << n0) - 1;
    matches!(r.j, Some(j) if j >= n0 && r.i & !low == 0)
}

fn w_nminus(r: &WRoot, n0: usize) -> bool {
    let low: u32 = (1 << n0) - 1;
    let high_part = r.i & !low;
    match r.j {
        None => high_part != 0,
        Some(j) if j < n0 => high_part != 0,
        Some(_) => high_part.count_ones() >= 2,
    }
}

fn eps_mask(n: usize, mask: u32) -> Weight {
    Weight::from_ints(&(0..n).map(|k| (mask >> k & 1) as i64).collect::<Vec<_>>())
}

/// ⋀(ξ_k : k ∈ vars): weight ε_I with parity |I|.
fn grassmann_weights(n: usize, vars: u32) -> ModuleWeights {
    let mut m = ModuleWeights::default();
    let mut sub = vars;
    loop {
        let p = sub.count_ones() % 2;
        m.add(eps_mask(n, sub), (p == 0) as u32, p);
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & vars;
    }
    m
}

/// W(ξ_k : k < k0): basis ξ_A ∂_j, weight ε_A − ε_j, parity |A| + 1.
fn w_algebra_weights(n: usize, k0: usize) -> ModuleWeights {
    let mut m = ModuleWeights::default();
    let vars: u32 = (1 << k0) - 1;
    for j in 0..k0 {
        let mut a = vars;
        loop {
            let mut w = eps_mask(n, a);
            w.0[j] -= Q::one();
            let p = (a.count_ones() + 1) % 2;
            m.add(w, (p == 0) as u32, p);
            if a == 0 {
                break;
            }
            a = (a - 1) & vars;
        }
    }
    m
}

fn cartan_type(b: &mut Builder, n: usize, special: bool) {
    let wrap = |e: ModuleExpr| if special { ModuleExpr::IntersectSpecial(Box::new(e), n) } else { e };
    let cap = if special { format!(" cap S({n})") } else { String::new() };
    for n0 in 0..n {
        let lam = format!("L(xi_1..xi_{n0})");
        let v = format!("V^{}", n - n0);
        let v_w = ModuleWeights::from_parts(&[], &(n0..n).map(|j| unit(n, j, 1)).collect::<Vec<_>>());
        let m = claim(
            format!("{lam} (x) ({v})*{cap}"),
            wrap(ModuleExpr::module(&lam).tensor(ModuleExpr::module(&v).dual())),
            vec![(lam.clone(), grassmann_weights(n, (1 << n0) - 1)), (v, v_w)],
        );
        b.push(
            format!("P({n0})"),
            move |w| w_l(&w_root(w), n0),
            move |w| w_nplus(&w_root(w), n0),
            &[format!("W({n0}) |x (L({n0}) (x) gl({})){cap}", n - n0)],
            m,
        );
    }
    let n0 = n - 1;
    let wn = format!("W(xi_1..xi_{n0})");
    let top = format!("L(xi_{n})_>=1");
    let m = claim(
        format!("{wn} (x) {top}{cap}"),
        wrap(ModuleExpr::module(&wn).tensor(ModuleExpr::module(&top))),
        vec![
            (wn.clone(), w_algebra_weights(n, n0)),
            (top.clone(), ModuleWeights::from_parts(&[], &[unit(n, n0, 1)])),
        ],
    );
    b.push(
        format!("P-({n0})"),
        move |w| w_l(&w_root(w), n0),
        move |w| w_nminus(&w_root(w), n0),
        &[format!("W({n0}) |x (L({n0}) (x) gl(1)){cap}")],
        m,
    );
}

/// Weight of the η-coordinate `a` of H(n): ε_a, −ε_{a−l}, or 0 for the self-paired one.
fn eta_weight(n: usize, a: usize) -> Weight {
    let l = n / 2;
    if a < l {
        unit(l, a, 1)
    } else if a < 2 * l {
        unit(l, a - l, -1)
    } else {
        Weight::zero(l)
    }
}

/// D_g for monomials g of degree ≥ 1 in the η-variables other than η_1, η_1*.
fn htilde_weights(n: usize) -> ModuleWeights {
    let l = n / 2;
    let vars: Vec<usize> = (0..n).filter(|&a| a != 0 && a != l).collect();
    let mut m = ModuleWeights::default();
    for mask in 1u32..1 << vars.len() {
        let mut w = Weight::zero(l);
        for (k, &a) in vars.iter().enumerate() {
            if mask >> k & 1 == 1 {
                w = &w + &eta_weight(n, a);
            }
        }
        let p = mask.count_ones() % 2;
        m.add(w, (p == 0) as u32, p);
    }
    m
}

/// One entry per orbit of cominuscule parabolic subsets of `rs`, in the
/// order the classification lists them.
pub fn expected_classification(rs: &RootSystem) -> Result<Vec<ExpectedEntry>> {
    let mut b = Builder { rs, out: Vec::new() };
    match rs.family {
        Family::Gl { .. } => {
            return Err(Error::Unsupported(format!("expected classification for {}", rs.family)))
        }
        Family::Sl { m, n } => {
            let (m, n) = (m as usize, n as usize);
            for m0 in 0..=m {
                for n0 in 0..=n {
                    if (m0, n0) == (0, 0) || (m0, n0) == (m, n) {
                        continue;
                    }
                    let levi = [
                        format!("sl({m0}|{n0})"),
                        format!("sl({}|{})", m - m0, n - n0),
                        "C".to_string(),
                    ];
                    sl_type(&mut b, m, m0, n0, &levi, sl_claim(m, n, m0, n0));
                }
            }
        }
        Family::Psl { n } => {
            let n = n as usize;
            let pairs: Vec<(usize, usize)> = if n == 2 {
                vec![(1, 1)]
            } else {
                (0..=n)
                    .flat_map(|a| (0..=n).map(move |b| (a, b)))
                    .filter(|&p| p != (0, 0) && p != (n, n))
                    .collect()
            };
            for (m0, n0) in pairs {
                let levi = [format!("sl({m0}|{n0})"), format!("sl({}|{})", n - m0, n - n0)];
                sl_type(&mut b, n, m0, n0, &levi, sl_claim(n, n, m0, n0));
            }
        }
        Family::Osp { m: big_m, n } => {
            let (mm, n) = ((big_m / 2) as usize, n as usize);
            let d = mm + n;
            let deltas = |s: i64| (0..n).map(|k| unit(d, mm + k, s)).collect::<Vec<_>>();
            let pm_deltas = || [deltas(1), deltas(-1)].concat();
            if big_m % 2 == 1 {
                if mm >= 1 {
                    let mut even: Vec<Weight> = Vec::new();
                    for j in 1..mm {
                        even.push(unit(d, j, 1));
                        even.push(unit(d, j, -1));
                    }
                    even.push(Weight::zero(d));
                    let v = format!("V^{{{}|{}}}", 2 * mm - 1, 2 * n);
                    b.push(
                        "P".into(),
                        |w| c(w, 0) == 0,
                        |w| c(w, 0) == 1,
                        &[format!("osp({}|{})", 2 * mm - 1, 2 * n), "C".into()],
                        claim(
                            v.clone(),
                            ModuleExpr::module(&v).shift(unit(d, 0, 1)),
                            vec![(v, ModuleWeights::from_parts(&even, &pm_deltas()))],
                        ),
                    );
                }
            } else if mm == 1 {
                let v = format!("V^{}", 2 * n);
                let vw = ModuleWeights::from_parts(&[], &pm_deltas());
                let levi0 = [format!("sp({})", 2 * n), "C".to_string()];
                for (label, s) in [("P(0)", 1i64), ("-P(0)", -1)] {
                    b.push(
                        label.into(),
                        |w| c(w, 0) == 0,
                        move |w| c(w, 0) == s,
                        &levi0,
                        claim(
                            v.clone(),
                            ModuleExpr::module(&v).shift(unit(d, 0, s)),
                            vec![(v.clone(), vw.clone())],
                        ),
                    );
                }
                let vs = format!("V^{{1|{n}}}");
                for (label, s) in [(format!("P({n})"), 1i64), (format!("Pbar({n})"), -1)] {
                    // τ exchanges ε_1 and −ε_1
                    let tau = move |w: &Weight| {
                        let mut x = w.clone();
                        x.0[0] *= Q::from_integer(s);
                        x
                    };
                    b.push(
                        label,
                        move |w| sum(&tau(w)).is_zero(),
                        move |w| sum(&tau(w)) == Q::from_integer(2),
                        &[format!("sl(1|{n})")],
                        claim(
                            format!("S^2 {vs}"),
                            ModuleExpr::module(&vs).sym2(),
                            vec![(vs.clone(), ModuleWeights::from_parts(&deltas(1), &[unit(d, 0, s)]))],
                        ),
                    );
                }
            } else if mm >= 2 {
                let v = format!("V^{{{mm}|{n}}}");
                for (label, s) in [(format!("P({mm})"), 1i64), (format!("Pbar({mm})"), -1)] {
                    // θ̄ exchanges ε_m and −ε_m
                    let theta = move |w: &Weight| {
                        let mut x = w.clone();
                        x.0[mm - 1] *= Q::from_integer(s);
                        x
                    };
                    let mut even: Vec<Weight> = (0..mm - 1).map(|i| unit(d, i, 1)).collect();
                    even.push(unit(d, mm - 1, s));
                    let entry_levi = [format!("gl({mm}|{n})")];
                    let m = claim(
                        format!("L^2 {v}"),
                        ModuleExpr::module(&v).wedge2(),
                        vec![(v.clone(), ModuleWeights::from_parts(&even, &deltas(1)))],
                    );
                    if s == 1 {
                        b.push(label, move |w| sum(&theta(w)).is_zero(), move |w| sum(&theta(w)) == Q::from_integer(2), &entry_levi, m);
                        let mut even: Vec<Weight> = Vec::new();
                        for j in 1..mm {
                            even.push(unit(d, j, 1));
                            even.push(unit(d, j, -1));
                        }
                        let v1 = format!("V^{{{}|{}}}", 2 * mm - 2, 2 * n);
                        b.push(
                            "P(1)".into(),
                            |w| c(w, 0) == 0,
                            |w| c(w, 0) == 1,
                            &[format!("osp({}|{})", 2 * mm - 2, 2 * n), "C".into()],
                            claim(
                                v1.clone(),
                                ModuleExpr::module(&v1).shift(unit(d, 0, 1)),
                                vec![(v1, ModuleWeights::from_parts(&even, &pm_deltas()))],
                            ),
                        );
                    } else {
                        b.push(label, move |w| sum(&theta(w)).is_zero(), move |w| sum(&theta(w)) == Q::from_integer(2), &entry_levi, m);
                    }
                }
            }
        }
        Family::D21a => {
            let h = |a: i64, b: i64, c: i64| {
                Weight(vec![Q::new(a, 2), Q::new(b, 2), Q::new(c, 2)])
            };
            let v = "V^{2|1}".to_string();
            b.push(
                "P".into(),
                |w| (w.0[0] + w.0[1]).is_zero(),
                |w| w.0[0] + w.0[1] == Q::one(),
                &["gl(2|1)".into()],
                claim(
                    format!("L^2 {v}"),
                    ModuleExpr::module(&v).wedge2(),
                    vec![(v.clone(), ModuleWeights::from_parts(&[h(1, 0, 1), h(1, 0, -1)], &[h(0, 1, 0)]))],
                ),
            );
        }
        Family::F4 | Family::G3 => {}
        Family::Psq { n } => {
            let n = n as usize;
            for n0 in 1..n {
                let a = format!("V1^{{{n0}|{n0}}}");
                let bn = format!("V2^{{{}|{}}}", n - n0, n - n0);
                let q_std = |r: std::ops::Range<usize>| {
                    let ws: Vec<Weight> = r.map(|i| unit(n, i, 1)).collect();
                    ModuleWeights::from_parts(&ws, &ws)
                };
                let mut m = claim(
                    format!("{a} (x) ({bn})*"),
                    ModuleExpr::module(&a).tensor(ModuleExpr::module(&bn).dual()),
                    vec![(a, q_std(0..n0)), (bn, q_std(n0..n))],
                );
                if let Some(m) = m.as_mut() {
                    m.support_only = true;
                }
                b.push(
                    format!("P({n0})"),
                    move |w| {
                        let (p, q) = gl_ends(w);
                        (p < n0) == (q < n0)
                    },
                    move |w| {
                        let (p, q) = gl_ends(w);
                        p < n0 && q >= n0
                    },
                    &[format!("psq({n0},{})", n - n0)],
                    m,
                );
            }
        }
        Family::P { n } => {
            let n = n as usize;
            let v = format!("V^{n}");
            let vw = ModuleWeights::from_parts(&(0..n).map(|i| unit(n, i, 1)).collect::<Vec<_>>(), &[]);
            b.push(
                "P(0)".into(),
                |w| matches!(p_root(w), PRoot::Even(..)),
                |w| matches!(p_root(w), PRoot::Plus(..)),
                &[format!("sl({n})")],
                claim(format!("S^2 {v}"), ModuleExpr::module(&v).sym2(), vec![(v.clone(), vw.clone())]),
            );
            b.push(
                "-P(0)".into(),
                |w| matches!(p_root(w), PRoot::Even(..)),
                |w| matches!(p_root(w), PRoot::Minus(..)),
                &[format!("sl({n})")],
                claim(format!("L^2 ({v})*"), ModuleExpr::module(&v).dual().wedge2(), vec![(v, vw)]),
            );
            for n0 in 1..n {
                let v = format!("V^{{{n0}|{}}}", n - n0);
                let vw = ModuleWeights::from_parts(
                    &(0..n0).map(|i| unit(n, i, 1)).collect::<Vec<_>>(),
                    &(n0..n).map(|j| unit(n, j, -1)).collect::<Vec<_>>(),
                );
                let low = move |i: usize| i < n0;
                b.push(
                    format!("P({n0})"),
                    move |w| match p_root(w) {
                        PRoot::Even(a, b) => low(a) == low(b),
                        PRoot::Plus(a, b) | PRoot::Minus(a, b) => a != b && low(a.min(b)) && !low(a.max(b)),
                    },
                    move |w| match p_root(w) {
                        PRoot::Even(a, b) => low(a) && !low(b),
                        PRoot::Plus(a, b) => low(a) && low(b),
                        PRoot::Minus(a, b) => !low(a) && !low(b),
                    },
                    &[format!("sl({n0}|{})", n - n0)],
                    claim(format!("S^2 {v}"), ModuleExpr::module(&v).sym2(), vec![(v, vw)]),
                );
            }
            let last = n - 1;
            let v = format!("V^{{{last}|{last}}}");
            let vw = ModuleWeights::from_parts(
                &(0..last).map(|i| unit(n, i, 1)).collect::<Vec<_>>(),
                &(0..last).map(|i| unit(n, i, -1)).collect::<Vec<_>>(),
            );
            b.push(
                format!("P({n})"),
                move |w| c(w, last) == 0,
                move |w| match p_root(w) {
                    PRoot::Even(_, b) => b == last,
                    PRoot::Minus(a, b) => b == last && a != last,
                    PRoot::Plus(..) => false,
                },
                &[format!("p({last})"), "C".into()],
                claim(v.clone(), ModuleExpr::module(&v).shift(unit(n, last, -1)), vec![(v, vw)]),
            );
        }
        Family::W { n } => cartan_type(&mut b, n as usize, false),
        Family::S { n } => cartan_type(&mut b, n as usize, true),
        Family::SPrime { .. } => {}
        Family::H { n } => {
            let n = n as usize;
            let l = n / 2;
            let (ht, one, eta) = (format!("H~({})", n - 2), "C".to_string(), "xi_1".to_string());
            b.push(
                "P".into(),
                |w| c(w, 0) == 0,
                |w| c(w, 0) == 1,
                &[format!("H({}) (x) L(1) + C^2", n - 2)],
                claim(
                    format!("{ht} + C"),
                    ModuleExpr::module(&ht).sum(ModuleExpr::module(&one)).tensor(ModuleExpr::module(&eta)),
                    vec![
                        (ht.clone(), htilde_weights(n)),
                        (one, ModuleWeights::from_parts(&[Weight::zero(l)], &[])),
                        (eta, ModuleWeights::from_parts(&[], &[unit(l, 0, 1)])),
                    ],
                ),
            );
        }
    }
    Ok(b.out)
}
