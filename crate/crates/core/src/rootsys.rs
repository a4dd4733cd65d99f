//! Root systems of the simple Lie superalgebras, with the ambient sum rules
//! used for psl(n|n) and for the special Cartan-type families.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rootset::{RootSet, MAX_ROOTS};
use crate::weight::{basis, BasisLabel, Weight, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Gl { m: u32, n: u32 },
    Sl { m: u32, n: u32 },
    Psl { n: u32 },
    /// osp(m|2n); the shape depends on the parity of `m`.
    Osp { m: u32, n: u32 },
    D21a,
    F4,
    G3,
    Psq { n: u32 },
    P { n: u32 },
    W { n: u32 },
    S { n: u32 },
    SPrime { n: u32 },
    H { n: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ambient {
    SelfAmbient,
    GlLift,
    WLift,
}

impl Ambient {
    pub fn tag(self) -> &'static str {
        match self {
            Ambient::SelfAmbient => "self",
            Ambient::GlLift => "gl_lift",
            Ambient::WLift => "W_lift",
        }
    }
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::Gl { .. } => "gl",
            Family::Sl { .. } => "sl",
            Family::Psl { .. } => "psl",
            Family::Osp { .. } => "osp",
            Family::D21a => "D21a",
            Family::F4 => "F4",
            Family::G3 => "G3",
            Family::Psq { .. } => "psq",
            Family::P { .. } => "p",
            Family::W { .. } => "W",
            Family::S { .. } => "S",
            Family::SPrime { .. } => "Sprime",
            Family::H { .. } => "H",
        }
    }

    pub fn params(&self) -> Vec<u32> {
        match *self {
            Family::Gl { m, n } | Family::Sl { m, n } | Family::Osp { m, n } => vec![m, n],
            Family::Psl { n }
            | Family::Psq { n }
            | Family::P { n }
            | Family::W { n }
            | Family::S { n }
            | Family::SPrime { n }
            | Family::H { n } => vec![n],
            Family::D21a | Family::F4 | Family::G3 => vec![],
        }
    }

    /// Parses a family tag with its integer parameters.
    ///
    /// Accepted osp aliases: `osp` (m, n) for osp(m|2n); `osp1` (n) for
    /// osp(1|2n); `osp2` (n) for osp(2|2n); `osp_odd` (m, n) for
    /// osp(2m+1|2n); `osp_even` (m, n) for osp(2m|2n).
    pub fn from_tag(tag: &str, params: &[u32]) -> Result<Family> {
        let need = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::ParamOutOfRange {
                    family: tag.to_string(),
                    bound: format!("expected {k} parameter(s), got {}", params.len()),
                })
            }
        };
        let f = match tag {
            "gl" => {
                need(2)?;
                Family::Gl { m: params[0], n: params[1] }
            }
            "sl" => {
                need(2)?;
                Family::Sl { m: params[0], n: params[1] }
            }
            "psl" => {
                need(1)?;
                Family::Psl { n: params[0] }
            }
            "osp" => {
                need(2)?;
                Family::Osp { m: params[0], n: params[1] }
            }
            "osp1" => {
                need(1)?;
                Family::Osp { m: 1, n: params[0] }
            }
            "osp2" => {
                need(1)?;
                Family::Osp { m: 2, n: params[0] }
            }
            "osp_odd" => {
                need(2)?;
                Family::Osp { m: 2 * params[0] + 1, n: params[1] }
            }
            "osp_even" => {
                need(2)?;
                Family::Osp { m: 2 * params[0], n: params[1] }
            }
            "D21a" => {
                need(0)?;
                Family::D21a
            }
            "F4" => {
                need(0)?;
                Family::F4
            }
            "G3" => {
                need(0)?;
                Family::G3
            }
            "psq" => {
                need(1)?;
                Family::Psq { n: params[0] }
            }
            "p" => {
                need(1)?;
                Family::P { n: params[0] }
            }
            "W" => {
                need(1)?;
                Family::W { n: params[0] }
            }
            "S" => {
                need(1)?;
                Family::S { n: params[0] }
            }
            "Sprime" => {
                need(1)?;
                Family::SPrime { n: params[0] }
            }
            "H" => {
                need(1)?;
                Family::H { n: params[0] }
            }
            _ => return Err(Error::UnknownFamily(tag.to_string())),
        };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |b: &str| {
            Err(Error::ParamOutOfRange { family: self.tag().to_string(), bound: b.to_string() })
        };
        match *self {
            Family::Gl { m, n } if m < 1 || n < 1 => bad("m, n >= 1"),
            Family::Sl { m, n } if m < 1 || n < 1 => bad("m, n >= 1"),
            Family::Sl { m, n } if m == n => bad("m != n (use psl for m = n)"),
            Family::Psl { n } if n < 2 => bad("n >= 2"),
            Family::Osp { m, n } if m < 1 || n < 1 => bad("osp(m|2n) needs m >= 1, n >= 1"),
            Family::Psq { n } if n < 3 => bad("n >= 3"),
            Family::P { n } if n < 2 => bad("n >= 2"),
            Family::W { n } if n < 2 => bad("n >= 2"),
            Family::S { n } if n < 3 => bad("n >= 3"),
            Family::SPrime { n } if n < 4 || n % 2 == 1 => bad("n even, n >= 4"),
            Family::H { n } if n < 5 => bad("n >= 5"),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Gl { m, n } => write!(f, "gl({m}|{n})"),
            Family::Sl { m, n } => write!(f, "sl({m}|{n})"),
            Family::Psl { n } => write!(f, "psl({n}|{n})"),
            Family::Osp { m, n } => write!(f, "osp({m}|{})", 2 * n),
            Family::D21a => write!(f, "D(2,1;a)"),
            Family::F4 => write!(f, "F(4)"),
            Family::G3 => write!(f, "G(3)"),
            Family::Psq { n } => write!(f, "psq({n})"),
            Family::P { n } => write!(f, "p({n})"),
            Family::W { n } => write!(f, "W({n})"),
            Family::S { n } => write!(f, "S({n})"),
            Family::SPrime { n } => write!(f, "S'({n})"),
            Family::H { n } => write!(f, "H({n})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub weight: Weight,
    pub even_dim: u32,
    pub odd_dim: u32,
}

impl Root {
    pub fn is_even(&self) -> bool {
        self.even_dim > 0
    }
    pub fn is_odd(&self) -> bool {
        self.odd_dim > 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SumOutcome {
    InDelta(usize),
    InAmbientOnly(Weight),
    NotARoot,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub family: Family,
    pub basis: Vec<BasisLabel>,
    pub roots: Vec<Root>,
    pub symmetric: bool,
    pub ambient: Ambient,
    /// Coordinate lifts of each root. A single entry except for psl(2|2),
    /// whose odd roots have two gl(2|2) lifts.
    pub lifts: Vec<Vec<Weight>>,
    pub warnings: Vec<String>,
    index: HashMap<Weight, usize>,
    ambient_roots: HashSet<Weight>,
    sums: Vec<Option<u16>>,
}

/// Collects weights with parity multiplicities into canonical order.
#[derive(Default)]
struct Collector(BTreeMap<Weight, (u32, u32)>);

impl Collector {
    fn add(&mut self, w: Weight, even: u32, odd: u32) {
        if even + odd == 0 {
            return;
        }
        assert!(!w.is_zero(), "zero weight is never a root");
        let e = self.0.entry(w).or_insert((0, 0));
        e.0 += even;
        e.1 += odd;
    }
    fn even(&mut self, w: Weight) {
        self.add(w, 1, 0)
    }
    fn odd(&mut self, w: Weight) {
        self.add(w, 0, 1)
    }
    fn roots(self) -> Vec<Root> {
        self.0
            .into_iter()
            .map(|(weight, (even_dim, odd_dim))| Root { weight, even_dim, odd_dim })
            .collect()
    }
}

fn lin(dim: usize, terms: &[(usize, i64)]) -> Weight {
    let mut w = Weight::zero(dim);
    for &(i, c) in terms {
        w.0[i] += Q::from_integer(c);
    }
    w
}

fn half(dim: usize, terms: &[(usize, i64)]) -> Weight {
    lin(dim, terms).scale(Q::new(1, 2))
}

/// gl(m|n) roots in coordinates (ε_1..ε_m, δ_1..δ_n).
fn gl_roots(m: usize, n: usize) -> Collector {
    let d = m + n;
    let mut c = Collector::default();
    for i in 0..m {
        for j in 0..m {
            if i != j {
                c.even(lin(d, &[(i, 1), (j, -1)]));
            }
        }
    }
    for k in 0..n {
        for l in 0..n {
            if k != l {
                c.even(lin(d, &[(m + k, 1), (m + l, -1)]));
            }
        }
    }
    for i in 0..m {
        for k in 0..n {
            c.odd(lin(d, &[(i, 1), (m + k, -1)]));
            c.odd(lin(d, &[(i, -1), (m + k, 1)]));
        }
    }
    c
}

fn osp_roots(big_m: usize, n: usize) -> (Vec<BasisLabel>, Collector) {
    let m = big_m / 2;
    let odd_m = big_m % 2 == 1;
    let d = m + n;
    let mut c = Collector::default();
    for i in 0..m {
        for j in i + 1..m {
            for (s, t) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                c.even(lin(d, &[(i, s), (j, t)]));
            }
        }
        if odd_m {
            c.even(lin(d, &[(i, 1)]));
            c.even(lin(d, &[(i, -1)]));
        }
    }
    for k in 0..n {
        for l in k + 1..n {
            for (s, t) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                c.even(lin(d, &[(m + k, s), (m + l, t)]));
            }
        }
        c.even(lin(d, &[(m + k, 2)]));
        c.even(lin(d, &[(m + k, -2)]));
        if odd_m {
            c.odd(lin(d, &[(m + k, 1)]));
            c.odd(lin(d, &[(m + k, -1)]));
        }
        for i in 0..m {
            for (s, t) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                c.odd(lin(d, &[(i, s), (m + k, t)]));
            }
        }
    }
    (basis(m as u32, n as u32, 0), c)
}

/// ε_I weight over n slots for a bitmask `I`.
fn eps_mask(n: usize, mask: u32) -> Weight {
    let mut w = Weight::zero(n);
    for i in 0..n {
        if mask >> i & 1 == 1 {
            w.0[i] = Q::from_integer(1);
        }
    }
    w
}

/// W(n) roots; `special` removes ε_I with |I| = n−1 and lowers ε_I dimensions by one.
fn cartan_type_roots(n: usize, special: bool) -> Collector {
    let mut c = Collector::default();
    let full = (1u32 << n) - 1;
    for j in 0..n {
        for mask in 0..=full {
            if mask >> j & 1 == 1 {
                continue;
            }
            let mut w = eps_mask(n, mask);
            w.0[j] -= Q::from_integer(1);
            // ξ_I ∂_j has parity |I| + 1
            if mask.count_ones() % 2 == 1 {
                c.even(w);
            } else {
                c.odd(w);
            }
        }
    }
    for mask in 1..full {
        let size = mask.count_ones() as usize;
        let dim = if special { n - size - 1 } else { n - size } as u32;
        if dim == 0 {
            continue;
        }
        if size % 2 == 0 {
            c.add(eps_mask(n, mask), dim, 0);
        } else {
            c.add(eps_mask(n, mask), 0, dim);
        }
    }
    c
}

fn hamiltonian_roots(n: usize) -> Collector {
    let l = n / 2;
    let odd_n = n % 2 == 1;
    let mut c = Collector::default();
    // each index in [1,l] lies in I, in J, or in neither
    let total = 3usize.pow(l as u32);
    for code in 1..total {
        let mut w = Weight::zero(l);
        let mut x = code;
        let mut support = 0;
        for i in 0..l {
            match x % 3 {
                1 => {
                    w.0[i] = Q::from_integer(1);
                    support += 1;
                }
                2 => {
                    w.0[i] = Q::from_integer(-1);
                    support += 1;
                }
                _ => {}
            }
            x /= 3;
        }
        let free = 1u32 << (l - support);
        let (even, odd) = if odd_n {
            (free, free)
        } else if support % 2 == 0 {
            (free, 0)
        } else {
            (0, free)
        };
        c.add(w, even, odd);
    }
    c
}

impl RootSystem {
    pub fn build(family: Family) -> Result<RootSystem> {
        family.validate()?;
        let mut warnings = Vec::new();
        let mut ambient = Ambient::SelfAmbient;
        let mut ambient_roots = HashSet::new();
        let mut lifts: Option<Vec<Vec<Weight>>> = None;
        let (basis_labels, roots) = match family {
            Family::Gl { m, n } | Family::Sl { m, n } => {
                (basis(m, n, 0), gl_roots(m as usize, n as usize).roots())
            }
            Family::Psl { n } => {
                ambient = Ambient::GlLift;
                let gl = gl_roots(n as usize, n as usize).roots();
                let mut classes: BTreeMap<Weight, Vec<Root>> = BTreeMap::new();
                for r in gl {
                    ambient_roots.insert(r.weight.clone());
                    classes.entry(psl_key(&r.weight)).or_default().push(r);
                }
                let mut rs: Vec<(Root, Vec<Weight>)> = classes
                    .into_values()
                    .map(|members| {
                        let canonical =
                            members.iter().map(|r| r.weight.clone()).max().expect("nonempty");
                        let root = Root {
                            weight: canonical,
                            even_dim: members.iter().map(|r| r.even_dim).sum(),
                            odd_dim: members.iter().map(|r| r.odd_dim).sum(),
                        };
                        let mut ls: Vec<Weight> = members.into_iter().map(|r| r.weight).collect();
                        ls.sort();
                        ls.reverse();
                        (root, ls)
                    })
                    .collect();
                rs.sort_by(|a, b| a.0.weight.cmp(&b.0.weight));
                let (roots, ls): (Vec<Root>, Vec<Vec<Weight>>) = rs.into_iter().unzip();
                lifts = Some(ls);
                (basis(n, n, 0), roots)
            }
            Family::Osp { m, n } => {
                let (b, c) = osp_roots(m as usize, n as usize);
                (b, c.roots())
            }
            Family::D21a => {
                let mut c = Collector::default();
                for i in 0..3 {
                    c.even(lin(3, &[(i, 1)]));
                    c.even(lin(3, &[(i, -1)]));
                }
                for s in signs(3) {
                    c.odd(half(3, &[(0, s[0]), (1, s[1]), (2, s[2])]));
                }
                (basis(0, 0, 3), c.roots())
            }
            Family::F4 => {
                let mut c = Collector::default();
                for i in 0..3 {
                    for j in i + 1..3 {
                        for (s, t) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                            c.even(lin(4, &[(i, s), (j, t)]));
                        }
                    }
                    c.even(lin(4, &[(i, 1)]));
                    c.even(lin(4, &[(i, -1)]));
                }
                c.even(lin(4, &[(3, 1)]));
                c.even(lin(4, &[(3, -1)]));
                for s in signs(4) {
                    c.odd(half(4, &[(0, s[0]), (1, s[1]), (2, s[2]), (3, s[3])]));
                }
                (basis(3, 0, 1), c.roots())
            }
            Family::G3 => {
                // basis (ε1, ε2, γ) with ε3 = −ε1 − ε2
                let eps = [lin(3, &[(0, 1)]), lin(3, &[(1, 1)]), lin(3, &[(0, -1), (1, -1)])];
                let gamma = lin(3, &[(2, 1)]);
                let half_gamma = gamma.scale(Q::new(1, 2));
                let mut c = Collector::default();
                for i in 0..3 {
                    for j in 0..3 {
                        if i != j {
                            c.even(&eps[i] - &eps[j]);
                        }
                    }
                    c.even(eps[i].clone());
                    c.even(-&eps[i]);
                    for e in [eps[i].clone(), -&eps[i]] {
                        c.odd(&e + &half_gamma);
                        c.odd(&e - &half_gamma);
                    }
                }
                c.even(gamma.clone());
                c.even(-&gamma);
                c.odd(half_gamma.clone());
                c.odd(-&half_gamma);
                (basis(2, 0, 1), c.roots())
            }
            Family::Psq { n } => {
                let n = n as usize;
                let mut c = Collector::default();
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            c.add(lin(n, &[(i, 1), (j, -1)]), 1, 1);
                        }
                    }
                }
                (basis(n as u32, 0, 0), c.roots())
            }
            Family::P { n } => {
                if n == 2 {
                    warnings.push(
                        "p(2) lies below the simple range n >= 3; roots are taken in the \
                         coordinates of the full diagonal torus"
                            .to_string(),
                    );
                }
                let n = n as usize;
                let mut c = Collector::default();
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            c.even(lin(n, &[(i, 1), (j, -1)]));
                        }
                    }
                    for j in i..n {
                        c.odd(lin(n, &[(i, 1), (j, 1)]));
                        if i != j {
                            c.odd(lin(n, &[(i, -1), (j, -1)]));
                        }
                    }
                }
                (basis(n as u32, 0, 0), c.roots())
            }
            Family::W { n } => {
                (basis(n, 0, 0), cartan_type_roots(n as usize, false).roots())
            }
            Family::S { n } | Family::SPrime { n } => {
                ambient = Ambient::WLift;
                for r in cartan_type_roots(n as usize, false).roots() {
                    ambient_roots.insert(r.weight);
                }
                (basis(n, 0, 0), cartan_type_roots(n as usize, true).roots())
            }
            Family::H { n } => (basis(n / 2, 0, 0), hamiltonian_roots(n as usize).roots()),
        };
        let lifts = lifts.unwrap_or_else(|| roots.iter().map(|r| vec![r.weight.clone()]).collect());
        let mut index = HashMap::new();
        for (i, ls) in lifts.iter().enumerate() {
            for w in ls {
                index.insert(w.clone(), i);
            }
            index.insert(roots[i].weight.clone(), i);
        }
        let symmetric = roots.iter().all(|r| index.contains_key(&-&r.weight));
        let mut rs = RootSystem {
            family,
            basis: basis_labels,
            roots,
            symmetric,
            ambient,
            lifts,
            warnings,
            index,
            ambient_roots,
            sums: Vec::new(),
        };
        if rs.roots.len() > MAX_ROOTS {
            return Err(Error::CapExceeded(format!(
                "{} has {} roots; at most {MAX_ROOTS} are supported",
                family,
                rs.roots.len()
            )));
        }
        let n = rs.len();
        let mut sums = vec![None; n * n];
        for a in 0..n {
            for b in 0..n {
                if let SumOutcome::InDelta(k) = rs.compute_sum(a, b) {
                    sums[a * n + b] = Some(k as u16);
                }
            }
        }
        rs.sums = sums;
        Ok(rs)
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn weight(&self, i: usize) -> &Weight {
        &self.roots[i].weight
    }

    pub fn full(&self) -> RootSet {
        RootSet::full(self.len())
    }

    /// Index of the root with this weight (any lift for psl).
    pub fn index_of(&self, w: &Weight) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn index_of_str(&self, s: &str) -> Result<usize> {
        let w = Weight::parse(s, &self.basis)?;
        self.index_of(&w).ok_or_else(|| Error::NotARoot(s.to_string()))
    }

    /// Index of −α when it is a root.
    pub fn neg(&self, i: usize) -> Option<usize> {
        self.index_of(&-&self.roots[i].weight)
    }

    pub fn root_str(&self, i: usize) -> String {
        self.roots[i].weight.format(&self.basis)
    }

    pub fn fmt_set(&self, s: RootSet) -> Vec<String> {
        s.iter().map(|i| self.root_str(i)).collect()
    }

    /// Subset of roots satisfying a coordinate predicate (evaluated on every lift).
    pub fn select<F: Fn(&Weight) -> bool>(&self, pred: F) -> RootSet {
        let mut s = RootSet::EMPTY;
        for (i, ls) in self.lifts.iter().enumerate() {
            if ls.iter().any(&pred) {
                s.insert(i);
            }
        }
        s
    }

    pub fn set_from_weights(&self, ws: &[Weight]) -> Result<RootSet> {
        let mut s = RootSet::EMPTY;
        for w in ws {
            let i = self
                .index_of(w)
                .ok_or_else(|| Error::NotARoot(w.format(&self.basis)))?;
            s.insert(i);
        }
        Ok(s)
    }

    pub fn even_roots(&self) -> RootSet {
        RootSet::from_indices((0..self.len()).filter(|&i| self.roots[i].is_even()))
    }

    pub fn odd_roots(&self) -> RootSet {
        RootSet::from_indices((0..self.len()).filter(|&i| self.roots[i].is_odd()))
    }

    /// Sum of two roots classified in the ambient coordinate space.
    pub fn ambient_sum(&self, a: usize, b: usize) -> Result<SumOutcome> {
        if a >= self.len() {
            return Err(Error::Index(a));
        }
        if b >= self.len() {
            return Err(Error::Index(b));
        }
        Ok(self.compute_sum(a, b))
    }

    fn compute_sum(&self, a: usize, b: usize) -> SumOutcome {
        if self.ambient == Ambient::GlLift {
            for la in &self.lifts[a] {
                for lb in &self.lifts[b] {
                    if let Some(&k) = self.index.get(&(la + lb)) {
                        return SumOutcome::InDelta(k);
                    }
                }
            }
            return SumOutcome::NotARoot;
        }
        let s = &self.roots[a].weight + &self.roots[b].weight;
        if let Some(&k) = self.index.get(&s) {
            SumOutcome::InDelta(k)
        } else if self.ambient_roots.contains(&s) {
            SumOutcome::InAmbientOnly(s)
        } else {
            SumOutcome::NotARoot
        }
    }

    /// Index of α + β when the family's closure rule places it in Δ.
    #[inline]
    pub fn sum_index(&self, a: usize, b: usize) -> Option<usize> {
        self.sums[a * self.len() + b].map(|k| k as usize)
    }

    /// True when the sum is a root of the ambient system (gl(n|n) or W(n)).
    pub fn sum_in_ambient(&self, a: usize, b: usize) -> bool {
        !matches!(self.compute_sum(a, b), SumOutcome::NotARoot)
    }

    /// Membership of α + β in Δ after the quotient Σε = Σδ (psl only).
    pub fn projected_sum_in_delta(&self, a: usize, b: usize) -> Result<bool> {
        if self.ambient != Ambient::GlLift {
            return Err(Error::Unsupported(format!(
                "projected_sum_in_delta on {}",
                self.family
            )));
        }
        let s = &self.roots[a].weight + &self.roots[b].weight;
        let key = psl_key(&s);
        Ok(self.lifts.iter().any(|ls| psl_key(&ls[0]) == key))
    }

    /// Δ ∪ (−Δ): Δ in its own order, followed by the remaining negatives in canonical order.
    pub fn symmetrize(&self) -> Symmetrized {
        let n = self.len();
        let mut weights: Vec<Weight> = self.roots.iter().map(|r| r.weight.clone()).collect();
        let mut extra: Vec<Weight> = self
            .roots
            .iter()
            .map(|r| -&r.weight)
            .filter(|w| self.index_of(w).is_none())
            .collect();
        extra.sort();
        extra.dedup();
        weights.extend(extra);
        let pos: HashMap<Weight, usize> =
            weights.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let total = weights.len();
        let neg: Vec<usize> = (0..total)
            .map(|i| {
                if i < n {
                    self.neg(i).unwrap_or_else(|| pos[&-&weights[i]])
                } else {
                    self.index_of(&-&weights[i]).expect("negative of a root")
                }
            })
            .collect();
        let mut sums = vec![None; total * total];
        for a in 0..total {
            for b in 0..total {
                let k = if a < n && b < n && self.ambient == Ambient::GlLift {
                    self.sum_index(a, b)
                } else {
                    pos.get(&(&weights[a] + &weights[b])).copied()
                };
                sums[a * total + b] = k.map(|k| k as u16);
            }
        }
        Symmetrized { n_delta: n, weights, neg, sums }
    }
}

/// Δ ∪ (−Δ) with negation and sum tables.
#[derive(Clone, Debug)]
pub struct Symmetrized {
    pub n_delta: usize,
    pub weights: Vec<Weight>,
    pub neg: Vec<usize>,
    sums: Vec<Option<u16>>,
}

impl Symmetrized {
    pub fn len(&self) -> usize {
        self.weights.len()
    }
    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
    pub fn delta_mask(&self) -> RootSet {
        RootSet::full(self.n_delta)
    }
    #[inline]
    pub fn sum_index(&self, a: usize, b: usize) -> Option<usize> {
        self.sums[a * self.len() + b].map(|k| k as usize)
    }
}

/// Canonical representative of a gl(n|n) weight modulo Σε − Σδ.
fn psl_key(w: &Weight) -> Weight {
    let n = w.dim() / 2;
    let c = w.0[0];
    let mut out = w.clone();
    if c.is_zero() {
        return out;
    }
    for i in 0..n {
        out.0[i] -= c;
        out.0[n + i] += c;
    }
    out
}

fn signs(k: usize) -> Vec<Vec<i64>> {
    (0..1u32 << k)
        .map(|m| (0..k).map(|i| if m >> i & 1 == 1 { -1 } else { 1 }).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(f: Family) -> RootSystem {
        RootSystem::build(f).unwrap()
    }

    #[test]
    fn small_counts() {
        let sl = rs(Family::Sl { m: 2, n: 1 });
        assert_eq!(sl.len(), 6);
        assert!(sl.symmetric);
        let osp = rs(Family::Osp { m: 1, n: 1 });
        assert_eq!(osp.fmt_set(osp.full()), vec!["-2d1", "-d1", "d1", "2d1"]);
        let w = rs(Family::W { n: 3 });
        assert_eq!(w.len(), 18);
        assert!(!w.symmetric);
        let p = rs(Family::P { n: 2 });
        assert_eq!(p.len(), 6);
        assert!(!p.symmetric);
        assert_eq!(p.warnings.len(), 1);
        assert_eq!(rs(Family::F4).len(), 36);
        assert_eq!(rs(Family::G3).len(), 28);
        assert_eq!(rs(Family::D21a).len(), 14);
        assert_eq!(rs(Family::H { n: 6 }).len(), 26);
        assert_eq!(rs(Family::Psl { n: 3 }).len(), 30);
        assert_eq!(rs(Family::Psl { n: 2 }).len(), 8);
    }

    #[test]
    fn psl22_odd_classes_have_two_lifts() {
        let r = rs(Family::Psl { n: 2 });
        let i = r.index_of_str("e1-d1").unwrap();
        assert_eq!(r.lifts[i].len(), 2);
        assert_eq!((r.roots[i].even_dim, r.roots[i].odd_dim), (0, 2));
        assert_eq!(r.index_of_str("-e2+d2").unwrap(), i);
    }

    #[test]
    fn sum_outcomes() {
        let r = rs(Family::Psl { n: 3 });
        let a = r.index_of_str("e1-d1").unwrap();
        let b = r.index_of_str("e2-d2").unwrap();
        assert_eq!(r.ambient_sum(a, b).unwrap(), SumOutcome::NotARoot);
        assert!(r.projected_sum_in_delta(a, b).unwrap());

        let r = rs(Family::Sl { m: 2, n: 1 });
        let a = r.index_of_str("e1-e2").unwrap();
        let b = r.index_of_str("e2-d1").unwrap();
        let c = r.index_of_str("e1-d1").unwrap();
        assert_eq!(r.ambient_sum(a, b).unwrap(), SumOutcome::InDelta(c));
        assert!(r.projected_sum_in_delta(a, b).is_err());

        let r = rs(Family::S { n: 3 });
        let a = r.index_of_str("-e1").unwrap();
        let b = r.index_of_str("-e2").unwrap();
        assert_eq!(r.ambient_sum(a, b).unwrap(), SumOutcome::NotARoot);
        let x = r.index_of_str("e1+e2-e3").unwrap();
        let y = r.index_of_str("e3").unwrap();
        assert!(matches!(r.ambient_sum(x, y).unwrap(), SumOutcome::InAmbientOnly(_)));
    }

    #[test]
    fn psl22_projected_sums_coincide_with_lift_sums() {
        let r = rs(Family::Psl { n: 2 });
        let a = r.index_of_str("e1-d1").unwrap();
        let b = r.index_of_str("e1-d2").unwrap();
        assert!(r.projected_sum_in_delta(a, b).unwrap());
        for a in 0..r.len() {
            for b in 0..r.len() {
                if r.neg(a) == Some(b) {
                    continue;
                }
                assert_eq!(r.projected_sum_in_delta(a, b).unwrap(), r.sum_index(a, b).is_some());
            }
        }
    }

    #[test]
    fn symmetrize_shapes() {
        let p = rs(Family::P { n: 2 });
        let s = p.symmetrize();
        assert_eq!((s.len(), s.n_delta), (8, 6));
        let sl = rs(Family::Sl { m: 2, n: 1 });
        assert_eq!(sl.symmetrize().len(), 6);
        let w = rs(Family::W { n: 2 });
        assert!(w.symmetric);
        assert_eq!(w.symmetrize().len(), 6);
        let w = rs(Family::W { n: 3 });
        assert!(w.symmetrize().len() > 18);
    }

    #[test]
    fn validation_errors_name_the_bound() {
        let e = RootSystem::build(Family::Sl { m: 2, n: 2 }).unwrap_err();
        assert!(e.to_string().contains("m != n"));
        assert!(Family::from_tag("Sprime", &[5]).is_err());
        assert!(Family::from_tag("nope", &[]).is_err());
        assert_eq!(Family::from_tag("osp_odd", &[1, 1]).unwrap(), Family::Osp { m: 3, n: 1 });
    }
}
