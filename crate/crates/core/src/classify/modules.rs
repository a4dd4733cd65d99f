//! Weight multisets of Levi modules built from standard modules by duals,
//! tensor products and super symmetric or exterior squares.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::realize::special_crosscheck;
use crate::rootset::RootSet;
use crate::rootsys::RootSystem;
use crate::weight::Weight;

/// Multiset of weights, each with its even and odd multiplicity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModuleWeights {
    pub weights: BTreeMap<Weight, (u32, u32)>,
}

impl ModuleWeights {
    pub fn add(&mut self, w: Weight, even: u32, odd: u32) {
        if even + odd == 0 {
            return;
        }
        let e = self.weights.entry(w).or_insert((0, 0));
        e.0 += even;
        e.1 += odd;
    }

    pub fn from_parts(even: &[Weight], odd: &[Weight]) -> ModuleWeights {
        let mut m = ModuleWeights::default();
        for w in even {
            m.add(w.clone(), 1, 0);
        }
        for w in odd {
            m.add(w.clone(), 0, 1);
        }
        m
    }

    /// (even, odd) superdimension.
    pub fn sdim(&self) -> (u32, u32) {
        self.weights.values().fold((0, 0), |(a, b), &(e, o)| (a + e, b + o))
    }

    /// Homogeneous basis weights with parity bits, in canonical order.
    fn basis(&self) -> Vec<(Weight, u8)> {
        let mut out = Vec::new();
        for (w, &(e, o)) in &self.weights {
            out.extend(std::iter::repeat((w.clone(), 0)).take(e as usize));
            out.extend(std::iter::repeat((w.clone(), 1)).take(o as usize));
        }
        out
    }

    fn from_basis(items: impl IntoIterator<Item = (Weight, u8)>) -> ModuleWeights {
        let mut m = ModuleWeights::default();
        for (w, p) in items {
            if p == 0 {
                m.add(w, 1, 0);
            } else {
                m.add(w, 0, 1);
            }
        }
        m
    }
}

/// A module expression. `Module` names a module declared in the context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleExpr {
    Module(String),
    Explicit(ModuleWeights),
    Dual(Box<ModuleExpr>),
    Tensor(Box<ModuleExpr>, Box<ModuleExpr>),
    SuperSym2(Box<ModuleExpr>),
    SuperWedge2(Box<ModuleExpr>),
    Sum(Box<ModuleExpr>, Box<ModuleExpr>),
    /// Adds a central character to every weight.
    Shift(Box<ModuleExpr>, Weight),
    /// Intersection of a W(n)-module made of whole root spaces with S(n):
    /// each weight keeps only the divergence-free part of its W(n) root space.
    IntersectSpecial(Box<ModuleExpr>, usize),
}

impl ModuleExpr {
    pub fn module(name: &str) -> ModuleExpr {
        ModuleExpr::Module(name.to_string())
    }
    pub fn dual(self) -> ModuleExpr {
        ModuleExpr::Dual(Box::new(self))
    }
    pub fn tensor(self, o: ModuleExpr) -> ModuleExpr {
        ModuleExpr::Tensor(Box::new(self), Box::new(o))
    }
    pub fn sym2(self) -> ModuleExpr {
        ModuleExpr::SuperSym2(Box::new(self))
    }
    pub fn wedge2(self) -> ModuleExpr {
        ModuleExpr::SuperWedge2(Box::new(self))
    }
    pub fn sum(self, o: ModuleExpr) -> ModuleExpr {
        ModuleExpr::Sum(Box::new(self), Box::new(o))
    }
    pub fn shift(self, w: Weight) -> ModuleExpr {
        ModuleExpr::Shift(Box::new(self), w)
    }
}

impl fmt::Display for ModuleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleExpr::Module(n) => f.write_str(n),
            ModuleExpr::Explicit(m) => write!(f, "<{} weights>", m.weights.len()),
            ModuleExpr::Dual(a) => write!(f, "({a})*"),
            ModuleExpr::Tensor(a, b) => write!(f, "{a} (x) {b}"),
            ModuleExpr::SuperSym2(a) => write!(f, "S^2({a})"),
            ModuleExpr::SuperWedge2(a) => write!(f, "L^2({a})"),
            ModuleExpr::Sum(a, b) => write!(f, "{a} + {b}"),
            ModuleExpr::Shift(a, _) => write!(f, "{a} [shifted]"),
            ModuleExpr::IntersectSpecial(a, _) => write!(f, "({a}) cap S"),
        }
    }
}

/// Declared modules of a Levi subalgebra, by name.
pub type LeviContext = BTreeMap<String, ModuleWeights>;

/// Weight multiset of `expr` in the given context.
pub fn module_weights(expr: &ModuleExpr, ctx: &LeviContext) -> Result<ModuleWeights> {
    Ok(match expr {
        ModuleExpr::Module(name) => ctx
            .get(name)
            .cloned()
            .ok_or_else(|| Error::Unsupported(format!("undeclared module `{name}`")))?,
        ModuleExpr::Explicit(m) => m.clone(),
        ModuleExpr::Dual(a) => {
            let m = module_weights(a, ctx)?;
            ModuleWeights { weights: m.weights.into_iter().map(|(w, d)| (-w, d)).collect() }
        }
        ModuleExpr::Tensor(a, b) => {
            let (x, y) = (module_weights(a, ctx)?, module_weights(b, ctx)?);
            let mut out = ModuleWeights::default();
            for (v, &(e1, o1)) in &x.weights {
                for (w, &(e2, o2)) in &y.weights {
                    out.add(v + w, e1 * e2 + o1 * o2, e1 * o2 + o1 * e2);
                }
            }
            out
        }
        ModuleExpr::SuperSym2(a) => square(&module_weights(a, ctx)?, true),
        ModuleExpr::SuperWedge2(a) => square(&module_weights(a, ctx)?, false),
        ModuleExpr::Sum(a, b) => {
            let mut out = module_weights(a, ctx)?;
            for (w, (e, o)) in module_weights(b, ctx)?.weights {
                out.add(w, e, o);
            }
            out
        }
        ModuleExpr::Shift(a, s) => {
            let m = module_weights(a, ctx)?;
            ModuleWeights { weights: m.weights.into_iter().map(|(w, d)| (&w + s, d)).collect() }
        }
        ModuleExpr::IntersectSpecial(a, n) => {
            let m = module_weights(a, ctx)?;
            let kernel: BTreeMap<Weight, usize> = special_crosscheck(*n)
                .into_iter()
                .map(|d| (d.weight, d.divergence_kernel))
                .collect();
            let mut out = ModuleWeights::default();
            for (w, (e, o)) in m.weights {
                let k = kernel.get(&w).copied().unwrap_or(0) as u32;
                if e > 0 && o > 0 {
                    return Err(Error::Unsupported(format!(
                        "mixed parity at a W-weight in {a}"
                    )));
                }
                if e > 0 {
                    out.add(w, k.min(e), 0);
                } else {
                    out.add(w, 0, k.min(o));
                }
            }
            out
        }
    })
}

/// Super symmetric (`sym`) or exterior square over a homogeneous basis.
///
/// S²: even pairs with i ≤ j, odd pairs with k < l. ⋀²: the reverse.
fn square(m: &ModuleWeights, sym: bool) -> ModuleWeights {
    let b = m.basis();
    let mut out = Vec::new();
    for i in 0..b.len() {
        for j in i..b.len() {
            let (p, q) = (b[i].1, b[j].1);
            let keep = if i < j {
                true
            } else if sym {
                p == 0
            } else {
                p == 1
            };
            if keep {
                out.push((&b[i].0 + &b[j].0, (p + q) % 2));
            }
        }
    }
    ModuleWeights::from_basis(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleVerdict {
    /// Weights and parities agree with the root spaces of N⁺.
    Consistent,
    /// Weights and total dimensions agree; even and odd are exchanged at every weight.
    ConsistentUpToParity,
    /// Supports agree; multiplicities differ as recorded.
    SupportOnly(String),
    Mismatch(String),
    Unchecked(String),
}

impl ModuleVerdict {
    pub fn tag(&self) -> &'static str {
        match self {
            ModuleVerdict::Consistent => "weights consistent",
            ModuleVerdict::ConsistentUpToParity => "weights consistent up to parity change",
            ModuleVerdict::SupportOnly(_) => "support consistent",
            ModuleVerdict::Mismatch(_) => "mismatch",
            ModuleVerdict::Unchecked(_) => "unchecked",
        }
    }

    /// True unless the weights refute the claim.
    pub fn ok(&self) -> bool {
        !matches!(self, ModuleVerdict::Mismatch(_))
    }

    pub fn note(&self) -> Option<&str> {
        match self {
            ModuleVerdict::SupportOnly(s)
            | ModuleVerdict::Mismatch(s)
            | ModuleVerdict::Unchecked(s) => Some(s),
            _ => None,
        }
    }
}

/// Compares a weight multiset with the root spaces of `nplus`.
///
/// Weights are matched to roots through every coordinate lift, so gl(n|n)
/// weights land on their psl(n|n) classes.
pub fn compare_with_roots(
    rs: &RootSystem,
    nplus: RootSet,
    m: &ModuleWeights,
    support_only: bool,
) -> ModuleVerdict {
    let mut got: BTreeMap<usize, (u32, u32)> = BTreeMap::new();
    for (w, &(e, o)) in &m.weights {
        let Some(i) = rs.index_of(w) else {
            return ModuleVerdict::Mismatch(format!(
                "module weight {} is not a root",
                w.format(&rs.basis)
            ));
        };
        let x = got.entry(i).or_insert((0, 0));
        x.0 += e;
        x.1 += o;
    }
    let support: RootSet = RootSet::from_indices(got.keys().copied());
    if support != nplus {
        let extra = rs.fmt_set(support.minus(nplus));
        let missing = rs.fmt_set(nplus.minus(support));
        return ModuleVerdict::Mismatch(format!("extra {extra:?}, missing {missing:?}"));
    }
    let want = |i: usize| (rs.roots[i].even_dim, rs.roots[i].odd_dim);
    if got.iter().all(|(&i, &d)| d == want(i)) {
        return ModuleVerdict::Consistent;
    }
    if got.iter().all(|(&i, &(e, o))| (o, e) == want(i)) {
        return ModuleVerdict::ConsistentUpToParity;
    }
    let diffs: Vec<String> = got
        .iter()
        .filter(|(&i, &d)| d != want(i))
        .map(|(&i, &(e, o))| {
            let (we, wo) = want(i);
            format!("{}: module ({e}|{o}) vs root space ({we}|{wo})", rs.root_str(i))
        })
        .collect();
    if support_only {
        ModuleVerdict::SupportOnly(diffs.join("; "))
    } else {
        ModuleVerdict::Mismatch(diffs.join("; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> Weight {
        Weight::from_ints(c)
    }

    #[test]
    fn super_squares_follow_parity_rules() {
        // V^{1|1} with even weight a, odd weight b
        let v = ModuleWeights::from_parts(&[w(&[1, 0])], &[w(&[0, 1])]);
        let s2 = square(&v, true);
        assert_eq!(s2.weights.get(&w(&[2, 0])), Some(&(1, 0)));
        assert_eq!(s2.weights.get(&w(&[1, 1])), Some(&(0, 1)));
        assert_eq!(s2.weights.get(&w(&[0, 2])), None);
        let l2 = square(&v, false);
        assert_eq!(l2.weights.get(&w(&[2, 0])), None);
        assert_eq!(l2.weights.get(&w(&[0, 2])), Some(&(1, 0)));
        assert_eq!(l2.sdim(), (1, 1));
    }

    #[test]
    fn tensor_parities_add() {
        let a = ModuleWeights::from_parts(&[w(&[1])], &[w(&[2])]);
        let mut ctx = LeviContext::new();
        ctx.insert("A".into(), a);
        let t = module_weights(&ModuleExpr::module("A").tensor(ModuleExpr::module("A").dual()), &ctx)
            .unwrap();
        assert_eq!(t.weights.get(&w(&[0])), Some(&(2, 0)));
        assert_eq!(t.weights.get(&w(&[-1])), Some(&(0, 1)));
        assert_eq!(t.sdim(), (2, 2));
    }

    #[test]
    fn undeclared_module_is_an_error() {
        let e = module_weights(&ModuleExpr::module("V"), &LeviContext::new()).unwrap_err();
        assert!(e.to_string().contains("undeclared"));
    }
}
