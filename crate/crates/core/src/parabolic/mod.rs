//! Parabolic subsets of a root system, their Levi decompositions and
//! principality.
//!
//! When Δ ≠ −Δ a subset P ⊊ Δ is parabolic when it is the trace on Δ of a
//! parabolic subset P̃ of Σ = Δ ∪ (−Δ). Such lifts are found by a
//! propagating search ([`search`]); the brute-force variants in
//! [`exhaustive`] serve as an independent oracle.

pub mod exhaustive;
pub mod faces;
pub mod search;
pub mod table;

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::fm::{clear_denominators, Rel, System};
use crate::rootset::RootSet;
use crate::rootsys::{Ambient, RootSystem};
use crate::weight::{Weight, Q};

pub use table::Table;

/// Enumeration limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest |Δ| accepted by the exhaustive oracle.
    pub subset: usize,
    /// Largest number of free elements for brute-force lift enumeration.
    pub lift_bits: usize,
    /// Node budget of a single propagating search.
    pub search_nodes: u64,
    /// Largest orbit built by BFS.
    pub orbit: usize,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps { subset: 26, lift_bits: 22, search_nodes: 20_000_000, orbit: 1_000_000 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Exhaustive,
    Principal,
    Search,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Exhaustive => "exhaustive",
            Method::Principal => "principal",
            Method::Search => "search",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// P = L ⊔ N⁺ together with the lift P̃ ⊆ Σ it was read from, and the
/// functional when the decomposition is induced by one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviDecomposition {
    pub l: RootSet,
    pub nplus: RootSet,
    pub lift: RootSet,
    pub functional: Option<Vec<i64>>,
}

pub struct Parabolics<'a> {
    pub rs: &'a RootSystem,
    pub table: Table,
    pub caps: Caps,
}

impl<'a> Parabolics<'a> {
    pub fn new(rs: &'a RootSystem) -> Result<Parabolics<'a>> {
        Parabolics::with_caps(rs, Caps::default())
    }

    pub fn with_caps(rs: &'a RootSystem, caps: Caps) -> Result<Parabolics<'a>> {
        Ok(Parabolics { rs, table: Table::new(rs)?, caps })
    }

    fn delta(&self) -> RootSet {
        self.rs.full()
    }

    fn proper(&self, p: RootSet) -> Result<()> {
        if p == self.delta() {
            Err(Error::Improper)
        } else if !p.is_subset(self.delta()) {
            Err(Error::Index(p.iter().last().unwrap_or(0)))
        } else {
            Ok(())
        }
    }

    pub fn is_parabolic(&self, p: RootSet) -> Result<bool> {
        self.proper(p)?;
        let t = &self.table;
        if t.symmetric() {
            return Ok(t.is_parabolic_full(p));
        }
        if !t.is_closed_in_delta(p) {
            return Ok(false);
        }
        let mut s = search::Search::new(t, None, self.caps.search_nodes);
        let Some(st) = s.start(p, self.delta().minus(p)) else {
            return Ok(false);
        };
        let mut found = false;
        s.run(st, &mut |_| {
            found = true;
            false
        })?;
        Ok(found)
    }

    /// Every lift of `p` to a parabolic subset of Σ, in canonical order.
    pub fn lifts(&self, p: RootSet) -> Result<Vec<RootSet>> {
        self.proper(p)?;
        let t = &self.table;
        if t.symmetric() {
            return Ok(if t.is_parabolic_full(p) { vec![p] } else { vec![] });
        }
        let mut s = search::Search::new(t, None, self.caps.search_nodes);
        let mut out = Vec::new();
        if let Some(st) = s.start(p, self.delta().minus(p)) {
            s.run(st, &mut |st| {
                out.push(st.pin);
                true
            })?;
        }
        out.sort();
        Ok(out)
    }

    /// Levi component and nilradical read off a lift.
    pub fn decomposition_of_lift(&self, lift: RootSet) -> LeviDecomposition {
        let d = self.delta();
        let neg = self.table.negate(lift);
        LeviDecomposition {
            l: lift.intersect(neg).intersect(d),
            nplus: lift.minus(neg).intersect(d),
            lift,
            functional: None,
        }
    }

    /// Distinct (L, N⁺) pairs over all lifts; each keeps its smallest lift.
    pub fn levi_decompositions(&self, p: RootSet) -> Result<Vec<LeviDecomposition>> {
        let lifts = self.lifts(p)?;
        if lifts.is_empty() {
            return Err(Error::Unsupported(format!(
                "{:?} is not a parabolic subset of {}",
                self.rs.fmt_set(p),
                self.rs.family
            )));
        }
        Ok(dedup_decompositions(lifts.into_iter().map(|l| self.decomposition_of_lift(l))))
    }

    /// Same as [`Parabolics::levi_decompositions`], with lifts found by brute force.
    pub fn levi_decompositions_brute(&self, p: RootSet) -> Result<Vec<LeviDecomposition>> {
        self.proper(p)?;
        let lifts = if self.table.symmetric() {
            if self.table.is_parabolic_full(p) {
                vec![p]
            } else {
                vec![]
            }
        } else {
            exhaustive::brute_lifts(&self.table, p, self.caps.lift_bits)?
        };
        Ok(dedup_decompositions(lifts.into_iter().map(|l| self.decomposition_of_lift(l))))
    }

    /// Signs of Λ on every lift of root `i`: Some(true) when all are ≥ 0,
    /// Some(false) when all are < 0, None when the lifts disagree.
    fn side(&self, i: usize, lambda: &[Q]) -> Option<bool> {
        let vals: Vec<Q> = self.rs.lifts[i].iter().map(|w| w.dot(lambda)).collect();
        if vals.iter().all(|v| !v.is_negative()) {
            Some(true)
        } else if vals.iter().all(|v| v.is_negative()) {
            Some(false)
        } else {
            None
        }
    }

    /// P(Λ) = {α : Λ(α) ≥ 0} with L = {Λ = 0} and N⁺ = {Λ > 0}.
    pub fn principal_parabolic(&self, lambda: &[Q]) -> Result<(RootSet, LeviDecomposition)> {
        if lambda.len() != self.rs.dim() {
            return Err(Error::Parse(format!(
                "functional has {} coordinates, expected {}",
                lambda.len(),
                self.rs.dim()
            )));
        }
        let mut p = RootSet::EMPTY;
        let mut l = RootSet::EMPTY;
        for i in 0..self.rs.len() {
            match self.side(i, lambda) {
                Some(true) => {
                    p.insert(i);
                    if self.rs.lifts[i].iter().all(|w| w.dot(lambda).is_zero()) {
                        l.insert(i);
                    }
                }
                Some(false) => {}
                None => {
                    return Err(Error::Unsupported(format!(
                        "functional separates the lifts of {}",
                        self.rs.root_str(i)
                    )))
                }
            }
        }
        if p == self.delta() {
            return Err(Error::Improper);
        }
        let t = &self.table;
        let lift = RootSet::from_indices(
            (0..t.n).filter(|&x| !t.weights[x].dot(lambda).is_negative()),
        );
        let lift = if t.symmetric() { p } else { lift };
        let scale = lambda.iter().fold(1i64, |acc, c| acc.lcm(c.denom()));
        let functional = lambda.iter().map(|c| (c * Q::from_integer(scale)).to_integer()).collect();
        Ok((p, LeviDecomposition { l, nplus: p.minus(l), lift, functional: Some(functional) }))
    }

    fn witness_system(&self, p: RootSet) -> System {
        let mut s = System::new(self.rs.dim());
        for i in 0..self.rs.len() {
            for w in &self.rs.lifts[i] {
                let (_, ints) = w.cleared();
                let row: Vec<i128> = ints.iter().map(|&c| c as i128).collect();
                if p.contains(i) {
                    s.push(row.iter().map(|c| -c).collect(), Rel::Le, 0);
                } else {
                    s.push(row, Rel::Le, -1);
                }
            }
        }
        s
    }

    /// A functional Λ with P = P(Λ), denominators cleared, if one exists.
    pub fn principality_witness(&self, p: RootSet) -> Option<Vec<i64>> {
        let x = self.witness_system(p).solve()?;
        Some(clear_denominators(&x))
    }

    /// For psl(n|n): a witness that also vanishes on Σε − Σδ, i.e. a genuine
    /// functional on the psl Cartan subalgebra. Equal to
    /// [`Parabolics::principality_witness`] for other families.
    pub fn strict_principality_witness(&self, p: RootSet) -> Option<Vec<i64>> {
        let mut s = self.witness_system(p);
        if self.rs.ambient == Ambient::GlLift {
            let n = self.rs.dim() / 2;
            let row = (0..2 * n).map(|j| if j < n { 1 } else { -1 }).collect();
            s.push(row, Rel::Eq, 0);
        }
        let x = s.solve()?;
        Some(clear_denominators(&x))
    }

    /// Primitive integer directions of the hyperplanes α = 0, and for every
    /// lift of every root its hyperplane and orientation.
    fn arrangement(&self) -> (Vec<Vec<i128>>, Vec<Vec<(usize, i8)>>) {
        let mut hs: Vec<Vec<i128>> = Vec::new();
        let mut loc = Vec::new();
        for ls in &self.rs.lifts {
            let mut mine = Vec::new();
            for w in ls {
                let (dir, sign) = primitive(w);
                let k = match hs.iter().position(|h| *h == dir) {
                    Some(k) => k,
                    None => {
                        hs.push(dir);
                        hs.len() - 1
                    }
                };
                mine.push((k, sign));
            }
            loc.push(mine);
        }
        (hs, loc)
    }

    /// Distinct principal parabolic subsets, one per admissible face.
    pub fn principal_sets(&self) -> Vec<RootSet> {
        let (hs, loc) = self.arrangement();
        let mut out = BTreeSet::new();
        'face: for f in faces::faces(self.rs.dim(), &hs) {
            let mut p = RootSet::EMPTY;
            for (i, ls) in loc.iter().enumerate() {
                let signs: Vec<i8> = ls.iter().map(|&(k, o)| f.signs[k] * o).collect();
                if signs.iter().all(|s| *s >= 0) {
                    p.insert(i);
                } else if !signs.iter().all(|s| *s < 0) {
                    continue 'face;
                }
            }
            if p != self.delta() {
                out.insert(p);
            }
        }
        out.into_iter().collect()
    }

    /// Every parabolic subset reachable by the propagating search, optionally
    /// restricted to decompositions whose nilradical avoids `forbid`.
    pub fn search_sets(&self, forbid: Option<&[RootSet]>) -> Result<Vec<RootSet>> {
        let d = self.delta();
        let mut s = search::Search::new(&self.table, forbid, self.caps.search_nodes);
        let mut out = BTreeSet::new();
        s.run(search::State::default(), &mut |st| {
            let p = st.pin.intersect(d);
            if p != d {
                out.insert(p);
            }
            true
        })?;
        Ok(out.into_iter().collect())
    }

    pub fn enumerate(&self, method: Method) -> Result<Vec<RootSet>> {
        match method {
            Method::Exhaustive => {
                exhaustive::exhaustive(&self.table, self.caps.subset, self.caps.lift_bits)
            }
            Method::Principal => Ok(self.principal_sets()),
            Method::Search => self.search_sets(None),
        }
    }

    /// Checks the partition identities and the four closure rules for a
    /// decomposition read from a lift.
    pub fn check_sums_lemma(&self, d: &LeviDecomposition) -> std::result::Result<(), String> {
        let t = &self.table;
        let delta = self.delta();
        let all = t.all();
        let lift = d.lift;
        let neg_lift = t.negate(lift);
        let lt = lift.intersect(neg_lift);
        let ntp = lift.minus(neg_lift);
        let ntm = neg_lift.minus(lift);
        if lt.union(ntp).union(ntm) != all
            || !lt.intersect(ntp).is_empty()
            || !lt.intersect(ntm).is_empty()
            || !ntp.intersect(ntm).is_empty()
        {
            return Err("Σ is not N⁻ ⊔ L ⊔ N⁺".into());
        }
        let l = lt.intersect(delta);
        let np = ntp.intersect(delta);
        let nm = ntm.intersect(delta);
        if l != d.l || np != d.nplus {
            return Err("L or N⁺ differs from the lift".into());
        }
        if lt != l.union(t.negate(l)) {
            return Err("L̃ ≠ L ∪ (−L)".into());
        }
        if ntp != np.union(t.negate(nm)) || ntm != nm.union(t.negate(np)) {
            return Err("Ñ± ≠ N± ∪ (−N∓)".into());
        }
        let rs = self.rs;
        for (n, other, name) in [(np, nm, "N⁺"), (nm, np, "N⁻")] {
            for a in n.iter() {
                if let Some(b) = rs.neg(a) {
                    if !other.contains(b) {
                        return Err(format!("(i) fails for {} in {name}", rs.root_str(a)));
                    }
                }
                for x in l.iter() {
                    if let Some(z) = rs.sum_index(x, a) {
                        if !n.contains(z) {
                            return Err(format!(
                                "(ii) fails for {} + {} in {name}",
                                rs.root_str(x),
                                rs.root_str(a)
                            ));
                        }
                    }
                }
                for b in n.iter() {
                    if let Some(z) = rs.sum_index(a, b) {
                        if !n.contains(z) {
                            return Err(format!(
                                "(iv) fails for {} + {} in {name}",
                                rs.root_str(a),
                                rs.root_str(b)
                            ));
                        }
                    }
                }
            }
        }
        for a in l.iter() {
            for b in l.iter() {
                if let Some(z) = rs.sum_index(a, b) {
                    if !l.contains(z) {
                        return Err(format!(
                            "(iii) fails for {} + {}",
                            rs.root_str(a),
                            rs.root_str(b)
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

fn dedup_decompositions<I: Iterator<Item = LeviDecomposition>>(it: I) -> Vec<LeviDecomposition> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for d in it {
        if seen.insert((d.l, d.nplus)) {
            out.push(d);
        }
    }
    out
}

/// Primitive integer direction of a weight up to sign, with the sign relating them.
fn primitive(w: &Weight) -> (Vec<i128>, i8) {
    let (_, ints) = w.cleared();
    let g = ints.iter().fold(0i64, |acc, c| acc.gcd(c));
    let mut v: Vec<i128> = ints.iter().map(|c| (*c / g) as i128).collect();
    let first = v.iter().find(|c| **c != 0).copied().unwrap_or(1);
    if first < 0 {
        for c in &mut v {
            *c = -*c;
        }
        (v, -1)
    } else {
        (v, 1)
    }
}

/// Exact evaluation of an integer functional on a weight.
pub fn eval_functional(w: &Weight, lambda: &[i64]) -> Q {
    w.eval_int(lambda)
}

/// Converts an integer functional to the rational form taken by
/// [`Parabolics::principal_parabolic`].
pub fn functional_from_ints(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&c| Q::from_integer(c)).collect()
}
