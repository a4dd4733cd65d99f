//! Sum and negation tables over the symmetrized root set Σ = Δ ∪ (−Δ).

use crate::error::{Error, Result};
use crate::rootset::{RootSet, MAX_ROOTS};
use crate::rootsys::RootSystem;
use crate::weight::Weight;

#[derive(Clone, Debug)]
pub struct Table {
    /// |Σ|; indices below `n_delta` are the roots of Δ in their own order.
    pub n: usize,
    pub n_delta: usize,
    pub weights: Vec<Weight>,
    pub neg: Vec<usize>,
    sums: Vec<Option<u16>>,
    /// For each x, the pairs (y, x + y).
    pub plus: Vec<Vec<(u16, u16)>>,
    /// For each z, the ordered pairs (x, y) with x + y = z.
    pub splits: Vec<Vec<(u16, u16)>>,
    /// Unordered pairs {x, −x}, smaller index first.
    pub pairs: Vec<(usize, usize)>,
}

impl Table {
    pub fn new(rs: &RootSystem) -> Result<Table> {
        let (weights, neg, sum): (Vec<Weight>, Vec<usize>, Box<dyn Fn(usize, usize) -> Option<usize>>);
        let n_delta = rs.len();
        if rs.symmetric {
            weights = rs.roots.iter().map(|r| r.weight.clone()).collect();
            neg = (0..n_delta).map(|i| rs.neg(i).expect("symmetric")).collect();
            sum = Box::new(|a, b| rs.sum_index(a, b));
        } else {
            let sym = rs.symmetrize();
            if sym.len() > MAX_ROOTS {
                return Err(Error::CapExceeded(format!(
                    "{}: |Δ ∪ (−Δ)| = {} exceeds {MAX_ROOTS}",
                    rs.family,
                    sym.len()
                )));
            }
            weights = sym.weights.clone();
            neg = sym.neg.clone();
            sum = Box::new(move |a, b| sym.sum_index(a, b));
        }
        let n = weights.len();
        let mut sums = vec![None; n * n];
        let mut plus = vec![Vec::new(); n];
        let mut splits = vec![Vec::new(); n];
        for a in 0..n {
            for b in 0..n {
                if let Some(z) = sum(a, b) {
                    sums[a * n + b] = Some(z as u16);
                    plus[a].push((b as u16, z as u16));
                    splits[z].push((a as u16, b as u16));
                }
            }
        }
        let pairs = (0..n).filter(|&x| x < neg[x]).map(|x| (x, neg[x])).collect();
        Ok(Table { n, n_delta, weights, neg, sums, plus, splits, pairs })
    }

    pub fn sum(&self, a: usize, b: usize) -> Option<usize> {
        self.sums[a * self.n + b].map(|z| z as usize)
    }

    pub fn delta(&self) -> RootSet {
        RootSet::full(self.n_delta)
    }

    pub fn all(&self) -> RootSet {
        RootSet::full(self.n)
    }

    pub fn symmetric(&self) -> bool {
        self.n == self.n_delta
    }

    /// Elements of Σ outside Δ.
    pub fn extras(&self) -> RootSet {
        self.all().minus(self.delta())
    }

    pub fn negate(&self, s: RootSet) -> RootSet {
        s.map(&self.neg)
    }

    /// Δ' = Σ ∪ −Σ covering and additive closure inside the whole table.
    pub fn is_parabolic_full(&self, p: RootSet) -> bool {
        let all = self.all();
        if p == all || !p.union(self.negate(p)).eq(&all) {
            return false;
        }
        self.is_closed(p)
    }

    /// Additive closure of `p` within Σ.
    pub fn is_closed(&self, p: RootSet) -> bool {
        for x in p.iter() {
            for &(y, z) in &self.plus[x] {
                if p.contains(y as usize) && !p.contains(z as usize) {
                    return false;
                }
            }
        }
        true
    }

    /// Additive closure restricted to sums landing in Δ, for sets inside Δ.
    pub fn is_closed_in_delta(&self, p: RootSet) -> bool {
        let nd = self.n_delta;
        for x in p.iter() {
            for &(y, z) in &self.plus[x] {
                let (y, z) = (y as usize, z as usize);
                if y < nd && z < nd && p.contains(y) && !p.contains(z) {
                    return false;
                }
            }
        }
        true
    }
}
