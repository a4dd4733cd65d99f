//! Exact linear spans of sparse rational vectors.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::weight::Q;

pub type Vector<K> = BTreeMap<K, Q>;

/// A row-echelon basis; each stored row has a distinct leading key.
#[derive(Clone, Debug)]
pub struct Span<K: Ord + Clone> {
    rows: BTreeMap<K, Vector<K>>,
}

impl<K: Ord + Clone> Default for Span<K> {
    fn default() -> Self {
        Span { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Span<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &Vector<K>) -> Vector<K> {
        let mut v: Vector<K> = v.iter().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k.clone(), *c)).collect();
        let mut floor: Option<K> = None;
        loop {
            let lead = match &floor {
                None => v.keys().next().cloned(),
                Some(f) => v.range(f.clone()..).map(|(k, _)| k.clone()).find(|k| k > f),
            };
            let Some(k) = lead else { return v };
            if let Some(row) = self.rows.get(&k) {
                let s = v[&k] / row[&k];
                for (rk, rc) in row {
                    let e = v.entry(rk.clone()).or_insert_with(Q::zero);
                    *e -= s * rc;
                    if e.is_zero() {
                        v.remove(rk);
                    }
                }
            }
            floor = Some(k);
        }
    }

    /// Adds `v`; returns whether it was independent of the span.
    pub fn insert(&mut self, v: &Vector<K>) -> bool {
        let r = self.reduce(v);
        match r.keys().next().cloned() {
            Some(k) => {
                self.rows.insert(k, r);
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: &Vector<K>) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Dimension of the span of `vs`.
pub fn rank<K: Ord + Clone>(vs: &[Vector<K>]) -> usize {
    let mut s = Span::new();
    for v in vs {
        s.insert(v);
    }
    s.dim()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[(u8, i64)]) -> Vector<u8> {
        xs.iter().map(|&(k, c)| (k, Q::from_integer(c))).collect()
    }

    #[test]
    fn rank_and_membership() {
        let a = v(&[(0, 1), (1, 2)]);
        let b = v(&[(1, 1), (2, 1)]);
        let c = v(&[(0, 1), (1, 4), (2, 2)]);
        assert_eq!(rank(&[a.clone(), b.clone(), c.clone()]), 2);
        let mut s = Span::new();
        s.insert(&b);
        s.insert(&c);
        assert!(s.contains(&a));
        assert!(!s.contains(&v(&[(2, 1)])));
    }
}
