//! Fixed-width bitsets over root indices.

use std::fmt;

/// Largest number of elements a [`RootSet`] can index.
pub const MAX_ROOTS: usize = 128;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct RootSet(pub u128);

impl RootSet {
    pub const EMPTY: RootSet = RootSet(0);

    pub fn full(n: usize) -> RootSet {
        if n >= 128 {
            RootSet(u128::MAX)
        } else {
            RootSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> RootSet {
        RootSet(1u128 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> RootSet {
        let mut s = RootSet::EMPTY;
        for i in it {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u128 << i);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: RootSet) -> RootSet {
        RootSet(self.0 | o.0)
    }

    pub fn intersect(self, o: RootSet) -> RootSet {
        RootSet(self.0 & o.0)
    }

    pub fn minus(self, o: RootSet) -> RootSet {
        RootSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: RootSet) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Canonical comparison: lexicographic on the ascending list of members.
    pub fn lex_cmp(self, o: RootSet) -> std::cmp::Ordering {
        let mut a = self.iter();
        let mut b = o.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return std::cmp::Ordering::Equal,
                (None, Some(_)) => return std::cmp::Ordering::Less,
                (Some(_), None) => return std::cmp::Ordering::Greater,
                (Some(x), Some(y)) if x != y => return x.cmp(&y),
                _ => {}
            }
        }
    }

    /// Applies an index map to every member.
    pub fn map(self, perm: &[usize]) -> RootSet {
        let mut out = RootSet::EMPTY;
        for i in self.iter() {
            out.insert(perm[i]);
        }
        out
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl PartialOrd for RootSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RootSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.lex_cmp(*other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let s = RootSet::from_indices([0, 5, 127]);
        assert!(s.contains(127) && s.contains(5) && !s.contains(4));
        assert_eq!(s.to_vec(), vec![0, 5, 127]);
        assert_eq!(RootSet::full(128).len(), 128);
        assert!(RootSet::from_indices([0, 1]) < RootSet::from_indices([0, 2]));
        assert!(RootSet::from_indices([0, 9]) < RootSet::from_indices([1]));
    }
}
