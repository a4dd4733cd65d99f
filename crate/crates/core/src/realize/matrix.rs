//! Square supermatrices over Q with an even/odd block split.

use std::fmt;

use num_traits::{One, Zero};

use crate::weight::Q;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperMatrix {
    /// Number of even basis vectors; rows and columns below `split` are even.
    pub split: usize,
    pub size: usize,
    pub entries: Vec<Q>,
}

impl SuperMatrix {
    pub fn zero(split: usize, size: usize) -> SuperMatrix {
        SuperMatrix { split, size, entries: vec![Q::zero(); size * size] }
    }

    /// The matrix unit E_{ij}.
    pub fn unit(split: usize, size: usize, i: usize, j: usize) -> SuperMatrix {
        let mut m = SuperMatrix::zero(split, size);
        m.set(i, j, Q::one());
        m
    }

    pub fn identity(split: usize, size: usize) -> SuperMatrix {
        let mut m = SuperMatrix::zero(split, size);
        for i in 0..size {
            m.set(i, i, Q::one());
        }
        m
    }

    /// Σ c E_{ij} over the given entries.
    pub fn from_entries(split: usize, size: usize, es: &[(usize, usize, i64)]) -> SuperMatrix {
        let mut m = SuperMatrix::zero(split, size);
        for &(i, j, c) in es {
            let v = m.get(i, j) + Q::from_integer(c);
            m.set(i, j, v);
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.entries[i * self.size + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    fn odd_slot(&self, i: usize, j: usize) -> bool {
        (i < self.split) != (j < self.split)
    }

    /// Parity when homogeneous (the zero matrix counts as even).
    pub fn parity(&self) -> Option<u8> {
        let mut p = None;
        for i in 0..self.size {
            for j in 0..self.size {
                if !self.get(i, j).is_zero() {
                    let q = self.odd_slot(i, j) as u8;
                    match p {
                        None => p = Some(q),
                        Some(x) if x != q => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(p.unwrap_or(0))
    }

    pub fn add(&self, o: &SuperMatrix) -> SuperMatrix {
        let entries = self.entries.iter().zip(&o.entries).map(|(a, b)| a + b).collect();
        SuperMatrix { entries, ..*self }
    }

    pub fn scale(&self, s: Q) -> SuperMatrix {
        SuperMatrix { entries: self.entries.iter().map(|a| a * s).collect(), ..*self }
    }

    pub fn mul(&self, o: &SuperMatrix) -> SuperMatrix {
        let n = self.size;
        let mut out = SuperMatrix::zero(self.split, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// XY − (−1)^{|X||Y|} YX.
    pub fn bracket(&self, o: &SuperMatrix) -> SuperMatrix {
        let both_odd = self.parity().unwrap_or(0) * o.parity().unwrap_or(0) == 1;
        let yx = o.mul(self);
        let s = if both_odd { Q::one() } else { -Q::one() };
        self.mul(o).add(&yx.scale(s))
    }

    /// Supertrace.
    pub fn str(&self) -> Q {
        (0..self.size)
            .map(|i| if i < self.split { self.get(i, i) } else { -self.get(i, i) })
            .sum()
    }

    /// True when the matrix is a scalar multiple of the identity.
    pub fn is_scalar(&self) -> bool {
        let d = self.get(0, 0);
        (0..self.size).all(|i| {
            (0..self.size).all(|j| self.get(i, j) == if i == j { d } else { Q::zero() })
        })
    }
}

impl fmt::Display for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for i in 0..self.size {
            for j in 0..self.size {
                let c = self.get(i, j);
                if !c.is_zero() {
                    parts.push(format!("({c})E{},{}", i + 1, j + 1));
                }
            }
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_units_anticommute_to_diagonal() {
        // in gl(1|1): [E12, E21] = E11 + E22
        let a = SuperMatrix::unit(1, 2, 0, 1);
        let b = SuperMatrix::unit(1, 2, 1, 0);
        assert_eq!(a.parity(), Some(1));
        assert_eq!(a.bracket(&b), SuperMatrix::identity(1, 2));
        assert_eq!(a.bracket(&b).str(), Q::zero());
    }

    #[test]
    fn even_units_commute_to_difference() {
        let a = SuperMatrix::unit(2, 3, 0, 1);
        let b = SuperMatrix::unit(2, 3, 1, 0);
        let h = SuperMatrix::from_entries(2, 3, &[(0, 0, 1), (1, 1, -1)]);
        assert_eq!(a.bracket(&b), h);
    }
}
