//! Faces of a central hyperplane arrangement by incremental sign vectors.
//!
//! Each partial face keeps an interior point. Adding a hyperplane h, a face
//! with h(p) > 0 always keeps its positive part; its negative part is decided
//! by one feasibility query, and the zero part then lies on the segment
//! joining the two interior points.

use num_traits::{Signed, Zero};

use crate::fm::{Rel, System, R};

#[derive(Clone, Debug)]
pub struct Face {
    /// Sign of the face on each hyperplane, in input order.
    pub signs: Vec<i8>,
    /// A point in the relative interior.
    pub point: Vec<R>,
}

fn eval(h: &[i128], p: &[R]) -> R {
    h.iter().zip(p).map(|(a, x)| R::from_integer(*a) * x).sum()
}

fn system(dim: usize, hs: &[Vec<i128>], signs: &[i8]) -> System {
    let mut s = System::new(dim);
    for (h, &sg) in hs.iter().zip(signs) {
        match sg {
            1 => s.push(h.iter().map(|c| -c).collect(), Rel::Le, -1),
            -1 => s.push(h.clone(), Rel::Le, -1),
            _ => s.push(h.clone(), Rel::Eq, 0),
        }
    }
    s
}

fn between(p: &[R], q: &[R], hp: R, hq: R) -> Vec<R> {
    // the point of the segment pq where h vanishes
    let s = hp / (hp - hq);
    p.iter().zip(q).map(|(a, b)| *a + s * (*b - *a)).collect()
}

/// All faces of the arrangement `{h = 0 : h ∈ hs}` in `dim`-space.
pub fn faces(dim: usize, hs: &[Vec<i128>]) -> Vec<Face> {
    let mut cur = vec![Face { signs: Vec::new(), point: vec![R::zero(); dim] }];
    for (k, h) in hs.iter().enumerate() {
        let mut next = Vec::with_capacity(cur.len() * 2);
        for f in cur {
            let v = eval(h, &f.point);
            let probe = |sign: i8| -> Option<Vec<R>> {
                let mut signs = f.signs.clone();
                signs.push(sign);
                system(dim, &hs[..=k], &signs).solve()
            };
            let child = |sign: i8, point: Vec<R>| {
                let mut signs = f.signs.clone();
                signs.push(sign);
                Face { signs, point }
            };
            if v.is_zero() {
                let plus = probe(1);
                let minus = probe(-1);
                next.push(child(0, f.point.clone()));
                if let Some(q) = plus {
                    next.push(child(1, q));
                }
                if let Some(q) = minus {
                    next.push(child(-1, q));
                }
            } else {
                let s: i8 = if v.is_positive() { 1 } else { -1 };
                let other = probe(-s);
                if let Some(q) = other {
                    let hq = eval(h, &q);
                    next.push(child(0, between(&f.point, &q, v, hq)));
                    next.push(child(-s, q));
                }
                next.push(child(s, f.point));
            }
        }
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_arrangement_has_thirteen_faces() {
        // x−y, y−z, x−z in R³: 6 chambers, 6 rays, 1 lineality face
        let hs = vec![vec![1, -1, 0], vec![0, 1, -1], vec![1, 0, -1]];
        let fs = faces(3, &hs);
        assert_eq!(fs.len(), 13);
        for f in &fs {
            for (h, s) in hs.iter().zip(&f.signs) {
                let v = eval(h, &f.point);
                let got = if v.is_zero() { 0 } else if v.is_positive() { 1 } else { -1 };
                assert_eq!(got, *s);
            }
        }
    }
}
