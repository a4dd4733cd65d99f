//! Exact feasibility of small linear systems by Fourier–Motzkin elimination.
//!
//! Rows are kept integral and divided by their content after every
//! combination, which keeps coefficients small for root-system inputs.

use std::collections::HashMap;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;

pub type R = Ratio<i128>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Le,
    Eq,
}

/// `coeffs · x (≤ | =) rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Row {
    pub coeffs: Vec<i128>,
    pub rhs: i128,
}

impl Row {
    pub fn new(coeffs: Vec<i128>, rhs: i128) -> Row {
        let mut r = Row { coeffs, rhs };
        r.normalize();
        r
    }

    fn normalize(&mut self) {
        let g = self
            .coeffs
            .iter()
            .fold(self.rhs.abs(), |acc, c| acc.gcd(c));
        if g > 1 {
            for c in &mut self.coeffs {
                *c /= g;
            }
            self.rhs /= g;
        }
    }

    fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(|c| *c == 0)
    }

    fn eval_rest(&self, x: &[Option<R>], skip: usize) -> R {
        let mut s = R::zero();
        for (j, c) in self.coeffs.iter().enumerate() {
            if j != skip && *c != 0 {
                s += x[j].expect("assigned") * R::from_integer(*c);
            }
        }
        s
    }
}

/// A linear system over `dim` rational unknowns.
#[derive(Clone, Debug, Default)]
pub struct System {
    pub dim: usize,
    pub le: Vec<Row>,
    pub eq: Vec<Row>,
}

impl System {
    pub fn new(dim: usize) -> System {
        System { dim, le: Vec::new(), eq: Vec::new() }
    }

    pub fn push(&mut self, coeffs: Vec<i128>, rel: Rel, rhs: i128) {
        assert_eq!(coeffs.len(), self.dim);
        let row = Row::new(coeffs, rhs);
        match rel {
            Rel::Le => self.le.push(row),
            Rel::Eq => self.eq.push(row),
        }
    }

    /// Returns a solution, or `None` when the system is infeasible.
    pub fn solve(&self) -> Option<Vec<R>> {
        let dim = self.dim;
        let mut le = self.le.clone();
        let mut eqs = self.eq.clone();
        // equality pivots in elimination order: (variable, defining row)
        let mut pivots: Vec<(usize, Row)> = Vec::new();
        while let Some(mut e) = eqs.pop() {
            let Some(p) = e.coeffs.iter().position(|c| *c != 0) else {
                if e.rhs != 0 {
                    return None;
                }
                continue;
            };
            if e.coeffs[p] < 0 {
                for c in &mut e.coeffs {
                    *c = -*c;
                }
                e.rhs = -e.rhs;
            }
            let a = e.coeffs[p];
            let sub = |r: &mut Row| {
                let c = r.coeffs[p];
                if c != 0 {
                    for j in 0..dim {
                        r.coeffs[j] = a * r.coeffs[j] - c * e.coeffs[j];
                    }
                    r.rhs = a * r.rhs - c * e.rhs;
                    r.normalize();
                }
            };
            for r in eqs.iter_mut() {
                sub(r);
            }
            for r in le.iter_mut() {
                sub(r);
            }
            pivots.push((p, e));
        }

        let mut stages: Vec<(usize, Vec<Row>)> = Vec::new();
        // Chernikov's rule: after k eliminations a row built from more than
        // k + 1 original rows is redundant. Histories are tracked only when
        // they fit in a bitmask.
        let track = le.len() <= 128;
        let hist: Vec<u128> = (0..le.len()).map(|i| if track { 1u128 << i } else { 0 }).collect();
        let mut rows = dedup(le.into_iter().zip(hist).collect())?;
        let mut eliminated = 0u32;
        let mut remaining: Vec<usize> = (0..dim)
            .filter(|v| !pivots.iter().any(|(p, _)| p == v))
            .collect();
        while !rows.is_empty() && !remaining.is_empty() {
            let (k, &v) = remaining
                .iter()
                .enumerate()
                .min_by_key(|(_, &v)| {
                    let pos = rows.iter().filter(|(r, _)| r.coeffs[v] > 0).count() as i64;
                    let neg = rows.iter().filter(|(r, _)| r.coeffs[v] < 0).count() as i64;
                    pos * neg - pos - neg
                })
                .expect("nonempty");
            remaining.remove(k);
            eliminated += 1;
            let (with, without): (Vec<(Row, u128)>, Vec<(Row, u128)>) =
                rows.into_iter().partition(|(r, _)| r.coeffs[v] != 0);
            let mut next = without;
            for (p, hp) in with.iter().filter(|(r, _)| r.coeffs[v] > 0) {
                for (q, hq) in with.iter().filter(|(r, _)| r.coeffs[v] < 0) {
                    let h = hp | hq;
                    if track && h.count_ones() > eliminated + 1 {
                        continue;
                    }
                    let a = p.coeffs[v];
                    let b = -q.coeffs[v];
                    let coeffs = (0..dim).map(|j| b * p.coeffs[j] + a * q.coeffs[j]).collect();
                    next.push((Row::new(coeffs, b * p.rhs + a * q.rhs), h));
                }
            }
            stages.push((v, with.into_iter().map(|(r, _)| r).collect()));
            rows = dedup(next)?;
        }

        let mut x: Vec<Option<R>> = vec![None; dim];
        for &v in &remaining {
            x[v] = Some(R::zero());
        }
        // variables that vanished from every row without being eliminated
        for v in 0..dim {
            if x[v].is_none()
                && !stages.iter().any(|(s, _)| *s == v)
                && !pivots.iter().any(|(p, _)| *p == v)
            {
                x[v] = Some(R::zero());
            }
        }
        for (v, rows) in stages.iter().rev() {
            let v = *v;
            let mut lo: Option<R> = None;
            let mut hi: Option<R> = None;
            for r in rows {
                let a = R::from_integer(r.coeffs[v]);
                let bound = (R::from_integer(r.rhs) - r.eval_rest(&x, v)) / a;
                if r.coeffs[v] > 0 {
                    hi = Some(hi.map_or(bound, |h: R| h.min(bound)));
                } else {
                    lo = Some(lo.map_or(bound, |l: R| l.max(bound)));
                }
            }
            if let (Some(l), Some(h)) = (lo, hi) {
                if l > h {
                    return None;
                }
            }
            let z = R::zero();
            let val = match (lo, hi) {
                (Some(l), _) if l > z => l,
                (_, Some(h)) if h < z => h,
                _ => z,
            };
            x[v] = Some(val);
        }
        for (p, e) in pivots.iter().rev() {
            let a = R::from_integer(e.coeffs[*p]);
            x[*p] = Some((R::from_integer(e.rhs) - e.eval_rest(&x, *p)) / a);
        }
        let sol: Vec<R> = x.into_iter().map(|v| v.expect("assigned")).collect();
        debug_assert!(self.check(&sol));
        Some(sol)
    }

    pub fn check(&self, x: &[R]) -> bool {
        let val = |r: &Row| -> R {
            r.coeffs
                .iter()
                .zip(x)
                .map(|(c, v)| R::from_integer(*c) * v)
                .sum()
        };
        self.le.iter().all(|r| val(r) <= R::from_integer(r.rhs))
            && self.eq.iter().all(|r| val(r) == R::from_integer(r.rhs))
    }
}

/// Drops duplicate and trivially true rows, keeping the shortest history;
/// `None` when a trivial row is false.
fn dedup(rows: Vec<(Row, u128)>) -> Option<Vec<(Row, u128)>> {
    let mut seen: HashMap<Row, usize> = HashMap::new();
    let mut out: Vec<(Row, u128)> = Vec::new();
    for (r, h) in rows {
        if r.is_trivial() {
            if r.rhs < 0 {
                return None;
            }
            continue;
        }
        match seen.get(&r) {
            Some(&k) => {
                if h.count_ones() < out[k].1.count_ones() {
                    out[k].1 = h;
                }
            }
            None => {
                seen.insert(r.clone(), out.len());
                out.push((r, h));
            }
        }
    }
    Some(out)
}

/// Scales a rational vector to a primitive integer vector with the same direction.
pub fn clear_denominators(x: &[R]) -> Vec<i64> {
    let l = x.iter().fold(1i128, |acc, v| acc.lcm(v.denom()));
    let ints: Vec<i128> = x.iter().map(|v| (v * R::from_integer(l)).to_integer()).collect();
    let g = ints.iter().fold(0i128, |acc, v| acc.gcd(v));
    ints.iter()
        .map(|v| {
            let v = if g > 1 { v / g } else { *v };
            i64::try_from(v).expect("witness coordinate fits in i64")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_feasible_and_infeasible() {
        // x ≥ 1, y ≥ 1, x + y ≤ 1 is infeasible
        let mut s = System::new(2);
        s.push(vec![-1, 0], Rel::Le, -1);
        s.push(vec![0, -1], Rel::Le, -1);
        s.push(vec![1, 1], Rel::Le, 1);
        assert!(s.solve().is_none());
        // x − y = 0, x ≥ 1
        let mut s = System::new(2);
        s.push(vec![1, -1], Rel::Eq, 0);
        s.push(vec![-1, 0], Rel::Le, -1);
        let x = s.solve().unwrap();
        assert!(s.check(&x));
        assert_eq!(clear_denominators(&x), vec![1, 1]);
    }

    #[test]
    fn inconsistent_equalities() {
        let mut s = System::new(1);
        s.push(vec![1], Rel::Eq, 1);
        s.push(vec![2], Rel::Eq, 3);
        assert!(s.solve().is_none());
    }

    #[test]
    fn prefers_zero_when_allowed() {
        let mut s = System::new(3);
        s.push(vec![0, 1, 0], Rel::Le, -1);
        s.push(vec![0, 1, -1], Rel::Eq, 0);
        let x = s.solve().unwrap();
        assert_eq!(clear_denominators(&x), vec![0, -1, -1]);
    }
}
