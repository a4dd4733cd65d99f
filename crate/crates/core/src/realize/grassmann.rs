//! The Grassmann algebra ⋀(ξ_1, …, ξ_n) and its superderivations.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::weight::Q;

/// A monomial ξ_{i_1}…ξ_{i_k} with i_1 < … < i_k, as a bitmask.
pub type Mono = u16;

/// Sign of ξ_A ξ_B rewritten in ascending order, or `None` when A ∩ B ≠ ∅.
pub fn merge_sign(a: Mono, b: Mono) -> Option<i32> {
    if a & b != 0 {
        return None;
    }
    // each i ∈ A passes every j ∈ B with j < i
    let mut swaps = 0;
    let mut rest = a;
    while rest != 0 {
        let i = rest.trailing_zeros();
        swaps += (b & ((1 << i) - 1)).count_ones();
        rest &= rest - 1;
    }
    Some(if swaps % 2 == 0 { 1 } else { -1 })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Grassmann {
    pub terms: BTreeMap<Mono, Q>,
}

impl Grassmann {
    pub fn zero() -> Grassmann {
        Grassmann::default()
    }

    pub fn one() -> Grassmann {
        Grassmann::mono(0, Q::one())
    }

    pub fn mono(m: Mono, c: Q) -> Grassmann {
        let mut g = Grassmann::zero();
        g.add_term(m, c);
        g
    }

    /// ξ_{i_1}…ξ_{i_k} for 0-based indices in the given order.
    pub fn product_of(indices: &[usize]) -> Grassmann {
        indices.iter().fold(Grassmann::one(), |acc, &i| acc.mul(&Grassmann::mono(1 << i, Q::one())))
    }

    pub fn add_term(&mut self, m: Mono, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Grassmann) -> Grassmann {
        let mut out = self.clone();
        for (&m, &c) in &other.terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn scale(&self, s: Q) -> Grassmann {
        let mut out = Grassmann::zero();
        for (&m, &c) in &self.terms {
            out.add_term(m, c * s);
        }
        out
    }

    pub fn sub(&self, other: &Grassmann) -> Grassmann {
        self.add(&other.scale(-Q::one()))
    }

    pub fn mul(&self, other: &Grassmann) -> Grassmann {
        let mut out = Grassmann::zero();
        for (&a, &x) in &self.terms {
            for (&b, &y) in &other.terms {
                if let Some(s) = merge_sign(a, b) {
                    out.add_term(a | b, x * y * Q::from_integer(s as i64));
                }
            }
        }
        out
    }

    /// Left derivative ∂/∂ξ_j.
    pub fn partial(&self, j: usize) -> Grassmann {
        let mut out = Grassmann::zero();
        for (&m, &c) in &self.terms {
            if m >> j & 1 == 1 {
                let before = (m & ((1 << j) - 1)).count_ones();
                let s = if before % 2 == 0 { c } else { -c };
                out.add_term(m & !(1 << j), s);
            }
        }
        out
    }

    /// Parity when homogeneous.
    pub fn parity(&self) -> Option<u8> {
        let mut it = self.terms.keys().map(|m| (m.count_ones() % 2) as u8);
        let p = it.next()?;
        it.all(|q| q == p).then_some(p)
    }

    /// Component of degree `d`.
    pub fn degree_part(&self, d: u32) -> Grassmann {
        let mut out = Grassmann::zero();
        for (&m, &c) in &self.terms {
            if m.count_ones() == d {
                out.add_term(m, c);
            }
        }
        out
    }
}

fn fmt_mono(m: Mono, var: &str) -> String {
    if m == 0 {
        return "1".into();
    }
    (0..16).filter(|i| m >> i & 1 == 1).map(|i| format!("{var}{}", i + 1)).collect()
}

impl fmt::Display for Grassmann {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(&m, c)| format!("({c}){}", fmt_mono(m, "x"))).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// A superderivation Σ_j p_j ∂/∂ξ_j of ⋀(n).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Derivation {
    pub comps: Vec<Grassmann>,
}

impl Derivation {
    pub fn zero(n: usize) -> Derivation {
        Derivation { comps: vec![Grassmann::zero(); n] }
    }

    pub fn n(&self) -> usize {
        self.comps.len()
    }

    /// p ∂/∂ξ_j.
    pub fn single(n: usize, p: Grassmann, j: usize) -> Derivation {
        let mut d = Derivation::zero(n);
        d.comps[j] = p;
        d
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Grassmann::is_zero)
    }

    /// Parity of the operator (coefficient parity plus one) when homogeneous.
    pub fn parity(&self) -> Option<u8> {
        let mut p = None;
        for c in &self.comps {
            if c.is_zero() {
                continue;
            }
            let q = (c.parity()? + 1) % 2;
            match p {
                None => p = Some(q),
                Some(x) if x != q => return None,
                _ => {}
            }
        }
        Some(p.unwrap_or(0))
    }

    pub fn apply(&self, f: &Grassmann) -> Grassmann {
        let mut out = Grassmann::zero();
        for (j, p) in self.comps.iter().enumerate() {
            if !p.is_zero() {
                out = out.add(&p.mul(&f.partial(j)));
            }
        }
        out
    }

    pub fn add(&self, o: &Derivation) -> Derivation {
        Derivation { comps: self.comps.iter().zip(&o.comps).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn scale(&self, s: Q) -> Derivation {
        Derivation { comps: self.comps.iter().map(|a| a.scale(s)).collect() }
    }

    /// Left multiplication by a Grassmann element.
    pub fn left_mul(&self, g: &Grassmann) -> Derivation {
        Derivation { comps: self.comps.iter().map(|a| g.mul(a)).collect() }
    }

    /// [D, E] = D∘E − (−1)^{|D||E|} E∘D for homogeneous D, E.
    pub fn bracket(&self, o: &Derivation) -> Derivation {
        let sign = if self.parity().unwrap_or(0) * o.parity().unwrap_or(0) == 1 { 1 } else { -1 };
        let comps = (0..self.n())
            .map(|j| {
                let a = self.apply(&o.comps[j]);
                let b = o.apply(&self.comps[j]);
                a.add(&b.scale(Q::from_integer(sign)))
            })
            .collect();
        Derivation { comps }
    }

    /// Σ_j ∂p_j/∂ξ_j.
    pub fn divergence(&self) -> Grassmann {
        self.comps.iter().enumerate().fold(Grassmann::zero(), |acc, (j, p)| acc.add(&p.partial(j)))
    }

    /// Coordinates over the basis {ξ_A ∂_j}, keyed by (j, A).
    pub fn coords(&self) -> BTreeMap<(usize, Mono), Q> {
        let mut out = BTreeMap::new();
        for (j, p) in self.comps.iter().enumerate() {
            for (&m, &c) in &p.terms {
                out.insert((j, m), c);
            }
        }
        out
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .comps
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(j, p)| format!("[{p}]d{}", j + 1))
            .collect();
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

    fn x(i: usize) -> Grassmann {
        Grassmann::mono(1 << i, Q::one())
    }

    #[test]
    fn anticommuting_generators() {
        assert_eq!(x(0).mul(&x(1)), x(1).mul(&x(0)).scale(-Q::one()));
        assert!(x(2).mul(&x(2)).is_zero());
        assert_eq!(Grassmann::product_of(&[2, 0, 1]), Grassmann::mono(0b111, Q::one()));
    }

    #[test]
    fn left_derivative_signs() {
        let f = Grassmann::product_of(&[0, 1, 2]);
        assert_eq!(f.partial(1), Grassmann::product_of(&[0, 2]).scale(-Q::one()));
        assert_eq!(f.partial(0), Grassmann::product_of(&[1, 2]));
    }

    #[test]
    fn gl2_inside_w2() {
        let e12 = Derivation::single(2, x(0), 1);
        let e21 = Derivation::single(2, x(1), 0);
        let h = Derivation::single(2, x(0), 0).add(&Derivation::single(2, x(1), 1).scale(-Q::one()));
        assert_eq!(e12.bracket(&e21), h);
    }

    #[test]
    fn square_of_constant_odd_derivation_vanishes() {
        let d = Derivation::single(2, Grassmann::one(), 0);
        assert_eq!(d.parity(), Some(1));
        assert!(d.bracket(&d).is_zero());
    }

    #[test]
    fn composition_summand_survives() {
        // [ξ1 ∂/∂ξ2, ξ2ξ3 ∂/∂ξ4] contains ξ1ξ3 ∂/∂ξ4
        let a = Derivation::single(4, x(0), 1);
        let b = Derivation::single(4, Grassmann::product_of(&[1, 2]), 3);
        let c = a.bracket(&b);
        assert_eq!(c.comps[3], Grassmann::product_of(&[0, 2]));
    }
}
