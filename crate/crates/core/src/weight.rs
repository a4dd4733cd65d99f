//! Exact weights over a labeled basis of ε, δ and γ symbols.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = Rational64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LabelKind {
    Epsilon,
    Delta,
    Gamma,
}

impl LabelKind {
    pub fn letter(self) -> char {
        match self {
            LabelKind::Epsilon => 'e',
            LabelKind::Delta => 'd',
            LabelKind::Gamma => 'g',
        }
    }
}

/// A basis symbol such as ε₂ or δ₁. Orders ε before δ before γ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisLabel {
    pub kind: LabelKind,
    pub index: u32,
}

impl BasisLabel {
    pub fn eps(index: u32) -> Self {
        BasisLabel { kind: LabelKind::Epsilon, index }
    }
    pub fn delta(index: u32) -> Self {
        BasisLabel { kind: LabelKind::Delta, index }
    }
    pub fn gamma(index: u32) -> Self {
        BasisLabel { kind: LabelKind::Gamma, index }
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.letter(), self.index)
    }
}

/// Builds the standard basis `e1..em, d1..dn, g1..gk`.
pub fn basis(eps: u32, delta: u32, gamma: u32) -> Vec<BasisLabel> {
    let mut b: Vec<BasisLabel> = (1..=eps).map(BasisLabel::eps).collect();
    b.extend((1..=delta).map(BasisLabel::delta));
    b.extend((1..=gamma).map(BasisLabel::gamma));
    b
}

/// Coordinate vector of exact rationals. Ordering is lexicographic on coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<Q>);

impl Weight {
    pub fn zero(dim: usize) -> Self {
        Weight(vec![Q::zero(); dim])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| Q::from_integer(c)).collect())
    }

    /// Unit vector in slot `i` scaled by `c`.
    pub fn unit(dim: usize, i: usize, c: i64) -> Self {
        let mut w = Weight::zero(dim);
        w.0[i] = Q::from_integer(c);
        w
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: Q) -> Weight {
        Weight(self.0.iter().map(|x| x * c).collect())
    }

    pub fn dot(&self, other: &[Q]) -> Q {
        self.0.iter().zip(other).map(|(a, b)| a * b).sum()
    }

    /// Evaluates an integer covector on this weight.
    pub fn eval_int(&self, lambda: &[i64]) -> Q {
        self.0
            .iter()
            .zip(lambda)
            .map(|(a, &b)| a * Q::from_integer(b))
            .sum()
    }

    /// Least common denominator of the coordinates.
    pub fn denominator(&self) -> i64 {
        self.0.iter().fold(1i64, |acc, c| acc.lcm(c.denom()))
    }

    /// Integer coordinates after multiplying by the common denominator.
    pub fn cleared(&self) -> (i64, Vec<i64>) {
        let d = self.denominator();
        let v = self
            .0
            .iter()
            .map(|c| (c * Q::from_integer(d)).to_integer())
            .collect();
        (d, v)
    }

    pub fn format(&self, basis: &[BasisLabel]) -> String {
        let (d, ints) = self.cleared();
        let mut body = String::new();
        for (c, label) in ints.iter().zip(basis) {
            if *c == 0 {
                continue;
            }
            if *c < 0 {
                body.push('-');
            } else if !body.is_empty() {
                body.push('+');
            }
            if c.abs() != 1 {
                body.push_str(&c.abs().to_string());
            }
            body.push_str(&label.to_string());
        }
        if body.is_empty() {
            return "0".to_string();
        }
        if d == 1 {
            body
        } else {
            format!("1/{d}({body})")
        }
    }

    /// Parses the output of [`Weight::format`] back into coordinates.
    pub fn parse(s: &str, basis: &[BasisLabel]) -> Result<Weight> {
        let err = || Error::Parse(s.to_string());
        let s = s.trim();
        let mut w = Weight::zero(basis.len());
        if s == "0" {
            return Ok(w);
        }
        let (scale, body) = if let Some(rest) = s.strip_prefix("1/") {
            let open = rest.find('(').ok_or_else(err)?;
            let d: i64 = rest[..open].parse().map_err(|_| err())?;
            if d == 0 || !rest.ends_with(')') {
                return Err(err());
            }
            (Q::new(1, d), &rest[open + 1..rest.len() - 1])
        } else {
            (Q::one(), s)
        };
        let bytes = body.as_bytes();
        let mut i = 0;
        if bytes.is_empty() {
            return Err(err());
        }
        while i < bytes.len() {
            let mut sign = 1i64;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -1;
                }
                i += 1;
            } else if i != 0 {
                return Err(err());
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let coef: i64 = if start == i {
                1
            } else {
                body[start..i].parse().map_err(|_| err())?
            };
            if i >= bytes.len() {
                return Err(err());
            }
            let kind = match bytes[i] {
                b'e' => LabelKind::Epsilon,
                b'd' => LabelKind::Delta,
                b'g' => LabelKind::Gamma,
                _ => return Err(err()),
            };
            i += 1;
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let index: u32 = body[start..i].parse().map_err(|_| err())?;
            let slot = basis
                .iter()
                .position(|l| l.kind == kind && l.index == index)
                .ok_or_else(err)?;
            w.0[slot] += Q::from_integer(sign * coef) * scale;
        }
        Ok(w)
    }

    /// True when every coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn abs_sum(&self) -> Q {
        self.0.iter().map(|c| c.abs()).sum()
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_and_parse() {
        let b = basis(3, 0, 1);
        let w = Weight(vec![Q::new(1, 2), Q::new(1, 2), Q::new(1, 2), Q::new(-1, 2)]);
        assert_eq!(w.format(&b), "1/2(e1+e2+e3-g1)");
        assert_eq!(Weight::parse("1/2(e1+e2+e3-g1)", &b).unwrap(), w);
        let b = basis(2, 2, 0);
        let w = Weight::from_ints(&[1, 0, -1, 0]);
        assert_eq!(w.format(&b), "e1-d1");
        let w = Weight::from_ints(&[0, 0, 2, 0]);
        assert_eq!(w.format(&b), "2d1");
        assert_eq!(Weight::parse("2d1", &b).unwrap(), w);
        assert_eq!(Weight::zero(4).format(&b), "0");
        assert!(Weight::parse("e3", &b).is_err());
        assert!(Weight::parse("e1d1", &b).is_err());
    }
}
