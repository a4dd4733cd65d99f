//! The cominuscule property: a parabolic set with an abelian nilradical.

use std::fmt;

use crate::error::{Error, Result};
use crate::parabolic::{LeviDecomposition, Parabolics};
use crate::realize::Realization;
use crate::rootset::RootSet;
use crate::rootsys::{Family, RootSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    RootSum,
    Psl33Ambient,
    SAmbient,
    SprimeAmbient,
    BracketOracle,
}

impl Rule {
    pub fn tag(self) -> &'static str {
        match self {
            Rule::RootSum => "root_sum",
            Rule::Psl33Ambient => "psl33_ambient",
            Rule::SAmbient => "S_ambient",
            Rule::SprimeAmbient => "Sprime_ambient",
            Rule::BracketOracle => "bracket_oracle",
        }
    }

    pub fn for_family(f: Family) -> Rule {
        match f {
            Family::Psl { n: 3 } => Rule::Psl33Ambient,
            Family::S { .. } => Rule::SAmbient,
            Family::SPrime { .. } => Rule::SprimeAmbient,
            _ => Rule::RootSum,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub is_cominuscule: bool,
    pub witness: Option<LeviDecomposition>,
    pub rule_used: Rule,
    /// Every Levi decomposition of P with the abelian verdict of its nilradical.
    pub decompositions: Vec<(LeviDecomposition, bool)>,
}

fn negative_unit(rs: &RootSystem, i: usize) -> bool {
    let w = rs.weight(i);
    w.0.iter().filter(|c| **c != 0.into()).count() == 1 && w.0.iter().any(|c| *c == (-1).into())
}

/// Whether [𝔤^α, 𝔤^β] ≠ 0 is predicted at root level, for α + β ≠ 0.
///
/// The sum is taken in the ambient coordinates of the family. For S(n) and
/// S′(n) it must be a root of S(n) itself: a sum equal to one of the removed
/// W(n) roots ε_{[1,n]∖{i}} has no root space to land in. For S′(n) the pairs
/// (−ε_i, −ε_j) are added, including i = j, since the square of
/// (1 − ξ_1…ξ_n) ∂/∂ξ_i is a nonzero multiple of ξ_1…ξ̂_i…ξ_n ∂/∂ξ_i.
pub fn predicts_nonzero(rs: &RootSystem, a: usize, b: usize) -> bool {
    match rs.family {
        Family::S { .. } => rs.sum_index(a, b).is_some(),
        Family::SPrime { .. } => {
            rs.sum_index(a, b).is_some() || (negative_unit(rs, a) && negative_unit(rs, b))
        }
        _ => rs.sum_in_ambient(a, b),
    }
}

/// The S(n)/S′(n) rule read with sums tested in Δ_{W(n)} and the extra S′(n)
/// pairs restricted to i ≠ j; elsewhere equal to [`predicts_nonzero`]. Kept for
/// comparison against the bracket oracle.
pub fn predicts_nonzero_w_ambient(rs: &RootSystem, a: usize, b: usize) -> bool {
    match rs.family {
        Family::S { .. } => rs.sum_in_ambient(a, b),
        Family::SPrime { .. } => {
            rs.sum_in_ambient(a, b) || (a != b && negative_unit(rs, a) && negative_unit(rs, b))
        }
        _ => predicts_nonzero(rs, a, b),
    }
}

/// For each root α, the roots β for which the pair (α, β) may not both lie in
/// an abelian nilradical. Includes β = α when [𝔤^α, 𝔤^α] ≠ 0.
pub fn forbidden_table(rs: &RootSystem) -> Vec<RootSet> {
    let n = rs.len();
    (0..n)
        .map(|a| RootSet::from_indices((0..n).filter(|&b| predicts_nonzero(rs, a, b))))
        .collect()
}

/// No two roots of `nplus` (equal ones included) form a forbidden pair.
pub fn nilradical_abelian(rs: &RootSystem, nplus: RootSet) -> bool {
    let f = forbidden_table(rs);
    abelian_with(&f, nplus)
}

pub fn abelian_with(forbid: &[RootSet], nplus: RootSet) -> bool {
    nplus.iter().all(|a| forbid[a].intersect(nplus).is_empty())
}

/// Decides the cominuscule property over all Levi decompositions of `p`.
pub fn is_cominuscule(par: &Parabolics, p: RootSet) -> Result<Verdict> {
    let forbid = forbidden_table(par.rs);
    is_cominuscule_with(par, p, &forbid)
}

pub fn is_cominuscule_with(par: &Parabolics, p: RootSet, forbid: &[RootSet]) -> Result<Verdict> {
    let decs = par.levi_decompositions(p)?;
    let decompositions: Vec<(LeviDecomposition, bool)> = decs
        .into_iter()
        .map(|d| {
            let ok = abelian_with(forbid, d.nplus);
            (d, ok)
        })
        .collect();
    let witness = decompositions.iter().find(|(_, ok)| *ok).map(|(d, _)| d.clone());
    Ok(Verdict {
        is_cominuscule: witness.is_some(),
        witness,
        rule_used: Rule::for_family(par.rs.family),
        decompositions,
    })
}

/// Recomputes the abelian verdict of every Levi decomposition of `p` from the
/// brackets of an explicit realization and reports whether it agrees with
/// [`is_cominuscule`] decomposition by decomposition.
pub fn crosscheck_bracket(par: &Parabolics, rz: &Realization, p: RootSet) -> Result<bool> {
    if rz.rs.family != par.rs.family {
        return Err(Error::MixedRealization(format!(
            "{} realization for a subset of {}",
            rz.rs.family, par.rs.family
        )));
    }
    let v = is_cominuscule(par, p)?;
    Ok(v.decompositions.iter().all(|(d, ok)| {
        let by_brackets = d
            .nplus
            .iter()
            .all(|a| d.nplus.iter().all(|b| !rz.bracket_nonzero(a, b)));
        by_brackets == *ok
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl21_borel_nilradical_is_not_abelian() {
        let rs = RootSystem::build(Family::Sl { m: 2, n: 1 }).unwrap();
        let n = RootSet::from_indices([
            rs.index_of_str("e1-e2").unwrap(),
            rs.index_of_str("e2-d1").unwrap(),
        ]);
        assert!(!nilradical_abelian(&rs, n));
    }

    #[test]
    fn psl33_counterexample_pair_is_allowed() {
        let rs = RootSystem::build(Family::Psl { n: 3 }).unwrap();
        let n = RootSet::from_indices([
            rs.index_of_str("e1-d1").unwrap(),
            rs.index_of_str("e2-d2").unwrap(),
        ]);
        assert!(nilradical_abelian(&rs, n));
    }

    #[test]
    fn sprime_negative_units_clash() {
        let rs = RootSystem::build(Family::SPrime { n: 4 }).unwrap();
        let n = RootSet::from_indices([
            rs.index_of_str("-e1").unwrap(),
            rs.index_of_str("-e2").unwrap(),
        ]);
        assert!(!nilradical_abelian(&rs, n));
        let rs = RootSystem::build(Family::S { n: 4 }).unwrap();
        let n = RootSet::from_indices([
            rs.index_of_str("-e1").unwrap(),
            rs.index_of_str("-e2").unwrap(),
        ]);
        assert!(nilradical_abelian(&rs, n));
    }
}
