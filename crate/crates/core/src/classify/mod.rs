//! End-to-end classification of cominuscule parabolic subsets: enumeration,
//! orbit grouping, comparison with the expected tables, and module checks.

pub mod expected;
pub mod extension;
pub mod modules;
pub mod suite;

use std::collections::HashMap;
use std::fmt;
use std::time::{Duration, Instant};

use crate::cominuscule::{forbidden_table, is_cominuscule_with};
use crate::error::{Error, Result};
use crate::parabolic::{Caps, Method, Parabolics};
use crate::rootset::RootSet;
use crate::rootsys::{Family, RootSystem};
use crate::weyl::{Group, GroupKind};

pub use expected::{expected_classification, ExpectedEntry, ModuleClaim};
pub use extension::{restriction_extension_check, ExtensionVerdict};
pub use modules::{compare_with_roots, module_weights, LeviContext, ModuleExpr, ModuleVerdict, ModuleWeights};

/// Requested enumeration method.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodChoice {
    Exhaustive,
    Principal,
    Search,
    Auto,
}

impl MethodChoice {
    pub fn parse(s: &str) -> Result<MethodChoice> {
        match s {
            "exhaustive" => Ok(MethodChoice::Exhaustive),
            "principal" => Ok(MethodChoice::Principal),
            "search" => Ok(MethodChoice::Search),
            "auto" => Ok(MethodChoice::Auto),
            _ => Err(Error::Unsupported(format!("method `{s}`"))),
        }
    }
}

/// Families whose parabolic subsets are all principal, so that principal
/// enumeration is complete: the symmetric basic classical root systems
/// other than psl(n|n).
pub fn principal_complete(f: Family) -> bool {
    matches!(
        f,
        Family::Gl { .. } | Family::Sl { .. } | Family::Osp { .. } | Family::D21a | Family::F4 | Family::G3
    )
}

/// The method `choice` resolves to for `rs` under `caps`.
pub fn resolve_method(rs: &RootSystem, choice: MethodChoice, caps: &Caps) -> Result<Method> {
    match choice {
        MethodChoice::Exhaustive => {
            if rs.len() > caps.subset {
                Err(Error::CapExceeded(format!(
                    "{} has {} roots; exhaustive enumeration is capped at {}",
                    rs.family,
                    rs.len(),
                    caps.subset
                )))
            } else {
                Ok(Method::Exhaustive)
            }
        }
        MethodChoice::Principal => {
            if principal_complete(rs.family) {
                Ok(Method::Principal)
            } else {
                Err(Error::Unsupported(format!(
                    "principal-only enumeration is incomplete for {}",
                    rs.family
                )))
            }
        }
        MethodChoice::Search => Ok(Method::Search),
        MethodChoice::Auto => Ok(if rs.len() <= caps.subset {
            Method::Exhaustive
        } else if principal_complete(rs.family) {
            Method::Principal
        } else {
            Method::Search
        }),
    }
}

#[derive(Clone, Debug)]
pub struct OrbitRecord {
    /// Lexicographically least member of the orbit.
    pub rep: RootSet,
    /// Cominuscule sets found in the orbit.
    pub members: usize,
    /// Number of Levi decompositions of the representative.
    pub decompositions: usize,
    pub l: RootSet,
    pub nplus: RootSet,
    pub witness: Option<Vec<i64>>,
    /// Index of the matching expected entry.
    pub expected: Option<usize>,
    pub even_restriction: std::result::Result<(), String>,
    pub module: ModuleVerdict,
}

#[derive(Clone, Debug)]
pub struct ExpectedCheck {
    pub canonical: RootSet,
    /// The entry is parabolic, cominuscule, and L ⊔ N⁺ is its only Levi decomposition.
    pub valid: bool,
    pub orbit: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub family: Family,
    pub group: GroupKind,
    pub method: Method,
    pub parabolic_count: Option<usize>,
    pub cominuscule_count: usize,
    /// Every cominuscule set has exactly one Levi decomposition and a witness.
    pub all_unique: bool,
    pub all_principal: bool,
    pub orbits: Vec<OrbitRecord>,
    pub expected: Vec<ExpectedEntry>,
    pub expected_checks: Vec<ExpectedCheck>,
    /// Orbit count under a second group, when the family has one.
    pub supplementary: Option<(GroupKind, usize)>,
    pub elapsed: Duration,
}

impl ClassificationReport {
    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    /// Orbits and expected entries correspond bijectively.
    pub fn matches(&self) -> bool {
        self.orbits.iter().all(|o| o.expected.is_some())
            && self.expected_checks.iter().all(|e| e.orbit.is_some() && e.valid)
    }

    pub fn passed(&self) -> bool {
        self.matches()
            && self.all_unique
            && self.all_principal
            && self.orbits.iter().all(|o| o.even_restriction.is_ok() && o.module.ok())
    }

    /// Human-readable reasons for failure, naming family and orbit.
    pub fn failures(&self, rs: &RootSystem) -> Vec<String> {
        let mut out = Vec::new();
        let f = self.family;
        for (k, o) in self.orbits.iter().enumerate() {
            if o.expected.is_none() {
                out.push(format!("{f}: orbit {k} {:?} matches no expected entry", rs.fmt_set(o.nplus)));
            }
            if let Err(e) = &o.even_restriction {
                out.push(format!("{f}: orbit {k}: even restriction: {e}"));
            }
            if let ModuleVerdict::Mismatch(e) = &o.module {
                out.push(format!("{f}: orbit {k}: module: {e}"));
            }
        }
        for (e, c) in self.expected.iter().zip(&self.expected_checks) {
            if !c.valid {
                out.push(format!("{f}: expected {} is not a cominuscule parabolic set with that Levi decomposition", e.label));
            }
            if c.orbit.is_none() {
                out.push(format!("{f}: expected {} was not found", e.label));
            }
        }
        if !self.all_unique {
            out.push(format!("{f}: a cominuscule set has several Levi decompositions"));
        }
        if !self.all_principal {
            out.push(format!("{f}: a cominuscule set has no principality witness"));
        }
        out
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{} / {}]: {} orbits, {} expected",
            self.family,
            self.method,
            self.group,
            self.orbits.len(),
            self.expected.len()
        )
    }
}

/// The roots of the reductive subalgebra used for restriction checks: 𝔤_0̄
/// for classical families, 𝔩_0̄ = 𝔤𝔩(n) or 𝔰𝔬(n) for Cartan-type ones.
pub fn even_reference(rs: &RootSystem) -> RootSet {
    match rs.family {
        Family::W { .. } | Family::S { .. } | Family::SPrime { .. } => rs.select(|w| {
            w.0.iter().filter(|c| **c == 1.into()).count() == 1
                && w.0.iter().filter(|c| **c == (-1).into()).count() == 1
        }),
        Family::H { n } => rs.select(|w| {
            let s = w.0.iter().filter(|c| !num_traits::Zero::is_zero(*c)).count();
            s == 2 || (s == 1 && n % 2 == 1)
        }),
        _ => rs.even_roots(),
    }
}

/// Restriction of `p` to the reference subsystem Δ₀: all of Δ₀, or a
/// parabolic subset of it whose nilradical is abelian.
pub fn even_restriction_check(rs: &RootSystem, p: RootSet) -> std::result::Result<(), String> {
    let d0 = even_reference(rs);
    let q = p.intersect(d0);
    if q == d0 {
        return Ok(());
    }
    let neg = |s: RootSet| -> std::result::Result<RootSet, String> {
        s.iter()
            .map(|i| rs.neg(i).ok_or_else(|| format!("−{} is not a root", rs.root_str(i))))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(RootSet::from_indices)
    };
    let qn = neg(q)?;
    if q.union(qn) != d0 {
        return Err("P ∩ Δ₀ ∪ −(P ∩ Δ₀) ≠ Δ₀".into());
    }
    let sum0 = |a: usize, b: usize| {
        let s = rs.weight(a) + rs.weight(b);
        rs.index_of(&s).filter(|&k| d0.contains(k))
    };
    for a in q.iter() {
        for b in q.iter() {
            if let Some(k) = sum0(a, b) {
                if !q.contains(k) {
                    return Err(format!("{} + {} leaves P ∩ Δ₀", rs.root_str(a), rs.root_str(b)));
                }
            }
        }
    }
    let n0 = q.minus(qn);
    for a in n0.iter() {
        for b in n0.iter() {
            if sum0(a, b).is_some() {
                return Err(format!(
                    "even nilradical not abelian: {} + {}",
                    rs.root_str(a),
                    rs.root_str(b)
                ));
            }
        }
    }
    Ok(())
}

/// Compares each matched orbit's expected N⁺ with the weights of its module claim.
pub fn check_module_statements(rs: &RootSystem, report: &ClassificationReport) -> Vec<ModuleVerdict> {
    report
        .orbits
        .iter()
        .map(|o| match o.expected {
            None => ModuleVerdict::Unchecked("no expected entry".into()),
            Some(k) => entry_module_verdict(rs, &report.expected[k]),
        })
        .collect()
}

pub fn entry_module_verdict(rs: &RootSystem, e: &ExpectedEntry) -> ModuleVerdict {
    let Some(c) = &e.module else {
        return ModuleVerdict::Unchecked("no module claim".into());
    };
    match module_weights(&c.expr, &c.context) {
        Ok(m) => compare_with_roots(rs, e.nplus, &m, c.support_only),
        Err(err) => ModuleVerdict::Mismatch(err.to_string()),
    }
}

/// All cominuscule parabolic subsets of `rs` found by `method`.
pub fn cominuscule_sets(par: &Parabolics, method: Method) -> Result<(Option<usize>, Vec<RootSet>)> {
    let forbid = forbidden_table(par.rs);
    let (count, candidates) = match method {
        Method::Search => (None, par.search_sets(Some(&forbid))?),
        m => {
            let all = par.enumerate(m)?;
            (Some(all.len()), all)
        }
    };
    let mut out = Vec::new();
    for p in candidates {
        if is_cominuscule_with(par, p, &forbid)?.is_cominuscule {
            out.push(p);
        }
    }
    Ok((count, out))
}

/// Enumerates, groups by orbits under the classification's group, and
/// compares with the expected table.
pub fn enumerate_cominuscule_orbits(
    family: Family,
    choice: MethodChoice,
    caps: Caps,
) -> Result<ClassificationReport> {
    enumerate_cominuscule_orbits_under(family, choice, caps, GroupKind::default_for(family))
}

/// As [`enumerate_cominuscule_orbits`], with orbits taken under `kind`.
pub fn enumerate_cominuscule_orbits_under(
    family: Family,
    choice: MethodChoice,
    caps: Caps,
    kind: GroupKind,
) -> Result<ClassificationReport> {
    let start = Instant::now();
    let rs = RootSystem::build(family)?;
    let method = resolve_method(&rs, choice, &caps)?;
    let par = Parabolics::with_caps(&rs, caps)?;
    let forbid = forbidden_table(&rs);
    let (parabolic_count, com) = cominuscule_sets(&par, method)?;

    let mut all_unique = true;
    let mut all_principal = true;
    let mut info: HashMap<RootSet, (usize, RootSet, RootSet, Option<Vec<i64>>)> = HashMap::new();
    for &p in &com {
        let v = is_cominuscule_with(&par, p, &forbid)?;
        let w = par.principality_witness(p);
        all_unique &= v.decompositions.len() == 1;
        all_principal &= w.is_some();
        let d = v.witness.expect("cominuscule verdict has a witness");
        info.insert(p, (v.decompositions.len(), d.l, d.nplus, w));
    }

    let group = Group::new(&rs, kind)?;
    let grouped = group.orbits(&com, caps.orbit)?;

    let expected = expected_classification(&rs)?;
    let mut expected_checks = Vec::new();
    for e in &expected {
        let canonical = group.canonical_rep(e.set(), caps.orbit)?;
        let valid = e.set() != rs.full()
            && par.is_parabolic(e.set())?
            && {
                let v = is_cominuscule_with(&par, e.set(), &forbid)?;
                v.is_cominuscule
                    && v.decompositions.len() == 1
                    && v.decompositions[0].0.l == e.l
                    && v.decompositions[0].0.nplus == e.nplus
            };
        expected_checks.push(ExpectedCheck { canonical, valid, orbit: None });
    }

    let mut orbits = Vec::new();
    for (rep, members) in &grouped {
        let (decompositions, l, nplus, witness) = info[rep].clone();
        let k = orbits.len();
        let matched: Vec<usize> = expected_checks
            .iter()
            .enumerate()
            .filter(|(_, c)| c.canonical == *rep)
            .map(|(i, _)| i)
            .collect();
        let expected_idx = if matched.len() == 1 { Some(matched[0]) } else { None };
        if let Some(i) = expected_idx {
            expected_checks[i].orbit = Some(k);
        }
        orbits.push(OrbitRecord {
            rep: *rep,
            members: members.len(),
            decompositions,
            l,
            nplus,
            witness,
            expected: expected_idx,
            even_restriction: even_restriction_check(&rs, *rep),
            module: ModuleVerdict::Unchecked(String::new()),
        });
    }

    let supplementary = if kind == GroupKind::Extended {
        let g0 = Group::new(&rs, GroupKind::EvenWeyl)?;
        Some((GroupKind::EvenWeyl, g0.orbits(&com, caps.orbit)?.len()))
    } else {
        None
    };

    let mut report = ClassificationReport {
        family,
        group: kind,
        method,
        parabolic_count,
        cominuscule_count: com.len(),
        all_unique,
        all_principal,
        orbits,
        expected,
        expected_checks,
        supplementary,
        elapsed: start.elapsed(),
    };
    let verdicts = check_module_statements(&rs, &report);
    for (o, v) in report.orbits.iter_mut().zip(verdicts) {
        o.module = v;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(f: Family) -> ClassificationReport {
        enumerate_cominuscule_orbits(f, MethodChoice::Auto, Caps::default()).unwrap()
    }

    #[test]
    fn sl21_matches_its_table() {
        let r = report(Family::Sl { m: 2, n: 1 });
        assert_eq!(r.orbit_count(), 4);
        assert!(r.passed(), "{:?}", r.failures(&RootSystem::build(r.family).unwrap()));
        assert!(r.orbits.iter().all(|o| o.module == ModuleVerdict::Consistent));
    }

    #[test]
    fn osp14_has_none() {
        let r = report(Family::Osp { m: 1, n: 2 });
        assert_eq!(r.orbit_count(), 0);
        assert!(r.passed());
    }

    #[test]
    fn d21a_under_extended_group() {
        let r = report(Family::D21a);
        assert_eq!(r.orbit_count(), 1);
        assert!(r.passed());
        assert_eq!(r.supplementary.map(|s| s.0), Some(GroupKind::EvenWeyl));
    }

    #[test]
    fn auto_method_resolution() {
        let caps = Caps::default();
        let rs = RootSystem::build(Family::Psl { n: 3 }).unwrap();
        assert_eq!(resolve_method(&rs, MethodChoice::Auto, &caps).unwrap(), Method::Search);
        assert!(resolve_method(&rs, MethodChoice::Principal, &caps).is_err());
        assert!(matches!(
            resolve_method(&rs, MethodChoice::Exhaustive, &caps),
            Err(Error::CapExceeded(_))
        ));
        let rs = RootSystem::build(Family::F4).unwrap();
        assert_eq!(resolve_method(&rs, MethodChoice::Auto, &caps).unwrap(), Method::Principal);
    }

    #[test]
    fn even_reference_sizes() {
        let rs = RootSystem::build(Family::W { n: 3 }).unwrap();
        assert_eq!(even_reference(&rs).len(), 6);
        let rs = RootSystem::build(Family::H { n: 5 }).unwrap();
        assert_eq!(even_reference(&rs).len(), 8);
        let rs = RootSystem::build(Family::H { n: 6 }).unwrap();
        assert_eq!(even_reference(&rs).len(), 12);
    }
}
