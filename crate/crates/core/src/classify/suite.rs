//! The reference suite: every classification instance at desk-scale rank,
//! plus the bracket, generator, lemma, module and extension checks.
//!
//! Output is deterministic; nothing time-dependent enters a [`SuiteReport`].

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::extension::{extension_pattern_holds, restriction_extension_check};
use super::{entry_module_verdict, enumerate_cominuscule_orbits, expected_classification, MethodChoice, ModuleVerdict};
use crate::cominuscule::{forbidden_table, is_cominuscule_with, predicts_nonzero, predicts_nonzero_w_ambient};
use crate::error::Result;
use crate::parabolic::{Caps, Method, Parabolics};
use crate::realize::Realization;
use crate::rootset::RootSet;
use crate::rootsys::{Family, RootSystem};
use crate::weyl::{act, Group, GroupKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteCheck {
    pub criterion: u8,
    pub name: String,
    pub family: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub checks: Vec<SuiteCheck>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn criterion(&self, k: u8) -> impl Iterator<Item = &SuiteCheck> {
        self.checks.iter().filter(move |c| c.criterion == k)
    }

    /// Whether every check of criterion `k` passed; `None` when there are none.
    pub fn criterion_passed(&self, k: u8) -> Option<bool> {
        let mut it = self.criterion(k).peekable();
        it.peek()?;
        Some(it.all(|c| c.pass))
    }

    pub fn failures(&self) -> Vec<&SuiteCheck> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    /// Aligned text table, one line per check.
    pub fn render_table(&self) -> String {
        let w_name = self.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
        let w_fam = self.checks.iter().map(|c| c.family.chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{:>2}  {}  {:<w_name$}  {:<w_fam$}  {}",
                c.criterion,
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.family,
                c.detail,
            );
        }
        out
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    /// Restrict to one family tag, e.g. `H` or `osp`.
    pub only: Option<String>,
    /// Replacement stated orbit counts, keyed by instance name such as `sl(2|1)`.
    pub stated_counts: BTreeMap<String, usize>,
    pub caps: Caps,
}

/// Orbit count stated by the classification theorems.
pub fn stated_orbit_count(f: Family) -> Option<usize> {
    Some(match f {
        Family::Gl { .. } => return None,
        Family::Sl { m, n } => ((m + 1) * (n + 1) - 2) as usize,
        Family::Psl { n } => {
            if n == 2 {
                1
            } else {
                ((n + 1) * (n + 1) - 2) as usize
            }
        }
        Family::Osp { m, .. } => match m {
            1 => 0,
            2 => 4,
            m if m % 2 == 1 => 1,
            _ => 3,
        },
        Family::D21a => 1,
        Family::F4 | Family::G3 => 0,
        Family::Psq { n } => (n - 1) as usize,
        Family::P { n } => (n + 2) as usize,
        Family::W { n } | Family::S { n } => (n + 1) as usize,
        Family::SPrime { .. } => 0,
        Family::H { .. } => 1,
    })
}

/// The classification instances at reference ranks.
pub fn reference_instances() -> Vec<Family> {
    use Family::*;
    vec![
        Sl { m: 2, n: 1 },
        Sl { m: 3, n: 2 },
        Psl { n: 2 },
        Psl { n: 3 },
        Osp { m: 3, n: 1 },
        Osp { m: 5, n: 1 },
        Osp { m: 1, n: 1 },
        Osp { m: 1, n: 2 },
        Osp { m: 4, n: 1 },
        Osp { m: 6, n: 1 },
        Osp { m: 2, n: 1 },
        Osp { m: 2, n: 2 },
        D21a,
        F4,
        G3,
        Psq { n: 3 },
        Psq { n: 4 },
        P { n: 2 },
        P { n: 3 },
        W { n: 2 },
        W { n: 3 },
        S { n: 3 },
        S { n: 4 },
        SPrime { n: 4 },
        H { n: 5 },
        H { n: 6 },
    ]
}

/// Families whose root-level bracket rule is compared with brackets in a realization.
pub fn bracket_instances() -> Vec<Family> {
    use Family::*;
    vec![
        Gl { m: 2, n: 2 },
        Gl { m: 3, n: 3 },
        Psq { n: 3 },
        P { n: 2 },
        P { n: 3 },
        W { n: 3 },
        S { n: 3 },
        S { n: 4 },
        SPrime { n: 4 },
        H { n: 5 },
        H { n: 6 },
    ]
}

/// Kac–Moody-type instances small enough for exhaustive enumeration.
pub fn generator_instances() -> Vec<Family> {
    use Family::*;
    vec![
        Sl { m: 2, n: 1 },
        Sl { m: 1, n: 2 },
        Sl { m: 3, n: 1 },
        Sl { m: 1, n: 3 },
        Sl { m: 2, n: 3 },
        Sl { m: 3, n: 2 },
        Sl { m: 4, n: 1 },
        Osp { m: 1, n: 1 },
        Osp { m: 1, n: 2 },
        Osp { m: 3, n: 1 },
        Osp { m: 3, n: 2 },
        Osp { m: 5, n: 1 },
        Osp { m: 2, n: 1 },
        Osp { m: 2, n: 2 },
        Osp { m: 4, n: 1 },
        Osp { m: 6, n: 1 },
        D21a,
    ]
}

fn module_instances() -> Vec<(Family, bool)> {
    use Family::*;
    vec![
        (Sl { m: 2, n: 1 }, false),
        (Sl { m: 3, n: 2 }, false),
        (Osp { m: 4, n: 1 }, false),
        (Osp { m: 2, n: 1 }, false),
        (P { n: 2 }, false),
        (P { n: 3 }, false),
        (W { n: 3 }, false),
        (S { n: 3 }, false),
        (Osp { m: 3, n: 1 }, false),
        (D21a, false),
        (Psq { n: 3 }, true),
        (Psq { n: 4 }, true),
    ]
}

fn lemma_instances() -> Vec<Family> {
    vec![Family::Sl { m: 2, n: 1 }, Family::P { n: 2 }, Family::W { n: 3 }]
}

fn restriction_instances() -> Vec<Family> {
    vec![Family::Sl { m: 2, n: 1 }, Family::P { n: 2 }, Family::P { n: 3 }, Family::W { n: 3 }]
}

fn invariance_instances() -> Vec<Family> {
    use Family::*;
    vec![Sl { m: 2, n: 1 }, Sl { m: 3, n: 2 }, Osp { m: 4, n: 1 }, D21a, P { n: 2 }, P { n: 3 }, W { n: 3 }, S { n: 3 }, H { n: 5 }]
}

struct Ctx<'o> {
    opts: &'o SuiteOptions,
    checks: Vec<SuiteCheck>,
}

impl Ctx<'_> {
    fn wanted(&self, f: Family) -> bool {
        self.opts.only.as_deref().is_none_or(|t| f.tag() == t)
    }

    fn push(&mut self, criterion: u8, name: &str, family: impl ToString, pass: bool, detail: String) {
        self.checks.push(SuiteCheck { criterion, name: name.into(), family: family.to_string(), pass, detail });
    }
}

/// Runs the reference suite.
pub fn run_reference_suite(opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut cx = Ctx { opts, checks: Vec::new() };
    classification_checks(&mut cx)?;
    special_checks(&mut cx)?;
    bracket_checks(&mut cx)?;
    generator_checks(&mut cx)?;
    lemma_checks(&mut cx)?;
    module_checks(&mut cx)?;
    extension_checks(&mut cx)?;
    cx.checks.sort_by(|a, b| a.criterion.cmp(&b.criterion));
    Ok(SuiteReport { checks: cx.checks })
}

fn classification_checks(cx: &mut Ctx) -> Result<()> {
    for f in reference_instances() {
        if !cx.wanted(f) {
            continue;
        }
        let rs = RootSystem::build(f)?;
        let r = enumerate_cominuscule_orbits(f, MethodChoice::Auto, cx.opts.caps)?;
        let name = f.to_string();
        let stated = cx.opts.stated_counts.get(&name).copied().or_else(|| stated_orbit_count(f));
        let labels: Vec<String> = r
            .orbits
            .iter()
            .map(|o| match o.expected {
                Some(k) => r.expected[k].label.clone(),
                None => format!("unmatched {:?}", rs.fmt_set(o.nplus)),
            })
            .collect();
        let found = r.orbit_count();
        cx.push(
            1,
            "orbit_count",
            &name,
            stated == Some(found),
            format!("found {found}, stated {}; orbits: {}", stated.map_or("-".into(), |s| s.to_string()), labels.join(", ")),
        );
        let unmatched: Vec<String> = r
            .expected
            .iter()
            .zip(&r.expected_checks)
            .filter(|(_, c)| c.orbit.is_none() || !c.valid)
            .map(|(e, c)| format!("{}{}", e.label, if c.valid { " not found" } else { " invalid" }))
            .chain(r.orbits.iter().enumerate().filter(|(_, o)| o.expected.is_none()).map(|(k, _)| format!("orbit {k} {}", labels[k])))
            .collect();
        cx.push(
            2,
            "representatives",
            &name,
            r.matches(),
            if unmatched.is_empty() { format!("{} bijective", found) } else { unmatched.join("; ") },
        );
        let multi = r.orbits.iter().filter(|o| o.decompositions != 1).count();
        cx.push(
            3,
            "unique_levi",
            &name,
            r.all_unique,
            format!("{} cominuscule sets, {} orbit reps with several decompositions", r.cominuscule_count, multi),
        );
        let witnesses: Vec<String> = r
            .orbits
            .iter()
            .map(|o| o.witness.as_ref().map_or("none".into(), |w| format!("{w:?}")))
            .collect();
        cx.push(4, "principal", &name, r.all_principal, format!("witnesses {}", witnesses.join(" ")));
        let bad: Vec<String> = r
            .orbits
            .iter()
            .enumerate()
            .filter_map(|(k, o)| o.even_restriction.as_ref().err().map(|e| format!("orbit {k}: {e}")))
            .collect();
        cx.push(7, "even_restriction", &name, bad.is_empty(), if bad.is_empty() { "all orbits".into() } else { bad.join("; ") });
        if let Some((kind, count)) = r.supplementary {
            cx.push(1, "supplementary_orbits", &name, true, format!("{count} orbits under {kind}"));
        }
    }
    Ok(())
}

fn special_checks(cx: &mut Ctx) -> Result<()> {
    let f = Family::P { n: 2 };
    if cx.wanted(f) {
        let rs = RootSystem::build(f)?;
        let par = Parabolics::new(&rs)?;
        let forbid = forbidden_table(&rs);
        let mut shown = None;
        for p in par.enumerate(Method::Exhaustive)? {
            let ds = par.levi_decompositions(p)?;
            if ds.len() >= 2 && !is_cominuscule_with(&par, p, &forbid)?.is_cominuscule {
                let ls: Vec<String> = ds.iter().map(|d| format!("L={:?}", rs.fmt_set(d.l))).collect();
                shown = Some(format!("P={:?}: {}", rs.fmt_set(p), ls.join(" / ")));
                break;
            }
        }
        cx.push(3, "two_decompositions", f, shown.is_some(), shown.unwrap_or_else(|| "none found".into()));
    }
    let f = Family::Psl { n: 2 };
    if cx.wanted(f) {
        let rs = RootSystem::build(f)?;
        let par = Parabolics::new(&rs)?;
        let all = par.enumerate(Method::Exhaustive)?;
        let none = all.iter().filter(|&&p| par.principality_witness(p).is_none()).count();
        let strict = all.iter().filter(|&&p| par.strict_principality_witness(p).is_none()).count();
        cx.push(
            4,
            "non_principal_exists",
            f,
            none > 0,
            format!("{} parabolic sets, {none} without witness, {strict} without a witness vanishing only on L", all.len()),
        );
    }
    Ok(())
}

/// Mismatches between a root-level rule and realization brackets, over pairs with α + β ≠ 0.
pub fn bracket_mismatches(rs: &RootSystem, rz: &Realization, rule: fn(&RootSystem, usize, usize) -> bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..rs.len() {
        for b in 0..rs.len() {
            if rs.neg(a) == Some(b) {
                continue;
            }
            if rz.bracket_nonzero(a, b) != rule(rs, a, b) {
                out.push((a, b));
            }
        }
    }
    out
}

fn bracket_checks(cx: &mut Ctx) -> Result<()> {
    for f in bracket_instances() {
        if !cx.wanted(f) {
            continue;
        }
        let rz = Realization::new(f)?;
        let rs = &rz.rs;
        let stated = bracket_mismatches(rs, &rz, predicts_nonzero_w_ambient);
        let used = bracket_mismatches(rs, &rz, predicts_nonzero);
        let show = |v: &[(usize, usize)]| {
            v.iter().take(3).map(|&(a, b)| format!("({}, {})", rs.root_str(a), rs.root_str(b))).collect::<Vec<_>>().join(" ")
        };
        cx.push(
            5,
            "bracket_rule",
            f,
            stated.is_empty(),
            format!("{} pairs disagree with the stated rule {}", stated.len(), show(&stated)),
        );
        cx.push(
            5,
            "bracket_rule_used",
            f,
            used.is_empty(),
            format!("{} pairs disagree with the rule used for classification", used.len()),
        );
    }
    let f = Family::Psl { n: 3 };
    if cx.wanted(f) {
        let rz = Realization::new(f)?;
        let rs = &rz.rs;
        let a = rs.index_of_str("e1-d1")?;
        let b = rs.index_of_str("e2-d2")?;
        let zero = !rz.bracket_nonzero(a, b);
        let projected = rs.projected_sum_in_delta(a, b)?;
        cx.push(
            5,
            "projected_sum_pair",
            f,
            zero && projected && !rs.sum_in_ambient(a, b),
            format!("bracket zero: {zero}, projected sum a root: {projected}"),
        );
    }
    Ok(())
}

fn generator_checks(cx: &mut Ctx) -> Result<()> {
    for f in generator_instances() {
        if !cx.wanted(f) {
            continue;
        }
        let rs = RootSystem::build(f)?;
        let par = Parabolics::new(&rs)?;
        let ex = par.enumerate(Method::Exhaustive)?;
        let pr = par.enumerate(Method::Principal)?;
        cx.push(
            6,
            "principal_equals_exhaustive",
            f,
            ex == pr,
            format!("{} roots, {} exhaustive, {} principal", rs.len(), ex.len(), pr.len()),
        );
    }
    Ok(())
}

fn negate(rs: &RootSystem, s: RootSet) -> RootSet {
    RootSet::from_indices(s.iter().filter_map(|i| rs.neg(i)))
}

/// Restriction of a Levi decomposition to the even roots: P ∩ Δ₀ is all of
/// Δ₀, or is parabolic in Δ₀ with Levi part L ∩ Δ₀ and nilradical N⁺ ∩ Δ₀.
pub fn restriction_compatible(rs: &RootSystem, p: RootSet, l: RootSet, nplus: RootSet) -> bool {
    let d0 = super::even_reference(rs);
    let q = p.intersect(d0);
    if q == d0 {
        return true;
    }
    let qn = negate(rs, q);
    let closed = q.iter().all(|a| {
        q.iter().all(|b| {
            rs.index_of(&(rs.weight(a) + rs.weight(b))).filter(|&k| d0.contains(k)).is_none_or(|k| q.contains(k))
        })
    });
    closed && q.union(qn) == d0 && l.intersect(d0) == q.intersect(qn) && nplus.intersect(d0) == q.minus(qn)
}

fn lemma_checks(cx: &mut Ctx) -> Result<()> {
    for f in lemma_instances() {
        if !cx.wanted(f) {
            continue;
        }
        let rs = RootSystem::build(f)?;
        let par = Parabolics::new(&rs)?;
        let (mut n, mut bad) = (0usize, Vec::new());
        for p in par.enumerate(Method::Exhaustive)? {
            for d in par.levi_decompositions(p)? {
                n += 1;
                if let Err(e) = par.check_sums_lemma(&d) {
                    bad.push(format!("{:?}: {e}", rs.fmt_set(p)));
                }
            }
        }
        cx.push(7, "sums_lemma", f, bad.is_empty(), format!("{n} decompositions, {} violations {}", bad.len(), bad.first().cloned().unwrap_or_default()));
    }
    for f in restriction_instances() {
        if !cx.wanted(f) {
            continue;
        }
        let rs = RootSystem::build(f)?;
        let par = Parabolics::new(&rs)?;
        let (mut n, mut bad) = (0usize, 0usize);
        for p in par.enumerate(Method::Exhaustive)? {
            for d in par.levi_decompositions(p)? {
                n += 1;
                bad += !restriction_compatible(&rs, p, d.l, d.nplus) as usize;
            }
        }
        cx.push(7, "even_restriction_all", f, bad == 0, format!("{n} decompositions, {bad} incompatible"));
    }
    for f in invariance_instances() {
        if !cx.wanted(f) {
            continue;
        }
        let rs = RootSystem::build(f)?;
        let par = Parabolics::new(&rs)?;
        let forbid = forbidden_table(&rs);
        let group = Group::new(&rs, GroupKind::default_for(f))?;
        let all = par.enumerate(Method::Exhaustive)?;
        let mut verdict = BTreeMap::new();
        for &p in &all {
            verdict.insert(p, is_cominuscule_with(&par, p, &forbid)?.is_cominuscule);
        }
        let mut bad = 0usize;
        for &p in &all {
            for g in &group.gens {
                let q = act(g, p);
                bad += (verdict.get(&q) != Some(&verdict[&p])) as usize;
            }
        }
        cx.push(
            7,
            "weyl_invariance",
            f,
            bad == 0,
            format!("{} parabolic sets x {} generators, {bad} changes", all.len(), group.gens.len()),
        );
    }
    Ok(())
}

fn module_checks(cx: &mut Ctx) -> Result<()> {
    for (f, support) in module_instances() {
        if !cx.wanted(f) {
            continue;
        }
        let rs = RootSystem::build(f)?;
        let entries = expected_classification(&rs)?;
        let mut parts = Vec::new();
        let mut pass = !entries.is_empty();
        for e in &entries {
            let v = entry_module_verdict(&rs, e);
            pass &= if support {
                matches!(v, ModuleVerdict::SupportOnly(_))
            } else {
                matches!(v, ModuleVerdict::Consistent | ModuleVerdict::ConsistentUpToParity)
            };
            parts.push(format!("{}: {}", e.label, v.tag()));
        }
        cx.push(8, "module_weights", f, pass, parts.join("; "));
    }
    Ok(())
}

fn extension_checks(cx: &mut Ctx) -> Result<()> {
    for n in [3usize, 4] {
        let f = Family::W { n: n as u32 };
        if !cx.wanted(f) {
            continue;
        }
        let vs = restriction_extension_check(n)?;
        let failed: Vec<String> = vs.iter().filter(|v| !v.literal && !v.pass).map(|v| v.target.clone()).collect();
        cx.push(
            9,
            "extension_pattern",
            f,
            extension_pattern_holds(&vs),
            format!("{} statements, failing: [{}]", vs.iter().filter(|v| !v.literal).count(), failed.join(", ")),
        );
        let literal: Vec<String> = vs
            .iter()
            .filter(|v| v.literal)
            .map(|v| format!("{} extends to {:?}", v.target, v.found))
            .collect();
        if !literal.is_empty() {
            cx.push(9, "literal_no_extension_clause", f, true, format!("contradicted: {}", literal.join("; ")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stated_counts_at_reference_ranks() {
        let got: Vec<usize> = reference_instances().into_iter().map(|f| stated_orbit_count(f).unwrap()).collect();
        assert_eq!(got, vec![4, 10, 1, 14, 1, 1, 0, 0, 3, 3, 4, 4, 1, 0, 0, 2, 3, 4, 5, 3, 4, 4, 5, 0, 1, 1]);
    }

    #[test]
    fn generator_instances_fit_the_subset_cap() {
        for f in generator_instances() {
            assert!(RootSystem::build(f).unwrap().len() <= Caps::default().subset, "{f}");
        }
    }

    #[test]
    fn only_filter_restricts_to_one_family() {
        let opts = SuiteOptions { only: Some("H".into()), ..Default::default() };
        let r = run_reference_suite(&opts).unwrap();
        assert!(!r.checks.is_empty());
        assert!(r.checks.iter().all(|c| c.family.starts_with("H(")));
        assert!(r.passed(), "{}", r.render_table());
    }
}
