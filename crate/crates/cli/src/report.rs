//! Serializable reports. Field order is fixed and maps are ordered, so the
//! JSON output of a run is byte-for-byte reproducible.

use serde::Serialize;

use superroots::classify::suite::SuiteReport;
use superroots::classify::{entry_module_verdict, ClassificationReport};
use superroots::classify::suite::stated_orbit_count;
use superroots::rootsys::RootSystem;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
pub struct ClassifyJson {
    pub schema_version: u32,
    pub family: String,
    pub tag: String,
    pub params: Vec<u32>,
    pub group: String,
    pub method: String,
    pub root_count: usize,
    pub parabolic_count: Option<usize>,
    pub cominuscule_count: usize,
    pub orbit_count: usize,
    pub stated_orbit_count: Option<usize>,
    pub supplementary: Option<Supplementary>,
    pub orbits: Vec<OrbitJson>,
    pub expected: Vec<ExpectedJson>,
    pub checks: ClassifyChecks,
}

#[derive(Serialize)]
pub struct Supplementary {
    pub group: String,
    pub orbit_count: usize,
}

#[derive(Serialize)]
pub struct OrbitJson {
    pub representative: Vec<String>,
    pub orbit_size: usize,
    pub label: Option<String>,
    pub principal_witness: Option<Vec<i64>>,
    pub levi: LeviJson,
    pub nilradical: NilradicalJson,
    pub even_restriction: String,
}

#[derive(Serialize)]
pub struct LeviJson {
    pub roots: Vec<String>,
    pub components: Vec<String>,
    pub decompositions: usize,
}

#[derive(Serialize)]
pub struct NilradicalJson {
    pub weights: Vec<String>,
    pub module_claim: Option<String>,
    pub verdict: String,
    pub note: Option<String>,
}

#[derive(Serialize)]
pub struct ExpectedJson {
    pub label: String,
    pub nilradical: Vec<String>,
    pub valid: bool,
    pub found: bool,
    pub module_verdict: String,
}

#[derive(Serialize)]
pub struct ClassifyChecks {
    pub orbit_count_as_stated: bool,
    pub representatives_bijective: bool,
    pub unique_levi: bool,
    pub principal: bool,
    pub even_restriction: bool,
    pub modules: bool,
    pub passed: bool,
    pub failures: Vec<String>,
}

pub fn classify_json(rs: &RootSystem, r: &ClassificationReport) -> ClassifyJson {
    let stated = stated_orbit_count(r.family);
    let orbits = r
        .orbits
        .iter()
        .map(|o| {
            let e = o.expected.map(|k| &r.expected[k]);
            OrbitJson {
                representative: rs.fmt_set(o.rep),
                orbit_size: o.members,
                label: e.map(|e| e.label.clone()),
                principal_witness: o.witness.clone(),
                levi: LeviJson {
                    roots: rs.fmt_set(o.l),
                    components: e.map(|e| e.levi.clone()).unwrap_or_default(),
                    decompositions: o.decompositions,
                },
                nilradical: NilradicalJson {
                    weights: rs.fmt_set(o.nplus),
                    module_claim: e.and_then(|e| e.module.as_ref().map(|m| m.text.clone())),
                    verdict: o.module.tag().into(),
                    note: o.module.note().filter(|s| !s.is_empty()).map(str::to_string),
                },
                even_restriction: match &o.even_restriction {
                    Ok(()) => "ok".into(),
                    Err(e) => e.clone(),
                },
            }
        })
        .collect();
    let expected = r
        .expected
        .iter()
        .zip(&r.expected_checks)
        .map(|(e, c)| ExpectedJson {
            label: e.label.clone(),
            nilradical: rs.fmt_set(e.nplus),
            valid: c.valid,
            found: c.orbit.is_some(),
            module_verdict: entry_module_verdict(rs, e).tag().into(),
        })
        .collect();
    let checks = ClassifyChecks {
        orbit_count_as_stated: stated == Some(r.orbit_count()),
        representatives_bijective: r.matches(),
        unique_levi: r.all_unique,
        principal: r.all_principal,
        even_restriction: r.orbits.iter().all(|o| o.even_restriction.is_ok()),
        modules: r.orbits.iter().all(|o| o.module.ok()),
        passed: r.passed() && stated == Some(r.orbit_count()),
        failures: r.failures(rs),
    };
    ClassifyJson {
        schema_version: SCHEMA_VERSION,
        family: r.family.to_string(),
        tag: r.family.tag().into(),
        params: r.family.params(),
        group: r.group.tag().into(),
        method: r.method.tag().into(),
        root_count: rs.len(),
        parabolic_count: r.parabolic_count,
        cominuscule_count: r.cominuscule_count,
        orbit_count: r.orbit_count(),
        stated_orbit_count: stated,
        supplementary: r.supplementary.map(|(g, n)| Supplementary { group: g.tag().into(), orbit_count: n }),
        orbits,
        expected,
        checks,
    }
}

pub fn classify_table(j: &ClassifyJson) -> String {
    let mut rows = vec![[
        "#".to_string(),
        "label".into(),
        "size".into(),
        "witness".into(),
        "module".into(),
        "nilradical".into(),
    ]];
    for (k, o) in j.orbits.iter().enumerate() {
        rows.push([
            k.to_string(),
            o.label.clone().unwrap_or_else(|| "-".into()),
            o.orbit_size.to_string(),
            o.principal_witness.as_ref().map_or("-".into(), |w| format!("{w:?}")),
            o.nilradical.verdict.clone(),
            o.nilradical.weights.join(", "),
        ]);
    }
    let mut out = format!(
        "{} [{} / {}]: {} roots, {} cominuscule, {} orbits (stated {})\n",
        j.family,
        j.method,
        j.group,
        j.root_count,
        j.cominuscule_count,
        j.orbit_count,
        j.stated_orbit_count.map_or("-".into(), |s| s.to_string())
    );
    out.push_str(&align(&rows));
    for f in &j.checks.failures {
        out.push_str(&format!("FAIL {f}\n"));
    }
    out.push_str(if j.checks.passed { "PASS\n" } else { "FAIL\n" });
    out
}

fn align<const N: usize>(rows: &[[String; N]]) -> String {
    let mut w = [0usize; N];
    for r in rows {
        for (i, c) in r.iter().enumerate() {
            w[i] = w[i].max(c.chars().count());
        }
    }
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(i, c)| if i + 1 == N { c.clone() } else { format!("{c:<width$}", width = w[i]) })
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
pub struct SuiteJson {
    pub schema_version: u32,
    pub suite: String,
    pub passed: bool,
    pub criteria: Vec<CriterionJson>,
    pub checks: Vec<CheckJson>,
}

#[derive(Serialize)]
pub struct CriterionJson {
    pub criterion: u8,
    pub passed: bool,
}

#[derive(Serialize)]
pub struct CheckJson {
    pub criterion: u8,
    pub name: String,
    pub family: String,
    pub pass: bool,
    pub detail: String,
}

pub fn suite_json(r: &SuiteReport) -> SuiteJson {
    let mut ks: Vec<u8> = r.checks.iter().map(|c| c.criterion).collect();
    ks.dedup();
    SuiteJson {
        schema_version: SCHEMA_VERSION,
        suite: "reference".into(),
        passed: r.passed(),
        criteria: ks
            .into_iter()
            .map(|k| CriterionJson { criterion: k, passed: r.criterion_passed(k).unwrap_or(true) })
            .collect(),
        checks: r
            .checks
            .iter()
            .map(|c| CheckJson {
                criterion: c.criterion,
                name: c.name.clone(),
                family: c.family.clone(),
                pass: c.pass,
                detail: c.detail.clone(),
            })
            .collect(),
    }
}

#[derive(Serialize)]
pub struct OracleJson {
    pub schema_version: u32,
    pub family: String,
    pub params: Vec<u32>,
    pub root_count: usize,
    pub parabolic_count: usize,
    pub cominuscule_count: usize,
    pub orbit_count: usize,
    pub non_principal_count: usize,
    pub strict_non_principal_count: usize,
    pub several_decompositions_count: usize,
}

pub fn oracle_table(j: &OracleJson) -> String {
    let rows = [
        ["family".to_string(), j.family.clone()],
        ["roots".into(), j.root_count.to_string()],
        ["parabolic".into(), j.parabolic_count.to_string()],
        ["cominuscule".into(), j.cominuscule_count.to_string()],
        ["orbits".into(), j.orbit_count.to_string()],
        ["non-principal".into(), j.non_principal_count.to_string()],
        ["non-principal (strict)".into(), j.strict_non_principal_count.to_string()],
        ["several decompositions".into(), j.several_decompositions_count.to_string()],
    ];
    align(&rows)
}
