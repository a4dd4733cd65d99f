mod report;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use superroots::classify::suite::{run_reference_suite, SuiteOptions};
use superroots::classify::{enumerate_cominuscule_orbits_under, MethodChoice};
use superroots::cominuscule::{forbidden_table, is_cominuscule_with};
use superroots::error::Error;
use superroots::parabolic::{Caps, Method, Parabolics};
use superroots::rootsys::{Family, RootSystem};
use superroots::weyl::{Group, GroupKind};

#[derive(Parser)]
#[command(name = "superroots", version, about = "Cominuscule parabolic subsets of Lie superalgebra root systems")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify cominuscule parabolic subsets of one root system up to its group.
    Classify {
        #[command(flatten)]
        sel: Selector,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Group used for orbits; defaults to the family's classification group.
        #[arg(long, value_enum)]
        group: Option<GroupArg>,
        #[command(flatten)]
        out: Output,
    },
    /// Run a reference suite.
    Verify {
        #[arg(long, default_value = "reference")]
        suite: String,
        /// Restrict to one family tag.
        #[arg(long)]
        only: Option<String>,
        /// JSON file of stated orbit counts overriding the built-in ones.
        #[arg(long)]
        fixture: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Exhaustive counts for one instance.
    Oracle {
        #[command(flatten)]
        sel: Selector,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(clap::Args)]
struct Selector {
    /// Family tag: gl, sl, psl, osp, osp1, osp2, osp_odd, osp_even, D21a, F4, G3, psq, p, W, S, Sprime, H.
    #[arg(long)]
    family: String,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
}

impl Selector {
    fn family(&self) -> Result<Family, Error> {
        let params: Vec<u32> = self.m.into_iter().chain(self.n).collect();
        Family::from_tag(&self.family, &params)
    }
}

#[derive(clap::Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Exhaustive,
    Principal,
    Search,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    EvenWeyl,
    LeviWeyl,
    Extended,
}

enum Failure {
    Mismatch(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Caps from the environment: SUPERROOTS_SUBSET_CAP, SUPERROOTS_LIFT_BITS,
/// SUPERROOTS_SEARCH_NODES, SUPERROOTS_ORBIT_CAP.
fn caps_from_env() -> Result<Caps, Failure> {
    let mut caps = Caps::default();
    fn read<T: std::str::FromStr>(key: &str, slot: &mut T) -> Result<(), Failure> {
        if let Ok(v) = std::env::var(key) {
            *slot = v.parse().map_err(|_| Failure::Input(format!("{key}: cannot parse `{v}`")))?;
        }
        Ok(())
    }
    read("SUPERROOTS_SUBSET_CAP", &mut caps.subset)?;
    read("SUPERROOTS_LIFT_BITS", &mut caps.lift_bits)?;
    read("SUPERROOTS_SEARCH_NODES", &mut caps.search_nodes)?;
    read("SUPERROOTS_ORBIT_CAP", &mut caps.orbit)?;
    if caps.subset > 128 {
        return Err(Failure::Input("SUPERROOTS_SUBSET_CAP must be at most 128".into()));
    }
    Ok(caps)
}

fn emit(out: &Output, json: &impl serde::Serialize, table: String) -> Result<(), Failure> {
    let text = match out.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(json).map_err(|e| Failure::Input(e.to_string()))?;
            s.push('\n');
            s
        }
        Format::Table => table,
    };
    match &out.out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn classify(sel: &Selector, method: MethodArg, group: Option<GroupArg>, out: &Output) -> Result<(), Failure> {
    let family = sel.family()?;
    let caps = caps_from_env()?;
    let choice = match method {
        MethodArg::Auto => MethodChoice::Auto,
        MethodArg::Exhaustive => MethodChoice::Exhaustive,
        MethodArg::Principal => MethodChoice::Principal,
        MethodArg::Search => MethodChoice::Search,
    };
    let kind = match group {
        None => GroupKind::default_for(family),
        Some(GroupArg::EvenWeyl) => GroupKind::EvenWeyl,
        Some(GroupArg::LeviWeyl) => GroupKind::LeviWeyl,
        Some(GroupArg::Extended) => GroupKind::Extended,
    };
    let rs = RootSystem::build(family)?;
    let r = enumerate_cominuscule_orbits_under(family, choice, caps, kind)?;
    let j = report::classify_json(&rs, &r);
    emit(out, &j, report::classify_table(&j))?;
    if j.checks.passed {
        Ok(())
    } else {
        Err(Failure::Mismatch(j.checks.failures.join("\n")))
    }
}

fn verify(suite: &str, only: Option<String>, fixture: Option<PathBuf>, out: &Output) -> Result<(), Failure> {
    if !matches!(suite, "reference" | "paper") {
        return Err(Failure::Input(format!("unknown suite `{suite}`")));
    }
    let stated_counts: BTreeMap<String, usize> = match fixture {
        None => BTreeMap::new(),
        Some(p) => {
            let text = std::fs::read_to_string(&p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
            serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?
        }
    };
    let opts = SuiteOptions { only, stated_counts, caps: caps_from_env()? };
    let r = run_reference_suite(&opts)?;
    emit(out, &report::suite_json(&r), r.render_table())?;
    if r.passed() {
        Ok(())
    } else {
        let failed = superroots::classify::suite::SuiteReport { checks: r.failures().into_iter().cloned().collect() };
        Err(Failure::Mismatch(failed.render_table().trim_end().to_string()))
    }
}

fn oracle(sel: &Selector, out: &Output) -> Result<(), Failure> {
    let family = sel.family()?;
    let caps = caps_from_env()?;
    let rs = RootSystem::build(family)?;
    let par = Parabolics::with_caps(&rs, caps)?;
    let all = par.enumerate(Method::Exhaustive)?;
    let forbid = forbidden_table(&rs);
    let mut com = Vec::new();
    let mut several = 0;
    for &p in &all {
        let v = is_cominuscule_with(&par, p, &forbid)?;
        several += (v.decompositions.len() > 1) as usize;
        if v.is_cominuscule {
            com.push(p);
        }
    }
    let group = Group::new(&rs, GroupKind::default_for(family))?;
    let j = report::OracleJson {
        schema_version: report::SCHEMA_VERSION,
        family: family.to_string(),
        params: family.params(),
        root_count: rs.len(),
        parabolic_count: all.len(),
        cominuscule_count: com.len(),
        orbit_count: group.orbits(&com, caps.orbit)?.len(),
        non_principal_count: all.iter().filter(|&&p| par.principality_witness(p).is_none()).count(),
        strict_non_principal_count: all.iter().filter(|&&p| par.strict_principality_witness(p).is_none()).count(),
        several_decompositions_count: several,
    };
    emit(out, &j, report::oracle_table(&j))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.cmd {
        Cmd::Classify { sel, method, group, out } => classify(sel, *method, *group, out),
        Cmd::Verify { suite, only, fixture, out } => verify(suite, only.clone(), fixture.clone(), out),
        Cmd::Oracle { sel, out } => oracle(sel, out),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
