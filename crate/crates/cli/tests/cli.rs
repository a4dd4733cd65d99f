use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superroots")).args(args).output().unwrap()
}

fn run_env(args: &[&str], key: &str, val: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superroots")).args(args).env(key, val).output().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn temp(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("superroots-{}-{name}", std::process::id()))
}

#[test]
fn classify_sl32_json() {
    let o = run(&["classify", "--family", "sl", "--m", "3", "--n", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let j = json(&o);
    assert_eq!(j["schema_version"], 1);
    assert_eq!(j["orbit_count"], 10);
    assert_eq!(j["parabolic_count"], 540);
    assert_eq!(j["checks"]["passed"], true);
    for orbit in j["orbits"].as_array().unwrap() {
        assert!(orbit["principal_witness"].is_array());
        assert_eq!(orbit["nilradical"]["verdict"], "weights consistent");
        assert_eq!(orbit["levi"]["decompositions"], 1);
    }
}

#[test]
fn classify_f4_reports_an_unmatched_orbit() {
    let o = run(&["classify", "--family", "F4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let j = json(&o);
    assert_eq!(j["orbit_count"], 1);
    assert_eq!(j["stated_orbit_count"], 0);
    assert_eq!(j["method"], "principal");
    assert!(String::from_utf8_lossy(&o.stderr).contains("F(4): orbit 0"));
}

#[test]
fn cap_and_input_errors_exit_2() {
    assert_eq!(run(&["classify", "--family", "p", "--n", "99", "--method", "exhaustive"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--family", "nope", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--family", "sl", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--family", "psl", "--n", "3", "--method", "principal"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--family", "W", "--n", "3", "--group", "extended"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "other"]).status.code(), Some(2));
    let o = run_env(&["classify", "--family", "sl", "--m", "2", "--n", "1", "--method", "exhaustive"], "SUPERROOTS_SUBSET_CAP", "4");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap exceeded"));
    let o = run_env(&["oracle", "--family", "W", "--n", "3"], "SUPERROOTS_SUBSET_CAP", "x");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn group_override_changes_orbits() {
    let o = run(&["classify", "--family", "D21a", "--group", "even-weyl", "--format", "json"]);
    let j = json(&o);
    assert_eq!(j["group"], "even_weyl");
    assert_eq!(j["orbit_count"], 3);
    let o = run(&["classify", "--family", "D21a", "--format", "json"]);
    let j = json(&o);
    assert_eq!(j["orbit_count"], 1);
    assert_eq!(j["supplementary"]["orbit_count"], 3);
}

#[test]
fn oracle_counts() {
    let o = run(&["oracle", "--family", "psl", "--n", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let j = json(&o);
    assert_eq!(j["parabolic_count"], 16);
    assert_eq!(j["cominuscule_count"], 4);
    assert_eq!(j["non_principal_count"], 0);
    let j = json(&run(&["oracle", "--family", "osp1", "--n", "1", "--format", "json"]));
    assert_eq!((j["parabolic_count"].as_u64(), j["cominuscule_count"].as_u64()), (Some(2), Some(0)));
    let j = json(&run(&["oracle", "--family", "W", "--n", "3", "--format", "json"]));
    assert_eq!((j["parabolic_count"].as_u64(), j["cominuscule_count"].as_u64()), (Some(152), Some(10)));
    let j = json(&run(&["oracle", "--family", "p", "--n", "2", "--format", "json"]));
    assert_eq!(j["several_decompositions_count"], 4);
    assert_eq!(run(&["oracle", "--family", "F4"]).status.code(), Some(2));
}

#[test]
fn verify_only_one_family() {
    let o = run(&["verify", "--only", "H"]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(text.contains("H(5)") && text.contains("H(6)"));
    assert!(!text.contains("W(3)"));
}

#[test]
fn corrupted_fixture_fails_naming_the_family() {
    let path = temp("fixture.json");
    std::fs::write(&path, r#"{"W(3)": 5}"#).unwrap();
    let o = run(&["verify", "--only", "W", "--fixture", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("orbit_count"), "{err}");
    assert!(err.contains("W(3)"), "{err}");
    assert!(err.contains("P-(2)"), "{err}");
}

#[test]
fn out_flag_writes_file() {
    let path = temp("sl21.json");
    let o = run(&["classify", "--family", "sl", "--m", "2", "--n", "1", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let j: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(j["orbit_count"], 4);
}

#[test]
fn verify_json_is_byte_identical_across_runs() {
    let a = run(&["verify", "--suite", "reference", "--format", "json"]);
    let b = run(&["verify", "--format", "json"]);
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), b.status.code());
}
