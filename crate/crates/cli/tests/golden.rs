//! Classification reports compared byte-for-byte with stored files.
//! Set SUPERROOTS_BLESS=1 to rewrite them.

use std::path::PathBuf;
use std::process::Command;

fn check(name: &str, args: &[&str]) {
    let o = Command::new(env!("CARGO_BIN_EXE_superroots")).args(args).args(["--format", "json"]).output().unwrap();
    assert!(matches!(o.status.code(), Some(0) | Some(1)), "{name}: {}", String::from_utf8_lossy(&o.stderr));
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"));
    if std::env::var_os("SUPERROOTS_BLESS").is_some() {
        std::fs::write(&path, &o.stdout).unwrap();
        return;
    }
    let want = std::fs::read(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
    assert!(o.stdout == want, "{name} differs from {}", path.display());
}

#[test]
fn sl_2_1() {
    check("sl_2_1", &["classify", "--family", "sl", "--m", "2", "--n", "1"]);
}

#[test]
fn osp_2_2() {
    check("osp_2_2", &["classify", "--family", "osp2", "--n", "1"]);
}

#[test]
fn d21a() {
    check("d21a", &["classify", "--family", "D21a"]);
}

#[test]
fn psq_3() {
    check("psq_3", &["classify", "--family", "psq", "--n", "3"]);
}

#[test]
fn p_3() {
    check("p_3", &["classify", "--family", "p", "--n", "3"]);
}

#[test]
fn w_3() {
    check("w_3", &["classify", "--family", "W", "--n", "3"]);
}

#[test]
fn h_5() {
    check("h_5", &["classify", "--family", "H", "--n", "5"]);
}

#[test]
fn oracle_psl_2() {
    check("oracle_psl_2", &["oracle", "--family", "psl", "--n", "2"]);
}
