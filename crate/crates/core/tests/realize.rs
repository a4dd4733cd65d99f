use superroots::classify::suite::{bracket_instances, bracket_mismatches};
use superroots::cominuscule::{predicts_nonzero, predicts_nonzero_w_ambient};
use superroots::realize::{sprime_graded_matches, special_crosscheck, Realization};
use superroots::rootsys::Family;

#[test]
fn realizations_close_and_satisfy_jacobi() {
    for f in [
        Family::Sl { m: 2, n: 1 },
        Family::Psl { n: 2 },
        Family::Osp { m: 3, n: 1 },
        Family::Psq { n: 3 },
        Family::P { n: 3 },
        Family::W { n: 3 },
        Family::S { n: 3 },
        Family::SPrime { n: 4 },
        Family::H { n: 5 },
    ] {
        let rz = match Realization::new(f) {
            Ok(rz) => rz,
            Err(superroots::error::Error::Unsupported(_)) => continue,
            Err(e) => panic!("{f}: {e}"),
        };
        let rep = rz.verify_root_decomposition();
        assert!(rep.passed, "{f}: {:?}", rep.failures);
        assert_eq!(rep.dim_total, rep.dim_expected);
        rz.closure_check().unwrap_or_else(|e| panic!("{f}: {e}"));
        rz.jacobi_check(12, 2000, 7).unwrap_or_else(|e| panic!("{f}: {e}"));
    }
}

#[test]
fn special_weight_spaces_agree() {
    for n in [3, 4] {
        for d in special_crosscheck(n) {
            assert_eq!(d.listed, d.divergence_kernel, "S({n}) at {:?}", d.weight);
            assert_eq!(d.divergence_kernel, d.generated, "S({n}) at {:?}", d.weight);
        }
    }
}

#[test]
fn sprime_filtration_recovers_s() {
    assert!(sprime_graded_matches(4).unwrap());
}

#[test]
fn bracket_rule_matches_realizations() {
    for f in bracket_instances() {
        let rz = Realization::new(f).unwrap();
        assert!(bracket_mismatches(&rz.rs, &rz, predicts_nonzero).is_empty(), "{f}");
    }
}

/// Sums taken in the W(n) coordinates misjudge pairs of S(n) and S'(n) whose
/// sum is a removed W(n) root; the counts are frozen.
#[test]
fn w_ambient_rule_disagreements() {
    let counts: Vec<(String, usize)> = bracket_instances()
        .into_iter()
        .map(|f| {
            let rz = Realization::new(f).unwrap();
            (f.to_string(), bracket_mismatches(&rz.rs, &rz, predicts_nonzero_w_ambient).len())
        })
        .filter(|(_, n)| *n > 0)
        .collect();
    assert_eq!(counts, vec![("S(3)".to_string(), 12), ("S(4)".to_string(), 56), ("S'(4)".to_string(), 60)]);
}

#[test]
fn psl33_pair_with_projected_sum() {
    let rz = Realization::new(Family::Psl { n: 3 }).unwrap();
    let a = rz.rs.index_of_str("e1-d1").unwrap();
    let b = rz.rs.index_of_str("e2-d2").unwrap();
    assert!(!rz.bracket_nonzero(a, b));
    assert!(!rz.rs.sum_in_ambient(a, b));
    assert!(rz.rs.projected_sum_in_delta(a, b).unwrap());
}
