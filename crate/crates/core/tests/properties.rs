use proptest::prelude::*;

use superroots::cominuscule::{forbidden_table, is_cominuscule_with};
use superroots::parabolic::{functional_from_ints, Method, Parabolics};
use superroots::rootsys::{Family, RootSystem};
use superroots::weyl::{act, factorial, order_b, order_d, Group, GroupKind};

fn families() -> Vec<Family> {
    vec![
        Family::Sl { m: 3, n: 2 },
        Family::Psl { n: 3 },
        Family::Osp { m: 4, n: 1 },
        Family::Osp { m: 5, n: 2 },
        Family::D21a,
        Family::F4,
        Family::G3,
        Family::Psq { n: 4 },
        Family::P { n: 3 },
        Family::W { n: 4 },
        Family::S { n: 4 },
        Family::H { n: 6 },
    ]
}

#[test]
fn weyl_group_orders() {
    let cases: Vec<(Family, GroupKind, usize)> = vec![
        (Family::Sl { m: 3, n: 2 }, GroupKind::EvenWeyl, factorial(3) * factorial(2)),
        (Family::Osp { m: 5, n: 2 }, GroupKind::EvenWeyl, order_b(2) * order_b(2)),
        (Family::Osp { m: 6, n: 1 }, GroupKind::EvenWeyl, order_d(3) * order_b(1)),
        (Family::F4, GroupKind::EvenWeyl, order_b(3) * 2),
        (Family::G3, GroupKind::EvenWeyl, 12 * 2),
        (Family::D21a, GroupKind::EvenWeyl, 8),
        (Family::P { n: 3 }, GroupKind::EvenWeyl, factorial(3)),
        (Family::W { n: 4 }, GroupKind::LeviWeyl, factorial(4)),
        (Family::H { n: 5 }, GroupKind::LeviWeyl, order_b(2)),
        (Family::H { n: 6 }, GroupKind::LeviWeyl, order_d(3)),
    ];
    for (f, kind, want) in cases {
        let rs = RootSystem::build(f).unwrap();
        let g = Group::new(&rs, kind).unwrap();
        assert_eq!(g.order(rs.dim(), 1 << 20).unwrap(), want, "{f}");
    }
}

#[test]
fn methods_agree_on_small_instances() {
    for f in [Family::Sl { m: 2, n: 1 }, Family::Osp { m: 2, n: 2 }, Family::D21a, Family::Osp { m: 3, n: 2 }] {
        let rs = RootSystem::build(f).unwrap();
        let par = Parabolics::new(&rs).unwrap();
        let ex = par.enumerate(Method::Exhaustive).unwrap();
        assert_eq!(ex, par.enumerate(Method::Principal).unwrap(), "{f}");
        assert_eq!(ex, par.enumerate(Method::Search).unwrap(), "{f}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn principal_sets_are_parabolic(k in 0..12usize, raw in proptest::collection::vec(-3i64..=3, 8)) {
        let f = families()[k];
        let rs = RootSystem::build(f).unwrap();
        let par = Parabolics::new(&rs).unwrap();
        let lambda = functional_from_ints(&raw[..rs.dim()]);
        let res = par.principal_parabolic(&lambda);
        prop_assume!(res.is_ok());
        let (p, d) = res.unwrap();
        prop_assert!(par.is_parabolic(p).unwrap());
        prop_assert!(par.principality_witness(p).is_some());
        prop_assert!(par.check_sums_lemma(&d).is_ok());
        if rs.len() <= 40 {
            let ds = par.levi_decompositions(p).unwrap();
            prop_assert!(ds.iter().any(|e| e.l == d.l && e.nplus == d.nplus));
        }
    }

    #[test]
    fn cominuscule_verdict_is_group_invariant(k in 0..12usize, raw in proptest::collection::vec(-2i64..=2, 8), word in proptest::collection::vec(0usize..16, 0..6)) {
        let f = families()[k];
        let rs = RootSystem::build(f).unwrap();
        let par = Parabolics::new(&rs).unwrap();
        let forbid = forbidden_table(&rs);
        let res = par.principal_parabolic(&functional_from_ints(&raw[..rs.dim()]));
        prop_assume!(res.is_ok());
        let (p, _) = res.unwrap();
        let g = Group::new(&rs, GroupKind::default_for(f)).unwrap();
        let mut q = p;
        for w in word {
            q = act(&g.gens[w % g.gens.len()], q);
        }
        prop_assert_eq!(par.is_parabolic(q).unwrap(), true);
        prop_assert_eq!(
            is_cominuscule_with(&par, p, &forbid).unwrap().is_cominuscule,
            is_cominuscule_with(&par, q, &forbid).unwrap().is_cominuscule
        );
        prop_assert_eq!(g.canonical_rep(p, 1 << 20).unwrap(), g.canonical_rep(q, 1 << 20).unwrap());
    }
}
