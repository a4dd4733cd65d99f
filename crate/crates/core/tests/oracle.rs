//! An independent brute-force oracle for symmetric root systems: parabolic
//! subsets straight from the definition, abelian nilradicals from root sums,
//! and orbits under signed permutations of coordinate blocks. Library
//! results are compared with it, and the resulting counts are frozen.

use std::collections::{BTreeSet, HashMap};

use superroots::classify::{cominuscule_sets, MethodChoice};
use superroots::parabolic::{Caps, Method, Parabolics};
use superroots::rootset::RootSet;
use superroots::rootsys::{Family, RootSystem};
use superroots::weight::{Weight, Q};

struct Brute {
    weights: Vec<Weight>,
    index: HashMap<Weight, usize>,
}

impl Brute {
    fn new(rs: &RootSystem) -> Brute {
        let weights: Vec<Weight> = (0..rs.len()).map(|i| rs.weight(i).clone()).collect();
        let index = weights.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        Brute { weights, index }
    }

    fn sum(&self, a: usize, b: usize) -> Option<usize> {
        let w = Weight(self.weights[a].0.iter().zip(&self.weights[b].0).map(|(x, y)| x + y).collect());
        self.index.get(&w).copied()
    }

    fn neg(&self, a: usize) -> usize {
        let w = Weight(self.weights[a].0.iter().map(|x| -x).collect());
        self.index[&w]
    }

    fn members(&self, mask: u64) -> Vec<usize> {
        (0..self.weights.len()).filter(|i| mask >> i & 1 == 1).collect()
    }

    fn is_parabolic(&self, mask: u64) -> bool {
        let n = self.weights.len();
        if mask == (1u64 << n) - 1 {
            return false;
        }
        if (0..n).any(|i| mask >> i & 1 == 0 && mask >> self.neg(i) & 1 == 0) {
            return false;
        }
        let m = self.members(mask);
        m.iter().all(|&a| m.iter().all(|&b| self.sum(a, b).is_none_or(|c| mask >> c & 1 == 1)))
    }

    fn abelian_nilradical(&self, mask: u64) -> bool {
        let nil: Vec<usize> = self.members(mask).into_iter().filter(|&a| mask >> self.neg(a) & 1 == 0).collect();
        nil.iter().all(|&a| nil.iter().all(|&b| self.sum(a, b).is_none()))
    }

    fn parabolics(&self) -> Vec<u64> {
        (0..1u64 << self.weights.len()).filter(|&m| self.is_parabolic(m)).collect()
    }
}

fn to_mask(s: RootSet) -> u64 {
    s.iter().fold(0u64, |acc, i| acc | 1 << i)
}

/// Signed permutations of one block of coordinates.
#[derive(Clone, Copy)]
enum Block {
    /// Permutations only.
    A,
    /// All sign changes.
    B,
    /// Even numbers of sign changes.
    D,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..=p.len() {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// Every element of the product group, as (source coordinate, sign) per target coordinate.
fn group(blocks: &[(std::ops::Range<usize>, Block)], dim: usize) -> Vec<Vec<(usize, i64)>> {
    let mut elems: Vec<Vec<(usize, i64)>> = vec![(0..dim).map(|j| (j, 1)).collect()];
    for (range, kind) in blocks {
        let k = range.len();
        let mut next = Vec::new();
        for e in &elems {
            for p in permutations(k) {
                for signs in 0..1u32 << k {
                    let ok = match kind {
                        Block::A => signs == 0,
                        Block::B => true,
                        Block::D => signs.count_ones() % 2 == 0,
                    };
                    if !ok {
                        continue;
                    }
                    let mut f = e.clone();
                    for (t, &s) in p.iter().enumerate() {
                        let sign = if signs >> t & 1 == 1 { -1 } else { 1 };
                        f[range.start + t] = (range.start + s, sign);
                    }
                    next.push(f);
                }
            }
        }
        elems = next;
    }
    elems
}

fn orbit_count(b: &Brute, sets: &[u64], elems: &[Vec<(usize, i64)>]) -> usize {
    let perms: Vec<Vec<usize>> = elems
        .iter()
        .map(|g| {
            b.weights
                .iter()
                .map(|w| {
                    let img = Weight(g.iter().map(|&(s, sign)| w.0[s] * Q::from_integer(sign)).collect());
                    b.index[&img]
                })
                .collect()
        })
        .collect();
    let mut reps = BTreeSet::new();
    for &m in sets {
        let rep = perms
            .iter()
            .map(|p| b.members(m).iter().fold(0u64, |acc, &i| acc | 1 << p[i]))
            .min()
            .unwrap();
        reps.insert(rep);
    }
    reps.len()
}

struct Case {
    family: Family,
    blocks: Vec<(std::ops::Range<usize>, Block)>,
    parabolic: usize,
    cominuscule: usize,
    orbits: usize,
}

fn cases() -> Vec<Case> {
    use Block::*;
    vec![
        Case { family: Family::Sl { m: 2, n: 1 }, blocks: vec![(0..2, A), (2..3, A)], parabolic: 12, cominuscule: 6, orbits: 4 },
        Case { family: Family::Sl { m: 1, n: 3 }, blocks: vec![(0..1, A), (1..4, A)], parabolic: 74, cominuscule: 14, orbits: 6 },
        Case { family: Family::Sl { m: 3, n: 2 }, blocks: vec![(0..3, A), (3..5, A)], parabolic: 540, cominuscule: 30, orbits: 10 },
        Case { family: Family::Osp { m: 1, n: 2 }, blocks: vec![(0..2, B)], parabolic: 16, cominuscule: 0, orbits: 0 },
        Case { family: Family::Osp { m: 3, n: 1 }, blocks: vec![(0..1, B), (1..2, B)], parabolic: 16, cominuscule: 2, orbits: 1 },
        Case { family: Family::Osp { m: 5, n: 1 }, blocks: vec![(0..2, B), (2..3, B)], parabolic: 146, cominuscule: 4, orbits: 1 },
        Case { family: Family::Osp { m: 2, n: 2 }, blocks: vec![(0..1, D), (1..3, B)], parabolic: 122, cominuscule: 10, orbits: 4 },
        Case { family: Family::Osp { m: 4, n: 1 }, blocks: vec![(0..2, D), (2..3, B)], parabolic: 98, cominuscule: 12, orbits: 3 },
        Case { family: Family::Osp { m: 3, n: 2 }, blocks: vec![(0..1, B), (1..3, B)], parabolic: 146, cominuscule: 2, orbits: 1 },
    ]
}

#[test]
fn brute_force_agrees_with_library() {
    for c in cases() {
        let rs = RootSystem::build(c.family).unwrap();
        assert!(rs.symmetric);
        let b = Brute::new(&rs);
        let par = Parabolics::new(&rs).unwrap();

        let want = b.parabolics();
        let got: Vec<u64> = par.enumerate(Method::Exhaustive).unwrap().into_iter().map(to_mask).collect();
        let (mut w_sorted, mut g_sorted) = (want.clone(), got);
        w_sorted.sort();
        g_sorted.sort();
        assert_eq!(w_sorted, g_sorted, "{}: parabolic sets", c.family);
        assert_eq!(want.len(), c.parabolic, "{}", c.family);

        let com_want: Vec<u64> = want.iter().copied().filter(|&m| b.abelian_nilradical(m)).collect();
        let (_, com) = cominuscule_sets(&par, Method::Exhaustive).unwrap();
        let mut com_got: Vec<u64> = com.into_iter().map(to_mask).collect();
        com_got.sort();
        let mut cw = com_want.clone();
        cw.sort();
        assert_eq!(cw, com_got, "{}: cominuscule sets", c.family);
        assert_eq!(com_want.len(), c.cominuscule, "{}", c.family);

        let elems = group(&c.blocks, rs.dim());
        assert_eq!(orbit_count(&b, &com_want, &elems), c.orbits, "{}: oracle orbits", c.family);
        let r = superroots::classify::enumerate_cominuscule_orbits(c.family, MethodChoice::Auto, Caps::default()).unwrap();
        assert_eq!(r.orbit_count(), c.orbits, "{}: library orbits", c.family);
    }
}

#[test]
fn levi_part_is_symmetric_part() {
    for c in cases().into_iter().take(4) {
        let rs = RootSystem::build(c.family).unwrap();
        let b = Brute::new(&rs);
        let par = Parabolics::new(&rs).unwrap();
        for p in par.enumerate(Method::Exhaustive).unwrap() {
            let ds = par.levi_decompositions(p).unwrap();
            assert_eq!(ds.len(), 1, "{}", c.family);
            let l: u64 = p.iter().filter(|&i| p.contains(b.neg(i))).fold(0, |acc, i| acc | 1 << i);
            assert_eq!(to_mask(ds[0].l), l);
            assert_eq!(to_mask(ds[0].nplus), to_mask(p) & !l);
        }
    }
}

/// Counts for the non-symmetric and Cartan-type families, where the oracle
/// above does not apply, frozen from exhaustive and search enumeration.
#[test]
fn frozen_counts() {
    let table: &[(Family, Option<usize>, usize, usize)] = &[
        (Family::Psl { n: 2 }, Some(16), 4, 1),
        (Family::Psl { n: 3 }, None, 62, 14),
        (Family::Psq { n: 3 }, Some(12), 6, 2),
        (Family::Psq { n: 4 }, Some(74), 14, 3),
        (Family::P { n: 2 }, Some(12), 8, 5),
        (Family::P { n: 3 }, Some(110), 11, 5),
        (Family::W { n: 2 }, Some(12), 6, 4),
        (Family::W { n: 3 }, Some(152), 10, 4),
        (Family::S { n: 3 }, Some(110), 11, 5),
        (Family::S { n: 4 }, None, 19, 5),
        (Family::SPrime { n: 4 }, None, 4, 1),
        (Family::H { n: 5 }, Some(16), 4, 1),
        (Family::H { n: 6 }, Some(290), 6, 1),
        (Family::D21a, Some(98), 12, 1),
        (Family::F4, None, 12, 1),
        (Family::G3, None, 0, 0),
    ];
    for &(f, par, com, orbits) in table {
        let r = superroots::classify::enumerate_cominuscule_orbits(f, MethodChoice::Auto, Caps::default()).unwrap();
        assert_eq!(r.parabolic_count.filter(|_| r.method == Method::Exhaustive), par, "{f}");
        assert_eq!(r.cominuscule_count, com, "{f}");
        assert_eq!(r.orbit_count(), orbits, "{f}");
    }
}

#[test]
fn search_finds_every_parabolic_set() {
    for f in [Family::Sl { m: 2, n: 1 }, Family::Psl { n: 2 }, Family::P { n: 2 }, Family::P { n: 3 }, Family::W { n: 3 }, Family::S { n: 3 }, Family::H { n: 5 }] {
        let rs = RootSystem::build(f).unwrap();
        let par = Parabolics::new(&rs).unwrap();
        assert_eq!(par.enumerate(Method::Exhaustive).unwrap(), par.enumerate(Method::Search).unwrap(), "{f}");
    }
}
