//! Weyl groups and their extensions acting on roots and on root subsets.
//!
//! Group elements are linear maps on weight coordinates. On a root system
//! they induce permutations of root indices, which is all the orbit code uses.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rootset::RootSet;
use crate::rootsys::{Family, RootSystem};
use crate::weight::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    /// Weyl group of the even part.
    EvenWeyl,
    /// Weyl group of the Levi subalgebra 𝔩_0̄ (Cartan-type families).
    LeviWeyl,
    /// The even Weyl group extended by diagram symmetries (D(2,1;α) only).
    Extended,
}

impl GroupKind {
    pub fn tag(self) -> &'static str {
        match self {
            GroupKind::EvenWeyl => "even_weyl",
            GroupKind::LeviWeyl => "levi_weyl",
            GroupKind::Extended => "extended",
        }
    }

    /// The group a classification of `f` is stated under.
    pub fn default_for(f: Family) -> GroupKind {
        match f {
            Family::D21a => GroupKind::Extended,
            Family::W { .. } | Family::S { .. } | Family::SPrime { .. } | Family::H { .. } => {
                GroupKind::LeviWeyl
            }
            _ => GroupKind::EvenWeyl,
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A linear map on weight coordinates, stored by columns: `cols[j]` is the
/// image of the j-th basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearMap {
    pub name: String,
    pub cols: Vec<Weight>,
}

impl LinearMap {
    pub fn identity(dim: usize) -> LinearMap {
        LinearMap { name: "id".into(), cols: (0..dim).map(|j| Weight::unit(dim, j, 1)).collect() }
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        let dim = self.cols.len();
        let mut out = Weight::zero(dim);
        for (j, c) in w.0.iter().enumerate() {
            if !c.is_zero() {
                for i in 0..dim {
                    out.0[i] += *c * self.cols[j].0[i];
                }
            }
        }
        out
    }

    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        LinearMap {
            name: format!("{}*{}", self.name, other.name),
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    fn swap(dim: usize, a: usize, b: usize, name: String) -> LinearMap {
        let mut m = LinearMap::identity(dim);
        m.cols.swap(a, b);
        m.name = name;
        m
    }

    fn flip(dim: usize, slots: &[usize], name: String) -> LinearMap {
        let mut m = LinearMap::identity(dim);
        for &s in slots {
            m.cols[s] = Weight::unit(dim, s, -1);
        }
        m.name = name;
        m
    }
}

/// A group element as a permutation of root indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootPerm {
    pub name: String,
    pub perm: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Group {
    pub kind: GroupKind,
    pub maps: Vec<LinearMap>,
    pub gens: Vec<RootPerm>,
}

fn sym_gens(dim: usize, slots: &[usize], label: &str, out: &mut Vec<LinearMap>) {
    for k in 1..slots.len() {
        out.push(LinearMap::swap(
            dim,
            slots[k - 1],
            slots[k],
            format!("s({label}{},{label}{})", k, k + 1),
        ));
    }
}

/// Type B/C: permutations plus the sign change of the last slot.
fn b_gens(dim: usize, slots: &[usize], label: &str, out: &mut Vec<LinearMap>) {
    sym_gens(dim, slots, label, out);
    if let Some(&last) = slots.last() {
        out.push(LinearMap::flip(dim, &[last], format!("t({label}{})", slots.len())));
    }
}

/// Type D: permutations plus the simultaneous sign change and swap of the last two slots.
fn d_gens(dim: usize, slots: &[usize], label: &str, out: &mut Vec<LinearMap>) {
    sym_gens(dim, slots, label, out);
    let k = slots.len();
    if k >= 2 {
        let (a, b) = (slots[k - 2], slots[k - 1]);
        let mut m = LinearMap::identity(dim);
        m.cols[a] = Weight::unit(dim, b, -1);
        m.cols[b] = Weight::unit(dim, a, -1);
        m.name = format!("u({label}{},{label}{})", k - 1, k);
        out.push(m);
    }
}

/// Generating linear maps of the group of `kind` for family `f`.
pub fn generator_maps(f: Family, kind: GroupKind) -> Result<Vec<LinearMap>> {
    let unsupported = || Err(Error::Unsupported(format!("group {} for {}", kind.tag(), f)));
    let cartan = matches!(
        f,
        Family::W { .. } | Family::S { .. } | Family::SPrime { .. } | Family::H { .. }
    );
    let allowed = match kind {
        GroupKind::EvenWeyl => true,
        GroupKind::LeviWeyl => cartan,
        GroupKind::Extended => f == Family::D21a,
    };
    if !allowed {
        return unsupported();
    }
    let mut g = Vec::new();
    let range = |a: usize, b: usize| (a..b).collect::<Vec<usize>>();
    match f {
        Family::Gl { m, n } | Family::Sl { m, n } => {
            let (m, n) = (m as usize, n as usize);
            sym_gens(m + n, &range(0, m), "e", &mut g);
            sym_gens(m + n, &range(m, m + n), "d", &mut g);
        }
        Family::Psl { n } => {
            let n = n as usize;
            sym_gens(2 * n, &range(0, n), "e", &mut g);
            sym_gens(2 * n, &range(n, 2 * n), "d", &mut g);
        }
        Family::Osp { m: big_m, n } => {
            let (m, n) = ((big_m / 2) as usize, n as usize);
            let dim = m + n;
            if big_m % 2 == 1 {
                b_gens(dim, &range(0, m), "e", &mut g);
            } else {
                d_gens(dim, &range(0, m), "e", &mut g);
            }
            b_gens(dim, &range(m, m + n), "d", &mut g);
        }
        Family::D21a => {
            for i in 0..3 {
                g.push(LinearMap::flip(3, &[i], format!("t(g{})", i + 1)));
            }
            if kind == GroupKind::Extended {
                sym_gens(3, &[0, 1, 2], "g", &mut g);
            }
        }
        Family::F4 => {
            b_gens(4, &[0, 1, 2], "e", &mut g);
            g.push(LinearMap::flip(4, &[3], "t(g1)".into()));
        }
        Family::G3 => {
            // coordinates (ε1, ε2, γ) with ε3 = −ε1 − ε2
            g.push(LinearMap::swap(3, 0, 1, "s(e1,e2)".into()));
            let mut m = LinearMap::identity(3);
            m.cols[1] = Weight::from_ints(&[-1, -1, 0]);
            m.name = "s(e2,e3)".into();
            g.push(m);
            g.push(LinearMap::flip(3, &[0, 1], "-1(e)".into()));
            g.push(LinearMap::flip(3, &[2], "t(g1)".into()));
        }
        Family::Psq { n } | Family::P { n } | Family::W { n } | Family::S { n } | Family::SPrime { n } => {
            let n = n as usize;
            sym_gens(n, &range(0, n), "e", &mut g);
        }
        Family::H { n } => {
            let l = (n / 2) as usize;
            if n % 2 == 1 {
                b_gens(l, &range(0, l), "e", &mut g);
            } else {
                d_gens(l, &range(0, l), "e", &mut g);
            }
        }
    }
    Ok(g)
}

impl Group {
    pub fn new(rs: &RootSystem, kind: GroupKind) -> Result<Group> {
        let maps = generator_maps(rs.family, kind)?;
        let gens = maps
            .iter()
            .map(|m| {
                Ok(RootPerm { name: m.name.clone(), perm: root_perm(rs, m)? })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Group { kind, maps, gens })
    }

    /// Order of the group generated by the linear maps, by BFS over elements.
    pub fn order(&self, dim: usize, cap: usize) -> Result<usize> {
        let id = LinearMap::identity(dim);
        let key = |m: &LinearMap| m.cols.clone();
        let mut seen: HashSet<Vec<Weight>> = HashSet::new();
        seen.insert(key(&id));
        let mut q = VecDeque::from([id]);
        while let Some(x) = q.pop_front() {
            for g in &self.maps {
                let y = g.compose(&x);
                if seen.insert(key(&y)) {
                    if seen.len() > cap {
                        return Err(Error::CapExceeded(format!("group order above {cap}")));
                    }
                    q.push_back(y);
                }
            }
        }
        Ok(seen.len())
    }

    /// The orbit of `p` under the generated group.
    pub fn orbit(&self, p: RootSet, cap: usize) -> Result<Vec<RootSet>> {
        let mut seen = HashSet::from([p]);
        let mut order = vec![p];
        let mut q = VecDeque::from([p]);
        while let Some(x) = q.pop_front() {
            for g in &self.gens {
                let y = act(g, x);
                if seen.insert(y) {
                    if seen.len() > cap {
                        return Err(Error::CapExceeded(format!("orbit larger than {cap}")));
                    }
                    order.push(y);
                    q.push_back(y);
                }
            }
        }
        order.sort();
        Ok(order)
    }

    /// Lexicographically least member of the orbit.
    pub fn canonical_rep(&self, p: RootSet, cap: usize) -> Result<RootSet> {
        Ok(self.orbit(p, cap)?[0])
    }

    /// Groups `sets` by orbit: canonical representative ↦ members present in `sets`.
    pub fn orbits(&self, sets: &[RootSet], cap: usize) -> Result<BTreeMap<RootSet, Vec<RootSet>>> {
        let mut out: BTreeMap<RootSet, Vec<RootSet>> = BTreeMap::new();
        let mut rep_of: std::collections::HashMap<RootSet, RootSet> = Default::default();
        for &p in sets {
            let rep = match rep_of.get(&p) {
                Some(r) => *r,
                None => {
                    let orb = self.orbit(p, cap)?;
                    let r = orb[0];
                    for x in orb {
                        rep_of.insert(x, r);
                    }
                    r
                }
            };
            out.entry(rep).or_default().push(p);
        }
        Ok(out)
    }
}

/// Index permutation induced by a linear map; errors when a root leaves Δ.
pub fn root_perm(rs: &RootSystem, m: &LinearMap) -> Result<Vec<usize>> {
    (0..rs.len())
        .map(|i| {
            let w = m.apply(rs.weight(i));
            rs.index_of(&w).ok_or_else(|| {
                Error::RootEscape(format!("{} under {}", rs.root_str(i), m.name))
            })
        })
        .collect()
}

pub fn act(g: &RootPerm, p: RootSet) -> RootSet {
    p.map(&g.perm)
}

/// Abstract orders used to validate generators: |S_n|, |B_n|, |D_n|.
pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

pub fn order_b(n: usize) -> usize {
    (1usize << n) * factorial(n)
}

pub fn order_d(n: usize) -> usize {
    if n == 0 {
        1
    } else {
        (1usize << (n - 1)) * factorial(n)
    }
}
