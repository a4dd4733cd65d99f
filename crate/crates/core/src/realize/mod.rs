//! Explicit realizations of the matrix and Cartan-type superalgebras, with
//! exact brackets, used to confirm the root-level bracket rules.
//!
//! Matrix families (gl, sl, psl, psq, p) are supermatrices; W, S, S′ and H are
//! superderivations of the Grassmann algebra. psl(n|n) and psq(n) are handled
//! upstairs in gl(n|n) and q(n), with brackets compared modulo the identity.
//! H(n) is written in coordinates η_1, …, η_n in which the invariant form pairs
//! η_i with η_{i+l} (and η_n with itself when n = 2l + 1), so that a diagonal
//! torus and all root vectors are defined over Q.

pub mod grassmann;
pub mod matrix;
pub mod span;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::rootsys::{Family, RootSystem};
use crate::weight::{Weight, Q};
use grassmann::{Derivation, Grassmann, Mono};
use matrix::SuperMatrix;
use span::{Span, Vector};

/// Coordinate key: a matrix entry (i, j), or (j, A) for ξ_A ∂/∂ξ_j.
pub type Key = (usize, usize);

/// Default cap on dim 𝔤.
pub const DEFAULT_DIM_CAP: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Elem {
    Mat(SuperMatrix),
    Der(Derivation),
}

impl Elem {
    pub fn parity(&self) -> Option<u8> {
        match self {
            Elem::Mat(m) => m.parity(),
            Elem::Der(d) => d.parity(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Elem::Mat(m) => m.is_zero(),
            Elem::Der(d) => d.is_zero(),
        }
    }

    fn same_shape(&self, o: &Elem) -> bool {
        match (self, o) {
            (Elem::Mat(a), Elem::Mat(b)) => a.size == b.size && a.split == b.split,
            (Elem::Der(a), Elem::Der(b)) => a.n() == b.n(),
            _ => false,
        }
    }

    fn mixed(&self, o: &Elem) -> Error {
        Error::MixedRealization(format!("{self} and {o}"))
    }

    pub fn bracket(&self, o: &Elem) -> Result<Elem> {
        match (self, o) {
            (Elem::Mat(a), Elem::Mat(b)) if self.same_shape(o) => Ok(Elem::Mat(a.bracket(b))),
            (Elem::Der(a), Elem::Der(b)) if self.same_shape(o) => Ok(Elem::Der(a.bracket(b))),
            _ => Err(self.mixed(o)),
        }
    }

    pub fn add(&self, o: &Elem) -> Result<Elem> {
        match (self, o) {
            (Elem::Mat(a), Elem::Mat(b)) if self.same_shape(o) => Ok(Elem::Mat(a.add(b))),
            (Elem::Der(a), Elem::Der(b)) if self.same_shape(o) => Ok(Elem::Der(a.add(b))),
            _ => Err(self.mixed(o)),
        }
    }

    pub fn scale(&self, s: Q) -> Elem {
        match self {
            Elem::Mat(m) => Elem::Mat(m.scale(s)),
            Elem::Der(d) => Elem::Der(d.scale(s)),
        }
    }

    pub fn coords(&self) -> Vector<Key> {
        match self {
            Elem::Mat(m) => {
                let mut v = BTreeMap::new();
                for i in 0..m.size {
                    for j in 0..m.size {
                        let c = m.get(i, j);
                        if !c.is_zero() {
                            v.insert((i, j), c);
                        }
                    }
                }
                v
            }
            Elem::Der(d) => d.coords().into_iter().map(|((j, a), c)| ((j, a as usize), c)).collect(),
        }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Mat(m) => m.fmt(f),
            Elem::Der(d) => d.fmt(f),
        }
    }
}

/// A torus element h with [h, x] = ⟨covector, α⟩ x for every x ∈ 𝔤^α.
#[derive(Clone, Debug)]
pub struct TorusElement {
    pub elem: Elem,
    pub covector: Weight,
}

#[derive(Clone, Debug, Default)]
pub struct RootSpace {
    pub even: Vec<Elem>,
    pub odd: Vec<Elem>,
}

impl RootSpace {
    pub fn all(&self) -> impl Iterator<Item = &Elem> {
        self.even.iter().chain(&self.odd)
    }

    pub fn dim(&self) -> usize {
        self.even.len() + self.odd.len()
    }
}

#[derive(Clone, Debug)]
pub struct Realization {
    pub rs: RootSystem,
    pub torus: Vec<TorusElement>,
    /// Basis of the zero weight space.
    pub cartan: Vec<Elem>,
    /// Root spaces, indexed like `rs.roots`.
    pub spaces: Vec<RootSpace>,
    /// Elements spanning the subspace factored out (the identity for psl, psq).
    pub quotient: Vec<Elem>,
    quotient_span: Span<Key>,
    by_signature: HashMap<Vec<Q>, usize>,
}

/// Outcome of [`Realization::verify_root_decomposition`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub passed: bool,
    /// One line per offending root.
    pub failures: Vec<String>,
    pub dim_total: usize,
    pub dim_expected: usize,
}

/// dim 𝔤 from the defining description of each family.
pub fn expected_dim(f: Family) -> Option<usize> {
    let pow2 = |n: u32| 1usize << n;
    Some(match f {
        Family::Gl { m, n } => ((m + n) * (m + n)) as usize,
        Family::Sl { m, n } => ((m + n) * (m + n) - 1) as usize,
        Family::Psl { n } => (4 * n * n - 2) as usize,
        Family::Psq { n } => (2 * n * n - 2) as usize,
        Family::P { n } => (2 * n * n - 1) as usize,
        Family::W { n } => n as usize * pow2(n),
        Family::S { n } | Family::SPrime { n } => (n as usize - 1) * pow2(n) + 1,
        Family::H { n } => pow2(n) - 2,
        _ => return None,
    })
}

fn q(c: i64) -> Q {
    Q::from_integer(c)
}

fn mat(split: usize, size: usize, es: &[(usize, usize, i64)]) -> Elem {
    Elem::Mat(SuperMatrix::from_entries(split, size, es))
}

fn xi(m: Mono) -> Grassmann {
    Grassmann::mono(m, Q::one())
}

fn der(n: usize, m: Mono, j: usize) -> Derivation {
    Derivation::single(n, xi(m), j)
}

fn eps_of(n: usize, m: Mono) -> Weight {
    let mut w = Weight::zero(n);
    for i in 0..n {
        if m >> i & 1 == 1 {
            w.0[i] = Q::one();
        }
    }
    w
}

struct Builder {
    rs: RootSystem,
    spaces: Vec<RootSpace>,
    cartan: Vec<Elem>,
}

impl Builder {
    fn new(rs: RootSystem) -> Builder {
        let spaces = vec![RootSpace::default(); rs.len()];
        Builder { rs, spaces, cartan: Vec::new() }
    }

    fn root(&mut self, lift: &Weight, e: Elem) -> Result<()> {
        let i = self
            .rs
            .index_of(lift)
            .ok_or_else(|| Error::NotARoot(lift.format(&self.rs.basis)))?;
        match e.parity() {
            Some(0) => self.spaces[i].even.push(e),
            Some(_) => self.spaces[i].odd.push(e),
            None => return Err(Error::Unsupported(format!("inhomogeneous element {e}"))),
        }
        Ok(())
    }
}

/// Σ_a ∂f/∂η_a ∂/∂η_{a*}.
pub fn hamiltonian(n: usize, f: &Grassmann) -> Derivation {
    let mut d = Derivation::zero(n);
    for a in 0..n {
        d.comps[star(n, a)] = f.partial(a);
    }
    d
}

/// The partner of η_a under the invariant form.
pub fn star(n: usize, a: usize) -> usize {
    let l = n / 2;
    if a < l {
        a + l
    } else if a < 2 * l {
        a - l
    } else {
        a
    }
}

/// Weight of η_A over the l torus coordinates.
fn eta_weight(n: usize, m: Mono) -> Weight {
    let l = n / 2;
    let mut w = Weight::zero(l);
    for i in 0..l {
        let c = (m >> i & 1) as i64 - (m >> (i + l) & 1) as i64;
        w.0[i] = q(c);
    }
    w
}

/// A potential f with D = D_f and no constant term, if one exists.
pub fn hamiltonian_potential(d: &Derivation) -> Option<Grassmann> {
    let n = d.n();
    let mut f = Grassmann::zero();
    for deg in 1..=n as u32 {
        let mut part = Grassmann::zero();
        for a in 0..n {
            let qa = d.comps[star(n, a)].degree_part(deg - 1);
            part = part.add(&xi(1 << a).mul(&qa));
        }
        f = f.add(&part.scale(Q::new(1, deg as i64)));
    }
    (hamiltonian(n, &f) == *d).then_some(f)
}

/// S(n) root vectors in W coordinates; with `prime`, the −ε_j vectors are
/// (1 − ξ_1…ξ_n) ∂/∂ξ_j.
fn special_vectors(n: usize, prime: bool) -> (Vec<(Weight, Derivation)>, Vec<Derivation>) {
    let full: Mono = ((1u32 << n) - 1) as Mono;
    let mut roots = Vec::new();
    let mut cartan = Vec::new();
    for j in 0..n {
        for a in 0..=full {
            if a >> j & 1 == 1 {
                continue;
            }
            let mut w = eps_of(n, a);
            w.0[j] -= Q::one();
            let v = if prime && a == 0 {
                Derivation::single(n, Grassmann::one().sub(&xi(full)), j)
            } else {
                der(n, a, j)
            };
            roots.push((w, v));
        }
    }
    for a in 0..full {
        let comp: Vec<usize> = (0..n).filter(|i| a >> i & 1 == 0).collect();
        let Some((&last, rest)) = comp.split_last() else { continue };
        for &l in rest {
            // ξ_I (ξ_l ∂/∂ξ_l − ξ_m ∂/∂ξ_m)
            let part = |k: usize| Derivation::single(n, xi(a).mul(&xi(1 << k)), k);
            let v = part(l).add(&part(last).scale(-Q::one()));
            if a == 0 {
                cartan.push(v);
            } else {
                roots.push((eps_of(n, a), v));
            }
        }
    }
    (roots, cartan)
}

impl Realization {
    pub fn new(family: Family) -> Result<Realization> {
        Realization::with_cap(family, DEFAULT_DIM_CAP)
    }

    pub fn with_cap(family: Family, cap: usize) -> Result<Realization> {
        let Some(dim) = expected_dim(family) else {
            return Err(Error::Unsupported(format!("realization of {family}")));
        };
        if dim > cap {
            return Err(Error::CapExceeded(format!("dim {family} = {dim} exceeds {cap}")));
        }
        let rs = RootSystem::build(family)?;
        let mut b = Builder::new(rs);
        let mut torus = Vec::new();
        let mut quotient = Vec::new();
        match family {
            Family::Gl { m, n } | Family::Sl { m, n } => {
                let (m, n) = (m as usize, n as usize);
                Self::gl_part(&mut b, m, n)?;
                let s = m + n;
                for k in 0..s {
                    torus.push(TorusElement { elem: mat(m, s, &[(k, k, 1)]), covector: Weight::unit(s, k, 1) });
                }
                if matches!(family, Family::Gl { .. }) {
                    b.cartan = (0..s).map(|k| mat(m, s, &[(k, k, 1)])).collect();
                } else {
                    b.cartan = Self::str_zero_diagonal(m, n, true);
                }
            }
            Family::Psl { n } => {
                let n = n as usize;
                Self::gl_part(&mut b, n, n)?;
                let s = 2 * n;
                let diag = Self::str_zero_diagonal(n, n, true);
                for h in &diag {
                    let Elem::Mat(mm) = h else { unreachable!() };
                    let cov = Weight((0..s).map(|k| mm.get(k, k)).collect());
                    torus.push(TorusElement { elem: h.clone(), covector: cov });
                }
                b.cartan = Self::str_zero_diagonal(n, n, false);
                quotient.push(Elem::Mat(SuperMatrix::identity(n, s)));
            }
            Family::Psq { n } => {
                let n = n as usize;
                let s = 2 * n;
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            let w = &Weight::unit(n, i, 1) - &Weight::unit(n, j, 1);
                            b.root(&w, mat(n, s, &[(i, j, 1), (n + i, n + j, 1)]))?;
                            b.root(&w, mat(n, s, &[(i, n + j, 1), (n + i, j, 1)]))?;
                        }
                    }
                    torus.push(TorusElement {
                        elem: mat(n, s, &[(i, i, 1), (n + i, n + i, 1)]),
                        covector: Weight::unit(n, i, 1),
                    });
                }
                for k in 0..n - 1 {
                    b.cartan.push(mat(n, s, &[(k, k, 1), (n + k, n + k, 1), (k + 1, k + 1, -1), (n + k + 1, n + k + 1, -1)]));
                }
                for k in 0..n - 1 {
                    b.cartan.push(mat(n, s, &[(k, n + k, 1), (n + k, k, 1), (k + 1, n + k + 1, -1), (n + k + 1, k + 1, -1)]));
                }
                quotient.push(Elem::Mat(SuperMatrix::identity(n, s)));
            }
            Family::P { n } => {
                let n = n as usize;
                let s = 2 * n;
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            let w = &Weight::unit(n, i, 1) - &Weight::unit(n, j, 1);
                            b.root(&w, mat(n, s, &[(i, j, 1), (n + j, n + i, -1)]))?;
                        }
                    }
                    for j in i..n {
                        let w = &Weight::unit(n, i, 1) + &Weight::unit(n, j, 1);
                        let e = if i == j {
                            mat(n, s, &[(i, n + i, 1)])
                        } else {
                            mat(n, s, &[(i, n + j, 1), (j, n + i, 1)])
                        };
                        b.root(&w, e)?;
                        if i != j {
                            b.root(&-&w, mat(n, s, &[(n + i, j, 1), (n + j, i, -1)]))?;
                        }
                    }
                    torus.push(TorusElement {
                        elem: mat(n, s, &[(i, i, 1), (n + i, n + i, -1)]),
                        covector: Weight::unit(n, i, 1),
                    });
                }
                for k in 0..n - 1 {
                    b.cartan.push(mat(n, s, &[(k, k, 1), (n + k, n + k, -1), (k + 1, k + 1, -1), (n + k + 1, n + k + 1, 1)]));
                }
            }
            Family::W { n } => {
                let n = n as usize;
                let full: Mono = ((1u32 << n) - 1) as Mono;
                for j in 0..n {
                    for a in 0..=full {
                        let mut w = eps_of(n, a);
                        w.0[j] -= Q::one();
                        let v = Elem::Der(der(n, a, j));
                        if w.is_zero() {
                            b.cartan.push(v);
                        } else {
                            b.root(&w, v)?;
                        }
                    }
                    torus.push(TorusElement { elem: Elem::Der(der(n, 1 << j, j)), covector: Weight::unit(n, j, 1) });
                }
            }
            Family::S { n } | Family::SPrime { n } => {
                let n = n as usize;
                let (roots, cartan) = special_vectors(n, matches!(family, Family::SPrime { .. }));
                for (w, v) in roots {
                    b.root(&w, Elem::Der(v))?;
                }
                b.cartan = cartan.into_iter().map(Elem::Der).collect();
                for k in 0..n - 1 {
                    let h = der(n, 1 << k, k).add(&der(n, 1 << (k + 1), k + 1).scale(-Q::one()));
                    let cov = &Weight::unit(n, k, 1) - &Weight::unit(n, k + 1, 1);
                    torus.push(TorusElement { elem: Elem::Der(h), covector: cov });
                }
            }
            Family::H { n } => {
                let n = n as usize;
                let l = n / 2;
                let full: Mono = ((1u32 << n) - 1) as Mono;
                for a in 1..full {
                    let v = Elem::Der(hamiltonian(n, &xi(a)));
                    let w = eta_weight(n, a);
                    if w.is_zero() {
                        b.cartan.push(v);
                    } else {
                        b.root(&w, v)?;
                    }
                }
                for i in 0..l {
                    let h = der(n, 1 << i, i).add(&der(n, 1 << (i + l), i + l).scale(-Q::one()));
                    torus.push(TorusElement { elem: Elem::Der(h), covector: Weight::unit(l, i, 1) });
                }
            }
            _ => unreachable!("expected_dim covers the realized families"),
        }
        let mut quotient_span = Span::new();
        for z in &quotient {
            quotient_span.insert(&z.coords());
        }
        let mut rz = Realization {
            rs: b.rs,
            torus,
            cartan: b.cartan,
            spaces: b.spaces,
            quotient,
            quotient_span,
            by_signature: HashMap::new(),
        };
        for i in 0..rz.rs.len() {
            for lift in rz.rs.lifts[i].clone() {
                let sig = rz.signature(&lift);
                rz.by_signature.insert(sig, i);
            }
        }
        Ok(rz)
    }

    /// E_ab for all a ≠ b.
    fn gl_part(b: &mut Builder, m: usize, n: usize) -> Result<()> {
        let s = m + n;
        for x in 0..s {
            for y in 0..s {
                if x != y {
                    let w = &Weight::unit(s, x, 1) - &Weight::unit(s, y, 1);
                    b.root(&w, mat(m, s, &[(x, y, 1)]))?;
                }
            }
        }
        Ok(())
    }

    /// Diagonal supertrace-zero matrices: differences within each block plus,
    /// with `crossing`, E_mm + E_{m+1,m+1} joining the blocks.
    fn str_zero_diagonal(m: usize, n: usize, crossing: bool) -> Vec<Elem> {
        let s = m + n;
        let mut out = Vec::new();
        for k in 0..s - 1 {
            if k + 1 == m {
                if crossing {
                    out.push(mat(m, s, &[(k, k, 1), (k + 1, k + 1, 1)]));
                }
            } else {
                out.push(mat(m, s, &[(k, k, 1), (k + 1, k + 1, -1)]));
            }
        }
        out
    }

    pub fn family(&self) -> Family {
        self.rs.family
    }

    /// Torus eigenvalues of a weight given in root coordinates.
    pub fn signature(&self, w: &Weight) -> Vec<Q> {
        self.torus.iter().map(|t| w.dot(&t.covector.0)).collect()
    }

    pub fn dim(&self) -> usize {
        self.cartan.len() + self.spaces.iter().map(RootSpace::dim).sum::<usize>()
    }

    /// All basis elements: the zero weight space first, then root spaces in root order.
    pub fn basis(&self) -> Vec<&Elem> {
        self.cartan.iter().chain(self.spaces.iter().flat_map(RootSpace::all)).collect()
    }

    /// Zero in 𝔤, i.e. modulo the quotient for psl and psq.
    pub fn is_zero_mod(&self, z: &Elem) -> bool {
        z.is_zero() || (!self.quotient.is_empty() && self.quotient_span.contains(&z.coords()))
    }

    pub fn bracket(&self, x: &Elem, y: &Elem) -> Result<Elem> {
        let probe = self.basis()[0];
        if !x.same_shape(probe) {
            return Err(x.mixed(probe));
        }
        x.bracket(y)
    }

    /// Whether [𝔤^α, 𝔤^β] ≠ 0, by brackets of basis vectors.
    pub fn bracket_nonzero(&self, a: usize, b: usize) -> bool {
        self.spaces[a].all().any(|x| {
            self.spaces[b]
                .all()
                .any(|y| !self.is_zero_mod(&x.bracket(y).expect("basis elements share a shape")))
        })
    }

    /// Membership in 𝔤 (before the quotient) by the family's linear constraints.
    pub fn contains(&self, e: &Elem) -> bool {
        let f = self.rs.family;
        match (f, e) {
            (Family::Gl { m, n }, Elem::Mat(x)) => x.size == (m + n) as usize && x.split == m as usize,
            (Family::Sl { m, n }, Elem::Mat(x)) => {
                x.size == (m + n) as usize && x.split == m as usize && x.str().is_zero()
            }
            (Family::Psl { n }, Elem::Mat(x)) => {
                x.size == 2 * n as usize && x.split == n as usize && x.str().is_zero()
            }
            (Family::Psq { n }, Elem::Mat(x)) => {
                let n = n as usize;
                x.size == 2 * n
                    && (0..n).all(|i| {
                        (0..n).all(|j| {
                            x.get(i, j) == x.get(n + i, n + j) && x.get(i, n + j) == x.get(n + i, j)
                        })
                    })
                    && (0..n).map(|i| x.get(i, n + i)).sum::<Q>().is_zero()
            }
            (Family::P { n }, Elem::Mat(x)) => {
                let n = n as usize;
                x.size == 2 * n
                    && (0..n).all(|i| {
                        (0..n).all(|j| {
                            x.get(n + i, n + j) == -x.get(j, i)
                                && x.get(i, n + j) == x.get(j, n + i)
                                && x.get(n + i, j) == -x.get(n + j, i)
                        })
                    })
                    && (0..n).map(|i| x.get(i, i)).sum::<Q>().is_zero()
            }
            (Family::W { n }, Elem::Der(d)) => d.n() == n as usize,
            (Family::S { n }, Elem::Der(d)) => d.n() == n as usize && d.divergence().is_zero(),
            (Family::SPrime { n }, Elem::Der(d)) => {
                let n = n as usize;
                let u = xi(((1u32 << n) - 1) as Mono);
                // divergence for the volume form (1 + ξ_1…ξ_n) vol
                d.n() == n && Grassmann::one().add(&u).mul(&d.divergence()).add(&d.apply(&u)).is_zero()
            }
            (Family::H { n }, Elem::Der(d)) => {
                d.n() == n as usize
                    && hamiltonian_potential(d).is_some_and(|f| f.degree_part(n).is_zero())
            }
            _ => false,
        }
    }

    fn eigen_ok(&self, x: &Elem, sig: &[Q]) -> bool {
        self.torus.iter().zip(sig).all(|(t, &c)| match t.elem.bracket(x) {
            Ok(y) => y == x.scale(c),
            Err(_) => false,
        })
    }

    /// Checks every stored vector (homogeneous parity, membership, torus
    /// eigenvalues), the root-space dimensions against the root system, and the
    /// total dimension.
    pub fn verify_root_decomposition(&self) -> DecompositionReport {
        let mut failures = Vec::new();
        let zero = vec![Q::zero(); self.torus.len()];
        for (k, h) in self.cartan.iter().enumerate() {
            if !self.contains(h) || !self.eigen_ok(h, &zero) {
                failures.push(format!("zero weight vector {k}: {h}"));
            }
        }
        for (i, sp) in self.spaces.iter().enumerate() {
            let name = self.rs.root_str(i);
            let r = &self.rs.roots[i];
            if sp.even.len() != r.even_dim as usize || sp.odd.len() != r.odd_dim as usize {
                failures.push(format!(
                    "{name}: dimension ({}|{}) against ({}|{})",
                    sp.even.len(),
                    sp.odd.len(),
                    r.even_dim,
                    r.odd_dim
                ));
            }
            let sig = self.signature(&self.rs.lifts[i][0]);
            for (v, want) in sp.even.iter().map(|v| (v, 0)).chain(sp.odd.iter().map(|v| (v, 1))) {
                if v.parity() != Some(want) {
                    failures.push(format!("{name}: wrong parity for {v}"));
                } else if !self.contains(v) {
                    failures.push(format!("{name}: {v} is not in {}", self.rs.family));
                } else if !self.eigen_ok(v, &sig) {
                    failures.push(format!("{name}: {v} is not a weight vector of this weight"));
                }
            }
            let mut s = Span::new();
            for v in sp.all() {
                if !s.insert(&v.coords()) {
                    failures.push(format!("{name}: dependent vectors"));
                }
            }
        }
        let dim_expected = expected_dim(self.rs.family).unwrap_or(0);
        let dim_total = self.dim();
        if dim_total != dim_expected {
            failures.push(format!("total dimension {dim_total} against {dim_expected}"));
        }
        DecompositionReport { passed: failures.is_empty(), failures, dim_total, dim_expected }
    }

    /// Torus signature of a basis element's weight, by position in [`Self::basis`].
    fn basis_signatures(&self) -> Vec<Vec<Q>> {
        let zero = vec![Q::zero(); self.torus.len()];
        let mut out = vec![zero; self.cartan.len()];
        for (i, sp) in self.spaces.iter().enumerate() {
            let sig = self.signature(&self.rs.lifts[i][0]);
            out.extend(std::iter::repeat_n(sig, sp.dim()));
        }
        out
    }

    /// Every bracket of basis elements lies in the weight space of the summed
    /// weight (modulo the quotient).
    pub fn closure_check(&self) -> std::result::Result<(), String> {
        let basis = self.basis();
        let sigs = self.basis_signatures();
        let mut spans: HashMap<Vec<Q>, Span<Key>> = HashMap::new();
        let zero = vec![Q::zero(); self.torus.len()];
        let mut target = |sig: &Vec<Q>| -> Span<Key> {
            spans
                .entry(sig.clone())
                .or_insert_with(|| {
                    let mut s = Span::new();
                    for z in &self.quotient {
                        s.insert(&z.coords());
                    }
                    let members: Vec<&Elem> = if *sig == zero {
                        self.cartan.iter().collect()
                    } else if let Some(&i) = self.by_signature.get(sig) {
                        self.spaces[i].all().collect()
                    } else {
                        Vec::new()
                    };
                    for v in members {
                        s.insert(&v.coords());
                    }
                    s
                })
                .clone()
        };
        for (a, x) in basis.iter().enumerate() {
            for (b, y) in basis.iter().enumerate().skip(a) {
                let z = x.bracket(y).map_err(|e| e.to_string())?;
                if z.is_zero() {
                    continue;
                }
                let sig: Vec<Q> = sigs[a].iter().zip(&sigs[b]).map(|(p, q)| p + q).collect();
                if !target(&sig).contains(&z.coords()) {
                    return Err(format!("[{x}, {y}] = {z} leaves the algebra"));
                }
            }
        }
        Ok(())
    }

    fn jacobi_holds(x: &Elem, y: &Elem, z: &Elem) -> Result<bool> {
        let s = if x.parity().unwrap_or(0) * y.parity().unwrap_or(0) == 1 { -Q::one() } else { Q::one() };
        let lhs = x.bracket(&y.bracket(z)?)?;
        let rhs = x.bracket(y)?.bracket(z)?.add(&y.bracket(&x.bracket(z)?)?.scale(s))?;
        Ok(lhs == rhs)
    }

    /// The super-Jacobi identity on all basis triples when dim ≤ `full_limit`,
    /// otherwise on `samples` triples drawn with a fixed seed. Returns the
    /// number of triples checked.
    pub fn jacobi_check(&self, full_limit: usize, samples: usize, seed: u64) -> std::result::Result<usize, String> {
        let basis = self.basis();
        let n = basis.len();
        let check = |i: usize, j: usize, k: usize| -> std::result::Result<(), String> {
            match Self::jacobi_holds(basis[i], basis[j], basis[k]) {
                Ok(true) => Ok(()),
                Ok(false) => Err(format!("Jacobi fails on {}, {}, {}", basis[i], basis[j], basis[k])),
                Err(e) => Err(e.to_string()),
            }
        };
        if n <= full_limit {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        check(i, j, k)?;
                    }
                }
            }
            Ok(n * n * n)
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
            Ok(samples)
        }
    }
}

/// Per-weight dimensions of S(n) from three descriptions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialWeightDims {
    pub weight: Weight,
    /// The explicit root-space basis used by the realization.
    pub listed: usize,
    /// Kernel of the divergence on the weight space of W(n).
    pub divergence_kernel: usize,
    /// Span of ∂f/∂ξ_i ∂/∂ξ_j + ∂f/∂ξ_j ∂/∂ξ_i over monomials f.
    pub generated: usize,
}

/// Compares the three descriptions of S(n) weight space by weight space,
/// including the zero weight.
pub fn special_crosscheck(n: usize) -> Vec<SpecialWeightDims> {
    let full: Mono = ((1u32 << n) - 1) as Mono;
    let wt = |a: Mono, j: usize| {
        let mut w = eps_of(n, a);
        w.0[j] -= Q::one();
        w
    };
    let mut w_basis: BTreeMap<Weight, Vec<Derivation>> = BTreeMap::new();
    for j in 0..n {
        for a in 0..=full {
            w_basis.entry(wt(a, j)).or_default().push(der(n, a, j));
        }
    }
    let (roots, cartan) = special_vectors(n, false);
    let mut listed: BTreeMap<Weight, usize> = BTreeMap::new();
    for (w, _) in &roots {
        *listed.entry(w.clone()).or_default() += 1;
    }
    listed.insert(Weight::zero(n), cartan.len());
    let mut generated: BTreeMap<Weight, Vec<Vector<Key>>> = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            for a in 0..=full {
                let f = xi(a);
                let d = Derivation::single(n, f.partial(i), j).add(&Derivation::single(n, f.partial(j), i));
                if d.is_zero() {
                    continue;
                }
                let mut w = eps_of(n, a);
                w.0[i] -= Q::one();
                w.0[j] -= Q::one();
                generated.entry(w).or_default().push(Elem::Der(d).coords());
            }
        }
    }
    w_basis
        .into_iter()
        .map(|(w, ds)| {
            let images: Vec<Vector<Mono>> = ds.iter().map(|d| d.divergence().terms).collect();
            let kernel = ds.len() - span::rank(&images);
            SpecialWeightDims {
                listed: listed.get(&w).copied().unwrap_or(0),
                divergence_kernel: kernel,
                generated: generated.get(&w).map(|v| span::rank(v)).unwrap_or(0),
                weight: w,
            }
        })
        .collect()
}

/// For S′(n): the lowest-degree parts of each root space span the
/// corresponding root space of S(n).
pub fn sprime_graded_matches(n: usize) -> Result<bool> {
    let sp = Realization::new(Family::SPrime { n: n as u32 })?;
    let s = Realization::new(Family::S { n: n as u32 })?;
    let lowest = |e: &Elem| -> Vector<Key> {
        let c = e.coords();
        let low = c.keys().map(|&(_, a)| a.count_ones()).min().unwrap_or(0);
        c.into_iter().filter(|&((_, a), _)| a.count_ones() == low).collect()
    };
    for i in 0..sp.rs.len() {
        let mut a = Span::new();
        let mut b = Span::new();
        let lows: Vec<Vector<Key>> = sp.spaces[i].all().map(lowest).collect();
        for v in &lows {
            a.insert(v);
        }
        for v in s.spaces[i].all() {
            b.insert(&v.coords());
        }
        if a.dim() != b.dim() || !lows.iter().all(|v| b.contains(v)) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn w3_dimensions() {
        let rz = Realization::new(Family::W { n: 3 }).unwrap();
        assert_eq!(rz.dim(), 24);
        assert_eq!(rz.cartan.len(), 3);
        assert_eq!(rz.spaces.len(), 18);
        assert_eq!(rz.spaces.iter().map(RootSpace::dim).sum::<usize>(), 21);
    }

    #[test]
    fn decompositions_verify() {
        for f in [
            Family::Gl { m: 2, n: 2 },
            Family::Sl { m: 2, n: 1 },
            Family::Psl { n: 2 },
            Family::Psl { n: 3 },
            Family::Psq { n: 3 },
            Family::P { n: 2 },
            Family::P { n: 3 },
            Family::W { n: 3 },
            Family::S { n: 3 },
            Family::SPrime { n: 4 },
            Family::H { n: 5 },
            Family::H { n: 6 },
        ] {
            let rz = Realization::new(f).unwrap();
            let rep = rz.verify_root_decomposition();
            assert!(rep.passed, "{f}: {:?}", rep.failures);
        }
    }

    #[test]
    fn hamiltonian_torus_lies_in_h() {
        let rz = Realization::new(Family::H { n: 5 }).unwrap();
        for t in &rz.torus {
            assert!(rz.contains(&t.elem));
        }
    }

    #[test]
    fn psl33_counterexample_bracket_vanishes() {
        let rz = Realization::new(Family::Psl { n: 3 }).unwrap();
        let a = rz.rs.index_of_str("e1-d1").unwrap();
        let b = rz.rs.index_of_str("e2-d2").unwrap();
        assert!(!rz.bracket_nonzero(a, b));
        assert!(rz.rs.projected_sum_in_delta(a, b).unwrap());
    }

    #[test]
    fn negative_units_in_s4_and_sprime4() {
        let s = Realization::new(Family::S { n: 4 }).unwrap();
        let sp = Realization::new(Family::SPrime { n: 4 }).unwrap();
        let i = s.rs.index_of_str("-e1").unwrap();
        let j = s.rs.index_of_str("-e2").unwrap();
        assert!(!s.bracket_nonzero(i, j));
        assert!(sp.bracket_nonzero(i, j));
        // the square of (1 − ξ1ξ2ξ3ξ4) ∂/∂ξ1 is −ξ2ξ3ξ4 ∂/∂ξ1
        assert!(sp.bracket_nonzero(i, i));
        assert!(!s.bracket_nonzero(i, i));
    }

    #[test]
    fn mixed_elements_are_rejected() {
        let w = Realization::new(Family::W { n: 3 }).unwrap();
        let g = Realization::new(Family::Gl { m: 2, n: 1 }).unwrap();
        let x = w.spaces[0].all().next().unwrap();
        let y = g.spaces[0].all().next().unwrap();
        assert!(matches!(w.bracket(y, x), Err(Error::MixedRealization(_))));
    }

    #[test]
    fn corrupted_vector_is_named() {
        let mut rz = Realization::new(Family::P { n: 3 }).unwrap();
        let i = rz.rs.index_of_str("e1-e2").unwrap();
        // E_12 − E_54 with the sign of the second entry flipped
        rz.spaces[i].even[0] = mat(3, 6, &[(0, 1, 1), (4, 3, 1)]);
        let rep = rz.verify_root_decomposition();
        assert!(!rep.passed);
        assert_eq!(rep.failures.len(), 1);
        assert!(rep.failures[0].starts_with("e1-e2"), "{:?}", rep.failures);
    }

    #[test]
    fn wrong_weight_is_named() {
        let mut rz = Realization::new(Family::W { n: 3 }).unwrap();
        let i = rz.rs.index_of_str("-e1").unwrap();
        let j = rz.rs.index_of_str("-e2").unwrap();
        rz.spaces.swap(i, j);
        let rep = rz.verify_root_decomposition();
        assert_eq!(rep.failures.len(), 2, "{:?}", rep.failures);
    }
}
