//! Depth-first enumeration of parabolic subsets of Σ by unit propagation.
//!
//! Every element of Σ is In or Out. The rules are covering (x Out forces −x In),
//! closure (x, y In force x + y In) and its contrapositive (x + y Out and x In
//! force y Out). With a forbidden-pair table the search also keeps the
//! nilradical N⁺ = {x ∈ Δ : x In, −x Out} free of forbidden pairs.

use crate::error::{Error, Result};
use crate::parabolic::table::Table;
use crate::rootset::RootSet;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct State {
    pub pin: RootSet,
    pub pout: RootSet,
    pub nplus: RootSet,
}

pub struct Search<'a> {
    t: &'a Table,
    forbid: Option<&'a [RootSet]>,
    cap: u64,
    pub nodes: u64,
}

#[derive(Clone, Copy)]
enum Lit {
    In(usize),
    Out(usize),
}

impl<'a> Search<'a> {
    pub fn new(t: &'a Table, forbid: Option<&'a [RootSet]>, cap: u64) -> Search<'a> {
        Search { t, forbid, cap, nodes: 0 }
    }

    /// State with the given elements fixed, or `None` on contradiction.
    pub fn start(&self, pin: RootSet, pout: RootSet) -> Option<State> {
        let mut st = State::default();
        let mut q: Vec<Lit> = pin.iter().map(Lit::In).collect();
        q.extend(pout.iter().map(Lit::Out));
        self.propagate(&mut st, q).then_some(st)
    }

    fn propagate(&self, st: &mut State, mut q: Vec<Lit>) -> bool {
        let t = self.t;
        let nd = t.n_delta;
        while let Some(lit) = q.pop() {
            match lit {
                Lit::In(x) => {
                    if st.pout.contains(x) {
                        return false;
                    }
                    if st.pin.contains(x) {
                        continue;
                    }
                    st.pin.insert(x);
                    for &(y, z) in &t.plus[x] {
                        let (y, z) = (y as usize, z as usize);
                        if st.pin.contains(y) {
                            q.push(Lit::In(z));
                        }
                        if st.pout.contains(z) {
                            q.push(Lit::Out(y));
                        }
                    }
                    if let Some(f) = self.forbid {
                        if x < nd {
                            if st.pout.contains(t.neg[x]) {
                                if !self.enter_nplus(st, x, f, &mut q) {
                                    return false;
                                }
                            } else if !f[x].intersect(st.nplus).is_empty() {
                                q.push(Lit::In(t.neg[x]));
                            }
                        }
                    }
                }
                Lit::Out(x) => {
                    if st.pin.contains(x) {
                        return false;
                    }
                    if st.pout.contains(x) {
                        continue;
                    }
                    st.pout.insert(x);
                    q.push(Lit::In(t.neg[x]));
                    for &(a, b) in &t.splits[x] {
                        if st.pin.contains(a as usize) {
                            q.push(Lit::Out(b as usize));
                        }
                    }
                    if let Some(f) = self.forbid {
                        let y = t.neg[x];
                        if y < nd {
                            if st.pin.contains(y) {
                                if !self.enter_nplus(st, y, f, &mut q) {
                                    return false;
                                }
                            } else if !f[y].intersect(st.nplus).is_empty() {
                                q.push(Lit::Out(y));
                            }
                        }
                    }
                }
            }
        }
        true
    }

    fn enter_nplus(&self, st: &mut State, x: usize, f: &[RootSet], q: &mut Vec<Lit>) -> bool {
        if st.nplus.contains(x) {
            return true;
        }
        if f[x].contains(x) || !f[x].intersect(st.nplus).is_empty() {
            return false;
        }
        st.nplus.insert(x);
        for y in f[x].iter() {
            if st.pin.contains(y) {
                q.push(Lit::In(self.t.neg[y]));
            }
            if st.pout.contains(self.t.neg[y]) {
                q.push(Lit::Out(y));
            }
        }
        true
    }

    /// Visits every completion of `st` that is parabolic in Σ. The visitor
    /// returns `false` to stop early.
    pub fn run<F: FnMut(&State) -> bool>(&mut self, st: State, visit: &mut F) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(Error::CapExceeded(format!("search exceeded {} nodes", self.cap)));
        }
        let decided = st.pin.union(st.pout);
        let next = self
            .t
            .pairs
            .iter()
            .find(|(x, y)| !decided.contains(*x) || !decided.contains(*y));
        let Some(&(x, y)) = next else {
            if st.pin == self.t.all() {
                return Ok(true);
            }
            return Ok(visit(&st));
        };
        let options: &[(Lit, Lit)] = &[
            (Lit::In(x), Lit::Out(y)),
            (Lit::Out(x), Lit::In(y)),
            (Lit::In(x), Lit::In(y)),
        ];
        for &(a, b) in options {
            let mut s = st;
            if self.propagate(&mut s, vec![a, b]) && !self.run(s, visit)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
