//! Brute-force oracle: every covering subset of Δ is tested directly.

use crate::error::{Error, Result};
use crate::parabolic::table::Table;
use crate::rootset::RootSet;

/// All lifts of `p` to a parabolic subset of Σ, by trying every assignment
/// of the elements outside Δ.
pub fn brute_lifts(t: &Table, p: RootSet, max_bits: usize) -> Result<Vec<RootSet>> {
    let extras = t.extras().to_vec();
    if extras.len() > max_bits {
        return Err(Error::CapExceeded(format!(
            "lift search over {} free elements exceeds the cap of {max_bits}",
            extras.len()
        )));
    }
    let mut out = Vec::new();
    for code in 0u64..1u64 << extras.len() {
        let mut q = p;
        for (k, &e) in extras.iter().enumerate() {
            if code >> k & 1 == 1 {
                q.insert(e);
            }
        }
        if t.is_parabolic_full(q) {
            out.push(q);
        }
    }
    Ok(out)
}

/// Every parabolic subset of Δ, in canonical order.
///
/// Subsets failing the covering condition on {α, −α} ⊆ Δ are skipped without
/// being tested, since no lift can repair them.
pub fn exhaustive(t: &Table, subset_cap: usize, lift_bits: usize) -> Result<Vec<RootSet>> {
    let nd = t.n_delta;
    if nd > subset_cap {
        return Err(Error::CapExceeded(format!(
            "exhaustive enumeration over |Δ| = {nd} exceeds the subset cap of {subset_cap}"
        )));
    }
    let pairs: Vec<(usize, usize)> = t.pairs.iter().copied().filter(|&(_, y)| y < nd).collect();
    let singles: Vec<usize> = (0..nd).filter(|&x| t.neg[x] >= nd).collect();
    let delta = t.delta();
    let mut digits = vec![0u8; pairs.len() + singles.len()];
    let radix: Vec<u8> = pairs.iter().map(|_| 3).chain(singles.iter().map(|_| 2)).collect();
    let mut out = Vec::new();
    loop {
        let mut p = RootSet::EMPTY;
        for (k, &(x, y)) in pairs.iter().enumerate() {
            match digits[k] {
                0 => p.insert(x),
                1 => p.insert(y),
                _ => {
                    p.insert(x);
                    p.insert(y);
                }
            }
        }
        for (k, &x) in singles.iter().enumerate() {
            if digits[pairs.len() + k] == 1 {
                p.insert(x);
            }
        }
        if p != delta && t.is_closed_in_delta(p) {
            let ok = if t.symmetric() {
                t.is_closed(p)
            } else {
                !brute_lifts(t, p, lift_bits)?.is_empty()
            };
            if ok {
                out.push(p);
            }
        }
        let mut k = 0;
        loop {
            if k == digits.len() {
                out.sort();
                return Ok(out);
            }
            digits[k] += 1;
            if digits[k] < radix[k] {
                break;
            }
            digits[k] = 0;
            k += 1;
        }
    }
}
