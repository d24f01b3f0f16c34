//! Shared corpus and brute-force oracles for the integration tests.
//!
//! The oracles only use `Poset::leq` and plain loops, so they share no code
//! with the library's filter checker or game solver.

#![allow(dead_code)]

pub mod tptp;

use posetrep_core::catalog::all_posets;
use posetrep_core::{Bound, Params, Poset};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x005e_ed0f_0de5;

pub const BOUNDS: [Bound; 4] = [Bound::Finite(2), Bound::Finite(3), Bound::Finite(4), Bound::Omega];

pub fn all_params() -> Vec<Params> {
    BOUNDS
        .iter()
        .flat_map(|&a| BOUNDS.iter().map(move |&b| Params::new(a, b).unwrap()))
        .collect()
}

/// A random poset on `n` elements: a random DAG, closed, with shuffled labels.
pub fn random_poset(rng: &mut impl Rng, n: usize) -> Poset {
    let density: f64 = rng.gen_range(0.1..0.6);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut rel = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                rel.push((perm[i], perm[j]));
            }
        }
    }
    Poset::new((0..n).map(|i| format!("e{i}")).collect(), &rel).unwrap()
}

/// Every poset on at most `max_exhaustive` elements up to isomorphism, then
/// `random` seeded posets with 5 to 7 elements.
pub fn corpus(max_exhaustive: usize, random: usize) -> Vec<Poset> {
    let mut out: Vec<Poset> = (1..=max_exhaustive).flat_map(all_posets).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..random {
        let n = rng.gen_range(5..=7);
        out.push(random_poset(&mut rng, n));
    }
    out
}

pub fn max_size(b: Bound, n: usize) -> usize {
    match b {
        Bound::Finite(k) => (k as usize - 1).min(n),
        Bound::Omega => n,
    }
}

pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << n).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}

pub fn naive_meet(p: &Poset, s: &[usize]) -> Option<usize> {
    let lower: Vec<usize> = (0..p.len()).filter(|&z| s.iter().all(|&x| p.leq(z, x))).collect();
    lower.iter().copied().find(|&m| lower.iter().all(|&z| p.leq(z, m)))
}

pub fn naive_join(p: &Poset, s: &[usize]) -> Option<usize> {
    let upper: Vec<usize> = (0..p.len()).filter(|&z| s.iter().all(|&x| p.leq(x, z))).collect();
    upper.iter().copied().find(|&m| upper.iter().all(|&z| p.leq(m, z)))
}

/// `g` as a membership vector is an `(α, β)`-filter, checked by definition.
pub fn naive_is_filter(p: &Poset, g: &[bool], prm: Params) -> bool {
    let n = p.len();
    for a in 0..n {
        for b in 0..n {
            if g[a] && p.leq(a, b) && !g[b] {
                return false;
            }
        }
    }
    for s in subsets(n).filter(|s| !s.is_empty()) {
        if s.len() <= max_size(prm.alpha, n) && s.iter().all(|&x| g[x]) {
            if let Some(m) = naive_meet(p, &s) {
                if !g[m] {
                    return false;
                }
            }
        }
        if s.len() <= max_size(prm.beta, n) {
            if let Some(j) = naive_join(p, &s) {
                if g[j] && !s.iter().any(|&x| g[x]) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn naive_filters(p: &Poset, prm: Params) -> Vec<Vec<bool>> {
    let n = p.len();
    (0u64..1 << n)
        .map(|m| (0..n).map(|i| m >> i & 1 == 1).collect::<Vec<bool>>())
        .filter(|g| naive_is_filter(p, g, prm))
        .collect()
}

pub fn naive_representable(p: &Poset, prm: Params) -> bool {
    let filters = naive_filters(p, prm);
    (0..p.len()).all(|a| {
        (0..p.len()).all(|b| p.leq(a, b) || filters.iter().any(|g| g[a] && !g[b]))
    })
}

/// `∃` survives `n` rounds from `(U, V)`, by plain recursion over all moves.
pub fn naive_has_n(p: &Poset, u: &[bool], v: &[bool], prm: Params, n: usize) -> bool {
    let size = p.len();
    if (0..size).any(|i| u[i] && v[i]) {
        return false;
    }
    if n == 0 {
        return true;
    }
    let add = |e: usize| {
        let mut next = u.to_vec();
        next[e] = true;
        next
    };
    for b in 0..size {
        if (0..size).any(|a| u[a] && p.leq(a, b)) && !naive_has_n(p, &add(b), v, prm, n - 1) {
            return false;
        }
    }
    for s in subsets(size).filter(|s| !s.is_empty()) {
        if s.len() <= max_size(prm.alpha, size) && s.iter().all(|&x| u[x]) {
            if let Some(m) = naive_meet(p, &s) {
                if !naive_has_n(p, &add(m), v, prm, n - 1) {
                    return false;
                }
            }
        }
        if s.len() <= max_size(prm.beta, size) {
            if let Some(j) = naive_join(p, &s) {
                if u[j] && !s.iter().any(|&b| naive_has_n(p, &add(b), v, prm, n - 1)) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn indicator(n: usize, members: &[usize]) -> Vec<bool> {
    (0..n).map(|i| members.contains(&i)).collect()
}
