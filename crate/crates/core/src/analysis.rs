//! Lattice and semilattice recognition, and `k`-distributivity.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::params::Bound;
use crate::poset::Poset;
use crate::set::ElementSet;

fn pairs(p: &Poset) -> impl Iterator<Item = ElementSet> + '_ {
    (0..p.len()).flat_map(move |a| (a..p.len()).map(move |b| ElementSet::from_elements([a, b])))
}

/// Every pair has a meet.
pub fn is_meet_semilattice(p: &Poset) -> bool {
    pairs(p).all(|s| p.meet(s).is_some())
}

/// Every pair has a join.
pub fn is_join_semilattice(p: &Poset) -> bool {
    pairs(p).all(|s| p.join(s).is_some())
}

pub fn is_lattice(p: &Poset) -> bool {
    is_meet_semilattice(p) && is_join_semilattice(p)
}

/// For every `m < k`, whenever `y₁ ∨ … ∨ y_m` exists, so does
/// `(x ∧ y₁) ∨ … ∨ (x ∧ y_m)`, and it equals `x ∧ (y₁ ∨ … ∨ y_m)`.
///
/// The `yᵢ` are taken as a set. `ω` allows every arity.
pub fn is_k_distributive(p: &Poset, k: Bound) -> Result<bool> {
    if !is_meet_semilattice(p) {
        return Err(Error::NotMeetSemilattice);
    }
    Ok(k_distributive_unchecked(p, k))
}

fn k_distributive_unchecked(p: &Poset, k: Bound) -> bool {
    let meet2 = |a: usize, b: usize| {
        p.meet(ElementSet::from_elements([a, b]))
            .expect("meet semilattice")
    };
    for ys in p.carrier().subsets_up_to(k.max_size(p.len())) {
        let Some(top) = p.join(ys) else { continue };
        for x in 0..p.len() {
            let lhs = meet2(x, top);
            let parts: ElementSet = ys.iter().map(|y| meet2(x, y)).collect();
            if p.join(parts) != Some(lhs) {
                return false;
            }
        }
    }
    true
}

/// `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` for all triples.
pub fn is_distributive_lattice(p: &Poset) -> Result<bool> {
    if !is_lattice(p) {
        return Err(Error::NotLattice);
    }
    let meet = |a: usize, b: usize| p.meet(ElementSet::from_elements([a, b])).expect("lattice");
    let join = |a: usize, b: usize| p.join(ElementSet::from_elements([a, b])).expect("lattice");
    let n = p.len();
    for x in 0..n {
        for y in 0..n {
            for z in y + 1..n {
                if meet(x, join(y, z)) != join(meet(x, y), meet(x, z)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub is_meet_semilattice: bool,
    pub is_join_semilattice: bool,
    pub is_lattice: bool,
    /// `(k, k-distributive)` for `k = 2 ..= n + 1`; empty unless a meet semilattice.
    pub k_distributive_up_to: Vec<(usize, bool)>,
    pub is_distributive_lattice: bool,
}

pub fn classify(p: &Poset) -> ClassificationReport {
    let meet = is_meet_semilattice(p);
    let join = is_join_semilattice(p);
    let k_distributive_up_to = if meet {
        (2..=p.len() + 1)
            .map(|k| (k, k_distributive_unchecked(p, Bound::Finite(k as u32))))
            .collect()
    } else {
        Vec::new()
    };
    ClassificationReport {
        is_meet_semilattice: meet,
        is_join_semilattice: join,
        is_lattice: meet && join,
        k_distributive_up_to,
        is_distributive_lattice: meet && join && is_distributive_lattice(p) == Ok(true),
    }
}
