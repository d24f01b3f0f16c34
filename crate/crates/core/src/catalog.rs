//! Named posets and exhaustive enumeration up to isomorphism.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::set::ElementSet;

/// Looks up a standard poset by name. `k` sizes `chain`, `antichain` and
/// `boolean`, and is ignored otherwise.
pub fn standard_poset(name: &str, k: usize) -> Result<Poset> {
    match name {
        "chain" => chain(k),
        "antichain" => antichain(k),
        "boolean" => boolean(k),
        "M3" | "m3" => Ok(m3()),
        "N5" | "n5" => Ok(n5()),
        "hexagon_witness" | "hexagon" => Ok(hexagon_witness()),
        _ => Err(Error::UnknownStandardPoset(name.to_string())),
    }
}

/// `c0 < c1 < … < c{k-1}`.
pub fn chain(k: usize) -> Result<Poset> {
    if k == 0 {
        return Err(Error::ZeroSize("chain".into()));
    }
    let names = (0..k).map(|i| format!("c{i}")).collect();
    let rel: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    Poset::new(names, &rel)
}

/// `k` pairwise incomparable elements `a0 … a{k-1}`.
pub fn antichain(k: usize) -> Result<Poset> {
    if k == 0 {
        return Err(Error::ZeroSize("antichain".into()));
    }
    Poset::new((0..k).map(|i| format!("a{i}")).collect(), &[])
}

/// Subsets of a `k`-set under inclusion; element `s{m}` is the subset with bitmask `m`.
pub fn boolean(k: usize) -> Result<Poset> {
    if k > 6 {
        return Err(Error::TooManyElements(1 << k));
    }
    let n = 1usize << k;
    let names = (0..n).map(|m| format!("s{m}")).collect();
    let mut rel = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a & !b == 0 {
                rel.push((a, b));
            }
        }
    }
    Poset::new(names, &rel)
}

/// The diamond `bot < a, b, c < top`.
pub fn m3() -> Poset {
    Poset::from_names(
        &["bot", "a", "b", "c", "top"],
        &[
            ("bot", "a"),
            ("bot", "b"),
            ("bot", "c"),
            ("a", "top"),
            ("b", "top"),
            ("c", "top"),
        ],
    )
    .expect("M3 is a valid poset")
}

/// The pentagon `bot < a < c < top`, `bot < b < top`.
pub fn n5() -> Poset {
    Poset::from_names(
        &["bot", "a", "c", "b", "top"],
        &[("bot", "a"), ("a", "c"), ("c", "top"), ("bot", "b"), ("b", "top")],
    )
    .expect("N5 is a valid poset")
}

/// Three atoms under two incomparable upper bounds `u`, `v`, capped by `top`.
///
/// Representable for all `(α, β)`, yet its suborder on `{bot, a, b, c, top}`
/// is `M3`, which is not.
pub fn hexagon_witness() -> Poset {
    let mut rel = Vec::new();
    for atom in ["a", "b", "c"] {
        rel.push(("bot", atom));
        rel.push((atom, "u"));
        rel.push((atom, "v"));
    }
    rel.push(("u", "top"));
    rel.push(("v", "top"));
    Poset::from_names(&["bot", "a", "b", "c", "u", "v", "top"], &rel).expect("valid poset")
}

/// Every poset on `n` elements up to isomorphism, elements named `e0 … e{n-1}`
/// and numbered along a linear extension.
///
/// Feasible up to `n = 7` (2045 classes).
pub fn all_posets(n: usize) -> Vec<Poset> {
    if n == 0 {
        return Vec::new();
    }
    let names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    // Naturally labelled posets: element j sits above a down-closed subset of {0..j}.
    let mut labelled: Vec<Vec<ElementSet>> = Vec::new();
    let mut stack: Vec<Vec<ElementSet>> = alloc::vec![Vec::new()];
    while let Some(downs) = stack.pop() {
        let j = downs.len();
        if j == n {
            labelled.push(downs);
            continue;
        }
        for below in ElementSet::full(j).subsets() {
            let closed = below.iter().all(|b| downs[b].is_subset(below));
            if closed {
                let mut next = downs.clone();
                next.push(below.with(j));
                stack.push(next);
            }
        }
    }
    let mut classes: BTreeMap<Vec<(usize, usize)>, Vec<Poset>> = BTreeMap::new();
    for downs in labelled {
        let rel: Vec<(usize, usize)> = downs
            .iter()
            .enumerate()
            .flat_map(|(j, d)| d.iter().map(move |i| (i, j)))
            .collect();
        let p = Poset::new(names.clone(), &rel).expect("naturally labelled relation is a poset");
        let mut key: Vec<(usize, usize)> =
            (0..n).map(|e| (p.up(e).len(), p.down(e).len())).collect();
        key.sort_unstable();
        let bucket = classes.entry(key).or_default();
        if !bucket.iter().any(|q| q.is_isomorphic(&p)) {
            bucket.push(p);
        }
    }
    classes.into_values().flatten().collect()
}
