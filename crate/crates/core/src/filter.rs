//! `(α, β)`-filters: recognition, exhaustive enumeration, separation, and the
//! set representation they induce.
//!
//! An `(α, β)`-filter is an up-set `Γ` that contains every defined meet of a
//! nonempty subset of `Γ` with fewer than `α` elements, and that meets every
//! nonempty `T` with fewer than `β` elements whose join is defined and lies in
//! `Γ`. A poset is representable exactly when every pair `p ≰ q` is separated
//! by such a filter; the representation sends `p` to the set of filters
//! containing it.

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::params::FilterParams;
use crate::poset::Poset;
use crate::set::ElementSet;

/// Default limit on the carrier size for exhaustive filter enumeration.
pub const DEFAULT_ENUMERATION_BOUND: usize = 20;

/// Nonempty subsets of `within` with at most `max` elements, ascending.
pub(crate) fn small_subsets(within: ElementSet, max: usize) -> impl Iterator<Item = ElementSet> {
    within.subsets_up_to(max).into_iter()
}

/// Checks the filter conditions literally, by scanning every admissible
/// subset. Exponential in `|P|`; [`FilterChecker`] is the fast equivalent.
pub fn is_ab_filter(p: &Poset, g: ElementSet, prm: FilterParams) -> bool {
    if !g.is_subset(p.carrier()) || !p.is_up_set(g) {
        return false;
    }
    let n = p.len();
    let meets_closed = small_subsets(g, prm.alpha.max_size(n))
        .all(|s| p.meet(s).map_or(true, |m| g.contains(m)));
    if !meets_closed {
        return false;
    }
    small_subsets(p.carrier(), prm.beta.max_size(n))
        .all(|t| match p.join(t) {
            Some(j) if g.contains(j) => t.intersects(g),
            _ => true,
        })
}

/// Precomputed tables for fast filter recognition on one poset.
///
/// If `S ⊆ up(e)` has meet `e`, so does every `S'` with `S ⊆ S' ⊆ up(e)`.
/// Meet-closure therefore only has to be tested against the inclusion-minimal
/// generating sets of each element, and dually for joins.
#[derive(Clone, Debug)]
pub struct FilterChecker<'p> {
    poset: &'p Poset,
    meet_generators: Vec<Vec<ElementSet>>,
    join_generators: Vec<Vec<ElementSet>>,
}

fn minimal_generators(
    candidates: ElementSet,
    max: usize,
    generates: impl Fn(ElementSet) -> bool,
) -> Vec<ElementSet> {
    let mut sets: Vec<ElementSet> = small_subsets(candidates, max)
        .filter(|s| s.len() >= 2 && generates(*s))
        .collect();
    sets.sort_by_key(|s| (s.len(), s.0));
    let mut minimal: Vec<ElementSet> = Vec::new();
    for s in sets {
        if !minimal.iter().any(|m| m.is_subset(s)) {
            minimal.push(s);
        }
    }
    minimal
}

impl<'p> FilterChecker<'p> {
    pub fn new(poset: &'p Poset, prm: FilterParams) -> FilterChecker<'p> {
        let n = poset.len();
        let (max_meet, max_join) = (prm.alpha.max_size(n), prm.beta.max_size(n));
        let meet_generators = (0..n)
            .map(|e| {
                minimal_generators(poset.up(e).without(e), max_meet, |s| poset.meet(s) == Some(e))
            })
            .collect();
        let join_generators = (0..n)
            .map(|e| {
                minimal_generators(poset.down(e).without(e), max_join, |s| poset.join(s) == Some(e))
            })
            .collect();
        FilterChecker {
            poset,
            meet_generators,
            join_generators,
        }
    }

    pub fn poset(&self) -> &'p Poset {
        self.poset
    }

    pub fn is_filter(&self, g: ElementSet) -> bool {
        let p = self.poset;
        if !g.is_subset(p.carrier()) || !p.is_up_set(g) {
            return false;
        }
        let outside = p.carrier().difference(g);
        let meet_escapes = outside
            .iter()
            .any(|e| self.meet_generators[e].iter().any(|s| s.is_subset(g)));
        if meet_escapes {
            return false;
        }
        !g.iter()
            .any(|e| self.join_generators[e].iter().any(|t| !t.intersects(g)))
    }

    /// All filters, ascending by bitmask.
    pub fn filters(&self) -> impl Iterator<Item = ElementSet> + '_ {
        self.poset.carrier().subsets().filter(move |&g| self.is_filter(g))
    }
}

fn check_bound(p: &Poset, bound: usize) -> Result<()> {
    if p.len() > bound {
        return Err(Error::BoundExceeded {
            size: p.len(),
            bound,
        });
    }
    Ok(())
}

/// Every `(α, β)`-filter of `p` (including `∅`), ascending by bitmask.
pub fn enumerate_filters(p: &Poset, prm: FilterParams) -> Result<Vec<ElementSet>> {
    enumerate_filters_bounded(p, prm, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_filters_bounded(
    p: &Poset,
    prm: FilterParams,
    bound: usize,
) -> Result<Vec<ElementSet>> {
    check_bound(p, bound)?;
    Ok(FilterChecker::new(p, prm).filters().collect())
}

/// The first filter (in enumeration order) containing `a` but not `b`.
pub fn separating_filter(
    p: &Poset,
    a: usize,
    b: usize,
    prm: FilterParams,
) -> Result<Option<ElementSet>> {
    if a >= p.len() || b >= p.len() {
        return Err(Error::IndexOutOfRange(a.max(b)));
    }
    if p.leq(a, b) {
        return Err(Error::NotSeparable(p.name(a).to_string(), p.name(b).to_string()));
    }
    check_bound(p, DEFAULT_ENUMERATION_BOUND)?;
    let checker = FilterChecker::new(p, prm);
    // Filters are up-sets, so any candidate already contains up(a).
    let free = p.carrier().difference(p.up(a)).without(b);
    Ok(free
        .subsets()
        .map(|s| s.union(p.up(a)))
        .find(|&g| checker.is_filter(g)))
}

/// Pairs `(p, q)` with `p ≰ q`, in lexicographic index order.
pub fn incomparable_pairs(p: &Poset) -> impl Iterator<Item = (usize, usize)> + '_ {
    let n = p.len();
    (0..n).flat_map(move |a| (0..n).filter(move |&b| !p.leq(a, b)).map(move |b| (a, b)))
}

/// The first pair `p ≰ q` that no filter separates.
pub fn first_inseparable_pair(p: &Poset, prm: FilterParams) -> Result<Option<(usize, usize)>> {
    let filters = enumerate_filters(p, prm)?;
    Ok(incomparable_pairs(p).find(|&(a, b)| {
        !filters.iter().any(|g| g.contains(a) && !g.contains(b))
    }))
}

/// Whether every `p ≰ q` is separated by some `(α, β)`-filter.
pub fn is_representable(p: &Poset, prm: FilterParams) -> Result<bool> {
    Ok(first_inseparable_pair(p, prm)?.is_none())
}

/// A family of filters together with the map `h(p) = { i : p ∈ filters[i] }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub filters: Vec<ElementSet>,
    /// Per element, ascending filter indices.
    pub map: Vec<Vec<usize>>,
}

impl Representation {
    /// Derives `map` from `filters` for a poset on `n` elements.
    pub fn from_filters(n: usize, filters: Vec<ElementSet>) -> Representation {
        let map = (0..n)
            .map(|e| {
                filters
                    .iter()
                    .enumerate()
                    .filter(|(_, g)| g.contains(e))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        Representation { filters, map }
    }

    pub fn image(&self, e: usize) -> &[usize] {
        &self.map[e]
    }
}

/// A separating family of filters, greedily kept small: repeatedly take the
/// filter separating the most still-unseparated pairs, ties by enumeration
/// order. `None` when `p` is not representable.
pub fn build_representation(p: &Poset, prm: FilterParams) -> Result<Option<Representation>> {
    let filters: Vec<ElementSet> = enumerate_filters(p, prm)?
        .into_iter()
        .filter(|g| !g.is_empty())
        .collect();
    let mut open: Vec<(usize, usize)> = incomparable_pairs(p).collect();
    let mut chosen = Vec::new();
    while !open.is_empty() {
        let separated = |g: &ElementSet| {
            open.iter()
                .filter(|&&(a, b)| g.contains(a) && !g.contains(b))
                .count()
        };
        let mut best: Option<(usize, ElementSet)> = None;
        for g in &filters {
            let count = separated(g);
            if count > 0 && best.map_or(true, |(c, _)| count > c) {
                best = Some((count, *g));
            }
        }
        let Some((_, g)) = best else {
            return Ok(None);
        };
        open.retain(|&(a, b)| !(g.contains(a) && !g.contains(b)));
        chosen.push(g);
    }
    Ok(Some(Representation::from_filters(p.len(), chosen)))
}

/// Whether `rep.map` is an `(α, β)`-embedding into the powerset of filter
/// indices: order-preserving and reflecting, meets of fewer than `α` elements
/// sent to intersections, joins of fewer than `β` sent to unions.
pub fn verify_embedding(p: &Poset, rep: &Representation, prm: FilterParams) -> bool {
    let n = p.len();
    if rep.map.len() != n {
        return false;
    }
    let images: Vec<BTreeSet<usize>> = rep.map.iter().map(|h| h.iter().copied().collect()).collect();
    for a in 0..n {
        for b in 0..n {
            if p.leq(a, b) != images[a].is_subset(&images[b]) {
                return false;
            }
        }
    }
    let meets_ok = small_subsets(p.carrier(), prm.alpha.max_size(n)).all(|s| match p.meet(s) {
        Some(m) => {
            let mut it = s.iter();
            let first = images[it.next().expect("nonempty")].clone();
            let inter = it.fold(first, |acc, e| acc.intersection(&images[e]).copied().collect());
            inter == images[m]
        }
        None => true,
    });
    if !meets_ok {
        return false;
    }
    small_subsets(p.carrier(), prm.beta.max_size(n)).all(|t| match p.join(t) {
        Some(j) => {
            let union: BTreeSet<usize> = t.iter().flat_map(|e| images[e].iter().copied()).collect();
            union == images[j]
        }
        None => true,
    })
}

/// `Γ × Q`: the cylinder over a filter of the left factor inside `left × right`.
pub fn product_cylinder(left: &Poset, right: &Poset, g: ElementSet) -> ElementSet {
    debug_assert!(g.is_subset(left.carrier()));
    let m = right.len();
    g.iter()
        .flat_map(|a| (0..m).map(move |q| a * m + q))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{antichain, chain, hexagon_witness, m3};
    use crate::params::{Bound, Params};
    use alloc::vec;

    fn p33() -> Params {
        Params::finite(3, 3)
    }

    fn set(p: &Poset, names: &[&str]) -> ElementSet {
        names.iter().map(|n| p.index_of(n).unwrap()).collect()
    }

    #[test]
    fn top_alone_is_not_a_filter_of_m3() {
        let p = m3();
        assert!(!is_ab_filter(&p, set(&p, &["top"]), p33()));
        assert!(is_ab_filter(&p, p.carrier(), p33()));
    }

    #[test]
    fn principal_up_set_in_chain() {
        let p = chain(3).unwrap();
        assert!(is_ab_filter(&p, p.up(1), p33()));
    }

    #[test]
    fn enumeration_examples() {
        let c2 = chain(2).unwrap();
        assert_eq!(
            enumerate_filters(&c2, p33()).unwrap(),
            [ElementSet(0), ElementSet(0b10), ElementSet(0b11)]
        );
        let ac = antichain(2).unwrap();
        assert_eq!(enumerate_filters(&ac, p33()).unwrap().len(), 4);
        let m = m3();
        let fs = enumerate_filters(&m, p33()).unwrap();
        assert!(!fs.contains(&set(&m, &["top"])));
        assert!(!fs.contains(&set(&m, &["a", "top"])));
        assert_eq!(fs, [ElementSet::EMPTY, m.carrier()]);
    }

    #[test]
    fn enumeration_bound() {
        let big = antichain(21).unwrap();
        assert_eq!(
            enumerate_filters(&big, p33()),
            Err(Error::BoundExceeded { size: 21, bound: 20 })
        );
    }

    #[test]
    fn separation_examples() {
        let c2 = chain(2).unwrap();
        assert_eq!(separating_filter(&c2, 1, 0, p33()), Ok(Some(ElementSet(0b10))));
        assert!(matches!(separating_filter(&c2, 0, 1, p33()), Err(Error::NotSeparable(..))));
        let m = m3();
        let (a, b) = (m.index_of("a").unwrap(), m.index_of("b").unwrap());
        assert_eq!(separating_filter(&m, a, b, p33()), Ok(None));
        let h = hexagon_witness();
        let (a, b) = (h.index_of("a").unwrap(), h.index_of("b").unwrap());
        assert_eq!(
            separating_filter(&h, a, b, p33()),
            Ok(Some(set(&h, &["a", "u", "v", "top"])))
        );
    }

    #[test]
    fn representability_examples() {
        assert_eq!(is_representable(&m3(), p33()), Ok(false));
        assert_eq!(is_representable(&hexagon_witness(), p33()), Ok(true));
        let omega = Params::new(Bound::Finite(2), Bound::Omega).unwrap();
        assert_eq!(is_representable(&m3(), omega), Ok(true));
        assert_eq!(is_representable(&m3(), Params::new(Bound::Omega, Bound::Finite(2)).unwrap()), Ok(true));
    }

    #[test]
    fn representation_examples() {
        let c2 = chain(2).unwrap();
        let rep = build_representation(&c2, p33()).unwrap().unwrap();
        assert_eq!(rep.filters, [ElementSet(0b10)]);
        assert_eq!(rep.map, [vec![], vec![0]]);
        assert!(verify_embedding(&c2, &rep, p33()));

        let single = chain(1).unwrap();
        let rep = build_representation(&single, p33()).unwrap().unwrap();
        assert!(rep.filters.is_empty());
        assert_eq!(rep.map, [Vec::<usize>::new()]);

        assert_eq!(build_representation(&m3(), p33()), Ok(None));

        let c3 = chain(3).unwrap();
        let rep = build_representation(&c3, p33()).unwrap().unwrap();
        assert_eq!(rep.filters.len(), 2);

        let h = hexagon_witness();
        let rep = build_representation(&h, p33()).unwrap().unwrap();
        assert!(verify_embedding(&h, &rep, p33()));
    }

    #[test]
    fn non_separating_family_is_rejected() {
        let c2 = chain(2).unwrap();
        let rep = Representation::from_filters(2, vec![ElementSet(0b11)]);
        assert!(!verify_embedding(&c2, &rep, p33()));
    }

    #[test]
    fn cylinder_over_filter_is_filter() {
        let c2 = chain(2).unwrap();
        let h = hexagon_witness();
        let prod = c2.product(&h).unwrap();
        let g = product_cylinder(&c2, &h, ElementSet(0b10));
        assert!(FilterChecker::new(&prod, p33()).is_filter(g));
    }
}
