use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Largest carrier a [`Poset`] can hold (one bit per element).
pub const MAX_ELEMENTS: usize = 64;

/// A finite partial order, stored as the up-set and down-set of every element.
///
/// Elements are identified by index `0..len()`; names are for presentation.
/// Values are immutable once validated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    up: Vec<ElementSet>,
    down: Vec<ElementSet>,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | ',' | '(' | ')'))
}

impl Poset {
    /// Builds the reflexive-transitive closure of `relations`, where `(a, b)`
    /// declares `a ≤ b`.
    pub fn new(names: Vec<String>, relations: &[(usize, usize)]) -> Result<Poset> {
        let n = names.len();
        if n == 0 {
            return Err(Error::EmptyPoset);
        }
        if n > MAX_ELEMENTS {
            return Err(Error::TooManyElements(n));
        }
        for (i, name) in names.iter().enumerate() {
            if !valid_name(name) {
                return Err(Error::InvalidName(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(Error::DuplicateName(name.clone()));
            }
        }
        let mut up: Vec<ElementSet> = (0..n).map(ElementSet::singleton).collect();
        for &(a, b) in relations {
            if a >= n || b >= n {
                return Err(Error::IndexOutOfRange(a.max(b)));
            }
            up[a] = up[a].with(b);
        }
        // Warshall over bit rows.
        for k in 0..n {
            let row = up[k];
            for set in up.iter_mut() {
                if set.contains(k) {
                    *set = set.union(row);
                }
            }
        }
        for a in 0..n {
            for b in up[a].without(a) {
                if up[b].contains(a) {
                    return Err(Error::Cycle(names[a].clone(), names[b].clone()));
                }
            }
        }
        let down = transpose(&up);
        Ok(Poset { names, up, down })
    }

    /// Convenience constructor from element names and `a ≤ b` pairs by name.
    pub fn from_names(names: &[&str], relations: &[(&str, &str)]) -> Result<Poset> {
        let owned: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let lookup = |s: &str| {
            names
                .iter()
                .position(|n| *n == s)
                .ok_or_else(|| Error::UnknownElement(s.to_string()))
        };
        let rel = relations
            .iter()
            .map(|&(a, b)| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Poset::new(owned, &rel)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.names.len()
    }

    /// Always false: validated posets are nonempty.
    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, e: usize) -> &str {
        &self.names[e]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn carrier(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    /// Everything `≥ e`, including `e`.
    #[inline]
    pub fn up(&self, e: usize) -> ElementSet {
        self.up[e]
    }

    /// Everything `≤ e`, including `e`.
    #[inline]
    pub fn down(&self, e: usize) -> ElementSet {
        self.down[e]
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    /// Union of the up-sets of the members of `s`.
    pub fn up_closure(&self, s: ElementSet) -> ElementSet {
        s.iter().fold(ElementSet::EMPTY, |acc, e| acc.union(self.up[e]))
    }

    pub fn is_up_set(&self, s: ElementSet) -> bool {
        s.iter().all(|e| self.up[e].is_subset(s))
    }

    pub fn lower_bounds(&self, s: ElementSet) -> ElementSet {
        s.iter().fold(self.carrier(), |acc, e| acc.intersection(self.down[e]))
    }

    pub fn upper_bounds(&self, s: ElementSet) -> ElementSet {
        s.iter().fold(self.carrier(), |acc, e| acc.intersection(self.up[e]))
    }

    /// Greatest element of `s`, if it has one.
    pub fn greatest(&self, s: ElementSet) -> Option<usize> {
        s.iter().find(|&m| s.is_subset(self.down[m]))
    }

    /// Least element of `s`, if it has one.
    pub fn least(&self, s: ElementSet) -> Option<usize> {
        s.iter().find(|&m| s.is_subset(self.up[m]))
    }

    /// Greatest lower bound of a nonempty set; `None` when it does not exist.
    pub fn meet_of(&self, s: ElementSet) -> Result<Option<usize>> {
        self.check_nonempty(s)?;
        Ok(self.meet(s))
    }

    /// Least upper bound of a nonempty set; `None` when it does not exist.
    pub fn join_of(&self, s: ElementSet) -> Result<Option<usize>> {
        self.check_nonempty(s)?;
        Ok(self.join(s))
    }

    /// `meet_of` without the nonemptiness check.
    #[inline]
    pub(crate) fn meet(&self, s: ElementSet) -> Option<usize> {
        self.greatest(self.lower_bounds(s))
    }

    #[inline]
    pub(crate) fn join(&self, s: ElementSet) -> Option<usize> {
        self.least(self.upper_bounds(s))
    }

    fn check_nonempty(&self, s: ElementSet) -> Result<()> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        if !s.is_subset(self.carrier()) {
            return Err(Error::IndexOutOfRange(63 - s.0.leading_zeros() as usize));
        }
        Ok(())
    }

    /// The same carrier with the order reversed.
    pub fn dual(&self) -> Poset {
        Poset {
            names: self.names.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// Cartesian product with the componentwise order. Element `(p, q)` gets
    /// index `p * other.len() + q` and name `"p,q"` (components that already
    /// contain a comma are parenthesized).
    pub fn product(&self, other: &Poset) -> Result<Poset> {
        let (n, m) = (self.len(), other.len());
        if n * m > MAX_ELEMENTS {
            return Err(Error::TooManyElements(n * m));
        }
        let wrap = |s: &str| {
            if s.contains(',') {
                format!("({s})")
            } else {
                s.to_string()
            }
        };
        let mut names = Vec::with_capacity(n * m);
        let mut up = Vec::with_capacity(n * m);
        for p in 0..n {
            for q in 0..m {
                names.push(format!("{},{}", wrap(&self.names[p]), wrap(&other.names[q])));
                let mut row = ElementSet::EMPTY;
                for p2 in self.up[p] {
                    for q2 in other.up[q] {
                        row = row.with(p2 * m + q2);
                    }
                }
                up.push(row);
            }
        }
        let down = transpose(&up);
        Ok(Poset { names, up, down })
    }

    /// The suborder induced on `subset`, elements renumbered in ascending order.
    pub fn induced(&self, subset: ElementSet) -> Poset {
        let keep: Vec<usize> = subset.intersection(self.carrier()).iter().collect();
        let names = keep.iter().map(|&e| self.names[e].clone()).collect();
        let up: Vec<ElementSet> = keep
            .iter()
            .map(|&a| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &b)| self.leq(a, b))
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        let down = transpose(&up);
        Poset { names, up, down }
    }

    /// Pairs `(a, b)` with `a < b` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in self.up[a].without(a) {
                let between = self.up[a].intersection(self.down[b]).without(a).without(b);
                if between.is_empty() {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Number of pairs `a < b`.
    pub fn strict_relation_count(&self) -> usize {
        self.up.iter().map(|u| u.len() - 1).sum()
    }

    /// An order isomorphism `self → other` as an index map, if one exists.
    pub fn find_isomorphism(&self, other: &Poset) -> Option<Vec<usize>> {
        let n = self.len();
        if n != other.len() || self.strict_relation_count() != other.strict_relation_count() {
            return None;
        }
        let sig = |p: &Poset, e: usize| (p.up[e].len(), p.down[e].len());
        let mut map = vec![usize::MAX; n];
        let mut used = ElementSet::EMPTY;
        fn extend(
            a: &Poset,
            b: &Poset,
            e: usize,
            map: &mut Vec<usize>,
            used: &mut ElementSet,
            sig: &dyn Fn(&Poset, usize) -> (usize, usize),
        ) -> bool {
            if e == a.len() {
                return true;
            }
            for t in 0..b.len() {
                if used.contains(t) || sig(a, e) != sig(b, t) {
                    continue;
                }
                let consistent = (0..e).all(|d| {
                    a.leq(d, e) == b.leq(map[d], t) && a.leq(e, d) == b.leq(t, map[d])
                });
                if !consistent {
                    continue;
                }
                map[e] = t;
                *used = used.with(t);
                if extend(a, b, e + 1, map, used, sig) {
                    return true;
                }
                *used = used.without(t);
            }
            false
        }
        extend(self, other, 0, &mut map, &mut used, &sig).then_some(map)
    }

    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        self.find_isomorphism(other).is_some()
    }
}

fn transpose(up: &[ElementSet]) -> Vec<ElementSet> {
    let n = up.len();
    let mut down = vec![ElementSet::EMPTY; n];
    for (a, row) in up.iter().enumerate() {
        for b in row.iter() {
            down[b] = down[b].with(a);
        }
    }
    down
}
