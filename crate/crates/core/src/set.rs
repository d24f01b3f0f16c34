use alloc::vec::Vec;
use core::fmt;

/// A subset of a poset's carrier, stored as a bitmask over element indices.
///
/// Sets are not tied to a poset at the type level; operations that take a
/// poset check membership bounds where it matters.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet(pub u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn singleton(e: usize) -> ElementSet {
        ElementSet(1 << e)
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> ElementSet {
        if n >= 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> ElementSet {
        elements.into_iter().fold(ElementSet::EMPTY, |s, e| s.with(e))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, e: usize) -> bool {
        e < 64 && self.0 >> e & 1 == 1
    }

    #[inline]
    pub fn with(self, e: usize) -> ElementSet {
        ElementSet(self.0 | 1 << e)
    }

    #[inline]
    pub fn without(self, e: usize) -> ElementSet {
        ElementSet(self.0 & !(1 << e))
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: ElementSet) -> bool {
        self.0 & other.0 != 0
    }

    #[inline]
    pub fn union(self, other: ElementSet) -> ElementSet {
        ElementSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: ElementSet) -> ElementSet {
        ElementSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: ElementSet) -> ElementSet {
        ElementSet(self.0 & !other.0)
    }

    /// Lowest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Nonempty subsets with at most `max` members, ascending by bitmask.
    ///
    /// Only walks combinations of the admissible sizes, so it stays cheap on
    /// large carriers when `max` is small.
    pub fn subsets_up_to(self, max: usize) -> Vec<ElementSet> {
        if max >= self.len() {
            return self.subsets().skip(1).collect();
        }
        let members: Vec<usize> = self.iter().collect();
        let mut out = Vec::new();
        fn extend(members: &[usize], from: usize, cur: ElementSet, left: usize, out: &mut Vec<ElementSet>) {
            if left == 0 {
                return;
            }
            for i in from..members.len() {
                let next = cur.with(members[i]);
                out.push(next);
                extend(members, i + 1, next, left - 1, out);
            }
        }
        extend(&members, 0, ElementSet::EMPTY, max, &mut out);
        out.sort_unstable();
        out
    }

    /// All subsets of `self`, ascending by bitmask, starting with the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ElementSet::from_elements(iter)
    }
}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Iterator over the subsets of a mask in ascending numeric order.
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        let cur = self.next?;
        // Standard trick: the successor of `cur` among submasks of `mask`.
        self.next = if cur == self.mask {
            None
        } else {
            Some(cur.wrapping_sub(self.mask) & self.mask)
        };
        Some(ElementSet(cur))
    }
}
