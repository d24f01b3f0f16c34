use core::fmt;

use crate::error::{Error, Result};

/// A cardinal bound on the size of meets or joins: either a finite `k ≥ 2`
/// (sets of size `< k`) or `ω` (any finite size).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bound {
    Finite(u32),
    Omega,
}

impl Bound {
    pub fn finite(k: u32) -> Result<Bound> {
        if k < 2 {
            return Err(Error::BoundTooSmall(k));
        }
        Ok(Bound::Finite(k))
    }

    /// Largest admissible set size on a carrier of `n` elements.
    ///
    /// On a finite poset `ω` is exactly "size `< n + 1`".
    pub fn max_size(self, n: usize) -> usize {
        match self {
            Bound::Finite(k) => (k as usize - 1).min(n),
            Bound::Omega => n,
        }
    }

    /// `self ≤ other` as cardinals.
    pub fn le(self, other: Bound) -> bool {
        match (self, other) {
            (_, Bound::Omega) => true,
            (Bound::Omega, Bound::Finite(_)) => false,
            (Bound::Finite(a), Bound::Finite(b)) => a <= b,
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Finite(k) => write!(f, "{k}"),
            Bound::Omega => f.write_str("omega"),
        }
    }
}

/// The pair `(α, β)`: meets of fewer than `α` and joins of fewer than `β`
/// elements are the ones that matter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Params {
    pub alpha: Bound,
    pub beta: Bound,
}

pub type FilterParams = Params;
pub type GameParams = Params;

impl Params {
    pub fn new(alpha: Bound, beta: Bound) -> Result<Params> {
        for b in [alpha, beta] {
            if let Bound::Finite(k) = b {
                if k < 2 {
                    return Err(Error::BoundTooSmall(k));
                }
            }
        }
        Ok(Params { alpha, beta })
    }

    /// Both bounds finite. Panics if either is below 2.
    pub fn finite(alpha: u32, beta: u32) -> Params {
        Params::new(Bound::Finite(alpha), Bound::Finite(beta)).expect("bounds must be at least 2")
    }

    /// Pointwise `self ≤ other`.
    pub fn le(self, other: Params) -> bool {
        self.alpha.le(other.alpha) && self.beta.le(other.beta)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alpha, self.beta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_is_exact_on_finite_carriers() {
        assert_eq!(Bound::Omega.max_size(7), 7);
        assert_eq!(Bound::Finite(3).max_size(7), 2);
        assert_eq!(Bound::Finite(30).max_size(7), 7);
    }

    #[test]
    fn bounds_below_two_are_rejected() {
        assert_eq!(Bound::finite(1), Err(Error::BoundTooSmall(1)));
        assert!(Params::new(Bound::Finite(2), Bound::Finite(0)).is_err());
    }
}
