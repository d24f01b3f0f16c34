//! Finite posets and their `(α, β)`-representations as systems of sets.
//!
//! A poset is `(α, β)`-representable when it embeds into a powerset lattice by
//! a map that turns defined meets of fewer than `α` elements into
//! intersections and defined joins of fewer than `β` elements into unions.
//! This crate decides that property three independent ways:
//!
//! * [`filter`]: search for separating `(α, β)`-filters, and build the
//!   induced representation explicitly;
//! * [`game`]: solve the two-player game in which `∃` tries to grow a filter
//!   around `p` while `∀` tries to force `q` into it;
//! * [`logic`]: evaluate the recursive first-order axioms `φ` and `ψ` that
//!   express "`∃` survives `n` rounds" in the language of posets.
//!
//! [`analysis`] adds the lattice-theoretic side (semilattices,
//! `k`-distributivity) used to cross-check the game route on lattices.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![warn(clippy::std_instead_of_alloc)]
#![warn(clippy::std_instead_of_core)]

extern crate alloc;

pub mod analysis;
pub mod catalog;
mod error;
pub mod filter;
pub mod game;
pub mod logic;
mod params;
mod poset;
mod set;

pub use error::{Error, Result};
pub use params::{Bound, FilterParams, GameParams, Params};
pub use poset::{Poset, MAX_ELEMENTS};
pub use set::{ElementSet, Subsets};
