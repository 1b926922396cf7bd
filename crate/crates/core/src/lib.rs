//! Construction, verification and exhaustive certification of linear
//! realizations of length multisets on complete graphs.
//!
//! A linear realization of a multiset `L` is a Hamiltonian path in `K_v`
//! whose multiset of edge lengths `|x - y|` equals `L`. This crate builds
//! them for supports `{1, y-k, y}` with `k <= 2` (ω-constructions,
//! two-length perfect realizations, spanning-forest bridgings, sawtooth
//! and trapezoid families, growth operators), verifies every path it
//! emits against the claimed multiset, and carries an exhaustive
//! backtracking oracle plus the cyclic-equivalence arithmetic used to
//! corner potential counterexamples.
//!
//! The crate is `no_std` (with `alloc`); IO, rendering and the command
//! line live in the companion `linreal-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bhr;
pub mod error;
pub mod fauxset;
pub mod k1;
pub mod k2;
pub mod k2_table;
pub mod moves;
pub mod multiset;
pub mod oracle;
pub mod pair;
pub mod realization;
pub mod transform;
pub mod trapezoid;

pub use error::{Error, Result};
pub use multiset::LengthMultiset;
pub use realization::{lengths_of, translate, Realization, VerifyReport};
