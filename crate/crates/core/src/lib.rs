//! Generalized shuffle squares.
//!
//! * [`words`]: words, permutations, symmetry orbits, canonical words.
//! * [`shuffle`]: exact deciders for shuffle squares and shuffle γ-squares.
//! * [`cyclic`]: cyclic decompositions of binary words, the shift statistic
//!   `s(W)` and the shuffle anti-square scan.
//! * [`covering`]: covering sets of permutations and group scans.
//! * [`enumeration`]: count tables and closed forms.
//! * [`codes`]: digraphs, Euler numbers and chord diagrams of double-occurrence words.

pub mod codes;
pub mod covering;
pub mod cyclic;
pub mod enumeration;
pub mod error;
pub mod shuffle;
pub mod words;

#[cfg(any(test, feature = "oracles"))]
pub mod oracles;

pub use error::{Error, Result};
pub use shuffle::{is_shuffle_square, Recognizer, SplitWitness};
pub use words::{CanonicalWord, GroupKind, Permutation, SymmetrySpec, Word};
