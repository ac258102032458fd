//! Exact analysis of Penney's game on words and on group-action patterns.
//!
//! A pattern is the lexicographically least representative of an orbit of
//! words under a permutation-group action on the alphabet; betting on a
//! pattern bets on every word in its orbit. This crate computes correlation
//! vectors, Conway leading numbers, avoiding / first-occurrence generating
//! functions, expected wait times, winning odds, best-beater strategies, and
//! the cyclic-group signature reduction — all in exact arithmetic, with a
//! brute-force enumeration and Monte Carlo oracle for cross-validation.

pub mod cyclic;
pub mod error;
pub mod game;
pub mod genfunc;
pub mod group;
pub mod oracle;
pub mod pattern;
pub mod rational;
pub mod word;

pub use error::{Error, Result};
pub use group::{GroupSpec, Perm, PermutationGroup};
pub use pattern::Pattern;
pub use word::Word;
