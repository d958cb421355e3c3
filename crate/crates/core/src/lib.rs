//! Exact enumeration of numerical semigroups by genus.
//!
//! Semigroups are represented by their Kunz words. The crate provides
//!
//! * [`kunz`]: Kunz words, their validity predicates, derived invariants and
//!   the bijection with gap sets;
//! * [`census`]: an exhaustive oracle that lists every semigroup of a genus;
//! * [`stressed`]: the fast count of stressed words (3-Kunz words ending in 3)
//!   by genus and length, via a search over the positions of ones;
//! * [`analytics`]: Fibonacci convolutions, weighted sums, growth constants,
//!   the limiting law of `f - 2m` and ratio diagnostics.

pub mod analytics;
pub mod census;
pub mod error;
pub mod kunz;
pub mod stressed;

pub use error::{Count, Error, Result};
pub use kunz::{GapSet, KunzWord, SemigroupProperties};
