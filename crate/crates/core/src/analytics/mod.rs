//! Quantities derived from the exact counts: Fibonacci convolutions, weighted
//! sums over stressed words, growth constants, the limiting law of `f - 2m`
//! and ratio diagnostics.

mod constants;
mod diagnostics;
mod series;
mod weights;

pub use constants::{bisect, solve_constants, GrowthConstants};
pub use diagnostics::{ratio_diagnostics, RatioRow};
pub use series::{fibonacci, lower_series, nhat, t_from_s, NgSeries};
pub use weights::{
    fm2m_limit, fm2m_limit_table, phi, s_constant_bound, weight_partial_sums, Fm2mRow,
    PAPER_S_LOWER_BOUND,
};
