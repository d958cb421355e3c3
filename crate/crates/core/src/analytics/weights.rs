use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::stressed::StressedCountTable;

/// Lower bound on the constant `S` obtained from stressed words of length at most 50.
pub const PAPER_S_LOWER_BOUND: f64 = 3.8073;

/// The golden ratio.
pub fn phi() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

/// Cumulative sums over lengths `1..=max_length` of `Σ_g count(ℓ, g) φ^-g`.
/// Entry `i` holds the sum over lengths at most `i + 1`.
pub fn weight_partial_sums(table: &StressedCountTable, max_length: u32) -> Result<Vec<f64>> {
    let phi = phi();
    let mut running = 0.0;
    (1..=max_length)
        .map(|len| {
            running += length_weight(table, len, |g| phi.powi(-(g as i32)))?;
            Ok(running)
        })
        .collect()
}

fn length_weight<W: Fn(u32) -> f64>(table: &StressedCountTable, len: u32, weight: W) -> Result<f64> {
    if !table.length_complete(len) {
        return Err(Error::MissingData(format!(
            "stressed words of length {len} are not fully counted (genus covered to {}, length to {})",
            table.max_genus, table.max_length
        )));
    }
    Ok(table
        .length_row(len)
        .into_iter()
        .map(|(g, count)| count as f64 * weight(g))
        .sum())
}

/// `(φ / √5) (1 + partial_sum)`; a truncated weight sum gives a lower bound for `S`.
pub fn s_constant_bound(partial_sum: f64) -> f64 {
    phi() / 5f64.sqrt() * (1.0 + partial_sum)
}

/// Limiting probability that `f - 2m = k` for a uniformly random semigroup of
/// large genus, with `s_estimate` standing in for `S`.
pub fn fm2m_limit(k: i64, table: &StressedCountTable, s_estimate: f64) -> Result<f64> {
    if s_estimate.is_nan() || s_estimate <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "S estimate must be positive, got {s_estimate}"
        )));
    }
    let phi = phi();
    let scale = (5f64.sqrt() * s_estimate).recip();
    Ok(match k {
        0 => 0.0,
        k if k < 0 => phi.powi(k as i32) * scale,
        k => {
            let len = u32::try_from(k)
                .map_err(|_| Error::InvalidInput(format!("k = {k} too large")))?;
            scale * length_weight(table, len, |g| phi.powi(1 - g as i32))?
        }
    })
}

/// One row of the limiting distribution of `f - 2m`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Fm2mRow {
    pub k: i64,
    pub probability: f64,
}

/// [`fm2m_limit`] over `k_min..=k_max`.
pub fn fm2m_limit_table(
    k_min: i64,
    k_max: i64,
    table: &StressedCountTable,
    s_estimate: f64,
) -> Result<Vec<Fm2mRow>> {
    if k_min > k_max {
        return Err(Error::InvalidInput(format!("k range [{k_min}, {k_max}] is empty")));
    }
    (k_min..=k_max)
        .map(|k| {
            Ok(Fm2mRow {
                k,
                probability: fm2m_limit(k, table, s_estimate)?,
            })
        })
        .collect()
}
