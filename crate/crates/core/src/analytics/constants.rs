use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Growth constants bracketing the exponential rates of `s_g` and `n̂_g`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthConstants {
    /// Positive zero of `x^6 - x^3 - 2x^2 - 2x - 1` (≈ 1.51519).
    pub r151: f64,
    /// Positive zero of `x^10 - x^6 - 2x^5 - 2x^4 - 4x^3 - 6x^2 - 4x - 1` (≈ 1.54930).
    pub r154: f64,
    pub phi: f64,
    /// `1 / (r151^-1 + r151^-2 - 1)` (≈ 10.465), the threshold for `n̂_g / s_g`.
    pub ratio_reference: f64,
}

const MAX_ITERATIONS: u32 = 60;

/// Bisection on `[lo, hi]` until the bracket is narrower than `tolerance` or
/// the iteration budget is spent. The endpoints must bracket a sign change.
pub fn bisect<F>(f: F, mut lo: f64, mut hi: f64, tolerance: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let (mut f_lo, f_hi) = (f(lo), f(hi));
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::Numerical(format!(
            "[{lo}, {hi}] does not bracket a root ({f_lo}, {f_hi})"
        )));
    }
    for _ in 0..MAX_ITERATIONS {
        if hi - lo <= tolerance {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Horner evaluation, coefficients from the highest degree down.
fn poly(coefficients: &[f64], x: f64) -> f64 {
    coefficients.iter().fold(0.0, |acc, &c| acc * x + c)
}

fn small_rate_direct(x: f64) -> f64 {
    poly(&[1.0, 0.0, 0.0, -1.0, -2.0, -2.0, -1.0], x)
}

/// `y^3 (y + 1)(y^2 + y + 1) - 1` at `y = 1/x`.
fn small_rate_reciprocal(x: f64) -> f64 {
    let y = x.recip();
    y.powi(3) * (y + 1.0) * (y * y + y + 1.0) - 1.0
}

fn large_rate_direct(x: f64) -> f64 {
    poly(&[1.0, 0.0, 0.0, 0.0, -1.0, -2.0, -2.0, -4.0, -6.0, -4.0, -1.0], x)
}

/// `y^4 (y + 1)^2 (y^4 + 2y^3 + y^2 + 1) - 1` at `y = 1/x`.
fn large_rate_reciprocal(x: f64) -> f64 {
    let y = x.recip();
    y.powi(4) * (y + 1.0).powi(2) * (y.powi(4) + 2.0 * y.powi(3) + y * y + 1.0) - 1.0
}

/// Solves both polynomial forms of each constant on `[1, 2]` and requires
/// them to agree within `10 * tolerance`.
pub fn solve_constants(tolerance: f64) -> Result<GrowthConstants> {
    if !(tolerance > 0.0 && tolerance.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    let agree = |name: &str, a: f64, b: f64| -> Result<f64> {
        if (a - b).abs() > 10.0 * tolerance {
            return Err(Error::Numerical(format!(
                "the two forms of {name} disagree: {a} vs {b}"
            )));
        }
        Ok(0.5 * (a + b))
    };
    let r151 = agree(
        "r151",
        bisect(small_rate_direct, 1.0, 2.0, tolerance)?,
        bisect(small_rate_reciprocal, 1.0, 2.0, tolerance)?,
    )?;
    let r154 = agree(
        "r154",
        bisect(large_rate_direct, 1.0, 2.0, tolerance)?,
        bisect(large_rate_reciprocal, 1.0, 2.0, tolerance)?,
    )?;
    Ok(GrowthConstants {
        r151,
        r154,
        phi: super::phi(),
        ratio_reference: (r151.recip() + r151.powi(-2) - 1.0).recip(),
    })
}
