//! Binomial probabilities.
//!
//! Small trial counts use the exact product form; above
//! [`LOG_SPACE_THRESHOLD`] trials the mass is assembled in log space so that
//! neither the coefficient nor the powers overflow or underflow prematurely.

use statrs::function::gamma::ln_gamma;

use crate::{Error, Result};

pub const LOG_SPACE_THRESHOLD: usize = 120;

/// `C(m, k) p^k (1 - p)^(m - k)`.
pub fn binomial_pmf(k: usize, m: usize, p: f64) -> Result<f64> {
    if k > m {
        return Err(Error::invalid(format!("k = {k} exceeds m = {m}")));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::invalid(format!(
            "probability must lie in [0, 1], got {p}"
        )));
    }
    Ok(pmf_unchecked(k, m, p))
}

/// The full row `pmf(0..=m; m, p)`.
pub fn binomial_row(m: usize, p: f64) -> Result<Vec<f64>> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::invalid(format!(
            "probability must lie in [0, 1], got {p}"
        )));
    }
    Ok((0..=m).map(|k| pmf_unchecked(k, m, p)).collect())
}

pub(crate) fn pmf_unchecked(k: usize, m: usize, p: f64) -> f64 {
    debug_assert!(k <= m && (0.0..=1.0).contains(&p));
    let q = 1.0 - p;
    // Degenerate endpoints, with 0^0 = 1.
    if p == 0.0 {
        return if k == 0 { 1.0 } else { 0.0 };
    }
    if q == 0.0 {
        return if k == m { 1.0 } else { 0.0 };
    }
    if m <= LOG_SPACE_THRESHOLD {
        binomial_coefficient(m, k) * p.powi(k as i32) * q.powi((m - k) as i32)
    } else {
        (ln_binomial_coefficient(m, k) + k as f64 * p.ln() + (m - k) as f64 * q.ln()).exp()
    }
}

/// `C(m, k)` as a float, by the multiplicative recurrence. Every partial
/// product is itself a binomial coefficient, so the result is exact whenever
/// it is below 2^53.
pub fn binomial_coefficient(m: usize, k: usize) -> f64 {
    if k > m {
        return 0.0;
    }
    let k = k.min(m - k);
    let mut acc = 1.0_f64;
    for t in 0..k {
        acc = acc * (m - t) as f64 / (t + 1) as f64;
    }
    acc
}

fn ln_binomial_coefficient(m: usize, k: usize) -> f64 {
    ln_gamma(m as f64 + 1.0) - ln_gamma(k as f64 + 1.0) - ln_gamma((m - k) as f64 + 1.0)
}
