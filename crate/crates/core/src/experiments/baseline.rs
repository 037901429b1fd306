//! Historical baseline: the original closed forms of the single-leader game,
//! in which a hierarchy fails only when every cooperator signals low on the
//! first round. Used for the appendix comparison datasets only.

use crate::binomial::binomial_coefficient;

fn composition(n: usize, fc: f64, i: usize) -> f64 {
    binomial_coefficient(n - 1, i) * fc.powi(i as i32) * (1.0 - fc).powi((n - 1 - i) as i32)
}

/// Original `W(C)`.
pub fn original_wc(n: usize, fc: f64, c: f64, b: f64) -> f64 {
    let low = (n as f64 - 1.0) / n as f64;
    (0..n)
        .map(|i| {
            let all_low = low.powi(i as i32 + 1);
            composition(n, fc, i)
                * ((1.0 - all_low) * ((i + 1) as f64 * b / n as f64) + all_low * c)
        })
        .sum()
}

/// Original `W(D)`.
pub fn original_wd(n: usize, fc: f64, c: f64, b: f64) -> f64 {
    let low = (n as f64 - 1.0) / n as f64;
    c + (0..n)
        .map(|i| {
            let all_low = low.powi(i as i32);
            composition(n, fc, i) * (1.0 - all_low) * (i as f64 * b / n as f64)
        })
        .sum::<f64>()
}
