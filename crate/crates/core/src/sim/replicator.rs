//! Between-generation update of the cooperator fraction.
//!
//! The game only fixes one-round payoffs; this module supplies the standard
//! discrete payoff-proportional (replicator) map so that populations can be
//! iterated. It is a modelling choice layered on top of the payoffs.

use crate::analytic::payoff_coefficients;
use crate::{Error, ModelVariant, Population, Result, Role};

/// `f' = f W(C) / (f W(C) + (1 - f) W(D))`. Payoffs must be positive.
pub fn replicator_step(fc: f64, wc: f64, wd: f64) -> f64 {
    debug_assert!(wc > 0.0 && wd > 0.0);
    let mean = fc * wc + (1.0 - fc) * wd;
    fc * wc / mean
}

/// Iterates the replicator map with analytic payoffs at `b = 1`, `c = cb`.
/// Returns the trajectory `f_0, f_1, ..., f_generations`.
pub fn evolve(
    n: usize,
    tau: f64,
    variant: ModelVariant,
    cb: f64,
    f0: f64,
    generations: usize,
) -> Result<Vec<f64>> {
    if !(cb > 0.0 && cb.is_finite()) {
        return Err(Error::invalid(format!("c/b must be positive, got {cb}")));
    }
    let mut fc = Population::new(n, f0, tau)?.fc();
    let mut trajectory = Vec::with_capacity(generations + 1);
    trajectory.push(fc);
    for _ in 0..generations {
        let pop = Population::new(n, fc, tau)?;
        let wc = payoff_coefficients(&pop, variant, Role::Cooperator).evaluate(cb, 1.0);
        let wd = payoff_coefficients(&pop, variant, Role::Defector).evaluate(cb, 1.0);
        // Rounding can push the ratio a hair outside [0, 1].
        fc = replicator_step(fc, wc, wd).clamp(0.0, 1.0);
        trajectory.push(fc);
    }
    Ok(trajectory)
}
