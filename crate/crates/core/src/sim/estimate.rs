use rayon::prelude::*;

use super::rng::replication_rng;
use super::round::{play_counts, Scratch};
use crate::analytic::PayoffCoefficients;
use crate::{Error, GameParams, ModelVariant, Population, Result, Role};

/// Replications handled by one parallel task. Fixed, so the split of work
/// never depends on the pool size.
const BLOCK: u64 = 2048;

/// Sample mean with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub mean: f64,
    pub std_error: f64,
    pub replications: u64,
    pub master_seed: u64,
}

/// Estimated payoff coefficients: `a_hat` is the fraction of rounds in which
/// the focal member kept its endowment, `b_hat` the mean of `k / n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientEstimate {
    pub a_hat: f64,
    pub b_hat: f64,
    pub a_se: f64,
    pub b_se: f64,
    /// Covariance of the two sample means.
    pub ab_cov: f64,
}

impl CoefficientEstimate {
    pub fn payoff(&self, cost: f64, benefit: f64) -> f64 {
        self.a_hat * cost + self.b_hat * benefit
    }

    pub fn as_coefficients(&self) -> PayoffCoefficients {
        PayoffCoefficients {
            a: self.a_hat,
            bcoef: self.b_hat,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PayoffEstimate {
    pub payoff: Estimate,
    pub coefficients: CoefficientEstimate,
}

/// Integer sufficient statistics of a batch of rounds. Merging is exact, so
/// any reduction order gives the same totals.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Moments {
    pub rounds: u64,
    /// Rounds in which the focal member did not contribute.
    pub kept: u64,
    pub contributors: u64,
    pub contributors_sq: u64,
    /// Sum over rounds of `kept * contributors`.
    pub kept_contributors: u64,
}

impl Moments {
    pub fn record(&mut self, kept: bool, contributors: usize) {
        let k = contributors as u64;
        self.rounds += 1;
        self.contributors += k;
        self.contributors_sq += k * k;
        if kept {
            self.kept += 1;
            self.kept_contributors += k;
        }
    }

    pub fn merge(self, other: Moments) -> Moments {
        Moments {
            rounds: self.rounds + other.rounds,
            kept: self.kept + other.kept,
            contributors: self.contributors + other.contributors,
            contributors_sq: self.contributors_sq + other.contributors_sq,
            kept_contributors: self.kept_contributors + other.kept_contributors,
        }
    }

    /// Coefficient means, their standard errors and covariance for group
    /// size `n`.
    pub fn coefficients(&self, n: usize) -> CoefficientEstimate {
        let reps = self.rounds as f64;
        let nf = n as f64;
        let a_hat = self.kept as f64 / reps;
        let k_mean = self.contributors as f64 / reps;
        let b_hat = k_mean / nf;
        if self.rounds < 2 {
            return CoefficientEstimate {
                a_hat,
                b_hat,
                a_se: 0.0,
                b_se: 0.0,
                ab_cov: 0.0,
            };
        }
        let bessel = reps / (reps - 1.0);
        let var_a = (a_hat - a_hat * a_hat).max(0.0) * bessel;
        let var_k = (self.contributors_sq as f64 / reps - k_mean * k_mean).max(0.0) * bessel;
        let cov_ak = (self.kept_contributors as f64 / reps - a_hat * k_mean) * bessel;
        CoefficientEstimate {
            a_hat,
            b_hat,
            a_se: (var_a / reps).sqrt(),
            b_se: (var_k / reps).sqrt() / nf,
            ab_cov: cov_ak / nf / reps,
        }
    }
}

fn role_domain(role: Role) -> u64 {
    match role {
        Role::Cooperator => 1,
        Role::Defector => 2,
    }
}

/// Plays `replications` independent focal rounds, in parallel on the current
/// rayon pool, and returns their integer moments.
pub fn simulate_moments(
    population: &Population,
    variant: ModelVariant,
    role: Role,
    replications: u64,
    master_seed: u64,
) -> Result<Moments> {
    if replications == 0 {
        return Err(Error::invalid("replications must be at least 1"));
    }
    let domain = role_domain(role);
    let blocks = replications.div_ceil(BLOCK);
    (0..blocks)
        .into_par_iter()
        .map(|block| {
            let mut scratch = Scratch::default();
            let mut moments = Moments::default();
            let end = ((block + 1) * BLOCK).min(replications);
            for rep in block * BLOCK..end {
                let mut rng = replication_rng(master_seed, domain, rep);
                let counts = play_counts(population, variant, role, &mut rng, &mut scratch)?;
                moments.record(!counts.focal_contributed, counts.contributors);
            }
            Ok(moments)
        })
        .try_reduce(Moments::default, |a, b| Ok(a.merge(b)))
}

pub fn estimate_coefficients(
    population: &Population,
    variant: ModelVariant,
    role: Role,
    replications: u64,
    master_seed: u64,
) -> Result<CoefficientEstimate> {
    Ok(
        simulate_moments(population, variant, role, replications, master_seed)?
            .coefficients(population.n()),
    )
}

/// Monte Carlo estimate of the focal member's expected payoff, together with
/// the coefficient estimate from the same rounds.
pub fn estimate_payoff(
    params: &GameParams,
    variant: ModelVariant,
    role: Role,
    replications: u64,
    master_seed: u64,
) -> Result<PayoffEstimate> {
    let coefficients =
        estimate_coefficients(&params.population, variant, role, replications, master_seed)?;
    let (c, b) = (params.cost(), params.benefit());
    let mean = coefficients.payoff(c, b);
    let var_mean = c * c * coefficients.a_se.powi(2)
        + b * b * coefficients.b_se.powi(2)
        + 2.0 * c * b * coefficients.ab_cov;
    Ok(PayoffEstimate {
        payoff: Estimate {
            mean,
            std_error: var_mean.max(0.0).sqrt(),
            replications,
            master_seed,
        },
        coefficients,
    })
}

/// Simulated internal equilibrium with a delta-method standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquilibriumEstimate {
    pub value: f64,
    pub std_error: f64,
    pub cooperator: CoefficientEstimate,
    pub defector: CoefficientEstimate,
}

/// Denominators below this make the simulated equilibrium undefined.
const SIM_DEGENERATE_TOLERANCE: f64 = 1e-9;

/// `(b_C - b_D) / (1 - a_C)` from independent cooperator and defector batches
/// (a defector's `a` is 1 by construction). `Ok(None)` when the denominator
/// is numerically zero.
pub fn estimate_equilibrium(
    population: &Population,
    variant: ModelVariant,
    replications: u64,
    master_seed: u64,
) -> Result<Option<EquilibriumEstimate>> {
    let coop = estimate_coefficients(
        population,
        variant,
        Role::Cooperator,
        replications,
        master_seed,
    )?;
    let defector = estimate_coefficients(
        population,
        variant,
        Role::Defector,
        replications,
        master_seed,
    )?;
    Ok(equilibrium_from_estimates(coop, defector))
}

/// Combines independent cooperator and defector coefficient estimates into an
/// equilibrium estimate.
pub fn equilibrium_from_estimates(
    coop: CoefficientEstimate,
    defector: CoefficientEstimate,
) -> Option<EquilibriumEstimate> {
    let denom = 1.0 - coop.a_hat;
    if denom.abs() < SIM_DEGENERATE_TOLERANCE {
        return None;
    }
    let numer = coop.b_hat - defector.b_hat;
    let value = numer / denom;
    // Var(N/D) ~ [Var N + R^2 Var D - 2 R Cov(N, D)] / D^2, with
    // Cov(N, D) = -Cov(b_C, a_C) since the two batches are independent.
    let var_numer = coop.b_se.powi(2) + defector.b_se.powi(2);
    let var_denom = coop.a_se.powi(2);
    let cov = -coop.ab_cov;
    let var = (var_numer + value * value * var_denom - 2.0 * value * cov) / (denom * denom);
    Some(EquilibriumEstimate {
        value,
        std_error: var.max(0.0).sqrt(),
        cooperator: coop,
        defector,
    })
}
