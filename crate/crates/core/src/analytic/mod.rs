//! Exact expected one-round payoffs.
//!
//! Every expected payoff in the game is linear in the cost `c` and benefit
//! `b`: `W = a * c + bcoef * b`. The coefficients split into
//!
//! 1. a distribution over the number `i` of cooperators among the focal
//!    player's `n - 1` group mates ([`composition_weights`]), and
//! 2. the coefficients conditional on the group holding `m` cooperators in
//!    total ([`conditional_coefficients`]), which is where the variants differ.
//!
//! The equilibrium `c/b` and the stability region then follow in closed form
//! from the coefficient pairs, with no root finding.

pub mod explicit;

use crate::binomial::{binomial_coefficient, pmf_unchecked};
use crate::hierarchy::hierarchicalness;
use crate::{Error, GameParams, ModelVariant, Population, Result, Role};

/// Denominators below this are treated as "payoffs never cross".
pub const DEGENERATE_TOLERANCE: f64 = 1e-12;

/// Coefficients of an expected payoff `a * c + bcoef * b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PayoffCoefficients {
    pub a: f64,
    pub bcoef: f64,
}

impl PayoffCoefficients {
    pub fn evaluate(&self, cost: f64, benefit: f64) -> f64 {
        self.a * cost + self.bcoef * benefit
    }
}

/// Range of `c/b` over which full cooperation resists invasion while the
/// game is still a social dilemma.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StabilityRegion {
    pub lower: f64,
    pub upper: f64,
}

/// `P(i)` for `i = 0..n-1`, the number of cooperators among the focal
/// player's group mates under random mixing.
pub fn random_mixing_weights(n: usize, fc: f64) -> Vec<f64> {
    (0..n).map(|i| pmf_unchecked(i, n - 1, fc)).collect()
}

/// Composition weights under assortative mixing.
///
/// The first member of a group is drawn at the population frequency; each
/// later member copies the first member's type with probability `tau` and is
/// otherwise drawn at the population frequency. The focal player sits at a
/// uniformly random position and keeps its own type, so the weights split
/// into "focal is first", "another cooperator is first" and "a defector is
/// first". With `tau = 0` they reduce to the binomial weights.
pub fn assortative_weights(n: usize, fc: f64, tau: f64, role: Role) -> Vec<f64> {
    let nf = n as f64;
    // Probability that a non-first member is a cooperator, given the type of
    // the first member, and the complements.
    let after_c = tau + (1.0 - tau) * fc;
    let after_c_not = (1.0 - tau) * (1.0 - fc);
    let after_d = (1.0 - tau) * fc;
    let after_d_not = tau + (1.0 - tau) * (1.0 - fc);

    (0..n)
        .map(|i| {
            let fi = i as f64;
            let choose = binomial_coefficient(n - 1, i);
            // Terms whose leading factor vanishes are skipped outright: their
            // powers can have exponent -1.
            let first_coop = if i > 0 {
                (fi / nf)
                    * fc
                    * choose
                    * after_c.powi(i as i32 - 1)
                    * after_c_not.powi((n - i - 1) as i32)
            } else {
                0.0
            };
            let first_defector = if n - i - 1 > 0 {
                ((nf - fi - 1.0) / nf)
                    * (1.0 - fc)
                    * choose
                    * after_d.powi(i as i32)
                    * after_d_not.powi((n - i - 2) as i32)
            } else {
                0.0
            };
            let focal_first = match role {
                Role::Cooperator => {
                    choose * after_c.powi(i as i32) * after_c_not.powi((n - i - 1) as i32)
                }
                Role::Defector => {
                    choose * after_d.powi(i as i32) * after_d_not.powi((n - i - 1) as i32)
                }
            } / nf;
            focal_first + first_coop + first_defector
        })
        .collect()
}

/// Composition weights for the focal player of `role`, dispatching on the
/// mixing rule.
pub fn composition_weights(population: &Population, role: Role) -> Vec<f64> {
    if population.is_random_mixing() {
        random_mixing_weights(population.n(), population.fc())
    } else {
        assortative_weights(population.n(), population.fc(), population.tau(), role)
    }
}

/// Probability that a signaling round among `m` cooperators ends with exactly
/// one leader, under the variant's resolution rule.
fn single_leader_probability(n: usize, m: usize, variant: ModelVariant) -> f64 {
    let low = (n as f64 - 1.0) / n as f64;
    let none = low.powi(m as i32);
    let one = if m == 0 {
        0.0
    } else {
        m as f64 / n as f64 * low.powi(m as i32 - 1)
    };
    match variant {
        ModelVariant::MarkNoMemory => one,
        // Resampling until 0 or 1 highs leaves the terminal outcome distributed
        // as a single round conditioned on {0, 1}.
        ModelVariant::MarkRetry => one / (one + none),
        ModelVariant::MarkWithMemory => 1.0 - none,
        ModelVariant::MultiLeader => unreachable!("multi-leader groups have no single-leader rule"),
    }
}

/// Coefficients for the focal player conditional on the group holding
/// `cooperators` status cooperators in total (the focal one included when
/// `role` is [`Role::Cooperator`]).
pub fn conditional_coefficients(
    n: usize,
    cooperators: usize,
    variant: ModelVariant,
    role: Role,
) -> PayoffCoefficients {
    debug_assert!(cooperators <= n);
    let nf = n as f64;
    let m = cooperators;
    let (keep, share) = match variant {
        ModelVariant::MultiLeader => {
            let signal = 1.0 / nf;
            let mut keep = 0.0;
            let mut share = 0.0;
            for leaders in 0..=m {
                let p_leaders = pmf_unchecked(leaders, m, signal);
                let h = hierarchicalness(n, leaders);
                keep += p_leaders * (1.0 - h);
                let expected_share: f64 = (0..=m)
                    .map(|k| pmf_unchecked(k, m, h) * (k as f64 / nf))
                    .sum();
                share += p_leaders * expected_share;
            }
            (keep, share)
        }
        _ => {
            let p = single_leader_probability(n, m, variant);
            (1.0 - p, p * m as f64 / nf)
        }
    };
    match role {
        Role::Cooperator => PayoffCoefficients {
            a: keep,
            bcoef: share,
        },
        Role::Defector => PayoffCoefficients {
            a: 1.0,
            bcoef: share,
        },
    }
}

/// `(a, bcoef)` of `W(C)` or `W(D)` for the given population and variant.
pub fn payoff_coefficients(
    population: &Population,
    variant: ModelVariant,
    role: Role,
) -> PayoffCoefficients {
    let n = population.n();
    let weights = composition_weights(population, role);
    let mut a = 0.0;
    let mut bcoef = 0.0;
    for (i, w) in weights.into_iter().enumerate() {
        if w == 0.0 {
            continue;
        }
        let cooperators = match role {
            Role::Cooperator => i + 1,
            Role::Defector => i,
        };
        let cond = conditional_coefficients(n, cooperators, variant, role);
        a += w * cond.a;
        bcoef += w * cond.bcoef;
    }
    if role == Role::Defector {
        // A defector always keeps its endowment.
        a = 1.0;
    }
    PayoffCoefficients { a, bcoef }
}

/// Expected payoff of a focal status cooperator.
pub fn wc(params: &GameParams, variant: ModelVariant) -> f64 {
    payoff_coefficients(&params.population, variant, Role::Cooperator)
        .evaluate(params.cost(), params.benefit())
}

/// Expected payoff of a focal defector.
pub fn wd(params: &GameParams, variant: ModelVariant) -> f64 {
    payoff_coefficients(&params.population, variant, Role::Defector)
        .evaluate(params.cost(), params.benefit())
}

/// `c/b` solving `a_C c + b_C b = c + b_D b` given both coefficient pairs.
pub fn crossing_ratio(coop: PayoffCoefficients, defector: PayoffCoefficients) -> Option<f64> {
    let denom = defector.a - coop.a;
    if denom.abs() < DEGENERATE_TOLERANCE {
        None
    } else {
        Some((coop.bcoef - defector.bcoef) / denom)
    }
}

/// The internal equilibrium: the `c/b` at which `W(C) = W(D)`. `None` when
/// the cooperator's payoff is parallel to the defector's.
pub fn equilibrium_cb(population: &Population, variant: ModelVariant) -> Option<f64> {
    crossing_ratio(
        payoff_coefficients(population, variant, Role::Cooperator),
        payoff_coefficients(population, variant, Role::Defector),
    )
}

/// Lower bound `1/n`; upper bound from a single defector invading a group of
/// cooperators: `W(C)` at `f_c = 1` against `W(D)` at `f_c = (n-1)/n`.
pub fn stability_region(n: usize, tau: f64, variant: ModelVariant) -> Result<StabilityRegion> {
    let resident = Population::new(n, 1.0, tau)?;
    let invaded = Population::new(n, (n as f64 - 1.0) / n as f64, tau)?;
    let coop = payoff_coefficients(&resident, variant, Role::Cooperator);
    let defector = payoff_coefficients(&invaded, variant, Role::Defector);
    let upper = crossing_ratio(coop, defector).ok_or_else(|| {
        Error::invalid(format!(
            "stability upper bound undefined for n = {n}, tau = {tau}, {variant}"
        ))
    })?;
    Ok(StabilityRegion {
        lower: 1.0 / n as f64,
        upper,
    })
}
