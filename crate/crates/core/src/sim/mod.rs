//! Agent-based Monte Carlo simulation of the game.
//!
//! Estimation is focal-player based: one agent of the role being measured is
//! planted in a group whose other members are sampled from the mixing rule,
//! the group plays one round, and the focal agent's outcome is recorded. Each
//! round yields two numbers, whether the focal agent kept its endowment and
//! how many members contributed, so one batch of rounds estimates the payoff
//! coefficients for every `(c, b)` at once.
//!
//! Replication `r` draws from its own ChaCha stream keyed by the master seed,
//! and per-round outcomes are accumulated as integer moments. Results are
//! therefore bit-identical for any number of worker threads.

mod estimate;
mod group;
mod replicator;
mod rng;
mod round;

pub use estimate::{
    equilibrium_from_estimates, estimate_coefficients, estimate_equilibrium, estimate_payoff,
    simulate_moments, CoefficientEstimate, EquilibriumEstimate, Estimate, Moments, PayoffEstimate,
};
pub use group::{form_group, form_group_assortative, form_group_random, Roster};
pub use replicator::{evolve, replicator_step};
pub use rng::{derive_seed, replication_rng};
pub use round::{
    payoff, play_round, run_contribution, run_signaling, Regime, RoundResult, Signaling,
    SIGNALING_ROUND_CAP,
};
