use rand::Rng;

use super::group::{self, Roster};
use crate::hierarchy::hierarchicalness;
use crate::{Error, GameParams, ModelVariant, Population, Result, Role};

/// Upper bound on resampled signaling rounds before a round is declared
/// stuck.
pub const SIGNALING_ROUND_CAP: u32 = 10_000;

/// How the signaling phase left the group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// Multi-leader rule: every cooperator contributes with probability
    /// `H_n(leaders)`.
    Graded,
    /// Exactly one leader: every cooperator contributes.
    SingleLeader,
    /// No usable hierarchy: nobody contributes.
    NoLeader,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signaling {
    pub leaders: usize,
    pub rounds: u32,
    pub regime: Regime,
}

/// Per-round record for the focal member.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoundResult {
    /// Cooperators in the group, the focal one included when it cooperates.
    pub cooperator_count: usize,
    pub leader_count: usize,
    pub contributor_count: usize,
    pub focal_payoff: f64,
    pub focal_contributed: bool,
}

fn signal_round<R: Rng + ?Sized>(cooperators: usize, n: usize, rng: &mut R) -> usize {
    let p_high = 1.0 / n as f64;
    (0..cooperators)
        .filter(|_| rng.random::<f64>() < p_high)
        .count()
}

fn single_leader_regime(leaders: usize) -> Regime {
    if leaders == 1 {
        Regime::SingleLeader
    } else {
        Regime::NoLeader
    }
}

/// Runs preplay signaling among `cooperators` status cooperators; each
/// signals high with probability `1/n` per round.
pub fn run_signaling<R: Rng + ?Sized>(
    cooperators: usize,
    n: usize,
    variant: ModelVariant,
    rng: &mut R,
) -> Result<Signaling> {
    let mut leaders = signal_round(cooperators, n, rng);
    let mut rounds = 1;
    let regime = match variant {
        ModelVariant::MultiLeader => Regime::Graded,
        ModelVariant::MarkNoMemory => single_leader_regime(leaders),
        ModelVariant::MarkRetry => {
            while leaders > 1 {
                if rounds >= SIGNALING_ROUND_CAP {
                    return Err(Error::SignalingCapExceeded(SIGNALING_ROUND_CAP));
                }
                leaders = signal_round(cooperators, n, rng);
                rounds += 1;
            }
            single_leader_regime(leaders)
        }
        ModelVariant::MarkWithMemory => {
            if leaders == 0 {
                Regime::NoLeader
            } else {
                while leaders != 1 {
                    if rounds >= SIGNALING_ROUND_CAP {
                        return Err(Error::SignalingCapExceeded(SIGNALING_ROUND_CAP));
                    }
                    leaders = signal_round(cooperators, n, rng);
                    rounds += 1;
                }
                Regime::SingleLeader
            }
        }
    };
    Ok(Signaling {
        leaders,
        rounds,
        regime,
    })
}

fn contribution_probability(n: usize, signaling: &Signaling) -> f64 {
    match signaling.regime {
        Regime::Graded => hierarchicalness(n, signaling.leaders),
        Regime::SingleLeader => 1.0,
        Regime::NoLeader => 0.0,
    }
}

/// Contribution decision of each of the `cooperators` status cooperators.
/// Under the graded regime the draws are independent given the leader count.
pub fn run_contribution<R: Rng + ?Sized>(
    cooperators: usize,
    signaling: &Signaling,
    n: usize,
    rng: &mut R,
) -> Vec<bool> {
    let p = contribution_probability(n, signaling);
    (0..cooperators).map(|_| bernoulli(p, rng)).collect()
}

#[inline]
fn bernoulli<R: Rng + ?Sized>(p: f64, rng: &mut R) -> bool {
    // Skip the draw for certain outcomes so that single-leader variants do not
    // consume randomness they do not need.
    if p >= 1.0 {
        true
    } else if p <= 0.0 {
        false
    } else {
        rng.random::<f64>() < p
    }
}

/// Payoff of every member: each contributor's `b` is split over all `n`
/// members and everyone who did not contribute keeps `c`.
pub fn payoff(roster: &Roster, contributed: &[bool], cost: f64, benefit: f64) -> Vec<f64> {
    debug_assert_eq!(roster.n(), contributed.len());
    let n = roster.n() as f64;
    let k = contributed.iter().filter(|&&c| c).count();
    let share = k as f64 * benefit / n;
    contributed
        .iter()
        .map(|&c| if c { share } else { cost + share })
        .collect()
}

/// Counts from one round, independent of `c` and `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct RoundCounts {
    pub cooperators: usize,
    pub leaders: usize,
    pub contributors: usize,
    pub focal_contributed: bool,
}

/// Reusable buffers for [`play_counts`].
#[derive(Debug, Default)]
pub(crate) struct Scratch {
    members: Vec<Role>,
}

pub(crate) fn play_counts<R: Rng + ?Sized>(
    population: &Population,
    variant: ModelVariant,
    focal_role: Role,
    rng: &mut R,
    scratch: &mut Scratch,
) -> Result<RoundCounts> {
    let n = population.n();
    let focal = group::fill(&mut scratch.members, population, focal_role, rng);
    let cooperators = scratch
        .members
        .iter()
        .filter(|&&r| r == Role::Cooperator)
        .count();
    let signaling = run_signaling(cooperators, n, variant, rng)?;
    let p = contribution_probability(n, &signaling);

    // Draws happen in roster order, one per cooperator.
    let mut contributors = 0;
    let mut focal_contributed = false;
    for (slot, &role) in scratch.members.iter().enumerate() {
        if role == Role::Cooperator && bernoulli(p, rng) {
            contributors += 1;
            if slot == focal {
                focal_contributed = true;
            }
        }
    }
    Ok(RoundCounts {
        cooperators,
        leaders: signaling.leaders,
        contributors,
        focal_contributed,
    })
}

/// Plays one full round for a focal member of `focal_role`.
pub fn play_round<R: Rng + ?Sized>(
    params: &GameParams,
    variant: ModelVariant,
    focal_role: Role,
    rng: &mut R,
) -> Result<RoundResult> {
    let n = params.n();
    let roster = group::form_group(&params.population, focal_role, rng);
    let cooperators = roster.cooperator_count();
    let signaling = run_signaling(cooperators, n, variant, rng)?;
    let decisions = run_contribution(cooperators, &signaling, n, rng);

    let mut decisions = decisions.into_iter();
    let contributed: Vec<bool> = roster
        .members
        .iter()
        .map(|&r| r == Role::Cooperator && decisions.next().unwrap_or(false))
        .collect();
    let payoffs = payoff(&roster, &contributed, params.cost(), params.benefit());
    Ok(RoundResult {
        cooperator_count: cooperators,
        leader_count: signaling.leaders,
        contributor_count: contributed.iter().filter(|&&c| c).count(),
        focal_payoff: payoffs[roster.focal],
        focal_contributed: contributed[roster.focal],
    })
}
