//! Parameter types shared by the analytic and simulated game.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Type of an agent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Cooperator,
    Defector,
}

impl Role {
    pub fn label(self) -> &'static str {
        match self {
            Role::Cooperator => "C",
            Role::Defector => "D",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Role {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "C" | "c" | "cooperator" => Ok(Role::Cooperator),
            "D" | "d" | "defector" => Ok(Role::Defector),
            other => Err(Error::Parse(format!("unknown role `{other}`"))),
        }
    }
}

/// How a signaling round with several high signals is resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelVariant {
    /// Every high signaler becomes a leader; each cooperator then contributes
    /// with probability `H_n(x)` for `x` leaders.
    MultiLeader,
    /// Signaling repeats until zero or one cooperator signals high.
    MarkRetry,
    /// A single round; anything but exactly one leader means nobody contributes.
    MarkNoMemory,
    /// No leader only if the first round is all-low; otherwise signaling
    /// repeats until exactly one leader emerges.
    MarkWithMemory,
}

impl ModelVariant {
    pub const ALL: [ModelVariant; 4] = [
        ModelVariant::MultiLeader,
        ModelVariant::MarkRetry,
        ModelVariant::MarkNoMemory,
        ModelVariant::MarkWithMemory,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ModelVariant::MultiLeader => "multi",
            ModelVariant::MarkRetry => "retry",
            ModelVariant::MarkNoMemory => "nomem",
            ModelVariant::MarkWithMemory => "withmem",
        }
    }
}

impl fmt::Display for ModelVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for ModelVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "multi" => Ok(ModelVariant::MultiLeader),
            "retry" => Ok(ModelVariant::MarkRetry),
            "nomem" => Ok(ModelVariant::MarkNoMemory),
            "withmem" => Ok(ModelVariant::MarkWithMemory),
            other => Err(Error::Parse(format!(
                "unknown variant `{other}` (expected multi, retry, nomem or withmem)"
            ))),
        }
    }
}

/// Group size, cooperator fraction and assortativity: everything that fixes
/// the distribution of group compositions, without costs or benefits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Population {
    n: usize,
    fc: f64,
    tau: f64,
}

impl Population {
    pub fn new(n: usize, fc: f64, tau: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid(format!(
                "group size must be at least 2, got {n}"
            )));
        }
        if !(0.0..=1.0).contains(&fc) {
            return Err(Error::invalid(format!("f_c must lie in [0, 1], got {fc}")));
        }
        if !(0.0..=1.0).contains(&tau) {
            return Err(Error::invalid(format!("tau must lie in [0, 1], got {tau}")));
        }
        Ok(Population { n, fc, tau })
    }

    /// Random mixing (`tau = 0`).
    pub fn random(n: usize, fc: f64) -> Result<Self> {
        Population::new(n, fc, 0.0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn fc(&self) -> f64 {
        self.fc
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn with_fc(&self, fc: f64) -> Result<Self> {
        Population::new(self.n, fc, self.tau)
    }

    pub fn is_random_mixing(&self) -> bool {
        self.tau == 0.0
    }
}

/// Full parameter set of one game: population plus cost `c` and benefit `b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GameParams {
    pub population: Population,
    cost: f64,
    benefit: f64,
}

impl GameParams {
    pub fn new(n: usize, fc: f64, tau: f64, cost: f64, benefit: f64) -> Result<Self> {
        GameParams::from_population(Population::new(n, fc, tau)?, cost, benefit)
    }

    pub fn from_population(population: Population, cost: f64, benefit: f64) -> Result<Self> {
        if !(cost > 0.0 && cost.is_finite()) {
            return Err(Error::invalid(format!(
                "cost c must be positive, got {cost}"
            )));
        }
        if !(benefit > 0.0 && benefit.is_finite()) {
            return Err(Error::invalid(format!(
                "benefit b must be positive, got {benefit}"
            )));
        }
        Ok(GameParams {
            population,
            cost,
            benefit,
        })
    }

    pub fn n(&self) -> usize {
        self.population.n
    }

    pub fn cost(&self) -> f64 {
        self.cost
    }

    pub fn benefit(&self) -> f64 {
        self.benefit
    }
}
