//! A generalized status-hierarchy cooperation game.
//!
//! Status cooperators signal for leadership, a two-level hierarchy forms from
//! the signals, and each cooperator contributes with a probability given by
//! the hierarchicalness of that structure. Defectors never signal and never
//! contribute. The crate provides:
//!
//! * [`hierarchy`]: local and general reaching centrality on directed graphs
//!   and the closed-form two-level hierarchicalness `H_n(x)`.
//! * [`analytic`]: exact expected payoffs `W(C)`, `W(D)` for the multi-leader
//!   game and three single-leader baselines, under random or assortative
//!   mixing, plus equilibrium and stability-region solvers.
//! * [`sim`]: a seeded, thread-count-independent Monte Carlo simulator of the
//!   same game that estimates payoffs and their linear coefficients.
//! * [`experiments`]: parameter sweeps, the simulation-vs-analytics
//!   validation harness and figure dataset presets.

pub mod analytic;
pub mod binomial;
mod error;
pub mod experiments;
pub mod game;
pub mod hierarchy;
pub mod sim;

pub use error::{Error, Result};
pub use game::{GameParams, ModelVariant, Population, Role};
