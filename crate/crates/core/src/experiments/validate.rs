//! Simulation-vs-analytics validation harness.
//!
//! Every grid cell contributes three coefficient checks: the cooperator's
//! `a` and `b` coefficients and the defector's `b` coefficient (a defector's
//! `a` is 1 in both the formulas and the simulator, so it carries no
//! information). A check passes when its z-score is within the threshold.

use std::fmt;

use rayon::prelude::*;

use super::config::SweepSpec;
use super::format::{fmt_g12, CsvTable};
use super::sweep::simulate_cell;
use crate::analytic::{self, PayoffCoefficients};
use crate::sim::derive_seed;
use crate::{Error, ModelVariant, Population, Result, Role};

pub const VALIDATION_SCHEMA: &str = "hiergame-validation v1";

pub const VALIDATION_HEADER: &[&str] = &[
    "variant",
    "n",
    "tau",
    "fc",
    "quantity",
    "analytic",
    "simulated",
    "se",
    "z",
    "within",
];

/// Two numbers closer than this count as equal when the standard error is 0.
const EXACT_TOLERANCE: f64 = 1e-12;

/// The coefficient compared in a validation row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    /// `a` coefficient of `W(C)`.
    CooperatorA,
    /// `b` coefficient of `W(C)`.
    CooperatorB,
    /// `b` coefficient of `W(D)`.
    DefectorB,
}

impl Quantity {
    pub fn label(self) -> &'static str {
        match self {
            Quantity::CooperatorA => "a_C",
            Quantity::CooperatorB => "b_C",
            Quantity::DefectorB => "b_D",
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidationRow {
    pub variant: ModelVariant,
    pub n: usize,
    pub tau: f64,
    pub fc: f64,
    pub quantity: Quantity,
    pub analytic: f64,
    pub simulated: f64,
    pub std_error: f64,
    pub z: f64,
    pub within: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub rows: Vec<ValidationRow>,
    pub z_threshold: f64,
    pub min_pass_rate: f64,
}

impl ValidationReport {
    pub fn passed(&self) -> usize {
        self.rows.iter().filter(|r| r.within).count()
    }

    pub fn pass_rate(&self) -> f64 {
        if self.rows.is_empty() {
            return 1.0;
        }
        self.passed() as f64 / self.rows.len() as f64
    }

    pub fn passes(&self) -> bool {
        self.pass_rate() >= self.min_pass_rate
    }

    pub fn table(&self) -> CsvTable {
        let mut table = CsvTable::new(VALIDATION_SCHEMA, VALIDATION_HEADER);
        for r in &self.rows {
            table.push(vec![
                r.variant.to_string(),
                r.n.to_string(),
                fmt_g12(r.tau),
                fmt_g12(r.fc),
                r.quantity.to_string(),
                fmt_g12(r.analytic),
                fmt_g12(r.simulated),
                fmt_g12(r.std_error),
                fmt_g12(r.z),
                r.within.to_string(),
            ]);
        }
        table
    }

    /// One-line human summary, e.g. `PASS 253/255 (99.2%) within |z| <= 3.5`.
    pub fn summary(&self) -> String {
        format!(
            "{} {}/{} ({:.1}%) within |z| <= {}, required {:.1}%",
            if self.passes() { "PASS" } else { "FAIL" },
            self.passed(),
            self.rows.len(),
            100.0 * self.pass_rate(),
            self.z_threshold,
            100.0 * self.min_pass_rate,
        )
    }
}

/// `(sim - analytic) / se`; with a zero standard error the simulation must
/// match exactly.
pub fn z_score(simulated: f64, analytic: f64, std_error: f64) -> f64 {
    let diff = simulated - analytic;
    if std_error > 0.0 {
        diff / std_error
    } else if diff.abs() <= EXACT_TOLERANCE {
        0.0
    } else {
        f64::INFINITY.copysign(diff)
    }
}

/// Validates the spec's cells against the analytic coefficients.
pub fn validate(
    spec: &SweepSpec,
    z_threshold: f64,
    min_pass_rate: f64,
) -> Result<ValidationReport> {
    validate_with(
        spec,
        z_threshold,
        min_pass_rate,
        analytic::payoff_coefficients,
    )
}

/// Like [`validate`], with the analytic side supplied by the caller. Useful to
/// check that the harness notices a wrong formula.
pub fn validate_with<F>(
    spec: &SweepSpec,
    z_threshold: f64,
    min_pass_rate: f64,
    analytic_fn: F,
) -> Result<ValidationReport>
where
    F: Fn(&Population, ModelVariant, Role) -> PayoffCoefficients + Sync,
{
    spec.validate()?;
    if z_threshold.is_nan() || z_threshold <= 0.0 {
        return Err(Error::invalid(format!(
            "z threshold must be positive, got {z_threshold}"
        )));
    }
    if !(0.0..=1.0).contains(&min_pass_rate) {
        return Err(Error::invalid(format!(
            "pass rate {min_pass_rate} outside [0, 1]"
        )));
    }
    let variant = spec.variant;
    let per_cell: Vec<[ValidationRow; 3]> = spec
        .cells()
        .into_par_iter()
        .enumerate()
        .map(|(index, (n, tau, fc))| {
            let population = Population::new(n, fc, tau)?;
            let coop = analytic_fn(&population, variant, Role::Cooperator);
            let defector = analytic_fn(&population, variant, Role::Defector);
            let seed = derive_seed(spec.master_seed, index as u64);
            let sim = simulate_cell(&population, variant, spec.replications, seed)?;
            let row = |quantity, analytic: f64, simulated: f64, std_error: f64| {
                let z = z_score(simulated, analytic, std_error);
                ValidationRow {
                    variant,
                    n,
                    tau,
                    fc,
                    quantity,
                    analytic,
                    simulated,
                    std_error,
                    z,
                    within: z.abs() <= z_threshold,
                }
            };
            Ok([
                row(
                    Quantity::CooperatorA,
                    coop.a,
                    sim.cooperator.a_hat,
                    sim.cooperator.a_se,
                ),
                row(
                    Quantity::CooperatorB,
                    coop.bcoef,
                    sim.cooperator.b_hat,
                    sim.cooperator.b_se,
                ),
                row(
                    Quantity::DefectorB,
                    defector.bcoef,
                    sim.defector.b_hat,
                    sim.defector.b_se,
                ),
            ])
        })
        .collect::<Result<_>>()?;
    Ok(ValidationReport {
        rows: per_cell.into_iter().flatten().collect(),
        z_threshold,
        min_pass_rate,
    })
}
