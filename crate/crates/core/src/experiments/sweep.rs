use std::fs;

use rayon::prelude::*;

use super::config::SweepSpec;
use super::format::{fmt_g12, fmt_opt, CsvTable};
use crate::analytic::{self, PayoffCoefficients};
use crate::sim::{self, derive_seed, CoefficientEstimate};
use crate::{ModelVariant, Population, Result, Role};

pub const SWEEP_SCHEMA: &str = "hiergame-sweep v1";

pub const SWEEP_HEADER: &[&str] = &[
    "variant",
    "n",
    "tau",
    "fc",
    "cb_analytic",
    "cb_sim",
    "cb_se",
    "a_c",
    "b_c",
    "b_d",
    "a_c_sim",
    "b_c_sim",
    "b_d_sim",
    "lower",
    "upper",
];

/// Simulated side of one sweep cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimulatedCell {
    pub cooperator: CoefficientEstimate,
    pub defector: CoefficientEstimate,
    pub cb: Option<f64>,
    pub cb_se: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub variant: ModelVariant,
    pub n: usize,
    pub tau: f64,
    pub fc: f64,
    pub cooperator: PayoffCoefficients,
    pub defector: PayoffCoefficients,
    pub cb_analytic: Option<f64>,
    pub simulated: Option<SimulatedCell>,
    pub lower: f64,
    pub upper: f64,
}

/// Simulates one cell: cooperator and defector batches with the cell's own
/// seed.
pub(crate) fn simulate_cell(
    population: &Population,
    variant: ModelVariant,
    replications: u64,
    seed: u64,
) -> Result<SimulatedCell> {
    let cooperator =
        sim::estimate_coefficients(population, variant, Role::Cooperator, replications, seed)?;
    let defector =
        sim::estimate_coefficients(population, variant, Role::Defector, replications, seed)?;
    let eq = sim::equilibrium_from_estimates(cooperator, defector);
    Ok(SimulatedCell {
        cooperator,
        defector,
        cb: eq.map(|e| e.value),
        cb_se: eq.map(|e| e.std_error),
    })
}

/// Evaluates every grid cell of `spec`. Rows come back in grid order no
/// matter how the cells were scheduled.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    let variant = spec.variant;
    spec.cells()
        .into_par_iter()
        .enumerate()
        .map(|(index, (n, tau, fc))| {
            let population = Population::new(n, fc, tau)?;
            let cooperator = analytic::payoff_coefficients(&population, variant, Role::Cooperator);
            let defector = analytic::payoff_coefficients(&population, variant, Role::Defector);
            let region = analytic::stability_region(n, tau, variant)?;
            let simulated = if spec.simulate {
                let seed = derive_seed(spec.master_seed, index as u64);
                Some(simulate_cell(
                    &population,
                    variant,
                    spec.replications,
                    seed,
                )?)
            } else {
                None
            };
            Ok(SweepRow {
                variant,
                n,
                tau,
                fc,
                cooperator,
                defector,
                cb_analytic: analytic::crossing_ratio(cooperator, defector),
                simulated,
                lower: region.lower,
                upper: region.upper,
            })
        })
        .collect()
}

pub fn sweep_table(rows: &[SweepRow]) -> CsvTable {
    let mut table = CsvTable::new(SWEEP_SCHEMA, SWEEP_HEADER);
    for row in rows {
        let sim = row.simulated.as_ref();
        table.push(vec![
            row.variant.to_string(),
            row.n.to_string(),
            fmt_g12(row.tau),
            fmt_g12(row.fc),
            fmt_opt(row.cb_analytic),
            fmt_opt(sim.and_then(|s| s.cb)),
            fmt_opt(sim.and_then(|s| s.cb_se)),
            fmt_g12(row.cooperator.a),
            fmt_g12(row.cooperator.bcoef),
            fmt_g12(row.defector.bcoef),
            fmt_opt(sim.map(|s| s.cooperator.a_hat)),
            fmt_opt(sim.map(|s| s.cooperator.b_hat)),
            fmt_opt(sim.map(|s| s.defector.b_hat)),
            fmt_g12(row.lower),
            fmt_g12(row.upper),
        ]);
    }
    table
}

/// Runs the sweep and writes it to the spec's output path, if any. Returns
/// the rendered CSV.
pub fn run_sweep_to_file(spec: &SweepSpec) -> Result<String> {
    let rows = run_sweep(spec)?;
    let rendered = sweep_table(&rows).render();
    if let Some(path) = &spec.output {
        fs::write(path, &rendered)?;
    }
    Ok(rendered)
}
