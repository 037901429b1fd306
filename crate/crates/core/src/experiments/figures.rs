//! Named dataset presets, one CSV per figure.
//!
//! | preset        | schema                                                   |
//! |---------------|----------------------------------------------------------|
//! | fig1, fig2    | `n,x,h`                                                  |
//! | fig3, fig6-8  | `variant,n,tau,fc,cb_analytic,cb_sim,se`                 |
//! | fig4, fig5, 9 | `n,tau,lower,upper_ours,upper_mark`                      |
//! | fig10, fig11  | `model,n,fc,wc_or_wd_sim,analytic_revised,analytic_mark_original` |
//!
//! Every file starts with a `# schema: <name> v<version>` line. Simulated
//! cells draw their seeds from the master seed and the cell's grid index, so
//! the output does not depend on the thread count.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use super::baseline;
use super::config::FcGrid;
use super::format::{fmt_g12, fmt_opt, CsvTable};
use super::sweep::simulate_cell;
use crate::analytic;
use crate::hierarchy::{h_nx, TwoLevelStructure};
use crate::sim::{derive_seed, estimate_coefficients};
use crate::{Error, ModelVariant, Population, Result, Role};

pub const HIERARCHY_SCHEMA: &str = "hiergame-hierarchy v1";
pub const EQUILIBRIUM_SCHEMA: &str = "hiergame-equilibrium v1";
pub const STABILITY_SCHEMA: &str = "hiergame-stability v1";
pub const APPENDIX_SCHEMA: &str = "hiergame-appendix v1";

const HIERARCHY_HEADER: &[&str] = &["n", "x", "h"];
const EQUILIBRIUM_HEADER: &[&str] = &["variant", "n", "tau", "fc", "cb_analytic", "cb_sim", "se"];
const STABILITY_HEADER: &[&str] = &["n", "tau", "lower", "upper_ours", "upper_mark"];
const APPENDIX_HEADER: &[&str] = &[
    "model",
    "n",
    "fc",
    "wc_or_wd_sim",
    "analytic_revised",
    "analytic_mark_original",
];

pub const PRESETS: &[&str] = &[
    "fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9", "fig10", "fig11",
];

/// Cost and benefit of the appendix payoff comparison.
pub const APPENDIX_COST: f64 = 0.2;
pub const APPENDIX_BENEFIT: f64 = 1.0;

/// The `tau` levels of the stability-by-assortment preset.
pub const STABILITY_TAUS: [f64; 6] = [0.0, 0.2, 0.4, 0.6, 0.8, 1.0];

const ASSORTMENT_TAUS: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FigureOptions {
    pub replications: u64,
    pub master_seed: u64,
}

impl Default for FigureOptions {
    fn default() -> Self {
        FigureOptions {
            replications: 100_000,
            master_seed: 0,
        }
    }
}

fn fine_grid() -> Vec<f64> {
    FcGrid::new(19, 0.05, 0.95).expect("valid grid").points()
}

fn coarse_grid() -> Vec<f64> {
    FcGrid::new(17, 0.1, 0.9).expect("valid grid").points()
}

fn hierarchy_table(ns: impl IntoIterator<Item = usize>) -> Result<CsvTable> {
    let mut table = CsvTable::new(HIERARCHY_SCHEMA, HIERARCHY_HEADER);
    for n in ns {
        for x in 0..=n {
            let h = h_nx(TwoLevelStructure::new(n, x)?);
            table.push(vec![n.to_string(), x.to_string(), fmt_g12(h)]);
        }
    }
    Ok(table)
}

/// One equilibrium cell: `(variant, n, tau, fc)`.
type EquilibriumCell = (ModelVariant, usize, f64, f64);

fn equilibrium_table(
    cells: Vec<EquilibriumCell>,
    simulate: bool,
    opts: &FigureOptions,
) -> Result<CsvTable> {
    let rows: Vec<Vec<String>> = cells
        .into_par_iter()
        .enumerate()
        .map(|(index, (variant, n, tau, fc))| {
            let population = Population::new(n, fc, tau)?;
            let cb = analytic::equilibrium_cb(&population, variant);
            let (sim, se) = if simulate {
                let seed = derive_seed(opts.master_seed, index as u64);
                let cell = simulate_cell(&population, variant, opts.replications, seed)?;
                (cell.cb, cell.cb_se)
            } else {
                (None, None)
            };
            Ok(vec![
                variant.to_string(),
                n.to_string(),
                fmt_g12(tau),
                fmt_g12(fc),
                fmt_opt(cb),
                fmt_opt(sim),
                fmt_opt(se),
            ])
        })
        .collect::<Result<_>>()?;
    let mut table = CsvTable::new(EQUILIBRIUM_SCHEMA, EQUILIBRIUM_HEADER);
    rows.into_iter().for_each(|r| table.push(r));
    Ok(table)
}

fn cells(
    variants: &[ModelVariant],
    ns: &[usize],
    taus: &[f64],
    fcs: &[f64],
) -> Vec<EquilibriumCell> {
    let mut out = Vec::new();
    for &variant in variants {
        for &n in ns {
            for &tau in taus {
                for &fc in fcs {
                    out.push((variant, n, tau, fc));
                }
            }
        }
    }
    out
}

fn stability_table(ns: impl IntoIterator<Item = usize> + Clone, taus: &[f64]) -> Result<CsvTable> {
    let mut table = CsvTable::new(STABILITY_SCHEMA, STABILITY_HEADER);
    for &tau in taus {
        for n in ns.clone() {
            let ours = analytic::stability_region(n, tau, ModelVariant::MultiLeader)?;
            let mark = analytic::stability_region(n, tau, ModelVariant::MarkWithMemory)?;
            table.push(vec![
                n.to_string(),
                fmt_g12(tau),
                fmt_g12(ours.lower),
                fmt_g12(ours.upper),
                fmt_g12(mark.upper),
            ]);
        }
    }
    Ok(table)
}

fn appendix_table(role: Role, opts: &FigureOptions) -> Result<CsvTable> {
    let variant = ModelVariant::MarkRetry;
    let (c, b) = (APPENDIX_COST, APPENDIX_BENEFIT);
    let fcs = fine_grid();
    let grid: Vec<(usize, f64)> = (2..=10)
        .flat_map(|n| fcs.iter().map(move |&fc| (n, fc)))
        .collect();
    let rows: Vec<Vec<String>> = grid
        .into_par_iter()
        .enumerate()
        .map(|(index, (n, fc))| {
            let population = Population::random(n, fc)?;
            let seed = derive_seed(opts.master_seed, index as u64);
            let sim = estimate_coefficients(&population, variant, role, opts.replications, seed)?;
            let revised = analytic::payoff_coefficients(&population, variant, role).evaluate(c, b);
            let original = match role {
                Role::Cooperator => baseline::original_wc(n, fc, c, b),
                Role::Defector => baseline::original_wd(n, fc, c, b),
            };
            Ok(vec![
                variant.to_string(),
                n.to_string(),
                fmt_g12(fc),
                fmt_g12(sim.payoff(c, b)),
                fmt_g12(revised),
                fmt_g12(original),
            ])
        })
        .collect::<Result<_>>()?;
    let mut table = CsvTable::new(APPENDIX_SCHEMA, APPENDIX_HEADER);
    rows.into_iter().for_each(|r| table.push(r));
    Ok(table)
}

/// Builds the dataset of one preset.
pub fn build_preset(name: &str, opts: &FigureOptions) -> Result<CsvTable> {
    use ModelVariant::*;
    if opts.replications == 0 {
        return Err(Error::invalid("replications must be at least 1"));
    }
    match name {
        "fig1" => hierarchy_table([5]),
        "fig2" => hierarchy_table(2..=11),
        "fig3" => equilibrium_table(
            cells(&[MultiLeader], &[2, 4, 6, 8, 10], &[0.0], &coarse_grid()),
            true,
            opts,
        ),
        "fig4" => stability_table(2..=20, &[0.0]),
        "fig5" => stability_table(2..=50, &[0.0]),
        "fig6" => equilibrium_table(
            cells(
                &[MultiLeader, MarkNoMemory, MarkWithMemory],
                &[10],
                &[0.0],
                &fine_grid(),
            ),
            true,
            opts,
        ),
        "fig7" => equilibrium_table(
            cells(&[MultiLeader], &[10], &ASSORTMENT_TAUS, &fine_grid()),
            true,
            opts,
        ),
        "fig8" => equilibrium_table(
            cells(
                &[MultiLeader],
                &[5, 10, 15, 20],
                &ASSORTMENT_TAUS,
                &fine_grid(),
            ),
            false,
            opts,
        ),
        "fig9" => stability_table(3..=20, &STABILITY_TAUS),
        "fig10" => appendix_table(Role::Cooperator, opts),
        "fig11" => appendix_table(Role::Defector, opts),
        other => Err(Error::UnknownPreset(other.to_string())),
    }
}

/// Expands `all` into every preset; any other name must be a known preset.
pub fn resolve_presets(name: &str) -> Result<Vec<&'static str>> {
    if name == "all" {
        return Ok(PRESETS.to_vec());
    }
    PRESETS
        .iter()
        .find(|&&p| p == name)
        .map(|&p| vec![p])
        .ok_or_else(|| Error::UnknownPreset(name.to_string()))
}

/// Writes `<preset>.csv` into `dir` (created if missing) for the preset, or
/// for every preset when `name` is `all`. Returns the written paths.
pub fn write_figures(name: &str, dir: &Path, opts: &FigureOptions) -> Result<Vec<PathBuf>> {
    let presets = resolve_presets(name)?;
    fs::create_dir_all(dir)?;
    let mut written = Vec::with_capacity(presets.len());
    for preset in presets {
        let table = build_preset(preset, opts)?;
        let path = dir.join(format!("{preset}.csv"));
        table.write_to(&path)?;
        written.push(path);
    }
    Ok(written)
}
