//! Parameter sweeps, the validation harness and figure dataset presets.

pub mod baseline;
pub mod config;
pub mod figures;
pub mod format;
pub mod sweep;
pub mod validate;

pub use config::{FcGrid, SweepSpec};
pub use figures::{build_preset, resolve_presets, write_figures, FigureOptions, PRESETS};
pub use format::{fmt_g12, fmt_opt, CsvTable};
pub use sweep::{run_sweep, run_sweep_to_file, sweep_table, SimulatedCell, SweepRow};
pub use validate::{validate, validate_with, Quantity, ValidationReport, ValidationRow};
