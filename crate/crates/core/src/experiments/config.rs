//! Sweep configuration.
//!
//! The format is flat `key = value` text; list values are comma separated,
//! `#` starts a comment. Example:
//!
//! ```text
//! variant  = multi
//! n        = 2, 4, 6, 8, 10
//! fc_count = 17
//! fc_min   = 0.1
//! fc_max   = 0.9
//! tau      = 0
//! reps     = 100000
//! seed     = 42
//! output   = fig3.csv
//! simulate = true
//! ```

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::str::FromStr;

use crate::{Error, ModelVariant, Result};

/// Evenly spaced grid of cooperator fractions, endpoints included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FcGrid {
    pub count: usize,
    pub min: f64,
    pub max: f64,
}

impl FcGrid {
    pub fn new(count: usize, min: f64, max: f64) -> Result<Self> {
        if count == 0 {
            return Err(Error::invalid("f_c grid needs at least one point"));
        }
        for v in [min, max] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::invalid(format!("f_c endpoint {v} outside [0, 1]")));
            }
        }
        if min > max {
            return Err(Error::invalid(format!(
                "f_c grid min {min} exceeds max {max}"
            )));
        }
        if count == 1 && min != max {
            return Err(Error::invalid("a one-point f_c grid needs fc_min = fc_max"));
        }
        Ok(FcGrid { count, min, max })
    }

    pub fn points(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.min];
        }
        let span = self.max - self.min;
        let last = (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i + 1 == self.count {
                    self.max
                } else {
                    self.min + span * i as f64 / last
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub variant: ModelVariant,
    pub n_values: Vec<usize>,
    pub fc_grid: FcGrid,
    pub tau_values: Vec<f64>,
    pub replications: u64,
    pub master_seed: u64,
    pub output: Option<PathBuf>,
    /// Run the simulator for each cell, not just the analytic formulas.
    pub simulate: bool,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n_values.is_empty() {
            return Err(Error::invalid("n list is empty"));
        }
        if let Some(&n) = self.n_values.iter().find(|&&n| n < 2) {
            return Err(Error::invalid(format!(
                "group size must be at least 2, got {n}"
            )));
        }
        if self.tau_values.is_empty() {
            return Err(Error::invalid("tau list is empty"));
        }
        if let Some(&t) = self.tau_values.iter().find(|t| !(0.0..=1.0).contains(*t)) {
            return Err(Error::invalid(format!("tau {t} outside [0, 1]")));
        }
        if self.replications == 0 {
            return Err(Error::invalid("replications must be at least 1"));
        }
        FcGrid::new(self.fc_grid.count, self.fc_grid.min, self.fc_grid.max)?;
        Ok(())
    }

    /// `(n, tau, fc)` for every cell, in output order.
    pub fn cells(&self) -> Vec<(usize, f64, f64)> {
        let fcs = self.fc_grid.points();
        let mut cells = Vec::with_capacity(self.n_values.len() * self.tau_values.len() * fcs.len());
        for &n in &self.n_values {
            for &tau in &self.tau_values {
                for &fc in &fcs {
                    cells.push((n, tau, fc));
                }
            }
        }
        cells
    }
}

impl FromStr for SweepSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut entries: BTreeMap<String, (usize, String)> = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content.split_once('=').ok_or_else(|| Error::Config {
                line,
                message: format!("expected `key = value`, got `{content}`"),
            })?;
            let key = key.trim().to_ascii_lowercase();
            let key = match key.as_str() {
                "replications" => "reps".to_string(),
                "master_seed" => "seed".to_string(),
                _ => key,
            };
            if !KNOWN_KEYS.contains(&key.as_str()) {
                return Err(Error::Config {
                    line,
                    message: format!("unknown key `{key}`"),
                });
            }
            if entries
                .insert(key.clone(), (line, value.trim().to_string()))
                .is_some()
            {
                return Err(Error::Config {
                    line,
                    message: format!("duplicate key `{key}`"),
                });
            }
        }

        let take = |key: &str| entries.get(key).map(|(l, v)| (*l, v.as_str()));
        let required = |key: &str| {
            take(key).ok_or_else(|| Error::Config {
                line: 0,
                message: format!("missing required key `{key}`"),
            })
        };

        let variant = match take("variant") {
            Some((line, v)) => v.parse().map_err(|e: Error| Error::Config {
                line,
                message: e.to_string(),
            })?,
            None => ModelVariant::MultiLeader,
        };
        let n_values = parse_list::<usize>(required("n")?)?;
        let tau_values = match take("tau") {
            Some(entry) => parse_list::<f64>(entry)?,
            None => vec![0.0],
        };
        let fc_count = parse_one::<usize>(required("fc_count")?)?;
        let fc_min = parse_one::<f64>(required("fc_min")?)?;
        let fc_max = parse_one::<f64>(required("fc_max")?)?;
        let replications = match take("reps") {
            Some(entry) => parse_one::<u64>(entry)?,
            None => 100_000,
        };
        let master_seed = match take("seed") {
            Some(entry) => parse_one::<u64>(entry)?,
            None => 0,
        };
        let output = take("output").map(|(_, v)| PathBuf::from(v));
        let simulate = match take("simulate") {
            Some(entry) => parse_one::<bool>(entry)?,
            None => true,
        };

        let fc_grid = FcGrid::new(fc_count, fc_min, fc_max)?;
        let spec = SweepSpec {
            variant,
            n_values,
            fc_grid,
            tau_values,
            replications,
            master_seed,
            output,
            simulate,
        };
        spec.validate()?;
        Ok(spec)
    }
}

const KNOWN_KEYS: &[&str] = &[
    "variant", "n", "fc_count", "fc_min", "fc_max", "tau", "reps", "seed", "output", "simulate",
];

fn parse_one<T: FromStr>((line, value): (usize, &str)) -> Result<T> {
    value.parse().map_err(|_| Error::Config {
        line,
        message: format!("cannot parse `{value}`"),
    })
}

fn parse_list<T: FromStr>((line, value): (usize, &str)) -> Result<Vec<T>> {
    let items: Vec<&str> = value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    if items.is_empty() {
        return Err(Error::Config {
            line,
            message: "empty list".into(),
        });
    }
    items
        .into_iter()
        .map(|item| parse_one((line, item)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIG3: &str = "\
# random mixing, fig3-like
variant = multi
n = 2, 4, 6, 8, 10
fc_count = 17
fc_min = 0.1
fc_max = 0.9
tau = 0
reps = 1000
seed = 7
output = out.csv
";

    #[test]
    fn parses_full_config() {
        let spec: SweepSpec = FIG3.parse().unwrap();
        assert_eq!(spec.variant, ModelVariant::MultiLeader);
        assert_eq!(spec.n_values, vec![2, 4, 6, 8, 10]);
        assert_eq!(spec.tau_values, vec![0.0]);
        assert_eq!(spec.replications, 1000);
        assert_eq!(spec.master_seed, 7);
        assert_eq!(spec.output, Some(PathBuf::from("out.csv")));
        assert!(spec.simulate);
        let pts = spec.fc_grid.points();
        assert_eq!(pts.len(), 17);
        assert!((pts[1] - 0.15).abs() < 1e-15);
        assert_eq!(pts[16], 0.9);
        assert_eq!(spec.cells().len(), 85);
    }

    #[test]
    fn rejects_bad_configs() {
        let bad = [
            "n = 2\nfc_count = 3\nfc_min = 0.1\n", // missing fc_max
            "n = \nfc_count = 3\nfc_min = 0.1\nfc_max = 0.9", // empty list
            "n = 1\nfc_count = 3\nfc_min = 0.1\nfc_max = 0.9",
            "n = 2\nfc_count = 3\nfc_min = 0.1\nfc_max = 1.5",
            "n = 2\nfc_count = 0\nfc_min = 0.1\nfc_max = 0.9",
            "n = 2\nfc_count = 3\nfc_min = 0.1\nfc_max = 0.9\nreps = 0",
            "n = 2\nfc_count = 3\nfc_min = 0.1\nfc_max = 0.9\ncolour = red",
            "n = 2\nn = 3\nfc_count = 3\nfc_min = 0.1\nfc_max = 0.9",
            "n = 2\nfc_count = 3\nfc_min = 0.1\nfc_max = 0.9\nvariant = mark",
            "n = 2\nfc_count = 3\nfc_min = 0.1\nfc_max = 0.9\ntau = 0, 2",
            "just words",
        ];
        for text in bad {
            assert!(text.parse::<SweepSpec>().is_err(), "accepted: {text}");
        }
    }

    #[test]
    fn single_point_grid() {
        let spec: SweepSpec = "n = 2\nfc_count = 1\nfc_min = 0.5\nfc_max = 0.5\nsimulate = false"
            .parse()
            .unwrap();
        assert_eq!(spec.fc_grid.points(), vec![0.5]);
        assert!(!spec.simulate);
    }
}
