//! Command-line front end. Every subcommand prints CSV with a header row.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hiergame::experiments::{self, fmt_g12, fmt_opt, FigureOptions, SweepSpec};
use hiergame::hierarchy::{general_reaching_centrality, h_nx, DirectedGraph, TwoLevelStructure};
use hiergame::sim::{estimate_payoff, evolve};
use hiergame::{analytic, Error, GameParams, ModelVariant, Population, Result, Role};

/// Environment variable capping the worker pool size.
const THREADS_ENV: &str = "HIERGAME_THREADS";

#[derive(Parser)]
#[command(
    name = "hiergame",
    version,
    about = "Status-hierarchy cooperation game toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hierarchicalness of two-level structures and general graphs.
    Hier {
        #[command(subcommand)]
        command: HierCommand,
    },
    /// Exact expected payoffs W(C) and W(D).
    Analytic {
        #[command(flatten)]
        game: GameArgs,
        #[arg(long, default_value_t = 0.2)]
        c: f64,
        #[arg(long, default_value_t = 1.0)]
        b: f64,
    },
    /// Internal equilibrium c/b at which W(C) = W(D).
    Equilibrium {
        #[command(flatten)]
        game: GameArgs,
    },
    /// Stability region [lower, upper] of c/b for a range of group sizes.
    Stability {
        #[arg(long, default_value_t = ModelVariant::MultiLeader)]
        variant: ModelVariant,
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        #[arg(long, default_value_t = 0.0)]
        tau: f64,
    },
    /// Monte Carlo estimate of a focal player's payoff.
    Simulate {
        #[command(flatten)]
        game: GameArgs,
        #[arg(long, default_value_t = 0.2)]
        c: f64,
        #[arg(long, default_value_t = 1.0)]
        b: f64,
        #[arg(long, default_value_t = 100_000)]
        reps: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = RoleArg::Both)]
        role: RoleArg,
    },
    /// Iterates the replicator map with analytic payoffs (b = 1, c = cb).
    Evolve {
        #[arg(long, default_value_t = ModelVariant::MultiLeader)]
        variant: ModelVariant,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.0)]
        tau: f64,
        #[arg(long)]
        cb: f64,
        #[arg(long)]
        f0: f64,
        #[arg(long, default_value_t = 100)]
        generations: usize,
    },
    /// Runs a parameter sweep from a config file.
    Sweep {
        #[arg(long)]
        config: PathBuf,
    },
    /// Compares simulated coefficients with the formulas; exits nonzero on FAIL.
    Validate {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value_t = 3.5)]
        z: f64,
        #[arg(long, default_value_t = 0.95)]
        pass_rate: f64,
        /// Also write the per-cell report to this file.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Writes figure datasets for a preset (fig1..fig11) or `all`.
    Figures {
        preset: String,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long, default_value_t = 100_000)]
        reps: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum HierCommand {
    /// H_n(x) for x = 0..n.
    Table {
        #[arg(long)]
        n: usize,
    },
    /// General reaching centrality of an edge-list file.
    Grc {
        #[arg(long)]
        edges: PathBuf,
    },
}

#[derive(clap::Args)]
struct GameArgs {
    #[arg(long, default_value_t = ModelVariant::MultiLeader)]
    variant: ModelVariant,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    fc: f64,
    #[arg(long, default_value_t = 0.0)]
    tau: f64,
}

impl GameArgs {
    fn population(&self) -> Result<Population> {
        Population::new(self.n, self.fc, self.tau)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RoleArg {
    C,
    D,
    Both,
}

impl RoleArg {
    fn roles(self) -> &'static [Role] {
        match self {
            RoleArg::C => &[Role::Cooperator],
            RoleArg::D => &[Role::Defector],
            RoleArg::Both => &[Role::Cooperator, Role::Defector],
        }
    }
}

fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| {
            Error::Parse(format!(
                "{THREADS_ENV} must be a positive integer, got `{value}`"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Error::InvalidParameter(e.to_string()))
}

fn run(cli: Cli, out: &mut impl Write) -> Result<ExitCode> {
    match cli.command {
        Command::Hier { command } => match command {
            HierCommand::Table { n } => {
                writeln!(out, "x,h")?;
                for x in 0..=n {
                    let h = h_nx(TwoLevelStructure::new(n, x)?);
                    writeln!(out, "{x},{}", fmt_g12(h))?;
                }
            }
            HierCommand::Grc { edges } => {
                let graph = DirectedGraph::parse_edge_list(&fs::read_to_string(edges)?)?;
                writeln!(out, "grc")?;
                writeln!(out, "{}", fmt_g12(general_reaching_centrality(&graph)?))?;
            }
        },
        Command::Analytic { game, c, b } => {
            let params = GameParams::from_population(game.population()?, c, b)?;
            writeln!(out, "W_C,W_D")?;
            writeln!(
                out,
                "{},{}",
                fmt_g12(analytic::wc(&params, game.variant)),
                fmt_g12(analytic::wd(&params, game.variant))
            )?;
        }
        Command::Equilibrium { game } => {
            let cb = analytic::equilibrium_cb(&game.population()?, game.variant);
            writeln!(out, "fc,cb_star")?;
            writeln!(out, "{},{}", fmt_g12(game.fc), fmt_opt(cb))?;
        }
        Command::Stability {
            variant,
            n_min,
            n_max,
            tau,
        } => {
            if n_min > n_max {
                return Err(Error::InvalidParameter(format!(
                    "n-min {n_min} exceeds n-max {n_max}"
                )));
            }
            writeln!(out, "n,lower,upper")?;
            for n in n_min..=n_max {
                let region = analytic::stability_region(n, tau, variant)?;
                writeln!(
                    out,
                    "{n},{},{}",
                    fmt_g12(region.lower),
                    fmt_g12(region.upper)
                )?;
            }
        }
        Command::Simulate {
            game,
            c,
            b,
            reps,
            seed,
            role,
        } => {
            let params = GameParams::from_population(game.population()?, c, b)?;
            writeln!(out, "role,mean,se,a_hat,b_hat,reps,seed")?;
            for &role in role.roles() {
                let est = estimate_payoff(&params, game.variant, role, reps, seed)?;
                writeln!(
                    out,
                    "{role},{},{},{},{},{reps},{seed}",
                    fmt_g12(est.payoff.mean),
                    fmt_g12(est.payoff.std_error),
                    fmt_g12(est.coefficients.a_hat),
                    fmt_g12(est.coefficients.b_hat),
                )?;
            }
        }
        Command::Evolve {
            variant,
            n,
            tau,
            cb,
            f0,
            generations,
        } => {
            let trajectory = evolve(n, tau, variant, cb, f0, generations)?;
            writeln!(out, "t,f_c")?;
            for (t, f) in trajectory.iter().enumerate() {
                writeln!(out, "{t},{}", fmt_g12(*f))?;
            }
        }
        Command::Sweep { config } => {
            let spec: SweepSpec = fs::read_to_string(config)?.parse()?;
            let rendered = experiments::run_sweep_to_file(&spec)?;
            if spec.output.is_none() {
                out.write_all(rendered.as_bytes())?;
            }
        }
        Command::Validate {
            config,
            z,
            pass_rate,
            report,
        } => {
            let spec: SweepSpec = fs::read_to_string(config)?.parse()?;
            let result = experiments::validate(&spec, z, pass_rate)?;
            if let Some(path) = report {
                result.table().write_to(&path)?;
            }
            writeln!(out, "{}", result.summary())?;
            return Ok(if result.passes() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            });
        }
        Command::Figures {
            preset,
            out: dir,
            reps,
            seed,
        } => {
            let opts = FigureOptions {
                replications: reps,
                master_seed: seed,
            };
            for path in experiments::write_figures(&preset, &dir, &opts)? {
                writeln!(out, "{}", path.display())?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let result = configure_threads().and_then(|()| run(cli, &mut stdout.lock()));
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
