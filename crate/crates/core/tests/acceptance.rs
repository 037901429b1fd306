//! Acceptance checks. Runs as a plain binary (no libtest harness) so that
//! every criterion prints exactly one `PASS` or `FAIL` line; the process
//! exits nonzero if any criterion fails.

use std::process::ExitCode;

use hiergame::analytic::{self, explicit, PayoffCoefficients};
use hiergame::experiments::{build_preset, validate, FcGrid, FigureOptions, SweepSpec, PRESETS};
use hiergame::hierarchy::{
    build_two_level_graph, general_reaching_centrality, h_nx, TwoLevelStructure,
};
use hiergame::sim::estimate_equilibrium;
use hiergame::{GameParams, ModelVariant, Population, Role};

const EXACT: f64 = 1e-12;
const Z: f64 = 3.5;
const PASS_RATE: f64 = 0.95;
const REPS: u64 = 100_000;
const SEED: u64 = 20_240_501;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn grid(count: usize, min: f64, max: f64) -> Vec<f64> {
    FcGrid::new(count, min, max).unwrap().points()
}

/// 0.1, 0.2, ..., 0.9
fn tenths() -> Vec<f64> {
    grid(9, 0.1, 0.9)
}

/// 0, 0.1, ..., 1
fn eleven() -> Vec<f64> {
    grid(11, 0.0, 1.0)
}

fn cb(n: usize, fc: f64, tau: f64, v: ModelVariant) -> f64 {
    analytic::equilibrium_cb(&Population::new(n, fc, tau).unwrap(), v).expect("defined equilibrium")
}

fn h_table() -> Outcome {
    let expected = [0.0, 1.0, 0.5625, 0.25, 0.0625, 0.0];
    let got: Vec<f64> = (0..=5)
        .map(|x| h_nx(TwoLevelStructure::new(5, x).unwrap()))
        .collect();
    let err = got
        .iter()
        .zip(&expected)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    outcome(err <= EXACT, format!("H_5 = {got:?}, max error {err:.1e}"))
}

fn grc_equivalence() -> Outcome {
    let mut worst = 0.0f64;
    let mut cases = 0;
    for n in 2..=12 {
        for x in 1..=n {
            let s = TwoLevelStructure::new(n, x).unwrap();
            let grc = general_reaching_centrality(&build_two_level_graph(s).unwrap()).unwrap();
            worst = worst.max((grc - h_nx(s)).abs());
            cases += 1;
        }
    }
    outcome(
        worst <= EXACT,
        format!("{cases} structures, max |GRC - H| = {worst:.1e}"),
    )
}

fn small_n_oracles() -> Outcome {
    let v = ModelVariant::MultiLeader;
    let mut worst = 0.0f64;
    for &(c, b) in &[(0.2, 1.0), (1.0, 1.0), (3.0, 7.0)] {
        for fc in eleven() {
            let p2 = GameParams::new(2, fc, 0.0, c, b).unwrap();
            let p3 = GameParams::new(3, fc, 0.0, c, b).unwrap();
            for (general, oracle) in [
                (analytic::wc(&p2, v), explicit::wc_n2(fc, c, b)),
                (analytic::wd(&p2, v), explicit::wd_n2(fc, c, b)),
                (analytic::wc(&p3, v), explicit::wc_n3(fc, c, b)),
                (analytic::wd(&p3, v), explicit::wd_n3(fc, c, b)),
            ] {
                worst = worst.max((general - oracle).abs());
            }
        }
    }
    outcome(
        worst <= EXACT,
        format!("n = 2, 3 x 11 f_c x 3 (c, b), max error {worst:.1e}"),
    )
}

fn two_player_closed_form() -> Outcome {
    let v = ModelVariant::MultiLeader;
    let mut analytic_err = 0.0f64;
    let mut worst_z = 0.0f64;
    for (i, fc) in tenths().into_iter().enumerate() {
        let pop = Population::random(2, fc).unwrap();
        analytic_err = analytic_err.max((cb(2, fc, 0.0, v) - 0.5).abs());
        let est = estimate_equilibrium(&pop, v, REPS, SEED + i as u64)
            .unwrap()
            .unwrap();
        worst_z = worst_z.max(((est.value - 0.5) / est.std_error).abs());
    }
    let region = analytic::stability_region(2, 0.0, v).unwrap();
    let region_err = (region.lower - 0.5).abs().max((region.upper - 0.75).abs());
    outcome(
        analytic_err <= EXACT && worst_z <= Z && region_err <= EXACT,
        format!(
            "analytic max |c/b - 0.5| = {analytic_err:.1e}; simulated max |z| = {worst_z:.2}; \
             region ({}, {}) error {region_err:.1e}",
            region.lower, region.upper
        ),
    )
}

fn coefficients_from(weights: &[f64], n: usize, v: ModelVariant, role: Role) -> PayoffCoefficients {
    let (mut a, mut bcoef) = (0.0, 0.0);
    for (i, w) in weights.iter().enumerate() {
        let m = if role == Role::Cooperator { i + 1 } else { i };
        let cond = analytic::conditional_coefficients(n, m, v, role);
        a += w * cond.a;
        bcoef += w * cond.bcoef;
    }
    PayoffCoefficients { a, bcoef }
}

fn zero_assortment_reduction() -> Outcome {
    let mut worst = 0.0f64;
    for n in 2..=12 {
        for fc in eleven() {
            for v in ModelVariant::ALL {
                for role in [Role::Cooperator, Role::Defector] {
                    let assort = coefficients_from(
                        &analytic::assortative_weights(n, fc, 0.0, role),
                        n,
                        v,
                        role,
                    );
                    let random =
                        coefficients_from(&analytic::random_mixing_weights(n, fc), n, v, role);
                    worst = worst
                        .max((assort.a - random.a).abs())
                        .max((assort.bcoef - random.bcoef).abs());
                }
            }
        }
    }
    outcome(
        worst <= EXACT,
        format!("n <= 12 x 11 f_c x 4 variants, max error {worst:.1e}"),
    )
}

fn sim_vs_analytic(config: &str) -> Outcome {
    let spec: SweepSpec = config.parse().unwrap();
    let report = validate(&spec, Z, PASS_RATE).unwrap();
    let worst = report.rows.iter().map(|r| r.z.abs()).fold(0.0, f64::max);
    outcome(
        report.passes(),
        format!("{}; max |z| = {worst:.2}", report.summary()),
    )
}

fn sim_vs_analytic_random() -> Outcome {
    sim_vs_analytic(&format!(
        "variant = multi\nn = 2, 4, 6, 8, 10\ntau = 0\nfc_count = 9\nfc_min = 0.1\nfc_max = 0.9\n\
         reps = {REPS}\nseed = {SEED}\n"
    ))
}

fn sim_vs_analytic_assortative() -> Outcome {
    sim_vs_analytic(&format!(
        "variant = multi\nn = 10\ntau = 0.25, 0.5, 0.75, 1\nfc_count = 9\nfc_min = 0.1\nfc_max = 0.9\n\
         reps = {REPS}\nseed = {}\n",
        SEED + 1
    ))
}

fn variant_ordering() -> Outcome {
    let mut violations = Vec::new();
    for fc in grid(19, 0.05, 0.95) {
        let nomem = cb(10, fc, 0.0, ModelVariant::MarkNoMemory);
        let multi = cb(10, fc, 0.0, ModelVariant::MultiLeader);
        let mem = cb(10, fc, 0.0, ModelVariant::MarkWithMemory);
        if !(nomem <= multi && multi <= mem) {
            violations.push(format!("f_c={fc}: {nomem} / {multi} / {mem}"));
        }
    }
    outcome(
        violations.is_empty(),
        format!("nomem <= multi <= withmem at n = 10 on 19 points; violations: {violations:?}"),
    )
}

fn inverted_u() -> Outcome {
    let values: Vec<f64> = grid(19, 0.05, 0.95)
        .into_iter()
        .map(|fc| cb(10, fc, 0.0, ModelVariant::MultiLeader))
        .collect();
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let last = *values.last().unwrap();
    outcome(
        last < max,
        format!("c/b at f_c = 0.95 is {last:.6}, grid maximum {max:.6}"),
    )
}

fn full_assortment_reversal() -> Outcome {
    let values: Vec<f64> = grid(15, 0.2, 0.9)
        .into_iter()
        .map(|fc| cb(10, fc, 1.0, ModelVariant::MultiLeader))
        .collect();
    let increases = values.windows(2).filter(|w| w[1] > w[0]).count();
    outcome(
        increases == 0,
        format!(
            "{} points over f_c in [0.2, 0.9]: {:.6} -> {:.6}, {increases} increases",
            values.len(),
            values[0],
            values[values.len() - 1]
        ),
    )
}

fn stability_bounds() -> Outcome {
    // (1) lower bound is 1/n everywhere.
    let mut lower_ok = true;
    for v in ModelVariant::ALL {
        for n in 2..=20 {
            for tau in eleven() {
                lower_ok &= analytic::stability_region(n, tau, v).unwrap().lower == 1.0 / n as f64;
            }
        }
    }
    // (2) the gap to the single-leader upper bound shrinks with n.
    let gaps: Vec<f64> = (3..=20)
        .map(|n| {
            let ours = analytic::stability_region(n, 0.0, ModelVariant::MultiLeader)
                .unwrap()
                .upper;
            let mark = analytic::stability_region(n, 0.0, ModelVariant::MarkWithMemory)
                .unwrap()
                .upper;
            (ours - mark).abs()
        })
        .collect();
    let gap_ok = gaps.windows(2).all(|w| w[1] < w[0]);
    // (3) the upper bound rises with assortment at n = 10.
    let uppers: Vec<f64> = [0.0, 0.2, 0.4, 0.6, 0.8, 1.0]
        .iter()
        .map(|&tau| {
            analytic::stability_region(10, tau, ModelVariant::MultiLeader)
                .unwrap()
                .upper
        })
        .collect();
    let rising = uppers.windows(2).all(|w| w[1] > w[0]);
    let fmt = |xs: &[f64]| {
        xs.iter()
            .map(|x| format!("{x:.4}"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    outcome(
        lower_ok && gap_ok && rising,
        format!(
            "lower = 1/n: {}; |upper - upper_single| decreasing n=3..20: {} [{}]; \
             upper increasing in tau at n=10: {} [{}]",
            if lower_ok { "yes" } else { "no" },
            if gap_ok { "yes" } else { "no" },
            fmt(&gaps),
            if rising { "yes" } else { "no" },
            fmt(&uppers),
        ),
    )
}

/// `(n, fc, sim, revised, original)` rows of an appendix preset.
fn appendix_rows(preset: &str) -> Vec<(usize, f64, f64, f64, f64)> {
    let opts = FigureOptions {
        replications: REPS,
        master_seed: SEED,
    };
    build_preset(preset, &opts)
        .unwrap()
        .rows()
        .iter()
        .map(|r| {
            let f = |i: usize| r[i].parse::<f64>().unwrap();
            (r[1].parse().unwrap(), f(2), f(3), f(4), f(5))
        })
        .collect()
}

fn appendix_reproduction() -> Outcome {
    let mut pass = true;
    let mut details = Vec::new();
    for (preset, label) in [("fig10", "W(C)"), ("fig11", "W(D)")] {
        let rows = appendix_rows(preset);
        let max_gap = |n: usize| {
            rows.iter()
                .filter(|r| r.0 == n)
                .map(|r| (r.2 - r.3).abs())
                .fold(0.0, f64::max)
        };
        let (g2, g10) = (max_gap(2), max_gap(10));
        let shrinks = g10 < g2;
        // At high f_c the revised formula must beat the original wherever the
        // two formulas differ.
        let high: Vec<_> = rows
            .iter()
            .filter(|r| r.1 >= 0.7 - 1e-9 && (r.3 - r.4).abs() > EXACT)
            .collect();
        let beaten = high
            .iter()
            .filter(|r| (r.2 - r.3).abs() < (r.2 - r.4).abs())
            .count();
        let better = beaten == high.len();
        pass &= shrinks && better;
        details.push(format!(
            "{label}: max gap n=2 {g2:.2e}, n=10 {g10:.2e} ({}); revised closer at f_c >= 0.7 in {beaten}/{} cells",
            if shrinks { "shrinks" } else { "does not shrink" },
            high.len()
        ));
    }
    outcome(pass, details.join("; "))
}

fn determinism() -> Outcome {
    let opts = FigureOptions {
        replications: 2_000,
        master_seed: 99,
    };
    let render = |threads: usize, preset: &str| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| build_preset(preset, &opts).unwrap().render())
    };
    let mut mismatched = Vec::new();
    for &preset in PRESETS {
        let first = render(1, preset);
        if first != render(1, preset) || first != render(4, preset) {
            mismatched.push(preset);
        }
    }
    outcome(
        mismatched.is_empty(),
        format!(
            "{} presets at 1 and 4 threads; mismatched: {mismatched:?}",
            PRESETS.len()
        ),
    )
}

fn main() -> ExitCode {
    let criteria: &[Criterion] = &[
        ("H-table exactness", h_table),
        ("GRC equals H", grc_equivalence),
        ("small-n oracle equivalence", small_n_oracles),
        ("n=2 closed form", two_player_closed_form),
        ("tau=0 reduction", zero_assortment_reduction),
        ("sim vs analytic (random)", sim_vs_analytic_random),
        ("sim vs analytic (assortative)", sim_vs_analytic_assortative),
        ("variant ordering at n=10", variant_ordering),
        ("inverted-U shape", inverted_u),
        ("tau=1 reversal", full_assortment_reversal),
        ("stability bounds", stability_bounds),
        ("appendix reproduction", appendix_reproduction),
        ("determinism", determinism),
    ];
    let mut failures = 0;
    for (name, check) in criteria {
        let result = check();
        if !result.pass {
            failures += 1;
        }
        println!(
            "{} {name}: {}",
            if result.pass { "PASS" } else { "FAIL" },
            result.detail
        );
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
