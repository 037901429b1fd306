//! End-to-end runs of the `hiergame` binary and the experiment drivers.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use hiergame::experiments::{run_sweep, sweep_table, SweepSpec};

fn hiergame(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hiergame"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = hiergame(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn hier_table_and_grc() {
    assert_eq!(
        stdout(&["hier", "table", "--n", "5"]),
        "x,h\n0,0\n1,1\n2,0.5625\n3,0.25\n4,0.0625\n5,0\n"
    );
    let dir = tempfile::tempdir().unwrap();
    let edges = write(
        dir.path(),
        "g.txt",
        "# two tops over two bottoms\nnodes 4\n0 2\n0 3\n1 2\n1 3\n",
    );
    assert_eq!(
        stdout(&["hier", "grc", "--edges", &edges]),
        "grc\n0.444444444444\n"
    );
    let bad = write(dir.path(), "bad.txt", "nodes 2\n0 0\n");
    assert!(!hiergame(&["hier", "grc", "--edges", &bad]).status.success());
}

#[test]
fn analytic_equilibrium_and_stability() {
    assert_eq!(
        stdout(&["analytic", "--n", "2", "--fc", "0.5"]),
        "W_C,W_D\n0.475,0.325\n"
    );
    assert_eq!(
        stdout(&["equilibrium", "--n", "2", "--fc", "0.7"]),
        "fc,cb_star\n0.7,0.5\n"
    );
    let out = stdout(&["stability", "--n-min", "2", "--n-max", "3"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,lower,upper");
    assert_eq!(lines[1], "2,0.5,0.75");
    assert_eq!(lines.len(), 3);
    assert!(!hiergame(&["analytic", "--n", "1", "--fc", "0.5"])
        .status
        .success());
    assert!(
        !hiergame(&["analytic", "--n", "4", "--fc", "0.5", "--variant", "bogus"])
            .status
            .success()
    );
}

#[test]
fn simulate_and_evolve() {
    let out = stdout(&[
        "simulate", "--n", "4", "--fc", "0.5", "--reps", "5000", "--seed", "3",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "role,mean,se,a_hat,b_hat,reps,seed");
    assert!(lines[1].starts_with("C,") && lines[2].starts_with("D,"));
    assert!(lines[1].ends_with(",5000,3"));
    assert_eq!(
        out,
        stdout(&["simulate", "--n", "4", "--fc", "0.5", "--reps", "5000", "--seed", "3"])
    );

    let out = stdout(&[
        "evolve",
        "--n",
        "5",
        "--cb",
        "0.1",
        "--f0",
        "0.5",
        "--generations",
        "4",
    ]);
    assert_eq!(out.lines().count(), 6);
    assert!(out.starts_with("t,f_c\n0,0.5\n"));
}

#[test]
fn sweep_from_config() {
    let dir = tempfile::tempdir().unwrap();
    let out_csv = dir.path().join("sweep.csv");
    let config = write(
        dir.path(),
        "sweep.cfg",
        &format!(
            "n = 2\nfc_count = 1\nfc_min = 0.5\nfc_max = 0.5\nreps = 20000\nseed = 4\noutput = {}\n",
            out_csv.display()
        ),
    );
    assert_eq!(stdout(&["sweep", "--config", &config]), "");
    let text = fs::read_to_string(&out_csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "# schema: hiergame-sweep v1");
    assert!(lines[1].starts_with("variant,n,tau,fc,cb_analytic,cb_sim,cb_se"));
    assert_eq!(lines.len(), 3);
    let fields: Vec<&str> = lines[2].split(',').collect();
    assert_eq!(&fields[..5], &["multi", "2", "0", "0.5", "0.5"]);
    let (sim, se): (f64, f64) = (fields[5].parse().unwrap(), fields[6].parse().unwrap());
    assert!(((sim - 0.5) / se).abs() < 3.5);

    let unwritable = write(
        dir.path(),
        "bad.cfg",
        "n = 2\nfc_count = 1\nfc_min = 0.5\nfc_max = 0.5\nreps = 10\noutput = /nonexistent/dir/x.csv\n",
    );
    assert!(!hiergame(&["sweep", "--config", &unwritable])
        .status
        .success());
}

#[test]
fn sweep_is_deterministic_and_ordered() {
    let spec: SweepSpec = "variant = retry\nn = 3, 5\ntau = 0, 0.5\nfc_count = 4\nfc_min = 0.2\nfc_max = 0.8\nreps = 3000\nseed = 12"
        .parse()
        .unwrap();
    let a = sweep_table(&run_sweep(&spec).unwrap()).render();
    let b = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| sweep_table(&run_sweep(&spec).unwrap()).render());
    assert_eq!(a, b);
    let rows = run_sweep(&spec).unwrap();
    let order: Vec<(usize, f64, f64)> = rows.iter().map(|r| (r.n, r.tau, r.fc)).collect();
    assert_eq!(order, spec.cells());
}

#[test]
fn validate_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let config = write(
        dir.path(),
        "v.cfg",
        "n = 2, 4\nfc_count = 5\nfc_min = 0.1\nfc_max = 0.9\nreps = 20000\nseed = 1\n",
    );
    let report = dir.path().join("report.csv");
    let out = hiergame(&[
        "validate",
        "--config",
        &config,
        "--report",
        report.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("PASS"));
    assert_eq!(fs::read_to_string(&report).unwrap().lines().count(), 2 + 30);

    // An impossible threshold must fail with a nonzero status.
    let out = hiergame(&[
        "validate",
        "--config",
        &config,
        "--z",
        "0.0001",
        "--pass-rate",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("FAIL"));
}

#[test]
fn figures_presets_and_thread_env() {
    let dir = tempfile::tempdir().unwrap();
    let one = dir.path().join("one");
    let four = dir.path().join("four");
    for (path, threads) in [(&one, "1"), (&four, "4")] {
        let out = Command::new(env!("CARGO_BIN_EXE_hiergame"))
            .args([
                "figures",
                "fig6",
                "--out",
                path.to_str().unwrap(),
                "--reps",
                "500",
                "--seed",
                "8",
            ])
            .env("HIERGAME_THREADS", threads)
            .output()
            .unwrap();
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    let a = fs::read(one.join("fig6.csv")).unwrap();
    assert_eq!(a, fs::read(four.join("fig6.csv")).unwrap());
    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with(
        "# schema: hiergame-equilibrium v1\nvariant,n,tau,fc,cb_analytic,cb_sim,se\n"
    ));
    assert_eq!(text.lines().count(), 2 + 3 * 19);

    let out = hiergame(&["figures", "fig2", "--out", one.to_str().unwrap()]);
    assert!(out.status.success());
    let fig2 = fs::read_to_string(one.join("fig2.csv")).unwrap();
    assert_eq!(fig2.lines().nth(1), Some("n,x,h"));

    assert!(
        !hiergame(&["figures", "fig12", "--out", one.to_str().unwrap()])
            .status
            .success()
    );
    let bad_env = Command::new(env!("CARGO_BIN_EXE_hiergame"))
        .args(["hier", "table", "--n", "3"])
        .env("HIERGAME_THREADS", "zero")
        .output()
        .unwrap();
    assert!(!bad_env.status.success());
}
