use std::path::Path;
use std::process::{Command, Output};

use mdlab::report::RunReport;

fn mdlab(args: &[&str], report_dir: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_mdlab"));
    cmd.args(args).env_remove(mdlab::config::REPORT_DIR_ENV);
    if let Some(d) = report_dir {
        cmd.env(mdlab::config::REPORT_DIR_ENV, d);
    }
    cmd.output().expect("binary runs")
}

fn read_report(path: &Path) -> RunReport {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

const SMALL: &[&str] = &["--suite", "symbolic", "--suite", "representation", "--max-N", "2", "--max-M", "2", "--gl-rank", "2", "--trials", "4"];

#[test]
fn small_run_passes_and_writes_a_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out/report.json");
    let out = mdlab(&[SMALL, &["--report", path.to_str().unwrap()]].concat(), None);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("symbolic") && stdout.contains("representation"));
    let r = read_report(&path);
    assert_eq!(r.summary.failed, 0);
    assert_eq!(r.config.gl_rank, 2);
    assert!(r.checks.iter().all(|c| !c.tag.is_empty() && !c.id.is_empty()));
}

#[test]
fn same_seed_gives_identical_reports() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for (p, workers) in [(&a, "1"), (&b, "3")] {
        let out = mdlab(&[SMALL, &["--seed", "7", "--workers", workers, "--report", p.to_str().unwrap()]].concat(), None);
        assert_eq!(out.status.code(), Some(0));
    }
    let (mut ra, mut rb) = (read_report(&a).without_timings(), read_report(&b).without_timings());
    ra.config.workers = 0;
    rb.config.workers = 0;
    assert_eq!(ra.to_json(), rb.to_json());
}

#[test]
fn report_round_trips_through_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    mdlab(&[SMALL, &["--report", path.to_str().unwrap()]].concat(), None);
    let text = std::fs::read_to_string(&path).unwrap();
    let r: RunReport = serde_json::from_str(&text).unwrap();
    assert_eq!(r.to_json(), text);
}

#[test]
fn tight_integral_tolerance_fails_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = mdlab(&["--suite", "integrals", "--tol", "integrals=1e-15", "--report", path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL integrals"));
    let r = read_report(&path);
    assert!(r.summary.failed > 0);
    assert!(r.checks.iter().all(|c| c.tolerance == 1e-15));
}

#[test]
fn usage_errors_exit_two() {
    for args in [&["--nope"][..], &["--suite", "bogus"], &["--gl-rank", "4"], &["--tol", "qdilog=-1"], &["--b", "abc"]] {
        let out = mdlab(args, None);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn unwritable_report_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    std::fs::write(&blocker, "").unwrap();
    let path = blocker.join("r.json");
    let out = mdlab(&["--suite", "symbolic", "--max-N", "1", "--max-M", "1", "--report", path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn report_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = mdlab(&["--suite", "symbolic", "--max-N", "1", "--max-M", "1"], Some(dir.path()));
    assert_eq!(out.status.code(), Some(0));
    assert!(dir.path().join(mdlab::config::DEFAULT_REPORT_NAME).exists());
}

#[test]
fn config_file_is_read() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    let path = dir.path().join("r.json");
    std::fs::write(&cfg, format!("suite = representation\ngl_rank = 2\ntrials = 2\nseed = 3\nreport = {}\n", path.display())).unwrap();
    let out = mdlab(&["--config", cfg.to_str().unwrap(), "--seed", "4"], None);
    assert_eq!(out.status.code(), Some(0));
    let r = read_report(&path);
    assert_eq!(r.config.suites, vec!["representation"]);
    assert_eq!((r.config.seed, r.config.trials), (4, 2));
}
