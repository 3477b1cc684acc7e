//! Machine-readable run report.
//!
//! Schema (JSON, field order fixed):
//!
//! ```text
//! tool, version, config{suites, b, omega1, omega2, seed, trials, tolerances, max_N, max_M, gl_rank, workers},
//! checks[{suite, id, tag, label, parameters{name: value}, lhs, rhs, error, tolerance, exact, passed, detail, wall_time_s}],
//! errors[{suite, job, message}],
//! summary{total, passed, failed, errors, suites[{suite, total, passed, worst_error, wall_time_s}]},
//! wall_time_s
//! ```
//!
//! Complex numbers are `{"re": .., "im": ..}`; a non-finite error is `null`.
//! Only the `wall_time_s` fields vary between runs with the same config.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use mdlab_core::suite::Suite;
use mdlab_core::{CheckReport, Complex64, ParamValue};
use serde::{Deserialize, Serialize};

use crate::config::RunConfig;

#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq)]
pub struct ComplexJson {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexJson {
    fn from(z: Complex64) -> Self {
        ComplexJson { re: z.re, im: z.im }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
#[serde(untagged)]
pub enum ParamJson {
    Int(i64),
    Real(f64),
    Complex(ComplexJson),
    Text(String),
}

impl From<&ParamValue> for ParamJson {
    fn from(v: &ParamValue) -> Self {
        match v {
            ParamValue::Real(x) => ParamJson::Real(*x),
            ParamValue::Int(x) => ParamJson::Int(*x),
            ParamValue::Complex(z) => ParamJson::Complex((*z).into()),
            ParamValue::Text(s) => ParamJson::Text(s.clone()),
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct CheckJson {
    pub suite: String,
    pub id: String,
    pub tag: String,
    pub label: String,
    pub parameters: BTreeMap<String, ParamJson>,
    pub lhs: Option<ComplexJson>,
    pub rhs: Option<ComplexJson>,
    pub error: Option<f64>,
    pub tolerance: f64,
    pub exact: bool,
    pub passed: bool,
    pub detail: Option<String>,
    pub wall_time_s: f64,
}

fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

impl CheckJson {
    pub fn new(suite: Suite, r: &CheckReport) -> Self {
        CheckJson {
            suite: suite.name().into(),
            id: r.id.name().into(),
            tag: r.id.tag().into(),
            label: r.label.clone(),
            parameters: r.parameters.iter().map(|(k, v)| (k.clone(), v.into())).collect(),
            lhs: r.lhs.map(Into::into),
            rhs: r.rhs.map(Into::into),
            error: finite(r.error),
            tolerance: r.tolerance,
            exact: r.exact,
            passed: r.passed,
            detail: r.detail.clone(),
            wall_time_s: r.wall_time.as_secs_f64(),
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct JobError {
    pub suite: String,
    pub job: String,
    pub message: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct ConfigEcho {
    pub suites: Vec<String>,
    pub b: f64,
    pub omega1: f64,
    pub omega2: f64,
    pub seed: u64,
    pub trials: usize,
    pub tolerances: BTreeMap<String, f64>,
    #[serde(rename = "max_N")]
    pub max_n: u32,
    #[serde(rename = "max_M")]
    pub max_m: u32,
    pub gl_rank: usize,
    pub workers: usize,
}

impl From<&RunConfig> for ConfigEcho {
    fn from(c: &RunConfig) -> Self {
        let p = &c.params;
        ConfigEcho {
            suites: c.suites.iter().map(|s| s.name().into()).collect(),
            b: p.b,
            omega1: p.omega1,
            omega2: p.omega2,
            seed: p.seed,
            trials: p.trials,
            tolerances: Suite::ALL
                .iter()
                .filter_map(|s| p.tolerances.get(*s).map(|t| (s.name().to_string(), t)))
                .collect(),
            max_n: p.max_n,
            max_m: p.max_m,
            gl_rank: p.gl_rank,
            workers: c.workers,
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct SuiteSummary {
    pub suite: String,
    pub total: usize,
    pub passed: usize,
    pub worst_error: Option<f64>,
    pub wall_time_s: f64,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
    pub suites: Vec<SuiteSummary>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct RunReport {
    pub tool: String,
    pub version: String,
    pub config: ConfigEcho,
    pub checks: Vec<CheckJson>,
    pub errors: Vec<JobError>,
    pub summary: Summary,
    pub wall_time_s: f64,
}

impl RunReport {
    pub fn new(config: &RunConfig, checks: Vec<CheckJson>, errors: Vec<JobError>, wall_time_s: f64) -> Self {
        let mut suites = Vec::new();
        for s in &config.suites {
            let mine: Vec<&CheckJson> = checks.iter().filter(|c| c.suite == s.name()).collect();
            let worst = mine.iter().map(|c| c.error.unwrap_or(f64::INFINITY)).fold(None, |acc: Option<f64>, e| {
                Some(acc.map_or(e, |a| a.max(e)))
            });
            suites.push(SuiteSummary {
                suite: s.name().into(),
                total: mine.len(),
                passed: mine.iter().filter(|c| c.passed).count(),
                worst_error: worst.and_then(finite),
                wall_time_s: mine.iter().map(|c| c.wall_time_s).sum(),
            });
        }
        let passed = checks.iter().filter(|c| c.passed).count();
        let summary = Summary { total: checks.len(), passed, failed: checks.len() - passed, errors: errors.len(), suites };
        RunReport {
            tool: "mdlab".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            config: config.into(),
            checks,
            errors,
            summary,
            wall_time_s,
        }
    }

    /// 0 when everything passed, 1 on a failed check, 3 on a job that could
    /// not run.
    pub fn exit_code(&self) -> i32 {
        if !self.errors.is_empty() {
            3
        } else if self.summary.failed > 0 {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The report with every timing zeroed, for reproducibility checks.
    pub fn without_timings(&self) -> Self {
        let mut r = self.clone();
        r.wall_time_s = 0.0;
        for c in &mut r.checks {
            c.wall_time_s = 0.0;
        }
        for s in &mut r.summary.suites {
            s.wall_time_s = 0.0;
        }
        r
    }

    /// Human-readable summary with one row per suite, then failures.
    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:<16} {:>7} {:>7} {:>12} {:>10}", "suite", "passed", "total", "worst err", "time [s]");
        for s in &self.summary.suites {
            let worst = s.worst_error.map_or("-".to_string(), |e| format!("{e:.2e}"));
            let _ = writeln!(out, "{:<16} {:>7} {:>7} {:>12} {:>10.2}", s.suite, s.passed, s.total, worst, s.wall_time_s);
        }
        let _ = writeln!(
            out,
            "total: {}/{} passed, {} errors, {:.2} s",
            self.summary.passed, self.summary.total, self.summary.errors, self.wall_time_s
        );
        for c in self.checks.iter().filter(|c| !c.passed) {
            let err = c.error.map_or("non-finite".to_string(), |e| format!("{e:.3e}"));
            let _ = writeln!(out, "FAIL {} {} [{}]: error {err}, tolerance {:.1e}", c.suite, c.id, c.label, c.tolerance);
        }
        for e in &self.errors {
            let _ = writeln!(out, "ERROR {} {}: {}", e.suite, e.job, e.message);
        }
        out
    }
}
