//! Ordered job lists for the four check suites.
//!
//! A [`SuiteConfig`] expands into a deterministic list of [`Job`]s; each job
//! is pure and can run on any thread. Reports come back in job order.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::contour::{verify_45, verify_69, verify_tau_binomial};
use crate::qalgebra::{SymbolicBounds, SymbolicJob, Variable, KAC_BOUND};
use crate::qdilog::{
    check_asymptotics, check_functional_equation, check_general_shift, check_path_independence,
    check_q_exponential_shift, check_reflection, check_residue, check_special_values, check_zero_at_q,
    off_strip_points, strip_grid, BParam,
};
use crate::quadrature::QuadratureConfig;
use crate::repcheck::{catalogue, verify_relation, OmegaParams, Relation, REPRESENTATION_TOL};
use crate::report::CheckReport;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Qdilog,
    Integrals,
    Symbolic,
    Representation,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Qdilog, Suite::Integrals, Suite::Symbolic, Suite::Representation];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Qdilog => "qdilog",
            Suite::Integrals => "integrals",
            Suite::Symbolic => "symbolic",
            Suite::Representation => "representation",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|x| x.name() == s)
    }

    /// Tolerance used when no override is given; `None` for exact suites.
    pub fn default_tolerance(self) -> Option<f64> {
        match self {
            Suite::Qdilog => Some(QDILOG_TOL),
            Suite::Integrals => Some(crate::contour::IDENTITY_TOL),
            Suite::Symbolic => None,
            Suite::Representation => Some(REPRESENTATION_TOL),
        }
    }
}

impl core::fmt::Display for Suite {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

/// Grid tolerance for the `G_b` identities.
pub const QDILOG_TOL: f64 = 1e-9;
pub const SPECIAL_VALUE_TOL: f64 = 1e-8;
pub const RESIDUE_TOL: f64 = 1e-4;
pub const ASYMPTOTIC_TOL: f64 = 1e-6;
/// Largest shift `n1, n2` in the general shift check.
pub const MAX_SHIFT: u32 = 3;
/// Largest `n1, n2` in the residue check.
pub const MAX_RESIDUE: u32 = 2;

/// Per-suite tolerance overrides.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Tolerances {
    pub qdilog: Option<f64>,
    pub integrals: Option<f64>,
    pub symbolic: Option<f64>,
    pub representation: Option<f64>,
}

impl Tolerances {
    pub fn get(&self, s: Suite) -> Option<f64> {
        match s {
            Suite::Qdilog => self.qdilog,
            Suite::Integrals => self.integrals,
            Suite::Symbolic => self.symbolic,
            Suite::Representation => self.representation,
        }
    }

    pub fn set(&mut self, s: Suite, tol: f64) -> Result<()> {
        if !(tol.is_finite() && tol > 0.0) {
            return Err(Error::Precondition(format!("tolerance for {s} must be positive, got {tol}")));
        }
        let slot = match s {
            Suite::Qdilog => &mut self.qdilog,
            Suite::Integrals => &mut self.integrals,
            Suite::Symbolic => &mut self.symbolic,
            Suite::Representation => &mut self.representation,
        };
        *slot = Some(tol);
        Ok(())
    }
}

/// Parameters shared by all suites.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub b: f64,
    pub omega1: f64,
    pub omega2: f64,
    pub seed: u64,
    pub trials: usize,
    pub tolerances: Tolerances,
    /// Kac bound on `N`; also bounds the commutator exponent, the Serre sums
    /// (`N + M ≤ max_n + 1`) and the q-binomial check (`N ≤ max_n + 2`).
    pub max_n: u32,
    /// Kac bound on `M`.
    pub max_m: u32,
    pub gl_rank: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            b: 0.83,
            omega1: 0.83,
            omega2: 1.0 / 0.83,
            seed: 42,
            trials: 20,
            tolerances: Tolerances::default(),
            max_n: 4,
            max_m: 4,
            gl_rank: 3,
        }
    }
}

impl SuiteConfig {
    /// Checks ranges without running anything.
    pub fn validate(&self) -> Result<()> {
        BParam::new(self.b)?;
        OmegaParams::new(self.omega1, self.omega2)?;
        if self.trials == 0 {
            return Err(Error::Precondition("trials must be at least 1".into()));
        }
        if self.max_n > KAC_BOUND || self.max_m > KAC_BOUND {
            return Err(Error::IndexOutOfRange(format!("symbolic bounds above {KAC_BOUND}")));
        }
        if !(2..=3).contains(&self.gl_rank) {
            return Err(Error::IndexOutOfRange(format!("gl rank {} not in {{2, 3}}", self.gl_rank)));
        }
        for s in Suite::ALL {
            if let Some(t) = self.tolerances.get(s) {
                if !(t.is_finite() && t > 0.0) {
                    return Err(Error::Precondition(format!("tolerance for {s} must be positive")));
                }
            }
        }
        Ok(())
    }

    pub fn symbolic_bounds(&self) -> SymbolicBounds {
        SymbolicBounds {
            kac: self.max_n.max(self.max_m),
            commutator: self.max_n,
            serre: self.max_n + 1,
            binomial: self.max_n + 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum QdilogJob {
    FunctionalEquation { inverse: bool },
    GeneralShift { n1: u32, n2: u32 },
    Reflection,
    SpecialValues,
    ZeroAtQ,
    Residue { n1: u32, n2: u32 },
    Asymptotics { t: f64 },
    QExponentialShift { x: f64 },
    PathIndependence,
}

/// Contour parameters as fractions of `Q` plus an imaginary part.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QPoint {
    pub q_fraction: f64,
    pub im: f64,
}

const fn qp(den: f64, im: f64) -> QPoint {
    QPoint { q_fraction: 1.0 / den, im }
}

impl QPoint {
    fn at(self, p: &BParam) -> Complex64 {
        Complex64::new(p.big_q * self.q_fraction, self.im)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ContourJob {
    TauBinomial([QPoint; 2]),
    FourFive([QPoint; 3]),
    SixNine([QPoint; 4]),
}

pub const TAU_BINOMIAL_SETS: [[QPoint; 2]; 3] = [
    [qp(3.0, 0.0), qp(3.0, 0.0)],
    [qp(4.0, 0.0), qp(3.0, 0.0)],
    [qp(5.0, 0.2), qp(4.0, -0.1)],
];

pub const FOUR_FIVE_SETS: [[QPoint; 3]; 3] = [
    [qp(5.0, 0.0), qp(5.0, 0.0), qp(6.0, 0.0)],
    [qp(4.0, 0.0), qp(5.0, 0.0), qp(7.0, 0.0)],
    [qp(6.0, 0.1), qp(5.0, -0.2), qp(8.0, 0.05)],
];

pub const SIX_NINE_SETS: [[QPoint; 4]; 3] = [
    [qp(6.0, 0.0), qp(6.0, 0.0), qp(6.0, 0.0), qp(5.0, 0.0)],
    [qp(7.0, 0.0), qp(6.0, 0.0), qp(5.0, 0.0), qp(4.0, 0.0)],
    [qp(8.0, 0.1), qp(7.0, 0.0), qp(6.0, -0.1), qp(5.0, 0.0)],
];

/// One independent unit of work.
#[derive(Clone, Debug, PartialEq)]
pub enum Job {
    Qdilog(QdilogJob),
    Contour(ContourJob),
    Symbolic(SymbolicJob, Variable),
    Representation(Relation),
}

impl Job {
    pub fn suite(&self) -> Suite {
        match self {
            Job::Qdilog(_) => Suite::Qdilog,
            Job::Contour(_) => Suite::Integrals,
            Job::Symbolic(..) => Suite::Symbolic,
            Job::Representation(_) => Suite::Representation,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Job::Qdilog(j) => format!("{j:?}"),
            Job::Contour(j) => format!("{j:?}"),
            Job::Symbolic(j, v) => format!("{j:?} [{}]", v.name()),
            Job::Representation(r) => r.name(),
        }
    }

    /// Runs the job; the suite's tolerance override, if any, re-judges the
    /// numeric reports.
    pub fn run(&self, cfg: &SuiteConfig) -> Result<Vec<CheckReport>> {
        let reports = match self {
            Job::Qdilog(j) => run_qdilog(*j, cfg)?,
            Job::Contour(j) => run_contour(*j, cfg)?,
            Job::Symbolic(j, v) => j.run(*v)?,
            Job::Representation(rel) => {
                let p = OmegaParams::new(cfg.omega1, cfg.omega2)?;
                vec![verify_relation(*rel, cfg.gl_rank, cfg.trials, p, cfg.seed)]
            }
        };
        Ok(match cfg.tolerances.get(self.suite()) {
            Some(t) => reports.into_iter().map(|r| r.with_tolerance(t)).collect(),
            None => reports,
        })
    }
}

fn run_qdilog(job: QdilogJob, cfg: &SuiteConfig) -> Result<Vec<CheckReport>> {
    let p = BParam::new(cfg.b)?;
    let q = QuadratureConfig::strip();
    let grid = || strip_grid(&p, 10, 10, 1.5);
    Ok(match job {
        QdilogJob::FunctionalEquation { inverse } => {
            vec![check_functional_equation(&grid(), inverse, &p, &q, QDILOG_TOL)]
        }
        QdilogJob::GeneralShift { n1, n2 } => vec![check_general_shift(&grid(), n1, n2, &p, &q, QDILOG_TOL)],
        QdilogJob::Reflection => vec![check_reflection(&grid(), &p, &q, QDILOG_TOL)],
        QdilogJob::SpecialValues => check_special_values(&p, &q, SPECIAL_VALUE_TOL),
        QdilogJob::ZeroAtQ => vec![check_zero_at_q(&p, &q)],
        QdilogJob::Residue { n1, n2 } => vec![check_residue(n1, n2, &p, &q, RESIDUE_TOL)],
        QdilogJob::Asymptotics { t } => vec![check_asymptotics(p.big_q / 2.0, t, &p, &q, ASYMPTOTIC_TOL)?],
        QdilogJob::QExponentialShift { x } => vec![check_q_exponential_shift(x, &p, &q, QDILOG_TOL)],
        QdilogJob::PathIndependence => vec![check_path_independence(&off_strip_points(&p), &p, &q, QDILOG_TOL)],
    })
}

fn run_contour(job: ContourJob, cfg: &SuiteConfig) -> Result<Vec<CheckReport>> {
    let p = BParam::new(cfg.b)?;
    let q = QuadratureConfig::identity();
    let report = match job {
        ContourJob::TauBinomial([a, b]) => verify_tau_binomial(a.at(&p), b.at(&p), &p, &q)?,
        ContourJob::FourFive([a, b, g]) => verify_45(a.at(&p), b.at(&p), g.at(&p), &p, &q)?,
        ContourJob::SixNine([a, b, c, d]) => verify_69(a.at(&p), b.at(&p), c.at(&p), d.at(&p), &p, &q)?,
    };
    Ok(vec![report])
}

pub fn qdilog_jobs() -> Vec<QdilogJob> {
    let mut jobs = vec![
        QdilogJob::FunctionalEquation { inverse: false },
        QdilogJob::FunctionalEquation { inverse: true },
    ];
    for n1 in 0..=MAX_SHIFT {
        for n2 in 0..=MAX_SHIFT {
            jobs.push(QdilogJob::GeneralShift { n1, n2 });
        }
    }
    jobs.extend([QdilogJob::Reflection, QdilogJob::SpecialValues, QdilogJob::ZeroAtQ]);
    for n1 in 0..=MAX_RESIDUE {
        for n2 in 0..=MAX_RESIDUE {
            jobs.push(QdilogJob::Residue { n1, n2 });
        }
    }
    jobs.extend([QdilogJob::Asymptotics { t: 8.0 }, QdilogJob::Asymptotics { t: 10.0 }]);
    jobs.extend([0.4, 1.0, 3.0].map(|x| QdilogJob::QExponentialShift { x }));
    jobs.push(QdilogJob::PathIndependence);
    jobs
}

pub fn contour_jobs() -> Vec<ContourJob> {
    let mut jobs: Vec<ContourJob> = TAU_BINOMIAL_SETS.iter().map(|s| ContourJob::TauBinomial(*s)).collect();
    jobs.extend(FOUR_FIVE_SETS.iter().map(|s| ContourJob::FourFive(*s)));
    jobs.extend(SIX_NINE_SETS.iter().map(|s| ContourJob::SixNine(*s)));
    jobs
}

/// The jobs of the selected suites, in suite order then a fixed order
/// within each suite. The symbolic jobs run once per reading of `v`.
pub fn jobs(suites: &[Suite], cfg: &SuiteConfig) -> Vec<Job> {
    let mut selected: Vec<Suite> = suites.to_vec();
    selected.sort();
    selected.dedup();
    let mut out = Vec::new();
    for s in selected {
        match s {
            Suite::Qdilog => out.extend(qdilog_jobs().into_iter().map(Job::Qdilog)),
            Suite::Integrals => out.extend(contour_jobs().into_iter().map(Job::Contour)),
            Suite::Symbolic => {
                let sym: Vec<SymbolicJob> = crate::qalgebra::symbolic_jobs(cfg.symbolic_bounds())
                    .into_iter()
                    .filter(|j| !matches!(j, SymbolicJob::Kac(n, m) if *n > cfg.max_n || *m > cfg.max_m))
                    .collect();
                for v in [Variable::Q, Variable::QTilde] {
                    out.extend(sym.iter().map(|j| Job::Symbolic(*j, v)));
                }
            }
            Suite::Representation => out.extend(catalogue(cfg.gl_rank).into_iter().map(Job::Representation)),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn job_lists_are_ordered_and_deduplicated() {
        let cfg = SuiteConfig::default();
        let a = jobs(&[Suite::Integrals, Suite::Qdilog, Suite::Integrals], &cfg);
        let b = jobs(&[Suite::Qdilog, Suite::Integrals], &cfg);
        assert_eq!(a, b);
        assert_eq!(a.first().map(Job::suite), Some(Suite::Qdilog));
        assert_eq!(a.len(), qdilog_jobs().len() + 9);
    }

    #[test]
    fn symbolic_bounds_follow_max_n_and_max_m() {
        let cfg = SuiteConfig { max_n: 2, max_m: 1, ..Default::default() };
        let kac: Vec<_> = jobs(&[Suite::Symbolic], &cfg)
            .into_iter()
            .filter_map(|j| match j {
                Job::Symbolic(SymbolicJob::Kac(n, m), Variable::Q) => Some((n, m)),
                _ => None,
            })
            .collect();
        assert_eq!(kac.len(), 3 * 2);
        assert!(kac.iter().all(|&(n, m)| n <= 2 && m <= 1));
    }

    #[test]
    fn validation_rejects_bad_values() {
        assert!(SuiteConfig::default().validate().is_ok());
        assert!(SuiteConfig { gl_rank: 4, ..Default::default() }.validate().is_err());
        assert!(SuiteConfig { trials: 0, ..Default::default() }.validate().is_err());
        let mut t = Tolerances::default();
        assert!(t.set(Suite::Qdilog, 0.0).is_err());
        assert!(t.set(Suite::Qdilog, 1e-3).is_ok());
    }
}
