//! Structured pass/fail records shared by every check.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::time::Duration;

use num_complex::Complex64;

/// Every identity the toolkit can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    // G_b
    FunctionalEquation,
    GeneralShift,
    Reflection,
    SpecialValue,
    ZeroAtQ,
    Residue,
    Asymptotics,
    QExponentialShift,
    StripPathIndependence,
    // contour integrals
    TauBinomial,
    FourFive,
    SixNine,
    // symbolic
    Kac,
    MixedCommutatorE,
    MixedCommutatorF,
    SerreSumE,
    SerreSumF,
    QSerreE,
    QSerreF,
    CommutingCases,
    QBinomial,
    CoproductHomomorphism,
    Coassociativity,
    // difference-operator representation
    Representation,
}

impl IdentityId {
    pub const ALL: [IdentityId; 24] = [
        IdentityId::FunctionalEquation,
        IdentityId::GeneralShift,
        IdentityId::Reflection,
        IdentityId::SpecialValue,
        IdentityId::ZeroAtQ,
        IdentityId::Residue,
        IdentityId::Asymptotics,
        IdentityId::QExponentialShift,
        IdentityId::StripPathIndependence,
        IdentityId::TauBinomial,
        IdentityId::FourFive,
        IdentityId::SixNine,
        IdentityId::Kac,
        IdentityId::MixedCommutatorE,
        IdentityId::MixedCommutatorF,
        IdentityId::SerreSumE,
        IdentityId::SerreSumF,
        IdentityId::QSerreE,
        IdentityId::QSerreF,
        IdentityId::CommutingCases,
        IdentityId::QBinomial,
        IdentityId::CoproductHomomorphism,
        IdentityId::Coassociativity,
        IdentityId::Representation,
    ];

    /// Stable machine name used in reports.
    pub fn name(self) -> &'static str {
        match self {
            IdentityId::FunctionalEquation => "functional_equation",
            IdentityId::GeneralShift => "general_shift",
            IdentityId::Reflection => "reflection",
            IdentityId::SpecialValue => "special_value",
            IdentityId::ZeroAtQ => "zero_at_q",
            IdentityId::Residue => "residue",
            IdentityId::Asymptotics => "asymptotics",
            IdentityId::QExponentialShift => "q_exponential_shift",
            IdentityId::StripPathIndependence => "strip_path_independence",
            IdentityId::TauBinomial => "tau_binomial",
            IdentityId::FourFive => "four_five",
            IdentityId::SixNine => "six_nine",
            IdentityId::Kac => "kac",
            IdentityId::MixedCommutatorE => "mixed_commutator_e",
            IdentityId::MixedCommutatorF => "mixed_commutator_f",
            IdentityId::SerreSumE => "serre_sum_e",
            IdentityId::SerreSumF => "serre_sum_f",
            IdentityId::QSerreE => "q_serre_e",
            IdentityId::QSerreF => "q_serre_f",
            IdentityId::CommutingCases => "commuting_cases",
            IdentityId::QBinomial => "q_binomial",
            IdentityId::CoproductHomomorphism => "coproduct_homomorphism",
            IdentityId::Coassociativity => "coassociativity",
            IdentityId::Representation => "representation",
        }
    }

    /// Short human description of the identity, carried in every report.
    pub fn tag(self) -> &'static str {
        match self {
            IdentityId::FunctionalEquation => "G(z+b^±1) = (1-exp(2πi b^±1 z)) G(z)",
            IdentityId::GeneralShift => "G(z+n1 b+n2/b)/G(z) = double product",
            IdentityId::Reflection => "G(z) G(Q-z) = exp(πi z(z-Q))",
            IdentityId::SpecialValue => "G(b) = -ib, G(1/b) = -i/b",
            IdentityId::ZeroAtQ => "G(Q) = 0",
            IdentityId::Residue => "lim x G(x-n1 b-n2/b) as x→0",
            IdentityId::Asymptotics => "G(z) → conj(ζ_b) / ζ_b exp(πi z(z-Q)) as Im z → ±∞",
            IdentityId::QExponentialShift => "g(x/q) = (1+x) g(qx)",
            IdentityId::StripPathIndependence => "strip reduction by b first vs 1/b first",
            IdentityId::TauBinomial => "tau-binomial integral",
            IdentityId::FourFive => "4-5 relation",
            IdentityId::SixNine => "6-9 identity",
            IdentityId::Kac => "Kac identity for divided powers",
            IdentityId::MixedCommutatorE => "[ℰ^m, ℱ] closed form",
            IdentityId::MixedCommutatorF => "[ℰ, ℱ^m] closed form",
            IdentityId::SerreSumE => "ℰ_i^N ℰ_j^M through non-simple root",
            IdentityId::SerreSumF => "ℱ_i^N ℱ_j^M through non-simple root",
            IdentityId::QSerreE => "q-Serre relation for E",
            IdentityId::QSerreF => "q-Serre relation for F",
            IdentityId::CommutingCases => "commuting generator pairs",
            IdentityId::QBinomial => "(u+v)^N for uv = q² vu",
            IdentityId::CoproductHomomorphism => "Δ respects the defining relations",
            IdentityId::Coassociativity => "(Δ⊗id)Δ = (id⊗Δ)Δ",
            IdentityId::Representation => "modular double gl(N) relation",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|id| id.name() == name)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A named parameter echoed in a report.
#[derive(Debug, Clone, PartialEq)]
pub enum ParamValue {
    Real(f64),
    Complex(Complex64),
    Int(i64),
    Text(String),
}

impl From<f64> for ParamValue {
    fn from(v: f64) -> Self {
        ParamValue::Real(v)
    }
}
impl From<Complex64> for ParamValue {
    fn from(v: Complex64) -> Self {
        ParamValue::Complex(v)
    }
}
impl From<i64> for ParamValue {
    fn from(v: i64) -> Self {
        ParamValue::Int(v)
    }
}
impl From<usize> for ParamValue {
    fn from(v: usize) -> Self {
        ParamValue::Int(v as i64)
    }
}
impl From<u32> for ParamValue {
    fn from(v: u32) -> Self {
        ParamValue::Int(v as i64)
    }
}
impl From<&str> for ParamValue {
    fn from(v: &str) -> Self {
        ParamValue::Text(v.into())
    }
}
impl From<String> for ParamValue {
    fn from(v: String) -> Self {
        ParamValue::Text(v)
    }
}

/// Outcome of one identity check.
///
/// Numeric checks fill `lhs`/`rhs`; exact symbolic checks leave them empty,
/// report an error of `0` or `1`, and put the differing monomials into
/// `detail` on failure.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub id: IdentityId,
    /// Free-form label that distinguishes checks sharing an id.
    pub label: String,
    pub parameters: Vec<(String, ParamValue)>,
    pub lhs: Option<Complex64>,
    pub rhs: Option<Complex64>,
    pub error: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub detail: Option<String>,
    /// Exact checks ignore tolerance overrides.
    pub exact: bool,
    /// Filled in by the runner; pure computations leave it zero.
    pub wall_time: Duration,
}

impl CheckReport {
    pub fn numeric(
        id: IdentityId,
        label: impl Into<String>,
        lhs: Complex64,
        rhs: Complex64,
        error: f64,
        tolerance: f64,
    ) -> Self {
        let finite = lhs.re.is_finite() && lhs.im.is_finite() && rhs.re.is_finite() && rhs.im.is_finite();
        CheckReport {
            id,
            label: label.into(),
            parameters: Vec::new(),
            lhs: Some(lhs),
            rhs: Some(rhs),
            error,
            tolerance,
            passed: finite && error.is_finite() && error <= tolerance,
            detail: None,
            exact: false,
            wall_time: Duration::ZERO,
        }
    }

    /// A report for a check that carries only an error measure.
    pub fn measured(id: IdentityId, label: impl Into<String>, error: f64, tolerance: f64) -> Self {
        CheckReport {
            id,
            label: label.into(),
            parameters: Vec::new(),
            lhs: None,
            rhs: None,
            error,
            tolerance,
            passed: error.is_finite() && error <= tolerance,
            detail: None,
            exact: false,
            wall_time: Duration::ZERO,
        }
    }

    /// A report for an exact check: `mismatch` is `None` on equality.
    pub fn exact(id: IdentityId, label: impl Into<String>, mismatch: Option<String>) -> Self {
        let passed = mismatch.is_none();
        CheckReport {
            id,
            label: label.into(),
            parameters: Vec::new(),
            lhs: None,
            rhs: None,
            error: if passed { 0.0 } else { 1.0 },
            tolerance: 0.0,
            passed,
            detail: mismatch,
            exact: true,
            wall_time: Duration::ZERO,
        }
    }

    /// A report for a check that could not be carried out.
    pub fn failed(id: IdentityId, label: impl Into<String>, reason: impl Into<String>) -> Self {
        CheckReport {
            id,
            label: label.into(),
            parameters: Vec::new(),
            lhs: None,
            rhs: None,
            error: f64::INFINITY,
            tolerance: 0.0,
            passed: false,
            detail: Some(reason.into()),
            exact: false,
            wall_time: Duration::ZERO,
        }
    }

    /// Re-judges a numeric report against `tol`; exact reports and reports
    /// without a usable error are left alone.
    pub fn with_tolerance(mut self, tol: f64) -> Self {
        if self.exact || !self.error.is_finite() {
            return self;
        }
        let finite = [self.lhs, self.rhs].iter().flatten().all(|v| v.re.is_finite() && v.im.is_finite());
        self.tolerance = tol;
        self.passed = finite && self.error <= tol;
        self
    }

    pub fn with_param(mut self, name: &str, value: impl Into<ParamValue>) -> Self {
        self.parameters.push((name.into(), value.into()));
        self
    }
}

/// Relative distance `|a-b| / max(|a|, |b|)`, or the absolute distance when
/// both values vanish.
pub fn relative_error(a: Complex64, b: Complex64) -> f64 {
    let scale = a.norm().max(b.norm());
    let diff = (a - b).norm();
    if scale == 0.0 {
        diff
    } else {
        diff / scale
    }
}
