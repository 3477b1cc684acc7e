use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An input violated a documented precondition.
    Precondition(String),
    /// `G_b` was asked for its value at a pole.
    Pole { n1: u32, n2: u32 },
    /// Adaptive quadrature did not reach the requested accuracy.
    NoConvergence { estimate: f64, error: f64 },
    /// The integrand produced NaN or infinity on the contour.
    NonFinite(String),
    /// An intermediate product left the range of `f64`.
    Overflow(String),
    /// Integrand does not decay at one end of the contour.
    Divergent(String),
    /// A contour passes too close to a pole of the integrand.
    PoleProximity { distance: f64, required: f64 },
    /// The rewriting system exceeded its step budget.
    RewriteBudget(usize),
    /// An operator composition exceeded its term budget.
    TermBudget(usize),
    /// Index outside the range allowed by the rank.
    IndexOutOfRange(String),
    /// `q^{2k} = 1` made a product degenerate.
    Degenerate(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Precondition(m) => write!(f, "precondition violated: {m}"),
            Error::Pole { n1, n2 } => write!(f, "argument is the pole -({n1}b + {n2}/b)"),
            Error::NoConvergence { estimate, error } => {
                write!(f, "quadrature did not converge (estimate {estimate:e}, error {error:e})")
            }
            Error::NonFinite(m) => write!(f, "non-finite value: {m}"),
            Error::Overflow(m) => write!(f, "overflow: {m}"),
            Error::Divergent(m) => write!(f, "integrand does not decay: {m}"),
            Error::PoleProximity { distance, required } => write!(
                f,
                "contour passes within {distance:e} of a pole (need at least {required:e})"
            ),
            Error::RewriteBudget(n) => write!(f, "normal ordering exceeded {n} rewrite steps"),
            Error::TermBudget(n) => write!(f, "operator composition exceeded {n} terms"),
            Error::IndexOutOfRange(m) => write!(f, "index out of range: {m}"),
            Error::Degenerate(m) => write!(f, "degenerate parameter: {m}"),
        }
    }
}

impl core::error::Error for Error {}
