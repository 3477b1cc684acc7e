//! Direct numerical checks of the scalar contour-integral identities built
//! from `G_b`: the tau-binomial integral, the 4-5 relation and the 6-9
//! identity.
//!
//! Every integrand is a product of `G_b(shift + i·k·τ)` factors (in the
//! numerator or the denominator) times an elementary exponential. Each factor
//! contributes a half-line of poles in `Im τ`, so the admissible contour
//! heights form an open interval. The contour is placed at its midpoint unless
//! the caller asks for a specific height.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qdilog::{eval_gb, BParam};
use crate::quadrature::{integrate_line, QuadratureConfig};
use crate::report::{relative_error, CheckReport, IdentityId};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Relative tolerance for the identity checks.
pub const IDENTITY_TOL: f64 = 1e-6;

/// Probe points used to confirm decay before integrating.
const DECAY_PROBES: [f64; 4] = [4.0, 8.0, 16.0, 32.0];

/// Options shared by the three identity checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourOptions {
    /// Quadrature along the outer contour.
    pub quad: QuadratureConfig,
    /// Quadrature used for each `G_b` evaluation.
    pub gb: QuadratureConfig,
    pub tolerance: f64,
    /// Contour height; `None` selects the midpoint of the admissible window.
    pub offset: Option<f64>,
}

impl Default for ContourOptions {
    fn default() -> Self {
        ContourOptions {
            quad: QuadratureConfig::identity(),
            gb: QuadratureConfig::strip(),
            tolerance: IDENTITY_TOL,
            offset: None,
        }
    }
}

/// One factor `G_b(shift + i·slope·τ)^{±1}` of an integrand.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GbFactor {
    pub shift: Complex64,
    /// Real coefficient `k` of `iτ`; nonzero.
    pub slope: f64,
    pub inverse: bool,
}

impl GbFactor {
    pub fn num(shift: Complex64, slope: f64) -> Self {
        GbFactor { shift, slope, inverse: false }
    }

    pub fn den(shift: Complex64, slope: f64) -> Self {
        GbFactor { shift, slope, inverse: true }
    }

    /// The pole half-line in `Im τ` as `(start, upward)`.
    ///
    /// Poles of `G_b(w)` sit at `w = -L`, zeros at `w = Q + L` with `L ≥ 0` on
    /// the lattice `n1·b + n2/b`; with `w = shift + ik(x + iy)` the real part
    /// of `w` is `Re shift - k·y`.
    pub fn pole_ray(&self, p: &BParam) -> (f64, bool) {
        let k = self.slope;
        if self.inverse {
            ((self.shift.re - p.big_q) / k, k < 0.0)
        } else {
            (self.shift.re / k, k > 0.0)
        }
    }
}

/// Open interval of contour heights that separate upward from downward pole
/// sequences.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourWindow {
    pub lower: f64,
    pub upper: f64,
}

impl ContourWindow {
    pub fn from_factors(factors: &[GbFactor], p: &BParam) -> Result<Self> {
        let mut lower = f64::NEG_INFINITY;
        let mut upper = f64::INFINITY;
        for f in factors {
            if f.slope == 0.0 || !f.slope.is_finite() {
                return Err(Error::Precondition(format!("factor slope must be nonzero, got {}", f.slope)));
            }
            let (start, up) = f.pole_ray(p);
            if up {
                upper = upper.min(start);
            } else {
                lower = lower.max(start);
            }
        }
        if !lower.is_finite() || !upper.is_finite() || lower >= upper {
            return Err(Error::Precondition(format!(
                "no contour separates the pole sequences (window [{lower}, {upper}])"
            )));
        }
        Ok(ContourWindow { lower, upper })
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lower + self.upper)
    }

    /// Distance from `offset` to the nearest pole sequence.
    pub fn clearance(&self, offset: f64) -> f64 {
        (offset - self.lower).min(self.upper - offset)
    }

    /// Checks that `offset` keeps at least a tenth of the midpoint clearance.
    pub fn admit(&self, offset: f64) -> Result<()> {
        let required = 0.1 * self.clearance(self.midpoint());
        let distance = self.clearance(offset);
        if distance < required {
            return Err(Error::PoleProximity { distance: distance.max(0.0), required });
        }
        Ok(())
    }
}

/// A line integrand `prefactor(τ) · ∏ G_b(...)^{±1}` with a constant measure.
pub struct LineIntegrand<'a> {
    pub factors: Vec<GbFactor>,
    /// Logarithm of the elementary prefactor.
    pub log_prefactor: &'a dyn Fn(Complex64) -> Complex64,
    pub measure: f64,
}

impl LineIntegrand<'_> {
    pub fn eval(&self, tau: Complex64, p: &BParam, gb: &QuadratureConfig) -> Result<Complex64> {
        let mut v = (self.log_prefactor)(tau).exp();
        for f in &self.factors {
            let g = eval_gb(f.shift + I * f.slope * tau, p, gb)?;
            if f.inverse {
                if g.norm() == 0.0 {
                    return Err(Error::NonFinite(format!("denominator vanishes at τ = {tau}")));
                }
                v /= g;
            } else {
                v *= g;
            }
        }
        Ok(v * self.measure)
    }

    /// Samples `|f|` at growing `|Re τ|` on both ends and rejects integrands
    /// that do not fall off.
    pub fn validate_decay(&self, offset: f64, p: &BParam, gb: &QuadratureConfig) -> Result<()> {
        let centre = self.eval(Complex64::new(0.0, offset), p, gb)?.norm();
        for (sign, end) in [(1.0, "+∞"), (-1.0, "-∞")] {
            let mut prev = f64::INFINITY;
            let mut first = 0.0;
            for (i, &t) in DECAY_PROBES.iter().enumerate() {
                let v = match self.eval(Complex64::new(sign * t, offset), p, gb) {
                    Ok(v) => v.norm(),
                    Err(Error::Overflow(_)) => f64::INFINITY,
                    Err(e) => return Err(e),
                };
                if !v.is_finite() || (v > prev && v > 1e-300) {
                    return Err(Error::Divergent(format!("integrand grows towards Re τ → {end}")));
                }
                if i == 0 {
                    first = v.max(centre);
                }
                prev = v;
            }
            if prev > 1e-3 * first && prev > 1e-300 {
                return Err(Error::Divergent(format!(
                    "integrand decays too slowly towards Re τ → {end} (|f| = {prev:e} at {})",
                    DECAY_PROBES[DECAY_PROBES.len() - 1]
                )));
            }
        }
        Ok(())
    }
}

/// Runs the window, decay and quadrature steps and compares with `rhs`.
fn run_check(
    id: IdentityId,
    label: String,
    integrand: &LineIntegrand<'_>,
    rhs: Complex64,
    p: &BParam,
    opts: &ContourOptions,
) -> Result<CheckReport> {
    let window = ContourWindow::from_factors(&integrand.factors, p)?;
    let offset = opts.offset.unwrap_or_else(|| window.midpoint());
    window.admit(offset)?;
    integrand.validate_decay(offset, p, &opts.gb)?;

    let mut failure = None;
    let est = integrate_line(
        |tau| match integrand.eval(tau, p, &opts.gb) {
            Ok(v) => v,
            Err(e) => {
                failure.get_or_insert(e);
                Complex64::new(f64::NAN, f64::NAN)
            }
        },
        offset,
        &opts.quad,
    );
    if let Some(e) = failure {
        return Err(e);
    }
    let est = est?;
    if !(rhs.re.is_finite() && rhs.im.is_finite()) {
        return Err(Error::NonFinite(format!("right-hand side is {rhs}")));
    }
    Ok(CheckReport::numeric(id, label, est.value, rhs, relative_error(est.value, rhs), opts.tolerance)
        .with_param("b", p.b)
        .with_param("offset", offset)
        .with_param("window_lower", window.lower)
        .with_param("window_upper", window.upper)
        .with_param("quadrature_error", est.error)
        .with_param("evaluations", est.evaluations))
}

fn gb(z: Complex64, p: &BParam, opts: &ContourOptions) -> Result<Complex64> {
    eval_gb(z, p, &opts.gb)
}

/// Integrand of the tau-binomial integral, measure `b·dτ` included.
pub fn tau_binomial_integrand(
    alpha: Complex64,
    beta: Complex64,
    p: &BParam,
) -> (Vec<GbFactor>, impl Fn(Complex64) -> Complex64, f64) {
    let b = p.b;
    let factors = alloc::vec![
        GbFactor::num(alpha, b),
        GbFactor::den(Complex64::new(p.big_q, 0.0), b),
    ];
    (factors, move |tau: Complex64| -2.0 * PI * b * beta * tau, b)
}

/// `b ∫ e^{-2πbβτ} G_b(α+ibτ)/G_b(Q+ibτ) dτ = G_b(α)G_b(β)/G_b(α+β)`.
///
/// Needs `Re α > 0`, `Re β > 0` and `Re(α+β) < Q`.
pub fn verify_tau_binomial(
    alpha: Complex64,
    beta: Complex64,
    p: &BParam,
    cfg: &QuadratureConfig,
) -> Result<CheckReport> {
    verify_tau_binomial_with(alpha, beta, p, &ContourOptions { quad: *cfg, ..Default::default() })
}

pub fn verify_tau_binomial_with(
    alpha: Complex64,
    beta: Complex64,
    p: &BParam,
    opts: &ContourOptions,
) -> Result<CheckReport> {
    if !(alpha.re > 0.0 && beta.re > 0.0 && (alpha + beta).re < p.big_q) {
        return Err(Error::Precondition(format!(
            "tau-binomial needs Re α > 0, Re β > 0, Re(α+β) < Q; got α = {alpha}, β = {beta}"
        )));
    }
    let (factors, pre, measure) = tau_binomial_integrand(alpha, beta, p);
    let integrand = LineIntegrand { factors, log_prefactor: &pre, measure };
    let rhs = gb(alpha, p, opts)? * gb(beta, p, opts)? / gb(alpha + beta, p, opts)?;
    Ok(run_check(IdentityId::TauBinomial, format!("α={alpha}, β={beta}"), &integrand, rhs, p, opts)?
        .with_param("alpha", alpha)
        .with_param("beta", beta))
}

/// `∫ e^{2πi(iα+τ)(iβ+τ)} G(α-iτ)G(β-iτ)G(γ+iτ)G(iτ) dτ
///  = G(α)G(β)G(α+γ)G(β+γ)/G(α+β+γ)`.
pub fn verify_45(
    alpha: Complex64,
    beta: Complex64,
    gamma: Complex64,
    p: &BParam,
    cfg: &QuadratureConfig,
) -> Result<CheckReport> {
    verify_45_with(alpha, beta, gamma, p, &ContourOptions { quad: *cfg, ..Default::default() })
}

pub fn verify_45_with(
    alpha: Complex64,
    beta: Complex64,
    gamma: Complex64,
    p: &BParam,
    opts: &ContourOptions,
) -> Result<CheckReport> {
    let zero = Complex64::new(0.0, 0.0);
    let factors = alloc::vec![
        GbFactor::num(alpha, -1.0),
        GbFactor::num(beta, -1.0),
        GbFactor::num(gamma, 1.0),
        GbFactor::num(zero, 1.0),
    ];
    let pre = move |tau: Complex64| 2.0 * PI * I * (I * alpha + tau) * (I * beta + tau);
    let integrand = LineIntegrand { factors, log_prefactor: &pre, measure: 1.0 };
    let rhs = gb(alpha, p, opts)? * gb(beta, p, opts)? * gb(alpha + gamma, p, opts)? * gb(beta + gamma, p, opts)?
        / gb(alpha + beta + gamma, p, opts)?;
    Ok(run_check(
        IdentityId::FourFive,
        format!("α={alpha}, β={beta}, γ={gamma}"),
        &integrand,
        rhs,
        p,
        opts,
    )?
    .with_param("alpha", alpha)
    .with_param("beta", beta)
    .with_param("gamma", gamma))
}

/// `∫ e^{2πiτ² - 2πDτ} G(A+iτ)G(B+iτ)G(C+iτ)G(D-iτ)G(-iτ)/G(A+B+C+D+iτ) dτ
///  = G(A)G(B)G(C)G(A+D)G(B+D)G(C+D) / (G(A+B+D)G(A+C+D)G(B+C+D))`.
pub fn verify_69(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
    p: &BParam,
    cfg: &QuadratureConfig,
) -> Result<CheckReport> {
    verify_69_with(a, b, c, d, p, &ContourOptions { quad: *cfg, ..Default::default() })
}

pub fn verify_69_with(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
    p: &BParam,
    opts: &ContourOptions,
) -> Result<CheckReport> {
    let zero = Complex64::new(0.0, 0.0);
    let factors = alloc::vec![
        GbFactor::num(a, 1.0),
        GbFactor::num(b, 1.0),
        GbFactor::num(c, 1.0),
        GbFactor::num(d, -1.0),
        GbFactor::num(zero, -1.0),
        GbFactor::den(a + b + c + d, 1.0),
    ];
    let pre = move |tau: Complex64| 2.0 * PI * I * tau * tau - 2.0 * PI * d * tau;
    let integrand = LineIntegrand { factors, log_prefactor: &pre, measure: 1.0 };
    let g = |z| gb(z, p, opts);
    let rhs = g(a)? * g(b)? * g(c)? * g(a + d)? * g(b + d)? * g(c + d)?
        / (g(a + b + d)? * g(a + c + d)? * g(b + c + d)?);
    Ok(run_check(
        IdentityId::SixNine,
        format!("A={a}, B={b}, C={c}, D={d}"),
        &integrand,
        rhs,
        p,
        opts,
    )?
    .with_param("A", a)
    .with_param("B", b)
    .with_param("C", c)
    .with_param("D", d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn tau_binomial_window_is_zero_to_alpha_over_b() {
        let p = BParam::new(0.83).unwrap();
        let alpha = r(p.big_q / 3.0);
        let (factors, _, _) = tau_binomial_integrand(alpha, r(0.2), &p);
        let w = ContourWindow::from_factors(&factors, &p).unwrap();
        assert!(w.lower.abs() < 1e-15);
        assert!((w.upper - alpha.re / p.b).abs() < 1e-14);
        assert!((w.midpoint() - alpha.re / (2.0 * p.b)).abs() < 1e-14);
    }

    #[test]
    fn four_five_window_sits_below_zero() {
        let p = BParam::new(0.83).unwrap();
        let factors = [
            GbFactor::num(r(0.3), -1.0),
            GbFactor::num(r(0.5), -1.0),
            GbFactor::num(r(0.4), 1.0),
            GbFactor::num(r(0.0), 1.0),
        ];
        let w = ContourWindow::from_factors(&factors, &p).unwrap();
        assert_eq!((w.lower, w.upper), (-0.3, 0.0));
    }

    #[test]
    fn empty_window_is_rejected() {
        let p = BParam::new(0.83).unwrap();
        let factors = [GbFactor::num(r(-0.1), 1.0), GbFactor::num(r(0.0), -1.0)];
        assert!(matches!(ContourWindow::from_factors(&factors, &p), Err(Error::Precondition(_))));
    }

    #[test]
    fn offsets_near_the_window_edge_are_rejected() {
        let w = ContourWindow { lower: 0.0, upper: 1.0 };
        assert!(w.admit(0.5).is_ok());
        assert!(w.admit(0.06).is_ok());
        assert!(matches!(w.admit(0.01), Err(Error::PoleProximity { .. })));
        assert!(matches!(w.admit(1.2), Err(Error::PoleProximity { .. })));
    }

    #[test]
    fn tau_binomial_preconditions() {
        let p = BParam::new(0.83).unwrap();
        let cfg = QuadratureConfig::identity();
        assert!(verify_tau_binomial(r(-0.1), r(0.3), &p, &cfg).is_err());
        assert!(verify_tau_binomial(r(1.0), r(1.0), &p, &cfg).is_err());
    }

    #[test]
    fn growing_integrand_is_reported() {
        let p = BParam::new(0.83).unwrap();
        let pre = |tau: Complex64| 0.5 * tau;
        let integrand = LineIntegrand { factors: Vec::new(), log_prefactor: &pre, measure: 1.0 };
        match integrand.validate_decay(0.0, &p, &QuadratureConfig::strip()) {
            Err(Error::Divergent(m)) => assert!(m.contains("+∞")),
            other => panic!("expected divergence, got {other:?}"),
        }
    }
}
