//! The non-compact quantum dilogarithm `G_b(z)` and its companion `g_b(x)`.
//!
//! Inside the strip `0 < Re z < Q` the logarithm is computed from its
//! integral representation along the line `ℝ + iε`. Everywhere else the
//! argument is first carried into the strip with the functional equations
//! `G(z + b^{±1}) = (1 - e^{2πi b^{±1} z}) G(z)`, accumulating the factors in
//! logarithmic form. Arguments deep in the lower half-plane go through the
//! reflection formula instead, because the integrand there is exponentially
//! large compared with the result.

use alloc::format;
use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::quadrature::{integrate_interval, QuadratureConfig};
use crate::report::{CheckReport, IdentityId};

mod checks;

pub use checks::*;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Lattice tolerance used by [`eval_gb`] to recognise exact poles and zeros.
pub const LATTICE_TOL: f64 = 1e-12;

/// Below this imaginary part the strip evaluation goes through reflection.
pub const REFLECT_BELOW_IM: f64 = -4.0;

/// The deformation parameter `b` with its derived constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BParam {
    pub b: f64,
    /// `Q = b + 1/b`.
    pub big_q: f64,
    /// `q = exp(πi b²)`.
    pub q: Complex64,
    /// `q̃ = exp(πi/b²)`.
    pub qtilde: Complex64,
    /// `ζ_b = exp(πi/4 + πi(b² + b⁻²)/12)`.
    pub zeta: Complex64,
    pub omega1: f64,
    pub omega2: f64,
}

impl BParam {
    pub fn new(b: f64) -> Result<Self> {
        if !(b.is_finite() && b > 0.0) {
            return Err(Error::Precondition(format!("b must be positive and finite, got {b}")));
        }
        let b2 = b * b;
        let ib2 = 1.0 / b2;
        Ok(BParam {
            b,
            big_q: b + 1.0 / b,
            q: (I * PI * b2).exp(),
            qtilde: (I * PI * ib2).exp(),
            zeta: (I * (PI / 4.0 + PI * (b2 + ib2) / 12.0)).exp(),
            omega1: b,
            omega2: 1.0 / b,
        })
    }

    pub fn zeta_conj(&self) -> Complex64 {
        self.zeta.conj()
    }

    /// `log ζ̄_b`, the purely imaginary constant of the integral representation.
    pub fn log_zeta_conj(&self) -> Complex64 {
        let b2 = self.b * self.b;
        -I * (PI / 4.0 + PI * (b2 + 1.0 / b2) / 12.0)
    }

    /// Smallest `k ≤ 8` with `|q^{2k} - 1| < 1e-6` or `|q̃^{2k} - 1| < 1e-6`.
    ///
    /// Such `b` are numerically close to `b²` rational with a small
    /// denominator; identities with `(1 - q^{2k})` denominators lose accuracy.
    pub fn degeneracy(&self) -> Option<u32> {
        (1..=8u32).find(|&k| {
            let k = k as i32;
            (self.q.powi(2 * k) - 1.0).norm() < 1e-6 || (self.qtilde.powi(2 * k) - 1.0).norm() < 1e-6
        })
    }

    pub(crate) fn min_step(&self) -> f64 {
        self.b.min(1.0 / self.b)
    }
}

/// Pole/zero classification of a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoleZeroClass {
    Regular,
    /// `z = -n1·b - n2/b`.
    Pole { n1: u32, n2: u32 },
    /// `z = Q + n1·b + n2/b`.
    Zero { n1: u32, n2: u32 },
}

/// Nearest lattice point `n1·b + n2/b` (`n1, n2 ≥ 0`) to the real number `x`.
fn nearest_lattice(x: f64, b: f64) -> Option<(u32, u32, f64)> {
    if x < -0.5 * b.min(1.0 / b) {
        return None;
    }
    let mut best: Option<(u32, u32, f64)> = None;
    let max_n1 = (x / b).floor().max(0.0) as u32 + 1;
    for n1 in 0..=max_n1 {
        let rest = x - n1 as f64 * b;
        let n2 = (rest * b).round().max(0.0);
        let d = (rest - n2 / b).abs();
        if best.is_none_or(|(_, _, bd)| d < bd) {
            best = Some((n1, n2 as u32, d));
        }
    }
    best
}

/// Classify `z` as a pole, a zero or a regular point of `G_b` within `tol`.
///
/// When both a pole and a zero are within `tol` the nearer one wins.
pub fn classify(z: Complex64, p: &BParam, tol: f64) -> PoleZeroClass {
    if z.im.abs() > tol {
        return PoleZeroClass::Regular;
    }
    let pole = nearest_lattice(-z.re, p.b).map(|(n1, n2, d)| (n1, n2, d.hypot(z.im)));
    let zero = nearest_lattice(z.re - p.big_q, p.b).map(|(n1, n2, d)| (n1, n2, d.hypot(z.im)));
    match (pole, zero) {
        (Some((n1, n2, dp)), Some((_, _, dz))) if dp <= tol && dp <= dz => PoleZeroClass::Pole { n1, n2 },
        (Some((n1, n2, dp)), None) if dp <= tol => PoleZeroClass::Pole { n1, n2 },
        (_, Some((n1, n2, dz))) if dz <= tol => PoleZeroClass::Zero { n1, n2 },
        _ => PoleZeroClass::Regular,
    }
}

/// `e^w - 1` without cancellation for small `w`.
pub(crate) fn expm1(w: Complex64) -> Complex64 {
    let (s, c) = w.im.sin_cos();
    let half = (0.5 * w.im).sin();
    Complex64::new(w.re.exp_m1() * c - 2.0 * half * half, w.re.exp() * s)
}

/// `log(1 - e^w)` modulo `2πi`, stable for large `|Re w|`.
pub(crate) fn ln_one_minus_exp(w: Complex64) -> Complex64 {
    if w.re > 0.0 {
        // 1 - e^w = e^w (e^{-w} - 1)
        w + expm1(-w).ln()
    } else {
        (-expm1(w)).ln()
    }
}

/// Elevation of the integration line for the `log G_b` integral.
pub fn strip_offset(p: &BParam, cfg: &QuadratureConfig) -> f64 {
    0.5 * (PI * p.b).min(PI / p.b) * cfg.offset_fraction
}

fn strip_tail_bound(decay: f64, t: f64, scale: f64, b: f64) -> f64 {
    let denom = decay * t * (1.0 - (-b * t).exp()) * (1.0 - (-t / b).exp());
    scale * (-decay * t).exp() / denom
}

/// `log G_b(z)` for `z` strictly inside the strip, by quadrature of the
/// integral representation along `ℝ + iε`.
///
/// The line is truncated where the analytic tail bound (exponential decay
/// with rates `Re z` and `Q - Re z`) drops below `abs_tol/10`.
pub fn eval_log_gb_strip(z: Complex64, p: &BParam, cfg: &QuadratureConfig) -> Result<Complex64> {
    cfg.validate()?;
    let margin = cfg.strip_margin.min(0.45 * p.min_step());
    if !(z.re >= margin && z.re <= p.big_q - margin) || !z.im.is_finite() {
        return Err(Error::Precondition(format!(
            "Re z = {} is not inside the strip (margin {margin}, Q = {})",
            z.re, p.big_q
        )));
    }
    let b = p.b;
    let inv_b = 1.0 / b;
    let q_sum = p.big_q;
    let eps = strip_offset(p, cfg);
    let scale = (-z.im * eps).exp();
    let target = cfg.abs_tol / 10.0;

    let mut t_right = 4.0;
    while strip_tail_bound(q_sum - z.re, t_right, scale, b) > target {
        t_right *= 2.0;
        if t_right > cfg.max_t {
            return Err(Error::Divergent(format!("right tail of log G_b at z = {z}")));
        }
    }
    let mut t_left = 4.0;
    while strip_tail_bound(z.re, t_left, scale, b) > target {
        t_left *= 2.0;
        if t_left > cfg.max_t {
            return Err(Error::Divergent(format!("left tail of log G_b at z = {z}")));
        }
    }

    let integrand = |x: f64| -> Result<Complex64> {
        let t = Complex64::new(x, eps);
        let v = if x <= 0.0 {
            (z * t).exp() / (t * expm1(b * t) * expm1(inv_b * t))
        } else {
            ((z - q_sum) * t).exp() / (t * expm1(-b * t) * expm1(-inv_b * t))
        };
        Ok(v)
    };
    let panel = (4.0 / z.im.abs().max(1e-300)).min(1.0);
    let left = integrate_interval(integrand, -t_left, 0.0, panel, cfg)?;
    let right = integrate_interval(integrand, 0.0, t_right, panel, cfg)?;
    Ok(p.log_zeta_conj() - (left.value + right.value))
}

/// Which shift is tried first when carrying an argument into the strip.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReductionOrder {
    #[default]
    BFirst,
    InverseBFirst,
}

const MAX_SHIFTS: usize = 4096;

/// Carry `z` into `[lo, hi]` along the shift lattice.
///
/// Returns the reduced point `w` and `L` with `log G(z) = L + log G(w)`.
fn reduce_to_strip(
    z: Complex64,
    p: &BParam,
    lo: f64,
    hi: f64,
    order: ReductionOrder,
) -> Result<(Complex64, Complex64)> {
    let (first, second) = match order {
        ReductionOrder::BFirst => (p.b, 1.0 / p.b),
        ReductionOrder::InverseBFirst => (1.0 / p.b, p.b),
    };
    let mut w = z;
    let mut log_factor = Complex64::new(0.0, 0.0);
    let mut shifts = 0;
    while w.re < lo {
        let s = if w.re + first <= hi { first } else { second };
        // G(w) = G(w + s) / (1 - e^{2πi s w})
        log_factor -= ln_one_minus_exp(2.0 * PI * I * s * w);
        w += s;
        shifts += 1;
        if shifts > MAX_SHIFTS {
            return Err(Error::Overflow(format!("{z} is too far from the strip")));
        }
    }
    while w.re > hi {
        let s = if w.re - first >= lo { first } else { second };
        // G(w) = (1 - e^{2πi s (w - s)}) G(w - s)
        log_factor += ln_one_minus_exp(2.0 * PI * I * s * (w - s));
        w -= s;
        shifts += 1;
        if shifts > MAX_SHIFTS {
            return Err(Error::Overflow(format!("{z} is too far from the strip")));
        }
    }
    if !(log_factor.re.is_finite() && log_factor.im.is_finite()) {
        return Err(Error::Overflow(format!("functional-equation factors at {z}")));
    }
    Ok((w, log_factor))
}

/// `log G_b(z)` (modulo `2πi`) for any regular `z`.
pub fn eval_log_gb_with(
    z: Complex64,
    p: &BParam,
    cfg: &QuadratureConfig,
    order: ReductionOrder,
) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::NonFinite(format!("argument {z}")));
    }
    match classify(z, p, LATTICE_TOL) {
        PoleZeroClass::Pole { n1, n2 } => return Err(Error::Pole { n1, n2 }),
        PoleZeroClass::Zero { .. } => {
            return Err(Error::Precondition(format!("log G_b is -∞ at the zero {z}")))
        }
        PoleZeroClass::Regular => {}
    }
    let margin = cfg.strip_margin.min(0.45 * p.min_step());
    let (w, log_factor) = reduce_to_strip(z, p, margin, p.big_q - margin, order)?;
    let inner = if w.im < REFLECT_BELOW_IM {
        // G(w) = e^{πi w (w - Q)} / G(Q - w), and Q - w lies in the upper half
        let mirror = Complex64::new(p.big_q, 0.0) - w;
        PI * I * w * (w - p.big_q) - eval_log_gb_strip(mirror, p, cfg)?
    } else {
        eval_log_gb_strip(w, p, cfg)?
    };
    Ok(log_factor + inner)
}

/// `log G_b(z)` with the default reduction order.
pub fn eval_log_gb(z: Complex64, p: &BParam, cfg: &QuadratureConfig) -> Result<Complex64> {
    eval_log_gb_with(z, p, cfg, ReductionOrder::default())
}

/// `G_b(z)` for any `z` off the pole lattice; exactly zero on the zero lattice.
pub fn eval_gb_with(
    z: Complex64,
    p: &BParam,
    cfg: &QuadratureConfig,
    order: ReductionOrder,
) -> Result<Complex64> {
    if let PoleZeroClass::Zero { .. } = classify(z, p, LATTICE_TOL) {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let l = eval_log_gb_with(z, p, cfg, order)?;
    let v = l.exp();
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow(format!("|G_b({z})| exceeds the f64 range")))
    }
}

pub fn eval_gb(z: Complex64, p: &BParam, cfg: &QuadratureConfig) -> Result<Complex64> {
    eval_gb_with(z, p, cfg, ReductionOrder::default())
}

/// The noncompact q-exponential `g_b(x) = ζ̄_b / G_b(Q/2 + log(x)/(2πi b))`.
pub fn eval_small_gb(x: Complex64, p: &BParam, cfg: &QuadratureConfig) -> Result<Complex64> {
    if x.norm() == 0.0 || (x.im == 0.0 && x.re < 0.0) {
        return Err(Error::Precondition(format!("g_b needs x off the branch cut, got {x}")));
    }
    eval_small_gb_log(x.ln(), p, cfg)
}

/// `g_b` as a function of `log x`, for arguments such as `q·x` whose
/// logarithm leaves the principal branch when `b > 1`.
pub fn eval_small_gb_log(log_x: Complex64, p: &BParam, cfg: &QuadratureConfig) -> Result<Complex64> {
    let arg = Complex64::new(0.5 * p.big_q, 0.0) + log_x / (2.0 * PI * I * p.b);
    match classify(arg, p, LATTICE_TOL) {
        PoleZeroClass::Zero { .. } => Err(Error::Precondition(format!(
            "g_b has a pole at log x = {log_x}: G_b vanishes at {arg}"
        ))),
        _ => Ok((p.log_zeta_conj() - eval_log_gb(arg, p, cfg)?).exp()),
    }
}

/// `lim_{x→0} x·G_b(x - n1·b - n2/b)`.
pub fn residue_coeff(n1: u32, n2: u32, p: &BParam) -> Result<Complex64> {
    let mut v = Complex64::new(1.0 / (2.0 * PI), 0.0);
    for k in 1..=n1 {
        let f = Complex64::new(1.0, 0.0) - p.q.powi(-2 * k as i32);
        if f.norm() < 1e-14 {
            return Err(Error::Degenerate(format!("q^(2·{k}) = 1")));
        }
        v /= f;
    }
    for k in 1..=n2 {
        let f = Complex64::new(1.0, 0.0) - p.qtilde.powi(-2 * k as i32);
        if f.norm() < 1e-14 {
            return Err(Error::Degenerate(format!("q̃^(2·{k}) = 1")));
        }
        v /= f;
    }
    Ok(v)
}

/// Deviation of `G_b(x ± iT)` from its two asymptotic forms.
///
/// The upper branch is compared with `ζ̄_b` directly; the lower branch is
/// compared in logarithmic form against `ζ_b e^{πi z(z-Q)}`. The reported
/// error is the larger of the two deviations.
pub fn check_asymptotics(
    x: f64,
    t: f64,
    p: &BParam,
    cfg: &QuadratureConfig,
    tolerance: f64,
) -> Result<CheckReport> {
    if !(x > 0.0 && x < p.big_q) {
        return Err(Error::Precondition(format!("need 0 < x < Q, got {x}")));
    }
    let up = Complex64::new(x, t);
    let g_up = eval_gb(up, p, cfg)?;
    let upper = (g_up - p.zeta_conj()).norm();

    let down = Complex64::new(x, -t);
    let log_g = eval_log_gb(down, p, cfg)?;
    let log_ref = p.zeta.ln() + PI * I * down * (down - p.big_q);
    let mut d = log_g - log_ref;
    let shifted = d.im + PI;
    d.im = shifted - 2.0 * PI * (shifted / (2.0 * PI)).floor() - PI;
    let lower = d.norm();

    Ok(CheckReport::numeric(
        IdentityId::Asymptotics,
        format!("x={x}, T={t}"),
        g_up,
        p.zeta_conj(),
        upper.max(lower),
        tolerance,
    )
    .with_param("b", p.b)
    .with_param("x", x)
    .with_param("T", t)
    .with_param("upper_deviation", upper)
    .with_param("lower_log_deviation", lower))
}
