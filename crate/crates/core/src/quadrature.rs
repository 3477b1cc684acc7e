//! Adaptive quadrature along horizontal lines `Im τ = const` of the complex
//! plane.
//!
//! The workhorse is a globally adaptive 7/15-point Gauss-Kronrod scheme with
//! the QUADPACK error heuristic. [`integrate_line`] adds truncation of the
//! infinite line by doubling the half-width until the newly covered tails are
//! negligible.

use alloc::collections::BinaryHeap;
use core::cmp::Ordering;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

/// Tolerances and contour policy shared by every line integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Imaginary elevation of the integration line, where the caller does
    /// not derive one from pole bookkeeping.
    pub contour_offset: f64,
    /// Hard cap on the truncation half-width.
    pub max_t: f64,
    /// Maximum number of interval bisections per integral.
    pub max_refinements: usize,
    /// Minimal distance from the strip boundary `Re z ∈ {0, Q}` at which the
    /// integral representation of `log G_b` is used directly.
    pub strip_margin: f64,
    /// Fraction of the pole-free window used as the contour elevation for
    /// the `log G_b` integral.
    pub offset_fraction: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self::strip()
    }
}

impl QuadratureConfig {
    /// Tight settings used for the `log G_b` integral itself.
    pub fn strip() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 1e-13,
            contour_offset: 0.0,
            max_t: 4096.0,
            max_refinements: 20_000,
            strip_margin: 0.2,
            offset_fraction: 0.5,
        }
    }

    /// Settings for the outer integrals of the identity checks.
    pub fn identity() -> Self {
        Self {
            abs_tol: 1e-11,
            rel_tol: 1e-10,
            contour_offset: 0.0,
            max_t: 256.0,
            max_refinements: 20_000,
            strip_margin: 0.2,
            offset_fraction: 0.5,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = self.abs_tol > 0.0
            && self.rel_tol > 0.0
            && self.contour_offset >= 0.0
            && self.max_t > 0.0
            && self.max_refinements >= 1
            && self.strip_margin > 0.0
            && self.offset_fraction > 0.0
            && self.offset_fraction < 1.0;
        if ok {
            Ok(())
        } else {
            Err(Error::Precondition(alloc::format!("invalid quadrature config {self:?}")))
        }
    }

    fn target(&self, value: Complex64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.norm())
    }
}

/// A quadrature result with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: Complex64,
    pub error: f64,
    pub evaluations: usize,
}

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

fn checked<F>(f: &mut F, x: f64) -> Result<Complex64>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    let v = f(x)?;
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite(alloc::format!("integrand at parameter {x}")))
    }
}

/// One 15-point Gauss-Kronrod panel on `[a, b]`.
///
/// Returns the Kronrod estimate and the QUADPACK error heuristic.
pub fn gauss_kronrod<F>(f: &mut F, a: f64, b: f64) -> Result<(Complex64, f64)>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = checked(f, center)?;
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut abs_sum = fc.norm() * WGK[7];
    let mut values = [(Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)); 7];
    for (j, slot) in values.iter_mut().enumerate() {
        let dx = half * XGK[j];
        let f1 = checked(f, center - dx)?;
        let f2 = checked(f, center + dx)?;
        kronrod += (f1 + f2) * WGK[j];
        abs_sum += (f1.norm() + f2.norm()) * WGK[j];
        if j % 2 == 1 {
            gauss += (f1 + f2) * WG[j / 2];
        }
        *slot = (f1, f2);
    }
    let mean = kronrod * 0.5;
    let mut asc = (fc - mean).norm() * WGK[7];
    for (j, (f1, f2)) in values.iter().enumerate() {
        asc += ((f1 - mean).norm() + (f2 - mean).norm()) * WGK[j];
    }
    let width = half.abs();
    let result = kronrod * half;
    let resasc = asc * width;
    let resabs = abs_sum * width;
    let mut err = ((kronrod - gauss) * half).norm();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    let eps = f64::EPSILON;
    if resabs > f64::MIN_POSITIVE / (50.0 * eps) {
        err = err.max(50.0 * eps * resabs);
    }
    Ok((result, err))
}

struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// Globally adaptive integration of `f` over `[a, b]`.
///
/// The interval is first cut into panels of width at most `max_panel`, then
/// the panel with the largest error is bisected until the summed error is
/// below `max(abs_tol, rel_tol·|I|)`.
pub fn integrate_interval<F>(
    mut f: F,
    a: f64,
    b: f64,
    max_panel: f64,
    cfg: &QuadratureConfig,
) -> Result<Estimate>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    if a == b {
        return Ok(Estimate { value: Complex64::new(0.0, 0.0), error: 0.0, evaluations: 0 });
    }
    let pieces = (((b - a).abs() / max_panel).ceil() as usize).clamp(1, 4096);
    let step = (b - a) / pieces as f64;
    let mut heap = BinaryHeap::with_capacity(pieces * 2);
    let mut total = Complex64::new(0.0, 0.0);
    let mut total_err = 0.0;
    let mut evaluations = 0;
    for k in 0..pieces {
        let lo = a + step * k as f64;
        let hi = if k + 1 == pieces { b } else { lo + step };
        let (value, error) = gauss_kronrod(&mut f, lo, hi)?;
        evaluations += 15;
        total += value;
        total_err += error;
        heap.push(Panel { a: lo, b: hi, value, error });
    }
    let mut refinements = 0;
    while total_err > cfg.target(total) {
        if refinements >= cfg.max_refinements {
            return Err(Error::NoConvergence { estimate: total.norm(), error: total_err });
        }
        let Some(worst) = heap.pop() else { break };
        let mid = 0.5 * (worst.a + worst.b);
        if (worst.b - worst.a).abs() <= 1e-13 * (1.0 + mid.abs()) {
            // cannot split further; accept what we have
            heap.push(worst);
            if total_err <= 1e3 * cfg.target(total) {
                break;
            }
            return Err(Error::NoConvergence { estimate: total.norm(), error: total_err });
        }
        let (v1, e1) = gauss_kronrod(&mut f, worst.a, mid)?;
        let (v2, e2) = gauss_kronrod(&mut f, mid, worst.b)?;
        evaluations += 30;
        refinements += 1;
        total += v1 + v2 - worst.value;
        total_err += e1 + e2 - worst.error;
        heap.push(Panel { a: worst.a, b: mid, value: v1, error: e1 });
        heap.push(Panel { a: mid, b: worst.b, value: v2, error: e2 });
        if refinements % 64 == 0 {
            // resum to keep rounding drift out of the running totals
            total = heap.iter().map(|p| p.value).sum();
            total_err = heap.iter().map(|p| p.error).sum();
        }
    }
    total = heap.iter().map(|p| p.value).sum();
    total_err = heap.iter().map(|p| p.error).sum::<f64>().max(0.0);
    Ok(Estimate { value: total, error: total_err, evaluations })
}

/// Integrate `f(τ)` over the line `τ ∈ ℝ + i·offset`.
///
/// The half-width starts at 4 and doubles; each doubling integrates the two
/// new tail segments and stops once both their contribution and the
/// envelope `|f|·T` at the new ends fall below `abs_tol/10`. The caller
/// guarantees exponential decay at both ends.
pub fn integrate_line<F>(mut f: F, offset: f64, cfg: &QuadratureConfig) -> Result<Estimate>
where
    F: FnMut(Complex64) -> Complex64,
{
    cfg.validate()?;
    let mut g = |x: f64| Ok(f(Complex64::new(x, offset)));
    let mut half = cfg.max_t.min(4.0);
    let core = integrate_interval(&mut g, -half, half, 1.0, cfg)?;
    let mut value = core.value;
    let mut error = core.error;
    let mut evaluations = core.evaluations;
    let small = cfg.abs_tol / 10.0;
    loop {
        let next = 2.0 * half;
        if next > cfg.max_t {
            return Err(Error::Divergent(alloc::format!(
                "tails still significant at half-width {half}"
            )));
        }
        let tail_cfg = QuadratureConfig { abs_tol: small, ..*cfg };
        let right = integrate_interval(&mut g, half, next, 2.0, &tail_cfg)?;
        let left = integrate_interval(&mut g, -next, -half, 2.0, &tail_cfg)?;
        let env = g(next)?.norm().max(g(-next)?.norm()) * next;
        evaluations += right.evaluations + left.evaluations + 2;
        value += right.value + left.value;
        error += right.error + left.error;
        half = next;
        let added = (right.value + left.value).norm();
        let threshold = cfg.target(value) / 10.0;
        if added <= threshold && env <= threshold {
            break;
        }
    }
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(Error::NonFinite(alloc::string::String::from("line integral")));
    }
    Ok(Estimate { value, error, evaluations })
}
