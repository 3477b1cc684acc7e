//! Checks of the defining identities of `G_b`, each returning a [`CheckReport`].
//!
//! Grid checks report the worst point; its values go into `lhs`/`rhs`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use super::{
    classify, eval_gb, eval_gb_with, eval_small_gb_log, residue_coeff, BParam, PoleZeroClass, ReductionOrder,
    LATTICE_TOL,
};
use crate::error::Result;
use crate::quadrature::QuadratureConfig;
use crate::report::{relative_error, CheckReport, IdentityId};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `n_re × n_im` points with `Re z` spread over `[0.05Q, 0.95Q]` and
/// `Im z` over `[-im_span, im_span]`.
pub fn strip_grid(p: &BParam, n_re: usize, n_im: usize, im_span: f64) -> Vec<Complex64> {
    let mut pts = Vec::with_capacity(n_re * n_im);
    for i in 0..n_re {
        let re = p.big_q * (0.05 + 0.9 * i as f64 / (n_re.max(2) - 1) as f64);
        for j in 0..n_im {
            let im = if n_im == 1 { 0.0 } else { -im_span + 2.0 * im_span * j as f64 / (n_im - 1) as f64 };
            pts.push(Complex64::new(re, im));
        }
    }
    pts
}

/// Worst `(error, point, lhs, rhs)` seen so far.
struct Worst {
    error: f64,
    at: Complex64,
    lhs: Complex64,
    rhs: Complex64,
}

impl Worst {
    fn new() -> Self {
        let zero = Complex64::new(0.0, 0.0);
        Worst { error: 0.0, at: zero, lhs: zero, rhs: zero }
    }

    fn push(&mut self, at: Complex64, lhs: Complex64, rhs: Complex64) {
        let e = relative_error(lhs, rhs);
        if e > self.error || e.is_nan() {
            *self = Worst { error: e, at, lhs, rhs };
        }
    }

    fn report(self, id: IdentityId, label: String, p: &BParam, points: usize, tol: f64) -> CheckReport {
        CheckReport::numeric(id, label, self.lhs, self.rhs, self.error, tol)
            .with_param("b", p.b)
            .with_param("points", points)
            .with_param("worst_point", self.at)
    }
}

fn on_grid<F>(id: IdentityId, label: String, points: &[Complex64], p: &BParam, tol: f64, mut f: F) -> CheckReport
where
    F: FnMut(Complex64) -> Result<(Complex64, Complex64)>,
{
    let mut worst = Worst::new();
    for &z in points {
        match f(z) {
            Ok((lhs, rhs)) => worst.push(z, lhs, rhs),
            Err(e) => return CheckReport::failed(id, label, format!("at z = {z}: {e}")).with_param("b", p.b),
        }
    }
    worst.report(id, label, p, points.len(), tol)
}

/// `G(z + s) = (1 - e^{2πi s z}) G(z)` with `s = b` or, if `inverse`, `s = 1/b`.
pub fn check_functional_equation(
    points: &[Complex64],
    inverse: bool,
    p: &BParam,
    cfg: &QuadratureConfig,
    tol: f64,
) -> CheckReport {
    let s = if inverse { 1.0 / p.b } else { p.b };
    let label = format!("b={}, shift {}", p.b, if inverse { "1/b" } else { "b" });
    on_grid(IdentityId::FunctionalEquation, label, points, p, tol, |z| {
        let lhs = eval_gb(z + s, p, cfg)?;
        let rhs = (1.0 - (2.0 * PI * I * s * z).exp()) * eval_gb(z, p, cfg)?;
        Ok((lhs, rhs))
    })
}

/// `G(z + n1·b + n2/b) / G(z) = ∏_{k<n1}(1 - q^{2k}e^{2πibz}) ∏_{l<n2}(1 - q̃^{2l}e^{2πiz/b})`.
pub fn shift_product(z: Complex64, n1: u32, n2: u32, p: &BParam) -> Complex64 {
    let eb = (2.0 * PI * I * p.b * z).exp();
    let ei = (2.0 * PI * I * z / p.b).exp();
    let mut v = Complex64::new(1.0, 0.0);
    for k in 0..n1 {
        v *= 1.0 - p.q.powi(2 * k as i32) * eb;
    }
    for l in 0..n2 {
        v *= 1.0 - p.qtilde.powi(2 * l as i32) * ei;
    }
    v
}

pub fn check_general_shift(
    points: &[Complex64],
    n1: u32,
    n2: u32,
    p: &BParam,
    cfg: &QuadratureConfig,
    tol: f64,
) -> CheckReport {
    let label = format!("b={}, n1={n1}, n2={n2}", p.b);
    let shift = n1 as f64 * p.b + n2 as f64 / p.b;
    on_grid(IdentityId::GeneralShift, label, points, p, tol, |z| {
        let lhs = eval_gb(z + shift, p, cfg)?;
        let rhs = shift_product(z, n1, n2, p) * eval_gb(z, p, cfg)?;
        Ok((lhs, rhs))
    })
    .with_param("n1", n1)
    .with_param("n2", n2)
}

/// `G(z) G(Q - z) = e^{πi z(z - Q)}`.
pub fn check_reflection(points: &[Complex64], p: &BParam, cfg: &QuadratureConfig, tol: f64) -> CheckReport {
    let q = p.big_q;
    on_grid(IdentityId::Reflection, format!("b={}", p.b), points, p, tol, |z| {
        let lhs = eval_gb(z, p, cfg)? * eval_gb(q - z, p, cfg)?;
        Ok((lhs, (PI * I * z * (z - q)).exp()))
    })
}

/// `G(b) = -ib` and `G(1/b) = -i/b`.
pub fn check_special_values(p: &BParam, cfg: &QuadratureConfig, tol: f64) -> Vec<CheckReport> {
    [("G(b) = -ib", p.b), ("G(1/b) = -i/b", 1.0 / p.b)]
        .into_iter()
        .map(|(label, x)| {
            let label = format!("b={}, {label}", p.b);
            let expected = Complex64::new(0.0, -x);
            match eval_gb(Complex64::new(x, 0.0), p, cfg) {
                Ok(v) => CheckReport::numeric(IdentityId::SpecialValue, label, v, expected, relative_error(v, expected), tol)
                    .with_param("b", p.b),
                Err(e) => CheckReport::failed(IdentityId::SpecialValue, label, format!("{e}")),
            }
        })
        .collect()
}

/// `Q` is classified as the zero `(0, 0)` and evaluates to exactly `0`.
pub fn check_zero_at_q(p: &BParam, cfg: &QuadratureConfig) -> CheckReport {
    let z = Complex64::new(p.big_q, 0.0);
    let label = format!("b={}", p.b);
    let class = classify(z, p, LATTICE_TOL);
    let mismatch = match (class, eval_gb(z, p, cfg)) {
        (PoleZeroClass::Zero { n1: 0, n2: 0 }, Ok(v)) if v == Complex64::new(0.0, 0.0) => None,
        (c, v) => Some(format!("classified as {c:?}, value {v:?}")),
    };
    CheckReport::exact(IdentityId::ZeroAtQ, label, mismatch).with_param("b", p.b)
}

/// Richardson extrapolation of `f(h)` to `h → 0` from `h0, h0/2, …`,
/// assuming an expansion in integer powers of `h`.
pub fn richardson<F>(mut f: F, h0: f64, levels: usize) -> Result<(Complex64, f64)>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    let mut table: Vec<Vec<Complex64>> = Vec::with_capacity(levels);
    for k in 0..levels {
        let h = h0 / (1u64 << k) as f64;
        let mut row = alloc::vec![f(h)?];
        for j in 1..=k {
            let factor = (1u64 << j) as f64;
            let prev = &table[k - 1];
            let v = (factor * row[j - 1] - prev[j - 1]) / (factor - 1.0);
            row.push(v);
        }
        table.push(row);
    }
    let last = &table[levels - 1];
    let best = last[levels - 1];
    let err = if levels >= 2 { (best - table[levels - 2][levels - 2]).norm() } else { f64::INFINITY };
    Ok((best, err))
}

/// Distance from the pole `(n1, n2)` to the nearest other pole. Near
/// rational `b²` two lattice points can nearly collide, and the
/// extrapolation steps must stay well inside that gap.
fn pole_gap(n1: u32, n2: u32, p: &BParam) -> f64 {
    let at = n1 as f64 * p.b + n2 as f64 / p.b;
    let reach = (at + p.big_q) / p.min_step();
    let mut gap = f64::INFINITY;
    for m1 in 0..=reach as u32 + 1 {
        for m2 in 0..=reach as u32 + 1 {
            if (m1, m2) != (n1, n2) {
                gap = gap.min((m1 as f64 * p.b + m2 as f64 / p.b - at).abs());
            }
        }
    }
    gap
}

/// `lim_{x→0} x·G(x - n1·b - n2/b)` against the closed-form residue.
pub fn check_residue(n1: u32, n2: u32, p: &BParam, cfg: &QuadratureConfig, tol: f64) -> CheckReport {
    let label = format!("b={}, n1={n1}, n2={n2}", p.b);
    let pole = -(n1 as f64 * p.b + n2 as f64 / p.b);
    let h0 = 0.1 * p.min_step().min(pole_gap(n1, n2, p));
    let limit = richardson(|h| Ok(h * eval_gb(Complex64::new(pole + h, 0.0), p, cfg)?), h0, 6);
    match (limit, residue_coeff(n1, n2, p)) {
        (Ok((lhs, extrapolation)), Ok(rhs)) => {
            CheckReport::numeric(IdentityId::Residue, label, lhs, rhs, relative_error(lhs, rhs), tol)
                .with_param("b", p.b)
                .with_param("n1", n1)
                .with_param("n2", n2)
                .with_param("extrapolation_error", extrapolation)
        }
        (Err(e), _) | (_, Err(e)) => CheckReport::failed(IdentityId::Residue, label, format!("{e}")),
    }
}

/// `g(x/q) = (1 + x) g(qx)` for `x > 0`, with `log(q^{±1}x) = log x ± πib²`.
pub fn check_q_exponential_shift(x: f64, p: &BParam, cfg: &QuadratureConfig, tol: f64) -> CheckReport {
    let label = format!("b={}, x={x}", p.b);
    let xc = Complex64::new(x, 0.0);
    let lq = I * PI * p.b * p.b;
    let lx = xc.ln();
    let pair: Result<_> =
        (|| Ok((eval_small_gb_log(lx - lq, p, cfg)?, (1.0 + xc) * eval_small_gb_log(lx + lq, p, cfg)?)))();
    match pair {
        Ok((lhs, rhs)) => CheckReport::numeric(IdentityId::QExponentialShift, label, lhs, rhs, relative_error(lhs, rhs), tol)
            .with_param("b", p.b)
            .with_param("x", x),
        Err(e) => CheckReport::failed(IdentityId::QExponentialShift, label, format!("{e}")),
    }
}

/// Points off the strip, on both sides and in both half-planes.
pub fn off_strip_points(p: &BParam) -> Vec<Complex64> {
    let q = p.big_q;
    let mut pts = Vec::new();
    for re in [-2.1 * q, -0.7 * q, 1.6 * q, 2.8 * q] {
        for im in [-1.3, 0.4, 2.2] {
            pts.push(Complex64::new(re, im));
        }
    }
    pts
}

/// Reduction into the strip by `b` first and by `1/b` first agree.
pub fn check_path_independence(points: &[Complex64], p: &BParam, cfg: &QuadratureConfig, tol: f64) -> CheckReport {
    on_grid(IdentityId::StripPathIndependence, format!("b={}", p.b), points, p, tol, |z| {
        Ok((
            eval_gb_with(z, p, cfg, ReductionOrder::BFirst)?,
            eval_gb_with(z, p, cfg, ReductionOrder::InverseBFirst)?,
        ))
    })
}
