//! Difference-operator representation of the modular double of `gl(N)` on
//! Gelfand-Tsetlin variables `γ_{nj}`, and pointwise checks of its
//! defining and cross relations.
//!
//! Rows `1..N-1` are dynamical; row `N` holds fixed spectral parameters.
//! `E_{n,n+1}` shifts one variable of row `n` by `-iω₁`, `E_{n+1,n}` by
//! `+iω₁`; the tilde generators use `ω₂` and swap `ω₁ ↔ ω₂` in their
//! coefficients.

mod operator;
mod relations;

pub use operator::{
    shifted, Factor, Shift, ShiftOperator, ShiftTerm, TestFunction, DEFAULT_TERM_BUDGET, MAX_COORDINATE,
    MAX_QUADRATIC, MIN_SEPARATION,
};
pub use relations::{
    catalogue, sample_trial, verify_all, verify_relation, Relation, RelationFamily, TrialSample, REPRESENTATION_TOL,
};

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result};

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// Periods `ω₁, ω₂` with `q = e^{πiω₁/ω₂}` and `q̃ = e^{πiω₂/ω₁}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OmegaParams {
    pub omega1: f64,
    pub omega2: f64,
}

/// Admissible range of each period (keeps `e^{π|γ|/ω}` in range).
pub const OMEGA_RANGE: (f64, f64) = (0.5, 2.0);

impl OmegaParams {
    pub fn new(omega1: f64, omega2: f64) -> Result<Self> {
        for w in [omega1, omega2] {
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::Precondition(format!("periods must be positive, got {w}")));
            }
            if w < OMEGA_RANGE.0 || w > OMEGA_RANGE.1 {
                return Err(Error::Precondition(format!(
                    "period {w} outside [{}, {}]",
                    OMEGA_RANGE.0, OMEGA_RANGE.1
                )));
            }
        }
        Ok(OmegaParams { omega1, omega2 })
    }

    /// `ω₁ = b`, `ω₂ = 1/b`.
    pub fn from_b(b: f64) -> Result<Self> {
        Self::new(b, 1.0 / b)
    }

    pub fn q(&self) -> Complex64 {
        (I * PI * self.omega1 / self.omega2).exp()
    }

    pub fn qtilde(&self) -> Complex64 {
        (I * PI * self.omega2 / self.omega1).exp()
    }

    /// Swaps the roles of `ω₁` and `ω₂`.
    pub fn swapped(&self) -> Self {
        OmegaParams { omega1: self.omega2, omega2: self.omega1 }
    }

    /// A warning when `ω₁/ω₂` lies within `1e-3` of a rational with
    /// denominator at most 6.
    pub fn near_rational_warning(&self) -> Option<String> {
        let r = self.omega1 / self.omega2;
        for den in 1..=6u32 {
            let num = (r * den as f64).round();
            let dist = (r - num / den as f64).abs();
            if dist < 1e-3 {
                return Some(format!("ω₁/ω₂ = {r} is within {dist:e} of {num}/{den}"));
            }
        }
        None
    }
}

/// Flat indexing of the Gelfand-Tsetlin pattern of rank `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GzLayout {
    rank: usize,
}

impl GzLayout {
    pub fn new(rank: usize) -> Result<Self> {
        if !(2..=4).contains(&rank) {
            return Err(Error::IndexOutOfRange(format!("gl rank {rank} not in 2..=4")));
        }
        Ok(GzLayout { rank })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of variables, `N(N+1)/2`.
    pub fn len(&self) -> usize {
        self.rank * (self.rank + 1) / 2
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Position of `γ_{nj}`, `1 ≤ j ≤ n ≤ N`.
    pub fn index(&self, n: usize, j: usize) -> usize {
        debug_assert!(1 <= j && j <= n && n <= self.rank);
        n * (n - 1) / 2 + (j - 1)
    }

    pub fn is_dynamical(&self, n: usize) -> bool {
        n < self.rank
    }

    /// `(n, j)` of a flat index.
    pub fn position(&self, k: usize) -> (usize, usize) {
        let mut n = 1;
        while n * (n + 1) / 2 <= k {
            n += 1;
        }
        (n, k - n * (n - 1) / 2 + 1)
    }
}

/// The six generator families of the representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeneratorKind {
    /// `E_{n,n+1}`
    ERaise,
    /// `E_{n+1,n}`
    ELower,
    /// `K_n`
    K,
    /// `Ẽ_{n,n+1}`
    TERaise,
    /// `Ẽ_{n+1,n}`
    TELower,
    /// `K̃_n`
    TK,
}

impl GeneratorKind {
    pub fn is_dual(self) -> bool {
        matches!(self, GeneratorKind::TERaise | GeneratorKind::TELower | GeneratorKind::TK)
    }

    pub fn name(self) -> &'static str {
        match self {
            GeneratorKind::ERaise => "E_raise",
            GeneratorKind::ELower => "E_lower",
            GeneratorKind::K => "K",
            GeneratorKind::TERaise => "tE_raise",
            GeneratorKind::TELower => "tE_lower",
            GeneratorKind::TK => "tK",
        }
    }
}

fn sinh_arg(g: &[Complex64], a: usize, b: usize, offset: Complex64, scale: f64) -> Complex64 {
    ((g[a] - g[b] + offset) * scale).sinh()
}

/// Builds `E_{n,n+1}`, `E_{n+1,n}`, `K_n` or a tilde copy.
pub fn build_generator(kind: GeneratorKind, n: usize, layout: GzLayout, p: OmegaParams) -> Result<ShiftOperator> {
    let big_n = layout.rank();
    let is_e = !matches!(kind, GeneratorKind::K | GeneratorKind::TK);
    let range_ok = if is_e { (1..big_n).contains(&n) } else { (1..=big_n).contains(&n) };
    if !range_ok {
        return Err(Error::IndexOutOfRange(format!("{}_{n} for gl({big_n})", kind.name())));
    }
    // coefficients of tilde generators swap ω₁ ↔ ω₂
    let dual = kind.is_dual();
    let w_coef = if dual { p.omega1 } else { p.omega2 };
    let scale = PI / w_coef;
    let qq = if dual { p.qtilde() } else { p.q() };
    let big_omega = p.omega1 + p.omega2;
    let half = I * (big_omega / 2.0);

    match kind {
        GeneratorKind::K | GeneratorKind::TK => Ok(k_power(n, 1.0, dual, layout, p)),
        GeneratorKind::ERaise | GeneratorKind::TERaise | GeneratorKind::ELower | GeneratorKind::TELower => {
            let raise = matches!(kind, GeneratorKind::ERaise | GeneratorKind::TERaise);
            let phase_sign = if raise { 1.0 } else { -1.0 };
            let prefactor =
                (I * (phase_sign * PI * big_omega * (n as f64 - 1.0) / (2.0 * w_coef))).exp() * 2.0 / (qq - 1.0 / qq);
            let mut op = ShiftOperator::zero(layout, p);
            for j in 1..=n {
                let me = layout.index(n, j);
                let row: Vec<usize> = (1..=n).filter(|&s| s != j).map(|s| layout.index(n, s)).collect();
                let (other, offset): (Vec<usize>, Complex64) = if raise {
                    ((1..=n + 1).map(|r| layout.index(n + 1, r)).collect(), -half)
                } else {
                    ((1..n).map(|r| layout.index(n - 1, r)).collect(), half)
                };
                let f: Factor = Arc::new(move |g: &[Complex64]| {
                    let mut num = Complex64::new(1.0, 0.0);
                    for &r in &other {
                        num *= sinh_arg(g, me, r, offset, scale);
                    }
                    let mut den = Complex64::new(1.0, 0.0);
                    for &s in &row {
                        den *= sinh_arg(g, me, s, Complex64::new(0.0, 0.0), scale);
                    }
                    num / den
                });
                let mut shift = alloc::vec![(0, 0); layout.len()];
                let step = if raise { 1 } else { -1 };
                shift[me] = if dual { (0, step) } else { (step, 0) };
                let zero = alloc::vec![(0, 0); layout.len()];
                op.terms.push(ShiftTerm { scalar: prefactor, factors: alloc::vec![(f, zero)], shift });
            }
            Ok(op)
        }
    }
}

/// Multiplication by `K_n^{±1}` (or the tilde version).
pub fn k_power(n: usize, sign: f64, dual: bool, layout: GzLayout, p: OmegaParams) -> ShiftOperator {
    let w = if dual { p.omega1 } else { p.omega2 };
    let plus: Vec<usize> = (1..=n).map(|j| layout.index(n, j)).collect();
    let minus: Vec<usize> = (1..n).map(|j| layout.index(n - 1, j)).collect();
    let f: Factor = Arc::new(move |g: &[Complex64]| {
        let s: Complex64 = plus.iter().map(|&k| g[k]).sum::<Complex64>() - minus.iter().map(|&k| g[k]).sum::<Complex64>();
        (s * (sign * PI / w)).exp()
    });
    ShiftOperator::multiplication(layout, p, f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout_indexing_round_trips() {
        let l = GzLayout::new(3).unwrap();
        assert_eq!(l.len(), 6);
        for k in 0..l.len() {
            let (n, j) = l.position(k);
            assert_eq!(l.index(n, j), k);
        }
        assert!(l.is_dynamical(2) && !l.is_dynamical(3));
    }

    #[test]
    fn near_rational_periods_warn() {
        assert!(OmegaParams::new(1.0, 1.0).unwrap().near_rational_warning().is_some());
        assert!(OmegaParams::from_b(0.83).unwrap().near_rational_warning().is_none());
        assert!(OmegaParams::new(-1.0, 1.0).is_err());
    }

    #[test]
    fn generator_ranges() {
        let l = GzLayout::new(2).unwrap();
        let p = OmegaParams::from_b(0.83).unwrap();
        assert!(build_generator(GeneratorKind::ERaise, 2, l, p).is_err());
        assert!(build_generator(GeneratorKind::K, 2, l, p).is_ok());
        assert!(build_generator(GeneratorKind::K, 3, l, p).is_err());
    }
}
