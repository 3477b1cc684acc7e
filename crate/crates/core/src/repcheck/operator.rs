//! Difference operators `Σ c(γ) · e^{-i(aω₁+bω₂)∂}` with closed-form
//! coefficients.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use super::{GzLayout, OmegaParams};
use crate::{Error, Result};

/// Default cap on the number of terms a composition may produce.
pub const DEFAULT_TERM_BUDGET: usize = 100_000;

/// A coefficient factor: a closed-form function of the full γ-vector.
pub type Factor = Arc<dyn Fn(&[Complex64]) -> Complex64 + Send + Sync>;

/// Per-variable shift `(a, b)`: `γ ↦ γ - i(a ω₁ + b ω₂)`.
pub type Shift = Vec<(i32, i32)>;

/// `scalar · ∏ factor_k(γ shifted by at_k) · f(γ shifted by shift)`.
#[derive(Clone)]
pub struct ShiftTerm {
    pub scalar: Complex64,
    pub factors: Vec<(Factor, Shift)>,
    pub shift: Shift,
}

impl core::fmt::Debug for ShiftTerm {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("ShiftTerm")
            .field("scalar", &self.scalar)
            .field("factors", &self.factors.len())
            .field("shift", &self.shift)
            .finish()
    }
}

fn add_shift(a: &[(i32, i32)], b: &[(i32, i32)]) -> Shift {
    a.iter().zip(b).map(|(x, y)| (x.0 + y.0, x.1 + y.1)).collect()
}

/// Moves `point` by `shift`.
pub fn shifted(point: &[Complex64], shift: &[(i32, i32)], p: &OmegaParams) -> Vec<Complex64> {
    point
        .iter()
        .zip(shift)
        .map(|(g, &(a, b))| {
            if a == 0 && b == 0 {
                *g
            } else {
                g - Complex64::new(0.0, a as f64 * p.omega1 + b as f64 * p.omega2)
            }
        })
        .collect()
}

impl ShiftTerm {
    /// The coefficient at `point`.
    pub fn coefficient(&self, point: &[Complex64], p: &OmegaParams) -> Complex64 {
        let mut c = self.scalar;
        for (f, at) in &self.factors {
            if at.iter().all(|s| *s == (0, 0)) {
                c *= f(point);
            } else {
                c *= f(&shifted(point, at, p));
            }
        }
        c
    }

    /// Variables moved by this term with their shifts.
    pub fn moved(&self) -> Vec<(usize, (i32, i32))> {
        self.shift.iter().copied().enumerate().filter(|(_, s)| *s != (0, 0)).collect()
    }
}

/// A finite sum of shift terms on one GZ layout.
#[derive(Clone, Debug)]
pub struct ShiftOperator {
    pub layout: GzLayout,
    pub params: OmegaParams,
    pub terms: Vec<ShiftTerm>,
}

impl ShiftOperator {
    pub fn zero(layout: GzLayout, params: OmegaParams) -> Self {
        ShiftOperator { layout, params, terms: Vec::new() }
    }

    pub fn identity(layout: GzLayout, params: OmegaParams) -> Self {
        Self::scalar(layout, params, Complex64::new(1.0, 0.0))
    }

    pub fn scalar(layout: GzLayout, params: OmegaParams, c: Complex64) -> Self {
        let shift = vec![(0, 0); layout.len()];
        ShiftOperator { layout, params, terms: vec![ShiftTerm { scalar: c, factors: Vec::new(), shift }] }
    }

    /// Multiplication by a function.
    pub fn multiplication(layout: GzLayout, params: OmegaParams, f: Factor) -> Self {
        let zero = vec![(0, 0); layout.len()];
        ShiftOperator {
            layout,
            params,
            terms: vec![ShiftTerm { scalar: Complex64::new(1.0, 0.0), factors: vec![(f, zero.clone())], shift: zero }],
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn same_space(&self, o: &Self) -> Result<()> {
        if self.layout != o.layout || self.params != o.params {
            return Err(Error::Precondition("operators act on different spaces".into()));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same_space(o)?;
        let mut r = self.clone();
        r.terms.extend(o.terms.iter().cloned());
        Ok(r)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let mut r = self.clone();
        for t in &mut r.terms {
            t.scalar *= c;
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.scale(Complex64::new(-1.0, 0.0)))
    }

    /// `self ∘ o` within [`DEFAULT_TERM_BUDGET`].
    pub fn compose(&self, o: &Self) -> Result<Self> {
        self.compose_with_budget(o, DEFAULT_TERM_BUDGET)
    }

    /// `(c₁S₁)(c₂S₂) = c₁ · (c₂ ∘ S₁) · S₁S₂`.
    pub fn compose_with_budget(&self, o: &Self, budget: usize) -> Result<Self> {
        self.same_space(o)?;
        let count = self.terms.len().saturating_mul(o.terms.len());
        if count > budget {
            return Err(Error::TermBudget(budget));
        }
        let mut terms = Vec::with_capacity(count);
        for a in &self.terms {
            for b in &o.terms {
                let mut factors = a.factors.clone();
                factors.extend(b.factors.iter().map(|(f, at)| (f.clone(), add_shift(at, &a.shift))));
                terms.push(ShiftTerm { scalar: a.scalar * b.scalar, factors, shift: add_shift(&a.shift, &b.shift) });
            }
        }
        Ok(ShiftOperator { layout: self.layout, params: self.params, terms })
    }

    /// Left-to-right product of several operators.
    pub fn product(ops: &[&ShiftOperator]) -> Result<Self> {
        let (first, rest) = ops.split_first().ok_or_else(|| Error::Precondition("empty product".into()))?;
        rest.iter().try_fold((*first).clone(), |acc, op| acc.compose(op))
    }

    /// Each term's contribution `c_k(γ) f(S_k γ)`.
    pub fn contributions(&self, f: &TestFunction, point: &[Complex64]) -> Result<Vec<Complex64>> {
        self.check_point(point)?;
        let mut out = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let v = t.coefficient(point, &self.params) * f.eval(&shifted(point, &t.shift, &self.params));
            if !(v.re.is_finite() && v.im.is_finite()) {
                return Err(Error::NonFinite(format!("operator term at {point:?}")));
            }
            out.push(v);
        }
        Ok(out)
    }

    /// `(A f)(γ)`.
    pub fn apply(&self, f: &TestFunction, point: &[Complex64]) -> Result<Complex64> {
        Ok(self.contributions(f, point)?.into_iter().sum())
    }

    fn check_point(&self, point: &[Complex64]) -> Result<()> {
        if point.len() != self.layout.len() {
            return Err(Error::Precondition(format!(
                "point has {} coordinates, layout needs {}",
                point.len(),
                self.layout.len()
            )));
        }
        if point.iter().any(|g| g.norm() > MAX_COORDINATE) {
            return Err(Error::Overflow(format!("|γ| above {MAX_COORDINATE}")));
        }
        for row in 1..=self.layout.rank() {
            for j in 1..=row {
                for s in j + 1..=row {
                    let d = (point[self.layout.index(row, j)] - point[self.layout.index(row, s)]).norm();
                    if d < MIN_SEPARATION {
                        return Err(Error::Degenerate(format!("row {row}: |γ{row}{j} - γ{row}{s}| = {d:e}")));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Smallest allowed distance between two coordinates of one row.
pub const MIN_SEPARATION: f64 = 0.1;
/// Largest allowed coordinate modulus.
pub const MAX_COORDINATE: f64 = 2.0;
/// Largest allowed `|d|` in a test function.
pub const MAX_QUADRATIC: f64 = 0.05;

/// `f(γ) = exp(Σ c_k γ_k + Σ d_k γ_k²)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TestFunction {
    pub linear: Vec<Complex64>,
    pub quadratic: Vec<f64>,
}

impl TestFunction {
    pub fn new(linear: Vec<Complex64>, quadratic: Vec<f64>) -> Result<Self> {
        if linear.len() != quadratic.len() {
            return Err(Error::Precondition("coefficient vectors differ in length".into()));
        }
        if quadratic.iter().any(|d| d.abs() > MAX_QUADRATIC) {
            return Err(Error::Precondition(format!("quadratic coefficients must satisfy |d| ≤ {MAX_QUADRATIC}")));
        }
        Ok(TestFunction { linear, quadratic })
    }

    /// `f ≡ 1` on `n` variables.
    pub fn constant(n: usize) -> Self {
        TestFunction { linear: vec![Complex64::new(0.0, 0.0); n], quadratic: vec![0.0; n] }
    }

    pub fn eval(&self, point: &[Complex64]) -> Complex64 {
        let mut e = Complex64::new(0.0, 0.0);
        for ((g, c), d) in point.iter().zip(&self.linear).zip(&self.quadratic) {
            e += c * g + g * g * *d;
        }
        e.exp()
    }
}
