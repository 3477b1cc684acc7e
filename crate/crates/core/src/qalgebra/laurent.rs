//! Laurent polynomials in `v` with arbitrary-precision integer coefficients,
//! and the dense `Z[v]` helpers (content, pseudo-remainder, gcd) behind the
//! canonical form of [`super::RatFunc`].

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `Σ coeffs[k] · v^(low + k)`. Zero is the empty vector; otherwise both the
/// first and the last coefficient are nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Laurent {
    low: i32,
    coeffs: Vec<BigInt>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: BigInt, exp: i32) -> Self {
        Self::from_parts(exp, vec![c])
    }

    pub fn from_parts(low: i32, coeffs: Vec<BigInt>) -> Self {
        let mut l = Laurent { low, coeffs };
        l.trim();
        l
    }

    /// Builds from `(coefficient, exponent)` pairs; repeated exponents add.
    pub fn from_terms(terms: &[(i64, i32)]) -> Self {
        terms
            .iter()
            .fold(Self::zero(), |acc, &(c, e)| acc.add(&Self::monomial(BigInt::from(c), e)))
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.low += lead_zeros as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low(&self) -> i32 {
        self.low
    }

    pub fn high(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn lead(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() == 1 && self.low == 0
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let low = self.low.min(o.low);
        let high = self.high().max(o.high());
        let mut c = vec![BigInt::zero(); (high - low + 1) as usize];
        for (k, x) in self.coeffs.iter().enumerate() {
            c[(self.low - low) as usize + k] += x;
        }
        for (k, x) in o.coeffs.iter().enumerate() {
            c[(o.low - low) as usize + k] += x;
        }
        Self::from_parts(low, c)
    }

    pub fn neg(&self) -> Self {
        Laurent { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        Laurent { low: self.low + o.low, coeffs: poly_mul(&self.coeffs, &o.coeffs) }
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Laurent { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        Self::from_parts(self.low, self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Exact division of every coefficient by `s`.
    pub(crate) fn div_exact_scalar(&self, s: &BigInt) -> Self {
        Laurent { low: self.low, coeffs: self.coeffs.iter().map(|c| c / s).collect() }
    }

    pub fn eval(&self, v: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c.to_f64().unwrap_or(f64::NAN);
        }
        acc * v.powi(self.low)
    }

    /// Substitution `v ↦ v^{-1}`.
    pub fn invert_variable(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.coeffs.clone();
        c.reverse();
        Laurent { low: -self.high(), coeffs: c }
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let e = self.low + k as i32;
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match (mag.is_one(), e) {
                (_, 0) => write!(f, "{mag}")?,
                (true, 1) => f.write_str("v")?,
                (true, _) => write!(f, "v^{e}")?,
                (false, 1) => write!(f, "{mag}v")?,
                (false, _) => write!(f, "{mag}v^{e}")?,
            }
        }
        Ok(())
    }
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    c
}

fn trim_poly(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Gcd of the coefficients, nonnegative.
pub(crate) fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn primitive(p: &[BigInt]) -> Vec<BigInt> {
    let g = content(p);
    let mut out: Vec<BigInt> = if g.is_zero() || g.is_one() { p.to_vec() } else { p.iter().map(|c| c / &g).collect() };
    if out.last().is_some_and(Signed::is_negative) {
        for c in &mut out {
            *c = -&*c;
        }
    }
    out
}

/// `lc(b)^k · a mod b` for a suitable `k ≥ 0`; `b` nonzero.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    trim_poly(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (i, y) in b.iter().enumerate() {
            r[i + dr - db] -= &lr * y;
        }
        trim_poly(&mut r);
    }
    r
}

/// Primitive gcd in `Z[v]` with positive leading coefficient.
pub(crate) fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (mut a, mut b) = (primitive(a), primitive(b));
    if a.len() < b.len() {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = if r.is_empty() { r } else { primitive(&r) };
    }
    a
}

/// `a / b` in `Z[v]` when `b` divides `a` exactly.
pub(crate) fn poly_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    trim_poly(&mut r);
    if r.is_empty() {
        return r;
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut q = vec![BigInt::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let (t, rem) = r[dr].div_rem(lb);
        debug_assert!(rem.is_zero(), "inexact polynomial division");
        for (i, y) in b.iter().enumerate() {
            r[i + dr - db] -= &t * y;
        }
        q[dr - db] = t;
        trim_poly(&mut r);
    }
    debug_assert!(r.is_empty(), "inexact polynomial division");
    q
}
