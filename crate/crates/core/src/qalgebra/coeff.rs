//! Exact coefficients: rational functions in `v = q^{1/2}` and their
//! extension by a central `i` with `i² = -1`.

use core::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::laurent::{content, poly_div_exact, poly_gcd, Laurent};

/// Ring operations needed by the rewriting engine.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rat(r: RatFunc) -> Self;
}

/// An element of `Q(v)` in canonical form.
///
/// `num / den` with `den` an ordinary polynomial with nonzero constant term,
/// `gcd(num, den) = 1` in `Q[v, v⁻¹]`, coprime integer contents and a positive
/// leading coefficient of `den`. Equal functions have equal representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Laurent,
    den: Laurent,
}

impl RatFunc {
    pub fn new(num: Laurent, den: Laurent) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self::normalize(num, den)
    }

    pub fn from_laurent(l: Laurent) -> Self {
        Self::normalize(l, Laurent::one())
    }

    pub fn int(n: i64) -> Self {
        Self::from_laurent(Laurent::monomial(BigInt::from(n), 0))
    }

    /// `v^k = q^{k/2}`.
    pub fn v_pow(k: i32) -> Self {
        RatFunc { num: Laurent::monomial(BigInt::one(), k), den: Laurent::one() }
    }

    /// `q^k`.
    pub fn q_pow(k: i32) -> Self {
        Self::v_pow(2 * k)
    }

    /// `q^k - q^{-k}`.
    pub fn q_diff(k: i32) -> Self {
        Self::from_laurent(Laurent::from_terms(&[(1, 2 * k), (-1, -2 * k)]))
    }

    /// `1 - q^{-2k}`.
    pub fn one_minus_q_inv2(k: i32) -> Self {
        Self::from_laurent(Laurent::from_terms(&[(1, 0), (-1, -4 * k)]))
    }

    pub fn num(&self) -> &Laurent {
        &self.num
    }

    pub fn den(&self) -> &Laurent {
        &self.den
    }

    fn normalize(num: Laurent, den: Laurent) -> Self {
        if num.is_zero() {
            return RatFunc { num: Laurent::zero(), den: Laurent::one() };
        }
        let shift = den.low();
        let mut n = num.shift(-shift);
        let mut d = den.shift(-shift);
        if d.coeffs().len() > 1 {
            let g = poly_gcd(n.coeffs(), d.coeffs());
            if g.len() > 1 {
                n = Laurent::from_parts(n.low(), poly_div_exact(n.coeffs(), &g));
                d = Laurent::from_parts(0, poly_div_exact(d.coeffs(), &g));
            }
        }
        let g = content(n.coeffs()).gcd(&content(d.coeffs()));
        if !g.is_one() {
            n = n.div_exact_scalar(&g);
            d = d.div_exact_scalar(&g);
        }
        if d.lead().is_some_and(Signed::is_negative) {
            n = n.neg();
            d = d.neg();
        }
        RatFunc { num: n, den: d }
    }

    pub fn inv(&self) -> Self {
        assert!(!self.num.is_zero(), "inverse of zero");
        Self::normalize(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv())
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, v: Complex64) -> Complex64 {
        self.num.eval(v) / self.den.eval(v)
    }

    /// Substitution `v ↦ v⁻¹`, i.e. `q ↦ q⁻¹`.
    pub fn invert_variable(&self) -> Self {
        Self::normalize(self.num.invert_variable(), self.den.invert_variable())
    }
}

impl Coeff for RatFunc {
    fn zero() -> Self {
        RatFunc { num: Laurent::zero(), den: Laurent::one() }
    }

    fn one() -> Self {
        RatFunc { num: Laurent::one(), den: Laurent::one() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_constant() && self.den.coeffs()[0].is_one() {
                return RatFunc { num: self.num.add(&o.num), den: Laurent::one() };
            }
            return Self::normalize(self.num.add(&o.num), self.den.clone());
        }
        Self::normalize(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let unit_den = |r: &RatFunc| r.den.is_constant() && r.den.coeffs()[0].is_one();
        if unit_den(self) && unit_den(o) {
            return RatFunc { num: self.num.mul(&o.num), den: Laurent::one() };
        }
        Self::normalize(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    fn from_rat(r: RatFunc) -> Self {
        r
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_den = self.den.is_constant() && self.den.coeffs()[0].is_one();
        let simple_num = self.num.coeffs().len() <= 1;
        match (one_den, simple_num) {
            (true, _) => write!(f, "{}", self.num),
            (false, true) => write!(f, "{}/({})", self.num, self.den),
            (false, false) => write!(f, "({})/({})", self.num, self.den),
        }
    }
}

/// `re + i·im` with a formal central `i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Gaussian {
    pub re: RatFunc,
    pub im: RatFunc,
}

impl Gaussian {
    pub fn new(re: RatFunc, im: RatFunc) -> Self {
        Gaussian { re, im }
    }

    pub fn i() -> Self {
        Gaussian { re: RatFunc::zero(), im: RatFunc::one() }
    }

    pub fn eval(&self, v: Complex64) -> Complex64 {
        self.re.eval(v) + Complex64::new(0.0, 1.0) * self.im.eval(v)
    }
}

impl Coeff for Gaussian {
    fn zero() -> Self {
        Gaussian { re: RatFunc::zero(), im: RatFunc::zero() }
    }

    fn one() -> Self {
        Gaussian { re: RatFunc::one(), im: RatFunc::zero() }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn add(&self, o: &Self) -> Self {
        Gaussian { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    fn sub(&self, o: &Self) -> Self {
        Gaussian { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    fn mul(&self, o: &Self) -> Self {
        if self.im.is_zero() && o.im.is_zero() {
            return Gaussian { re: self.re.mul(&o.re), im: RatFunc::zero() };
        }
        Gaussian {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    fn neg(&self) -> Self {
        Gaussian { re: self.re.neg(), im: self.im.neg() }
    }

    fn from_rat(r: RatFunc) -> Self {
        Gaussian { re: r, im: RatFunc::zero() }
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "i·[{}]", self.im),
            (false, false) => write!(f, "[{}] + i·[{}]", self.re, self.im),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    #[test]
    fn canonical_form_is_unique() {
        // (q - q⁻¹)/(q² - q⁻²) = 1/(q + q⁻¹)
        let a = RatFunc::q_diff(1).div(&RatFunc::q_diff(2));
        let b = RatFunc::q_pow(1).add(&RatFunc::q_pow(-1)).inv();
        assert_eq!(a, b);
    }

    #[test]
    fn sums_cancel_to_canonical_zero() {
        let a = RatFunc::q_diff(3).div(&RatFunc::q_diff(1));
        assert_eq!(a.sub(&a), RatFunc::zero());
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn negative_denominators_are_normalized() {
        let a = RatFunc::new(Laurent::from_terms(&[(1, 0)]), Laurent::from_terms(&[(-2, 0), (-2, 3)]));
        let b = RatFunc::new(Laurent::from_terms(&[(-1, 0)]), Laurent::from_terms(&[(2, 0), (2, 3)]));
        assert_eq!(a, b);
        assert!(a.den().lead().unwrap().is_positive());
    }

    #[test]
    fn gaussian_i_squared() {
        let i = Gaussian::i();
        assert_eq!(i.mul(&i), Gaussian::one().neg());
    }

    #[test]
    fn display() {
        assert_eq!(format!("{}", RatFunc::q_diff(1)), "v^2 - v^-2");
        assert_eq!(format!("{}", RatFunc::q_diff(1).inv()), "v^2/(v^4 - 1)");
    }
}
