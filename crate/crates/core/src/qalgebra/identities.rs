//! Integer-exponent identities checked as exact equalities of normal forms.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::coeff::{Coeff, Gaussian, RatFunc};
use super::poly::{GenKind, GeneratorSymbol as G, NCPoly};
use super::preset::AlgebraPreset;
use super::rewrite::Rewriter;
use crate::report::{CheckReport, IdentityId};
use crate::{Error, Result};

/// Largest exponent accepted by the Kac check.
pub const KAC_BOUND: u32 = 6;
/// Largest `N + M` accepted by the Serre-sum check.
pub const SERRE_BOUND: u32 = 7;

/// `∏_{k=1}^{n} (1 - q^{-2k})`.
pub fn q_factorial(n: u32) -> RatFunc {
    (1..=n as i32).fold(RatFunc::one(), |acc, k| acc.mul(&RatFunc::one_minus_q_inv2(k)))
}

/// `∏_{k=1}^{n} (q^k - q^{-k})`.
fn sym_factorial(n: u32) -> RatFunc {
    (1..=n as i32).fold(RatFunc::one(), |acc, k| acc.mul(&RatFunc::q_diff(k)))
}

/// Gauss coefficient `∏_{1..N}(1-q^{-2k}) / (∏_{1..n} ∏_{1..N-n})`.
pub fn q_binomial(n_total: u32, n: u32) -> RatFunc {
    assert!(n <= n_total);
    q_factorial(n_total).div(&q_factorial(n).mul(&q_factorial(n_total - n)))
}

/// `X^{(N)} = ∏(q - q⁻¹) / ∏(q^k - q^{-k}) · X^N` for `X` an `E` or `F`.
pub fn divided_power<C: Coeff>(g: G, n: u32) -> NCPoly<C> {
    assert!(matches!(g.kind, GenKind::E | GenKind::F), "divided powers are defined for E and F");
    let c = RatFunc::q_diff(1).pow(n).div(&sym_factorial(n));
    NCPoly::gen(g).pow(n).scale(&C::from_rat(c))
}

/// The rescaling `-i(q - q⁻¹)` turning `E`, `F` into `ℰ`, `ℱ`.
pub fn rescaling() -> Gaussian {
    Gaussian::new(RatFunc::zero(), RatFunc::q_diff(1).neg())
}

fn describe<C: Coeff>(diff: &NCPoly<C>) -> String {
    const SHOW: usize = 4;
    let mut s = format!("{} differing monomial(s):", diff.len());
    for (w, c) in diff.iter().take(SHOW) {
        s.push_str(&format!(" [{c}]·{};", super::poly::format_word(w)));
    }
    if diff.len() > SHOW {
        s.push_str(" ...");
    }
    s
}

/// Normal-orders both sides and reports exact (in)equality.
pub fn compare<C: Coeff>(
    rw: &Rewriter<C>,
    id: IdentityId,
    label: impl Into<String>,
    lhs: &NCPoly<C>,
    rhs: &NCPoly<C>,
) -> CheckReport {
    let label = label.into();
    let diff = rw.normal_order(&lhs.sub(rhs));
    match diff {
        Ok(d) if d.is_zero() => CheckReport::exact(id, label, None),
        Ok(d) => CheckReport::exact(id, label, Some(describe(&d))),
        Err(e) => CheckReport::failed(id, label, format!("{e}")),
    }
    .with_param("preset", rw.preset().name())
}

fn bounded(n: u32, bound: u32, what: &str) -> Result<()> {
    if n > bound {
        return Err(Error::Precondition(format!("{what} = {n} exceeds the bound {bound}")));
    }
    Ok(())
}

/// Kac identity for `E^{(N)} F^{(M)}` in `sl2`.
pub fn verify_kac(n: u32, m: u32) -> Result<CheckReport> {
    bounded(n.max(m), KAC_BOUND, "exponent")?;
    let rw = Rewriter::<RatFunc>::new(AlgebraPreset::Sl2);
    let (e, f, k, ki) = (G::e(1), G::f(1), G::k(1), G::kinv(1));
    let lhs = divided_power::<RatFunc>(e, n).mul(&divided_power(f, m));
    let mut rhs = NCPoly::zero();
    let (ni, mi) = (n as i32, m as i32);
    for j in 0..=n.min(m) {
        let ji = j as i32;
        let mut middle = NCPoly::scalar(sym_factorial(j).inv());
        for kk in 1..=ji {
            let factor = NCPoly::term(RatFunc::q_pow(-ni - mi + ji + kk), vec![k])
                .sub(&NCPoly::term(RatFunc::q_pow(ni + mi - ji - kk), vec![ki]));
            middle = middle.mul(&factor);
        }
        rhs = rhs.add(&divided_power(f, m - j).mul(&middle).mul(&divided_power(e, n - j)));
    }
    Ok(compare(&rw, IdentityId::Kac, format!("N={n} M={m}"), &lhs, &rhs)
        .with_param("N", n)
        .with_param("M", m))
}

/// `[ℰ^m, ℱ]` (for `E`) or `[ℰ, ℱ^m]` (for `F`) against the closed form.
pub fn verify_mixed_commutator(which: GenKind, m: u32) -> Result<CheckReport> {
    if m == 0 {
        return Err(Error::Precondition("m must be at least 1".into()));
    }
    let rw = Rewriter::<Gaussian>::new(AlgebraPreset::Sl2);
    let c = rescaling();
    let e = NCPoly::<Gaussian>::gen(G::e(1)).scale(&c);
    let f = NCPoly::<Gaussian>::gen(G::f(1)).scale(&c);
    let mi = m as i32;
    let cartan_part = NCPoly::term(Gaussian::from_rat(RatFunc::q_pow(1 - mi)), vec![G::k(1)])
        .sub(&NCPoly::term(Gaussian::from_rat(RatFunc::q_pow(mi - 1)), vec![G::kinv(1)]));
    let front = Gaussian::from_rat(RatFunc::q_diff(mi).neg());
    let (id, lhs, rhs) = match which {
        GenKind::E => (
            IdentityId::MixedCommutatorE,
            e.pow(m).commutator(&f),
            cartan_part.mul(&e.pow(m - 1)).scale(&front),
        ),
        GenKind::F => (
            IdentityId::MixedCommutatorF,
            e.commutator(&f.pow(m)),
            f.pow(m - 1).mul(&cartan_part).scale(&front),
        ),
        _ => return Err(Error::Precondition("mixed commutators are defined for E and F".into())),
    };
    Ok(compare(&rw, id, format!("m={m}"), &lhs, &rhs).with_param("m", m))
}

/// `X1^N X2^M` expanded through the non-simple root `X12` in `sl3`, for the
/// rescaled `ℰ` (`which = E`) or `ℱ` (`which = F`).
pub fn verify_serre_sum(which: GenKind, n: u32, m: u32) -> Result<CheckReport> {
    bounded(n + m, SERRE_BOUND, "N + M")?;
    let (x1, x2, x12, id) = match which {
        GenKind::E => (G::e(1), G::e(2), G::e12(), IdentityId::SerreSumE),
        GenKind::F => (G::f(1), G::f(2), G::f12(), IdentityId::SerreSumF),
        _ => return Err(Error::Precondition("Serre sums are defined for E and F".into())),
    };
    let rw = Rewriter::<Gaussian>::new(AlgebraPreset::Sl3);
    let c = rescaling();
    let s1 = NCPoly::<Gaussian>::gen(x1).scale(&c);
    let s2 = NCPoly::<Gaussian>::gen(x2).scale(&c);
    let s12 = NCPoly::<Gaussian>::gen(x12).scale(&c.mul(&c));
    let lhs = s1.pow(n).mul(&s2.pow(m));
    let mut rhs = NCPoly::zero();
    let (ni, mi) = (n as i32, m as i32);
    for j in 0..=n.min(m) {
        let ji = j as i32;
        let sign = if j % 2 == 0 { RatFunc::one() } else { RatFunc::one().neg() };
        let coeff = sign
            .mul(&RatFunc::v_pow(2 * ni * mi - ji * ji + 2 * ji))
            .mul(&q_factorial(n))
            .mul(&q_factorial(m))
            .div(&q_factorial(n - j).mul(&q_factorial(m - j)).mul(&q_factorial(j)));
        let word = s2.pow(m - j).mul(&s12.pow(j)).mul(&s1.pow(n - j));
        rhs = rhs.add(&word.scale(&Gaussian::from_rat(coeff)));
    }
    Ok(compare(&rw, id, format!("N={n} M={m}"), &lhs, &rhs)
        .with_param("N", n)
        .with_param("M", m))
}

/// `X1² X2 - (q + q⁻¹) X1 X2 X1 + X2 X1² = 0` in `sl3`.
pub fn verify_q_serre(which: GenKind) -> Result<CheckReport> {
    let (x1, x2, id) = match which {
        GenKind::E => (G::e(1), G::e(2), IdentityId::QSerreE),
        GenKind::F => (G::f(1), G::f(2), IdentityId::QSerreF),
        _ => return Err(Error::Precondition("q-Serre relations are defined for E and F".into())),
    };
    let rw = Rewriter::<RatFunc>::new(AlgebraPreset::Sl3);
    let lhs = q_serre_element(x1, x2);
    Ok(compare(&rw, id, format!("{x1}²{x2}"), &lhs, &NCPoly::zero()))
}

pub(crate) fn q_serre_element<C: Coeff>(x1: G, x2: G) -> NCPoly<C> {
    let q_sum = C::from_rat(RatFunc::q_pow(1).add(&RatFunc::q_pow(-1)));
    NCPoly::word(&[x1, x1, x2])
        .sub(&NCPoly::word(&[x1, x2, x1]).scale(&q_sum))
        .add(&NCPoly::word(&[x2, x1, x1]))
}

/// Commutators that vanish: `[E_i, F_j]`, `i ≠ j`, in `sl3`, and everything
/// across the two nodes of the commuting pair.
pub fn verify_commuting_cases() -> Vec<CheckReport> {
    let mut out = Vec::new();
    let cases: [(AlgebraPreset, G, G); 6] = [
        (AlgebraPreset::Sl3, G::e(1), G::f(2)),
        (AlgebraPreset::Sl3, G::e(2), G::f(1)),
        (AlgebraPreset::CommutingPair, G::e(1), G::e(2)),
        (AlgebraPreset::CommutingPair, G::f(1), G::f(2)),
        (AlgebraPreset::CommutingPair, G::e(1), G::f(2)),
        (AlgebraPreset::CommutingPair, G::e(2), G::f(1)),
    ];
    for (preset, a, b) in cases {
        let rw = Rewriter::<RatFunc>::new(preset);
        let lhs = NCPoly::gen(a).commutator(&NCPoly::gen(b));
        out.push(compare(&rw, IdentityId::CommutingCases, format!("[{a}, {b}]"), &lhs, &NCPoly::zero()));
    }
    out
}

/// `(u + v)^N = Σ_n C_q(N, n) u^{N-n} v^n` for `uv = q² vu`.
pub fn verify_qbinomial(n: u32) -> CheckReport {
    let rw = Rewriter::<RatFunc>::new(AlgebraPreset::QWeylPair);
    let (u, v) = (NCPoly::<RatFunc>::gen(G::u()), NCPoly::<RatFunc>::gen(G::v()));
    let lhs = u.add(&v).pow(n);
    let mut rhs = NCPoly::zero();
    for j in 0..=n {
        rhs = rhs.add(&u.pow(n - j).mul(&v.pow(j)).scale(&q_binomial(n, j)));
    }
    compare(&rw, IdentityId::QBinomial, format!("N={n}"), &lhs, &rhs).with_param("N", n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::normal_order;

    #[test]
    fn divided_power_examples() {
        let e = G::e(1);
        assert_eq!(divided_power::<RatFunc>(e, 0), NCPoly::one());
        assert_eq!(divided_power::<RatFunc>(e, 1), NCPoly::gen(e));
        let qsum = RatFunc::q_pow(1).add(&RatFunc::q_pow(-1));
        assert_eq!(divided_power::<RatFunc>(e, 2), NCPoly::gen(e).pow(2).scale(&qsum.inv()));
    }

    #[test]
    fn qbinomial_two_by_direct_expansion() {
        // uv + vu = (1 + q^{-2}) uv
        let (u, v) = (G::u(), G::v());
        let lhs = normal_order(&NCPoly::<RatFunc>::gen(u).add(&NCPoly::gen(v)).pow(2), AlgebraPreset::QWeylPair).unwrap();
        let expect = NCPoly::word(&[u, u])
            .add(&NCPoly::word(&[u, v]).scale(&RatFunc::one().add(&RatFunc::q_pow(-2))))
            .add(&NCPoly::word(&[v, v]));
        assert_eq!(lhs, expect);
        assert_eq!(q_binomial(2, 1), RatFunc::one().add(&RatFunc::q_pow(-2)));
    }

    #[test]
    fn small_cases() {
        assert!(verify_kac(1, 1).unwrap().passed);
        assert!(verify_kac(1, 0).unwrap().passed);
        assert!(verify_mixed_commutator(GenKind::E, 1).unwrap().passed);
        assert!(verify_serre_sum(GenKind::E, 1, 1).unwrap().passed);
        assert!(verify_q_serre(GenKind::E).unwrap().passed);
        assert!(verify_qbinomial(3).passed);
    }

    #[test]
    fn wrong_identity_is_reported() {
        let rw = Rewriter::<RatFunc>::new(AlgebraPreset::Sl2);
        let r = compare(&rw, IdentityId::Kac, "EF = FE", &NCPoly::word(&[G::e(1), G::f(1)]), &NCPoly::word(&[G::f(1), G::e(1)]));
        assert!(!r.passed);
        assert!(r.detail.unwrap().contains("2 differing"));
    }
}
