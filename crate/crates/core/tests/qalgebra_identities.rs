use mdlab_core::qalgebra::*;
use mdlab_core::qalgebra::Strategy as Order;
use mdlab_core::Complex64;
use proptest::strategy::Strategy;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type P = NCPoly<RatFunc>;
use GeneratorSymbol as G;

fn assert_all(reports: &[mdlab_core::CheckReport]) {
    for r in reports {
        assert!(r.passed, "{} {} failed: {:?}", r.id, r.label, r.detail);
    }
}

#[test]
fn kac_identity_up_to_four() {
    for n in 0..=4 {
        for m in 0..=4 {
            assert_all(&[verify_kac(n, m).unwrap()]);
        }
    }
}

#[test]
fn kac_two_two_by_single_commutations() {
    // oracle: move each F left through E^2 one step at a time using
    // E F = F E + (K - K⁻¹)/(q - q⁻¹) and E K^{±1} = q^{∓2} K^{±1} E
    let e = P::gen(G::e(1));
    let f = P::gen(G::f(1));
    let lhs = normal_order(&e.pow(2).mul(&f.pow(2)), AlgebraPreset::Sl2).unwrap();
    let h = P::gen(G::k(1)).sub(&P::gen(G::kinv(1))).scale(&RatFunc::q_diff(1).inv());
    // E²F = F E² + E h + h E
    let e2f = f.mul(&e.pow(2)).add(&e.mul(&h)).add(&h.mul(&e));
    let lhs_oracle = normal_order(&e2f.mul(&f), AlgebraPreset::Sl2).unwrap();
    assert_eq!(lhs, lhs_oracle);
}

#[test]
fn mixed_commutators_up_to_four() {
    for m in 1..=4 {
        assert_all(&[verify_mixed_commutator(GenKind::E, m).unwrap()]);
        assert_all(&[verify_mixed_commutator(GenKind::F, m).unwrap()]);
    }
}

#[test]
fn serre_sums_up_to_five() {
    for total in 0..=5 {
        for n in 0..=total {
            assert_all(&[verify_serre_sum(GenKind::E, n, total - n).unwrap()]);
            assert_all(&[verify_serre_sum(GenKind::F, n, total - n).unwrap()]);
        }
    }
    assert_all(&[verify_q_serre(GenKind::E).unwrap(), verify_q_serre(GenKind::F).unwrap()]);
}

#[test]
fn serre_sum_one_one_is_the_root_vector_definition() {
    // ℰ12 = (q^{1/2} ℰ2 ℰ1 - q^{-1/2} ℰ1 ℰ2)/(q - q⁻¹), in unscaled generators
    let d = RatFunc::q_diff(1);
    let def = P::word(&[G::e(2), G::e(1)])
        .scale(&RatFunc::v_pow(1))
        .sub(&P::word(&[G::e(1), G::e(2)]).scale(&RatFunc::v_pow(-1)))
        .scale(&d.inv());
    let nf = normal_order(&def, AlgebraPreset::Sl3).unwrap();
    assert_eq!(nf, P::gen(G::e12()));
}

#[test]
fn commuting_cases() {
    let r = verify_commuting_cases();
    assert_eq!(r.len(), 6);
    assert_all(&r);
}

#[test]
fn qbinomial_up_to_six() {
    for n in 0..=6 {
        assert_all(&[verify_qbinomial(n)]);
    }
}

#[test]
fn coproduct_is_a_homomorphism_and_coassociative() {
    for p in [AlgebraPreset::Sl2, AlgebraPreset::Sl3] {
        let hom = verify_coproduct_hom(p);
        assert!(hom.len() >= 5);
        assert_all(&hom);
        assert_all(&verify_coassociativity(p));
    }
}

#[test]
fn dual_variable_rerun_matches() {
    let bounds = SymbolicBounds { kac: 2, commutator: 2, serre: 3, binomial: 3 };
    let a = symbolic_suite(bounds, Variable::Q).unwrap();
    let b = symbolic_suite(bounds, Variable::QTilde).unwrap();
    assert_eq!(a.len(), b.len());
    assert_all(&a);
    assert_all(&b);
}

/// Substituting the defining expression of a root vector must give the same
/// normal form as the closed-form rules for that root vector.
#[test]
fn root_vector_rules_agree_with_their_definition() {
    let d_inv = RatFunc::q_diff(1).inv();
    let def = |x1: G, x2: G| {
        P::word(&[x2, x1])
            .scale(&RatFunc::v_pow(1))
            .sub(&P::word(&[x1, x2]).scale(&RatFunc::v_pow(-1)))
            .scale(&d_inv)
    };
    let e12 = def(G::e(1), G::e(2));
    let f12 = def(G::f(1), G::f(2));
    let others = [G::e(1), G::e(2), G::f(1), G::f(2), G::k(1), G::kinv(2), G::e12(), G::f12()];
    for &x in &others {
        let gx = P::gen(x);
        for (root, expanded) in [(G::e12(), &e12), (G::f12(), &f12)] {
            let sym_l = normal_order(&P::gen(root).mul(&gx), AlgebraPreset::Sl3).unwrap();
            let exp_l = normal_order(&expanded.mul(&gx), AlgebraPreset::Sl3).unwrap();
            assert_eq!(sym_l, exp_l, "{root}·{x}");
            let sym_r = normal_order(&gx.mul(&P::gen(root)), AlgebraPreset::Sl3).unwrap();
            let exp_r = normal_order(&gx.mul(expanded), AlgebraPreset::Sl3).unwrap();
            assert_eq!(sym_r, exp_r, "{x}·{root}");
        }
    }
    // both root vectors expanded at once
    let sym = normal_order(&P::word(&[G::e12(), G::f12()]), AlgebraPreset::Sl3).unwrap();
    let exp = normal_order(&e12.mul(&f12), AlgebraPreset::Sl3).unwrap();
    assert_eq!(sym, exp);
}

fn random_word(rng: &mut ChaCha8Rng, alphabet: &[G], max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| alphabet[rng.gen_range(0..alphabet.len())]).collect()
}

#[test]
fn leftmost_and_rightmost_rewriting_agree_on_random_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let presets = AlgebraPreset::ALL;
    for k in 0..1000 {
        let p = presets[k % presets.len()];
        let w = random_word(&mut rng, &p.alphabet(), 8);
        let x = P::word(&w);
        let left = normal_order_with(&x, p, Order::Leftmost, DEFAULT_STEP_BUDGET).unwrap();
        let right = normal_order_with(&x, p, Order::Rightmost, DEFAULT_STEP_BUDGET).unwrap();
        assert_eq!(left, right, "{p}: {}", format_word(&w));
    }
}

#[test]
fn rewriting_terminates_within_a_small_budget() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for k in 0..200 {
        let p = AlgebraPreset::ALL[k % 4];
        let x = P::word(&random_word(&mut rng, &p.alphabet(), 8));
        assert!(normal_order_with(&x, p, Order::Leftmost, 200_000).is_ok());
    }
}

#[test]
fn multiply_examples() {
    let e = P::gen(G::e(1));
    let f = P::gen(G::f(1));
    assert_eq!(e.mul(&f), P::word(&[G::e(1), G::f(1)]));
    let two_k = P::gen(G::k(1)).scale(&RatFunc::int(2));
    let q_e = e.scale(&RatFunc::q_pow(1));
    assert_eq!(two_k.mul(&q_e), P::term(RatFunc::int(2).mul(&RatFunc::q_pow(1)), vec![G::k(1), G::e(1)]));
    let s = e.add(&f).pow(2);
    let expect = P::word(&[G::e(1), G::e(1)])
        .add(&P::word(&[G::e(1), G::f(1)]))
        .add(&P::word(&[G::f(1), G::e(1)]))
        .add(&P::word(&[G::f(1), G::f(1)]));
    assert_eq!(s, expect);
}

fn arb_rat() -> impl Strategy<Value = RatFunc> {
    let lau = prop::collection::vec((-5i64..=5, -6i32..=6), 1..4).prop_map(|t| Laurent::from_terms(&t));
    (lau.clone(), lau).prop_filter_map("zero denominator", |(n, d)| (!d.is_zero()).then(|| RatFunc::new(n, d)))
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= 1e-9 * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ratfunc_ops_match_numeric_evaluation(a in arb_rat(), b in arb_rat()) {
        let v = Complex64::new(0.61, 0.37);
        prop_assert!(close(a.add(&b).eval(v), a.eval(v) + b.eval(v)));
        prop_assert!(close(a.mul(&b).eval(v), a.eval(v) * b.eval(v)));
        prop_assert!(close(a.sub(&b).eval(v), a.eval(v) - b.eval(v)));
        if !b.is_zero() {
            prop_assert!(close(a.div(&b).eval(v), a.eval(v) / b.eval(v)));
        }
        // canonical form: equal values, equal representations
        prop_assert_eq!(a.add(&b).sub(&b), a.clone());
    }

    #[test]
    fn normal_order_is_idempotent(seed in any::<u64>(), which in 0usize..4) {
        let p = AlgebraPreset::ALL[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = P::word(&random_word(&mut rng, &p.alphabet(), 7))
            .add(&P::word(&random_word(&mut rng, &p.alphabet(), 5)).scale(&RatFunc::q_pow(3)));
        let once = normal_order(&x, p).unwrap();
        let twice = normal_order(&once, p).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn normal_order_is_multiplicative(seed in any::<u64>()) {
        let p = AlgebraPreset::Sl3;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = P::word(&random_word(&mut rng, &p.alphabet(), 4));
        let y = P::word(&random_word(&mut rng, &p.alphabet(), 4));
        let direct = normal_order(&x.mul(&y), p).unwrap();
        let staged = normal_order(&normal_order(&x, p).unwrap().mul(&normal_order(&y, p).unwrap()), p).unwrap();
        prop_assert_eq!(direct, staged);
    }
}
