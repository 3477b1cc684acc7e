use mdlab_core::qdilog::*;
use mdlab_core::{BParam, Complex64, QuadratureConfig};
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn cfg() -> QuadratureConfig {
    QuadratureConfig::strip()
}

#[test]
fn functional_equations_on_the_grid() {
    for b in [0.7, 0.83, 1.2] {
        let p = BParam::new(b).unwrap();
        let grid = strip_grid(&p, 10, 10, 1.5);
        for inverse in [false, true] {
            let r = check_functional_equation(&grid, inverse, &p, &cfg(), 1e-9);
            assert!(r.passed, "{}: {:e}", r.label, r.error);
        }
        for n1 in 0..=3 {
            for n2 in 0..=3 {
                let r = check_general_shift(&grid, n1, n2, &p, &cfg(), 1e-9);
                assert!(r.passed, "{}: {:e}", r.label, r.error);
            }
        }
    }
}

#[test]
fn reflection_on_the_grid() {
    for b in [0.7, 0.83, 1.2] {
        let p = BParam::new(b).unwrap();
        let r = check_reflection(&strip_grid(&p, 10, 10, 1.5), &p, &cfg(), 1e-9);
        assert!(r.passed, "{}: {:e}", r.label, r.error);
    }
}

#[test]
fn gb_at_b_matches_the_limit_from_inside_the_strip() {
    // Oracle: the raw strip integral near z = b, extrapolated to the point.
    for b in [0.7, 0.83, 1.2] {
        let p = BParam::new(b).unwrap();
        for x in [p.b, 1.0 / p.b] {
            let (log_limit, _) = richardson(|h| eval_log_gb_strip(c(x + h, 0.0), &p, &cfg()), 0.05, 5).unwrap();
            let expected = c(0.0, -x);
            assert!((log_limit.exp() - expected).norm() / x < 1e-8, "b={b}, x={x}: {}", log_limit.exp());
        }
        for r in check_special_values(&p, &cfg(), 1e-8) {
            assert!(r.passed, "{}: {:e}", r.label, r.error);
        }
        assert!(check_zero_at_q(&p, &cfg()).passed);
    }
}

#[test]
fn strip_value_at_half_q() {
    let p = BParam::new(0.83).unwrap();
    let l = eval_log_gb_strip(c(p.big_q / 2.0, 0.0), &p, &cfg()).unwrap();
    let expected = (c(0.0, -std::f64::consts::PI * p.big_q * p.big_q / 4.0)).exp();
    assert!(((2.0 * l).exp() - expected).norm() < 1e-12);
}

#[test]
fn residues_by_extrapolation() {
    for b in [0.83, 1.2] {
        let p = BParam::new(b).unwrap();
        for n1 in 0..=2 {
            for n2 in 0..=2 {
                let r = check_residue(n1, n2, &p, &cfg(), 1e-4);
                assert!(r.passed, "{}: {:e} {:?}", r.label, r.error, r.detail);
            }
        }
    }
}

#[test]
fn residues_next_to_a_nearby_pole() {
    // 1/b = 2b + 0.029 at b = 0.7: the poles (0,1) and (2,0) nearly collide
    let p = BParam::new(0.7).unwrap();
    for (n1, n2) in [(0, 1), (2, 0), (1, 1), (0, 2)] {
        let r = check_residue(n1, n2, &p, &cfg(), 1e-4);
        assert!(r.passed, "{}: {:e}", r.label, r.error);
    }
}

#[test]
fn residue_one_one_matches_direct_limit() {
    // Oracle: the crude limit at a tiny x, no extrapolation.
    let p = BParam::new(0.83).unwrap();
    let x = 1e-6;
    let direct = x * eval_gb(c(x - p.b - 1.0 / p.b, 0.0), &p, &cfg()).unwrap();
    let closed = residue_coeff(1, 1, &p).unwrap();
    assert!((direct - closed).norm() / closed.norm() < 1e-4);
}

#[test]
fn asymptotics_improve_with_t() {
    let p = BParam::new(0.83).unwrap();
    let x = p.big_q / 2.0;
    let r5 = check_asymptotics(x, 5.0, &p, &cfg(), 1e-6).unwrap();
    let r8 = check_asymptotics(x, 8.0, &p, &cfg(), 1e-6).unwrap();
    let r10 = check_asymptotics(x, 10.0, &p, &cfg(), 1e-6).unwrap();
    assert!(r5.passed && r8.passed && r10.passed);
    assert!(r10.error <= r5.error);
}

#[test]
fn q_exponential_shift_relation() {
    for (b, x) in [(0.83, 0.4), (0.83, 1.0), (0.7, 3.0), (1.2, 2.0)] {
        let p = BParam::new(b).unwrap();
        let r = check_q_exponential_shift(x, &p, &cfg(), 1e-9);
        assert!(r.passed, "{}: {:e}", r.label, r.error);
    }
    let p = BParam::new(0.83).unwrap();
    let g1 = eval_small_gb(c(1.0, 0.0), &p, &cfg()).unwrap();
    let direct = p.zeta_conj() / eval_gb(c(p.big_q / 2.0, 0.0), &p, &cfg()).unwrap();
    assert!((g1 - direct).norm() < 1e-14);
}

#[test]
fn reduction_order_does_not_matter() {
    for b in [0.7, 0.83, 1.2] {
        let p = BParam::new(b).unwrap();
        let r = check_path_independence(&off_strip_points(&p), &p, &cfg(), 1e-10);
        assert!(r.passed, "{}: {:e}", r.label, r.error);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn reflection_holds_at_random_points(b in 0.6f64..1.6, re in -2.0f64..4.0, im in -3.0f64..3.0) {
        let p = BParam::new(b).unwrap();
        let z = c(re, im);
        prop_assume!(matches!(classify(z, &p, 1e-3), PoleZeroClass::Regular));
        prop_assume!(matches!(classify(p.big_q - z, &p, 1e-3), PoleZeroClass::Regular));
        let lhs = eval_gb(z, &p, &cfg()).unwrap() * eval_gb(p.big_q - z, &p, &cfg()).unwrap();
        let rhs = (std::f64::consts::PI * c(0.0, 1.0) * z * (z - p.big_q)).exp();
        prop_assert!((lhs - rhs).norm() / rhs.norm() < 1e-9);
    }

    #[test]
    fn functional_equation_at_random_points(b in 0.6f64..1.6, re in -2.0f64..4.0, im in -3.0f64..3.0) {
        let p = BParam::new(b).unwrap();
        let z = c(re, im);
        prop_assume!(matches!(classify(z, &p, 1e-3), PoleZeroClass::Regular));
        let lhs = eval_gb(z + p.b, &p, &cfg()).unwrap();
        let rhs = (1.0 - (2.0 * std::f64::consts::PI * c(0.0, 1.0) * p.b * z).exp()) * eval_gb(z, &p, &cfg()).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-9 * lhs.norm().max(rhs.norm()));
    }
}
