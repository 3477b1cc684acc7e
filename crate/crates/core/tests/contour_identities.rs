use mdlab_core::contour::{verify_45, verify_45_with, verify_69, verify_69_with, verify_tau_binomial, verify_tau_binomial_with, ContourOptions};
use mdlab_core::quadrature::{integrate_interval, QuadratureConfig};
use mdlab_core::{BParam, CheckReport, Complex64, ParamValue};

fn r(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn cfg() -> QuadratureConfig {
    QuadratureConfig::identity()
}

fn assert_pass(rep: &CheckReport) {
    assert!(rep.passed, "{} {}: lhs {:?} rhs {:?} err {:e}", rep.id, rep.label, rep.lhs, rep.rhs, rep.error);
}

fn offset_of(rep: &CheckReport) -> f64 {
    match rep.parameters.iter().find(|(k, _)| k == "offset") {
        Some((_, ParamValue::Real(v))) => *v,
        _ => panic!("no offset recorded"),
    }
}

#[test]
fn tau_binomial_parameter_sets() {
    for b in [0.83, 0.7] {
        let p = BParam::new(b).unwrap();
        let q = p.big_q;
        for (a, be) in [(r(q / 3.0), r(q / 3.0)), (r(q / 4.0), r(q / 3.0)), (Complex64::new(q / 5.0, 0.2), Complex64::new(q / 4.0, -0.1))] {
            assert_pass(&verify_tau_binomial(a, be, &p, &cfg()).unwrap());
        }
    }
}

#[test]
fn tau_binomial_swap_agrees() {
    let p = BParam::new(0.7).unwrap();
    let (a, be) = (r(p.big_q / 4.0), r(p.big_q / 3.0));
    let x = verify_tau_binomial(a, be, &p, &cfg()).unwrap();
    let y = verify_tau_binomial(be, a, &p, &cfg()).unwrap();
    assert_pass(&x);
    assert_pass(&y);
    assert!((x.rhs.unwrap() - y.rhs.unwrap()).norm() < 1e-12);
    assert!((x.lhs.unwrap() - y.lhs.unwrap()).norm() / x.lhs.unwrap().norm() < 1e-6);
}

#[test]
fn four_five_parameter_sets() {
    for b in [0.83, 1.2] {
        let p = BParam::new(b).unwrap();
        let q = p.big_q;
        for (a, be, g) in [
            (r(q / 5.0), r(q / 5.0), r(q / 6.0)),
            (r(q / 4.0), r(q / 5.0), r(q / 7.0)),
            (Complex64::new(q / 6.0, 0.1), Complex64::new(q / 5.0, -0.2), Complex64::new(q / 8.0, 0.05)),
        ] {
            assert_pass(&verify_45(a, be, g, &p, &cfg()).unwrap());
        }
    }
}

#[test]
fn four_five_is_symmetric_in_alpha_beta() {
    let p = BParam::new(1.2).unwrap();
    let q = p.big_q;
    let x = verify_45(r(q / 4.0), r(q / 5.0), r(q / 7.0), &p, &cfg()).unwrap();
    let y = verify_45(r(q / 5.0), r(q / 4.0), r(q / 7.0), &p, &cfg()).unwrap();
    assert!((x.lhs.unwrap() - y.lhs.unwrap()).norm() / x.lhs.unwrap().norm() < 1e-6);
}

#[test]
fn six_nine_parameter_sets() {
    for b in [0.83, 0.7] {
        let p = BParam::new(b).unwrap();
        let q = p.big_q;
        for (a, bb, c, d) in [
            (r(q / 6.0), r(q / 6.0), r(q / 6.0), r(q / 5.0)),
            (r(q / 7.0), r(q / 6.0), r(q / 5.0), r(q / 4.0)),
            (Complex64::new(q / 8.0, 0.1), r(q / 7.0), Complex64::new(q / 6.0, -0.1), r(q / 5.0)),
        ] {
            assert_pass(&verify_69(a, bb, c, d, &p, &cfg()).unwrap());
        }
    }
}

#[test]
fn six_nine_is_symmetric_in_a_b() {
    let p = BParam::new(0.7).unwrap();
    let q = p.big_q;
    let x = verify_69(r(q / 7.0), r(q / 6.0), r(q / 5.0), r(q / 4.0), &p, &cfg()).unwrap();
    let y = verify_69(r(q / 6.0), r(q / 7.0), r(q / 5.0), r(q / 4.0), &p, &cfg()).unwrap();
    assert!((x.lhs.unwrap() - y.lhs.unwrap()).norm() / x.lhs.unwrap().norm() < 1e-6);
}

#[test]
fn contour_shift_invariance() {
    let p = BParam::new(0.83).unwrap();
    let q = p.big_q;
    let shifted = |rep: &CheckReport| ContourOptions { offset: Some(1.5 * offset_of(rep)), ..Default::default() };
    let same = |x: &CheckReport, y: &CheckReport| {
        let d = (x.lhs.unwrap() - y.lhs.unwrap()).norm() / x.lhs.unwrap().norm();
        assert!(d <= 1e-8, "{}: shift changed the integral by {d:e}", x.id);
    };

    let x = verify_tau_binomial(r(q / 3.0), r(q / 4.0), &p, &cfg()).unwrap();
    let y = verify_tau_binomial_with(r(q / 3.0), r(q / 4.0), &p, &shifted(&x)).unwrap();
    same(&x, &y);

    let x = verify_45(r(q / 5.0), r(q / 5.0), r(q / 6.0), &p, &cfg()).unwrap();
    let y = verify_45_with(r(q / 5.0), r(q / 5.0), r(q / 6.0), &p, &shifted(&x)).unwrap();
    same(&x, &y);

    let x = verify_69(r(q / 6.0), r(q / 6.0), r(q / 6.0), r(q / 5.0), &p, &cfg()).unwrap();
    let y = verify_69_with(r(q / 6.0), r(q / 6.0), r(q / 6.0), r(q / 5.0), &p, &shifted(&x)).unwrap();
    same(&x, &y);
}

#[test]
fn truncation_robustness() {
    // Fixed truncations at ±32 and ±64 agree with the adaptive result.
    let p = BParam::new(0.83).unwrap();
    let q = p.big_q;
    let (a, be) = (r(q / 3.0), r(q / 3.0));
    let rep = verify_tau_binomial(a, be, &p, &cfg()).unwrap();
    let off = offset_of(&rep);
    let gcfg = QuadratureConfig::strip();
    let i = Complex64::new(0.0, 1.0);
    let mut f = |x: f64| {
        let tau = Complex64::new(x, off);
        let g1 = mdlab_core::qdilog::eval_gb(a + i * p.b * tau, &p, &gcfg)?;
        let g2 = mdlab_core::qdilog::eval_gb(r(q) + i * p.b * tau, &p, &gcfg)?;
        Ok(p.b * (-2.0 * std::f64::consts::PI * p.b * be * tau).exp() * g1 / g2)
    };
    let c = cfg();
    let v32 = integrate_interval(&mut f, -32.0, 32.0, 1.0, &c).unwrap().value;
    let v64 = integrate_interval(&mut f, -64.0, 64.0, 1.0, &c).unwrap().value;
    assert!((v64 - v32).norm() <= c.abs_tol * 10.0, "{:e}", (v64 - v32).norm());
    assert!((v64 - rep.lhs.unwrap()).norm() <= 1e-9);
}

#[test]
fn divergent_parameters_are_refused() {
    // Re(α+β+γ) > Q removes decay at -∞.
    let p = BParam::new(0.83).unwrap();
    let q = p.big_q;
    let res = verify_45(r(0.45 * q), r(0.45 * q), r(0.4 * q), &p, &cfg());
    assert!(res.is_err(), "{res:?}");
}
