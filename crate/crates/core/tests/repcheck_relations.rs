use core::f64::consts::PI;

use mdlab_core::repcheck::*;
use mdlab_core::Complex64;

fn params() -> OmegaParams {
    OmegaParams::from_b(0.83).unwrap()
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

#[test]
fn full_catalogue_passes_for_ranks_two_and_three() {
    for big_n in [2, 3] {
        let reports = verify_all(big_n, 20, params(), 42);
        assert!(!reports.is_empty());
        for r in &reports {
            assert!(r.passed, "N={big_n} {}: error {:e} {:?}", r.label, r.error, r.detail);
        }
    }
}

#[test]
fn catalogue_covers_serre_and_every_sign_coincidence() {
    let rels = catalogue(3);
    for fam in RelationFamily::ALL {
        assert!(rels.iter().any(|r| r.family == fam), "{fam:?} missing");
    }
    let pairs = |f: RelationFamily| -> Vec<(usize, usize)> {
        rels.iter().filter(|r| r.family == f).map(|r| (r.n, r.m)).collect()
    };
    for f in RelationFamily::ALL.into_iter().filter(|f| f.is_cross()) {
        let ps = pairs(f);
        assert!(ps.iter().any(|(n, m)| n == m), "{f:?}: n = m");
        assert!(ps.iter().any(|(n, m)| *n == m + 1 || n + 1 == *m), "{f:?}: adjacent");
    }
    // tilde copies exist for every single-group family
    assert!(rels.iter().any(|r| r.dual && r.family == RelationFamily::LowerSerreSecond));
    assert!(catalogue(2).iter().all(|r| !matches!(r.family, RelationFamily::RaiseSerreFirst)));
}

#[test]
fn a_wrong_sign_is_detected() {
    // E_{1,2} and K̃_1 anticommute; claiming they commute must fail
    let layout = GzLayout::new(2).unwrap();
    let p = params();
    let e = build_generator(GeneratorKind::ERaise, 1, layout, p).unwrap();
    let tk = build_generator(GeneratorKind::TK, 1, layout, p).unwrap();
    let s = sample_trial(layout, 1, 0).unwrap();
    let ab = e.compose(&tk).unwrap().apply(&s.function, &s.point).unwrap();
    let ba = tk.compose(&e).unwrap().apply(&s.function, &s.point).unwrap();
    assert!((ab + ba).norm() < 1e-12 * ab.norm());
    assert!((ab - ba).norm() > 0.5 * ab.norm());
}

#[test]
fn identical_seeds_give_identical_reports() {
    let a = verify_all(3, 5, params(), 9);
    let b = verify_all(3, 5, params(), 9);
    assert_eq!(a, b);
    let other = verify_all(3, 5, params(), 10);
    assert_ne!(a.iter().map(|r| r.error).collect::<Vec<_>>(), other.iter().map(|r| r.error).collect::<Vec<_>>());
}

#[test]
fn composition_is_associative() {
    let layout = GzLayout::new(3).unwrap();
    let p = params();
    let a = build_generator(GeneratorKind::ERaise, 1, layout, p).unwrap();
    let b = build_generator(GeneratorKind::TELower, 2, layout, p).unwrap();
    let cc = build_generator(GeneratorKind::ELower, 1, layout, p).unwrap();
    for t in 0..5 {
        let s = sample_trial(layout, 3, t).unwrap();
        let left = a.compose(&b).unwrap().compose(&cc).unwrap().apply(&s.function, &s.point).unwrap();
        let right = a.compose(&b.compose(&cc).unwrap()).unwrap().apply(&s.function, &s.point).unwrap();
        assert!((left - right).norm() <= 1e-12 * left.norm().max(1.0));
    }
}

#[test]
fn every_e_term_shifts_exactly_one_variable() {
    let layout = GzLayout::new(3).unwrap();
    let p = params();
    for n in 1..3 {
        for (kind, expect) in [
            (GeneratorKind::ERaise, (1, 0)),
            (GeneratorKind::ELower, (-1, 0)),
            (GeneratorKind::TERaise, (0, 1)),
            (GeneratorKind::TELower, (0, -1)),
        ] {
            let op = build_generator(kind, n, layout, p).unwrap();
            assert_eq!(op.len(), n);
            for (j, term) in op.terms.iter().enumerate() {
                let moved = term.moved();
                assert_eq!(moved, vec![(layout.index(n, j + 1), expect)], "{kind:?} n={n}");
                assert!(layout.is_dynamical(n));
            }
        }
    }
    // the shift is γ ↦ γ - iω₁ for E_{n,n+1}
    let g = vec![c(0.1); layout.len()];
    let moved = shifted(&g, &[(1, 0), (0, 1), (0, 0), (0, 0), (0, 0), (0, 0)], &p);
    assert!((moved[0] - Complex64::new(0.1, -p.omega1)).norm() < 1e-15);
    assert!((moved[1] - Complex64::new(0.1, -p.omega2)).norm() < 1e-15);
}

#[test]
fn k_examples() {
    let layout = GzLayout::new(2).unwrap();
    let p = OmegaParams::new(0.83, 1.0).unwrap();
    let f = TestFunction::constant(layout.len());
    let point = [c(0.3), c(-0.4), c(0.5)];
    let k1 = build_generator(GeneratorKind::K, 1, layout, p).unwrap();
    assert!((k1.apply(&f, &point).unwrap() - c((0.3 * PI).exp())).norm() < 1e-14);
    let tk1 = build_generator(GeneratorKind::TK, 1, layout, p).unwrap();
    assert!((tk1.apply(&f, &point).unwrap() - c((PI * 0.3 / 0.83).exp())).norm() < 1e-13);
    // K_2 = exp(π(γ21 + γ22 - γ11)/ω₂)
    let k2 = build_generator(GeneratorKind::K, 2, layout, p).unwrap();
    assert!((k2.apply(&f, &point).unwrap() - c((PI * (-0.4 + 0.5 - 0.3)).exp())).norm() < 1e-14);
}

#[test]
fn raising_operator_on_the_constant_function() {
    let layout = GzLayout::new(2).unwrap();
    let p = params();
    let (g11, g21, g22) = (0.3, -0.4, 0.5);
    let point = [c(g11), c(g21), c(g22)];
    let e = build_generator(GeneratorKind::ERaise, 1, layout, p).unwrap();
    let got = e.apply(&TestFunction::constant(3), &point).unwrap();
    // hand evaluation: 2/(q - q⁻¹) · Π_r sinh(π(γ11 - γ2r - i(ω₁+ω₂)/2)/ω₂)
    let half = Complex64::new(0.0, (p.omega1 + p.omega2) / 2.0);
    let s1 = ((c(g11 - g21) - half) * (PI / p.omega2)).sinh();
    let s2 = ((c(g11 - g22) - half) * (PI / p.omega2)).sinh();
    let q = p.q();
    let expect = c(2.0) / (q - 1.0 / q) * s1 * s2;
    assert!((got - expect).norm() < 1e-13 * expect.norm());
}

#[test]
fn composition_examples() {
    let layout = GzLayout::new(2).unwrap();
    let p = params();
    let k1 = build_generator(GeneratorKind::K, 1, layout, p).unwrap();
    let k2 = build_generator(GeneratorKind::K, 2, layout, p).unwrap();
    let e = build_generator(GeneratorKind::ERaise, 1, layout, p).unwrap();
    let id = ShiftOperator::identity(layout, p);
    let s = sample_trial(layout, 5, 0).unwrap();
    let ev = |op: &ShiftOperator| op.apply(&s.function, &s.point).unwrap();
    let close = |a: Complex64, b: Complex64| (a - b).norm() <= 1e-13 * a.norm().max(b.norm());
    assert!(close(ev(&k1.compose(&k2).unwrap()), ev(&k2.compose(&k1).unwrap())));
    assert!(close(ev(&e.compose(&id).unwrap()), ev(&e)));
    assert!(close(ev(&id.compose(&e).unwrap()), ev(&e)));
    // K1 E12 = q E12 K1
    let lhs = ev(&k1.compose(&e).unwrap());
    let rhs = ev(&e.compose(&k1).unwrap()) * p.q();
    assert!(close(lhs, rhs));
}

#[test]
fn guards() {
    let layout = GzLayout::new(2).unwrap();
    let p = params();
    let e = build_generator(GeneratorKind::ERaise, 1, layout, p).unwrap();
    let f = TestFunction::constant(3);
    assert!(e.apply(&f, &[c(0.0), c(0.1), c(0.1)]).is_err());
    assert!(e.apply(&f, &[c(3.0), c(0.1), c(0.5)]).is_err());
    assert!(e.apply(&f, &[c(0.0), c(0.1)]).is_err());
    assert!(e.compose_with_budget(&e, 0).is_err());
    assert!(TestFunction::new(vec![c(0.0)], vec![0.2]).is_err());
    assert!(GzLayout::new(1).is_err());
    let bad = verify_relation(catalogue(2)[0], 2, 0, p, 1);
    assert!(!bad.passed);
}
