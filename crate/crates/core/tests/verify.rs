use bohr_radius::bohr::{bombieri_id0, bombieri_value_thm1, BuiltinPair};
use bohr_radius::kernels::{ConvolutionPair, OperatorSpec};
use bohr_radius::series::TruncatedSeries;
use bohr_radius::verify::*;
use num_complex::Complex64;
use proptest::prelude::*;

#[test]
fn random_schwarz_maps_fix_the_origin_and_stay_in_the_disk() {
    for seed in 0..20 {
        let w = random_schwarz(seed, (seed % 4) as usize, 1024);
        assert_eq!(w.coeff(0), Complex64::new(0.0, 0.0));
        for k in 0..64 {
            let z = Complex64::from_polar(0.9 * (k % 8 + 1) as f64 / 8.0, k as f64);
            assert!(w.evaluate(z).norm() <= z.norm() + 1e-9);
        }
    }
    assert_eq!(random_schwarz(7, 3, 64), random_schwarz(7, 3, 64));
}

#[test]
fn empirical_identity_values() {
    let id = OperatorSpec::identity(0);
    let at_third = empirical_bombieri(&id, &id, 1.0 / 3.0, None, 300, 0, 256).unwrap();
    assert!(at_third <= 1.0 + 1e-9);
    assert!(at_third > 1.0 - 1e-3);
    let half = empirical_bombieri(&id, &id, 0.5, None, 300, 0, 256).unwrap();
    let exact = bombieri_id0(0.5).unwrap();
    assert!(half <= exact + 1e-9);
    assert!(exact - half < 1e-3, "{half} vs {exact}");
}

#[test]
fn lacunary_step_two_changes_sign_at_inverse_sqrt_three() {
    let edge = 1.0 / 3f64.sqrt();
    let below = lacunary_sharpness(2, edge - 0.01, 400, 256).unwrap();
    assert!(below.violation <= 1e-12);
    let above = lacunary_sharpness(2, edge + 0.01, 400, 256).unwrap();
    assert!(above.found(), "{above:?}");
}

#[test]
fn automorphism_reaches_the_closed_form() {
    for (pair, a, r) in [
        (BuiltinPair::Id0, 0.7, 0.3),
        (BuiltinPair::Derivative(1), 0.9, 0.15),
        (BuiltinPair::Integral, 0.8, 0.6),
    ] {
        let c = pair.convolution();
        let v = automorphism_value(&c.target(), r, a, 512).unwrap();
        let closed = bombieri_value_thm1(&c, a, r).unwrap();
        assert!((v - closed).abs() < 1e-9, "{pair:?}: {v} vs {closed}");
    }
}

#[test]
fn coefficient_inequality_examples() {
    let id = ConvolutionPair::identity();
    let f = SelfMap::new(TruncatedSeries::disc_automorphism(0.5, 0, 256).unwrap()).unwrap();
    let c = check_lemma(&id, &f, 1.0).unwrap();
    assert!(c.holds());
    assert!(c.margin().abs() < 1e-9);
    let z2 = SelfMap::new(TruncatedSeries::monomial(2, 16)).unwrap();
    assert!(check_lemma(&id, &z2, 0.9).unwrap().holds());
    let d1 = ConvolutionPair::derivative(1);
    let wide = SelfMap::new(TruncatedSeries::disc_automorphism(0.5, 1, 64).unwrap()).unwrap();
    assert!(check_lemma(&d1, &wide, 5.0).is_err());
}

#[test]
fn goluzin_examples() {
    let g = TruncatedSeries::geometric(64).shift_up(1).truncate(64);
    let half =
        SchwarzMap::new(TruncatedSeries::monomial(1, 64).scale(Complex64::new(0.5, 0.0))).unwrap();
    let lambda: Vec<f64> = (0..=64)
        .map(|n| if n == 0 { 0.0 } else { 1.0 / n as f64 })
        .collect();
    let c = check_goluzin(&g, &half, &lambda).unwrap();
    let lhs: f64 = (1..=64).map(|n| 0.25f64.powi(n) / n as f64).sum();
    assert!((c.lhs - lhs).abs() < 1e-12);
    assert!(c.holds());
    assert!(check_goluzin(&g, &half, &[0.0, 1.0, 2.0]).is_err());
}

#[test]
fn subordination_and_majorization_examples() {
    let spec = OperatorSpec::derivative(1);
    let g = TruncatedSeries::from_real(&[0.0, 0.3, 0.2, -0.1])
        .unwrap()
        .truncate(64);
    let omega = SchwarzMap::new(
        TruncatedSeries::disc_automorphism(0.3, 0, 64)
            .unwrap()
            .shift_up(1)
            .truncate(64),
    )
    .unwrap();
    let phi = SelfMap::new(TruncatedSeries::disc_automorphism(0.4, 0, 64).unwrap()).unwrap();
    for r in [0.2, 0.5, 0.8] {
        assert!(check_subordination_majorant(&spec, &g, &omega, r)
            .unwrap()
            .holds());
        assert!(check_majorization_majorant(&spec, &g, &phi, r)
            .unwrap()
            .holds());
    }
    let shifted = OperatorSpec::new(spec.kernel().clone(), 0).unwrap();
    assert!(check_subordination_majorant(&shifted, &g, &omega, 0.5).is_err());
}

#[test]
fn suites_report_and_honour_the_pair_filter() {
    let config = SuiteConfig {
        samples: 20,
        pair: Some(BuiltinPair::Derivative(1)),
        ..SuiteConfig::default()
    };
    let reports = run_suite(Suite::Thm1Oracle, &config).unwrap();
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r.holds && r.worst_margin >= -1e-6));
    assert!(reports
        .iter()
        .all(|r| r.check.ends_with(&BuiltinPair::Derivative(1).name())));
    let lemma = run_suite(
        Suite::Lemma,
        &SuiteConfig {
            samples: 30,
            ..SuiteConfig::default()
        },
    )
    .unwrap();
    assert!(lemma.iter().all(|r| r.holds));
    assert!("nonsense".parse::<Suite>().is_err());
}

#[test]
fn validity_grid_is_ten_by_ten_inside_the_region() {
    for pair in builtin_pairs() {
        let grid = validity_grid(&pair);
        assert_eq!(grid.len(), 10);
        for (a, rs) in grid {
            assert_eq!(rs.len(), 10);
            assert!(rs.iter().all(|r| *r > 0.0 && *r < a));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn empirical_never_exceeds_identity_closed_form(a in 0.05..0.95f64, t in 0.05..0.95f64, seed in 0u64..1000) {
        let r = t * a;
        let id = OperatorSpec::identity(0);
        let v = empirical_bombieri(&id, &id, r, Some(a), 40, seed, 256).unwrap();
        let closed = bombieri_value_thm1(&ConvolutionPair::identity(), a, r).unwrap();
        prop_assert!(v <= closed + 1e-9);
    }

    #[test]
    fn goluzin_holds_for_rotated_automorphisms(a in 0.0..0.9f64, theta in 0.0..std::f64::consts::TAU) {
        let g = TruncatedSeries::from_real(&[0.0, 1.0, -0.5, 0.25, 0.1]).unwrap().truncate(64);
        let phi = TruncatedSeries::disc_automorphism(a, 0, 512).unwrap();
        let omega = SchwarzMap::new(phi.shift_up(1).truncate(512).scale(Complex64::from_polar(1.0, theta))).unwrap();
        let lambda: Vec<f64> = (0..=64).map(|n| if n == 0 { 0.0 } else { 1.0 / (n * n) as f64 }).collect();
        prop_assert!(check_goluzin(&g, &omega, &lambda).unwrap().holds());
    }
}
