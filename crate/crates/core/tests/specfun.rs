use bohr_radius::specfun::{
    dilog, hypergeometric_coeffs, lambert_w, pochhammer, HypergeometricParams,
};
use proptest::prelude::*;
use std::f64::consts::{E, PI};

#[test]
fn lambert_w_identity_on_log_spaced_points() {
    // 10⁴ points: half on (−1/e, 0), half on (0, 1e6]
    let mut worst = 0.0f64;
    for k in 0..5000 {
        let t = k as f64 / 4999.0;
        let neg = -(1.0 / E) * 10f64.powf(-12.0 * t);
        let pos = 10f64.powf(-12.0 + 18.0 * t);
        for x in [neg, pos] {
            let w = lambert_w(x).unwrap();
            assert!(w >= -1.0);
            let rel = (w * w.exp() - x).abs() / x.abs();
            worst = worst.max(rel);
        }
    }
    assert!(worst < 1e-12, "worst relative residual {worst:e}");
}

#[test]
fn lambert_w_examples() {
    assert_eq!(lambert_w(0.0).unwrap(), 0.0);
    assert!((lambert_w(E).unwrap() - 1.0).abs() < 1e-15);
    assert!((lambert_w(-1.0 / E).unwrap() + 1.0).abs() < 1e-7);
    assert!(lambert_w(-0.5).is_err());
}

#[test]
fn dilog_examples() {
    assert_eq!(dilog(0.0).unwrap(), 0.0);
    assert!((dilog(1.0).unwrap() - PI * PI / 6.0).abs() < 1e-14);
    assert!((dilog(0.872664f64.powi(2)).unwrap() - 1.0).abs() < 1e-4);
    assert!(dilog(0.64).unwrap() < 1.0 && dilog(0.81).unwrap() > 1.0);
    // Li₂(1/2) = π²/12 − ln²2/2
    let half = PI * PI / 12.0 - 2f64.ln().powi(2) / 2.0;
    assert!((dilog(0.5).unwrap() - half).abs() < 1e-14);
    assert!(dilog(1.5).is_err() && dilog(-0.1).is_err());
}

#[test]
fn pochhammer_examples() {
    assert_eq!(pochhammer(0.37, 0), 1.0);
    assert_eq!(pochhammer(1.0, 6), 720.0);
    assert_eq!(pochhammer(2.0, 3), 2.0 * 3.0 * 4.0);
}

#[test]
fn hypergeometric_examples() {
    let ones =
        hypergeometric_coeffs(&HypergeometricParams::new(1.0, 1.0, 1.0).unwrap(), 50).unwrap();
    assert!(ones.iter().all(|g| (g - 1.0).abs() < 1e-15));
    let integ =
        hypergeometric_coeffs(&HypergeometricParams::new(1.0, 1.0, 2.0).unwrap(), 50).unwrap();
    for (n, g) in integ.iter().enumerate() {
        let direct =
            pochhammer(1.0, n) * pochhammer(1.0, n) / (pochhammer(2.0, n) * pochhammer(1.0, n));
        assert!((g - direct).abs() < 1e-15);
        assert!((g - 1.0 / (n + 1) as f64).abs() < 1e-15);
    }
    let g = hypergeometric_coeffs(&HypergeometricParams::new(1.0, 2.0, 3.0).unwrap(), 3).unwrap();
    assert_eq!(g[0], 1.0);
    assert!((g[1] - 2.0 / 3.0).abs() < 1e-15);
}

proptest! {
    #[test]
    fn lambert_w_is_increasing(x in -0.36..50.0f64, dx in 1e-6..1.0f64) {
        prop_assert!(lambert_w(x).unwrap() < lambert_w(x + dx).unwrap());
    }

    #[test]
    fn dilog_matches_its_series(x in 0.0..0.9f64) {
        let series: f64 = (1..4000).rev().map(|n| x.powi(n) / (n * n) as f64).sum();
        prop_assert!((dilog(x).unwrap() - series).abs() < 1e-13);
    }

    #[test]
    fn pochhammer_recurrence(a in -0.9..5.0f64, n in 0usize..15) {
        let lhs = pochhammer(a, n + 1);
        let rhs = pochhammer(a, n) * (a + n as f64);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1.0));
    }
}
