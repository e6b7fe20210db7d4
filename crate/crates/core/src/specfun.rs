//! Special functions: the Lambert W function (branch `W ≥ −1`), the
//! dilogarithm on `[0, 1]`, rising factorials and Gauss hypergeometric
//! coefficient sequences.

use std::f64::consts::{E, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const MAX_HALLEY_STEPS: usize = 64;

/// Principal branch of the Lambert W function on `[−1/e, ∞)`, i.e. the
/// solution `w ≥ −1` of `w·eʷ = x`.
///
/// Starts from the branch-point expansion in `p = √(2(e·x + 1))` near `−1/e`,
/// from `log1p` for moderate arguments and from the asymptotic
/// `ln x − ln ln x` for large ones, then refines with Halley's method.
pub fn lambert_w(x: f64) -> Result<f64> {
    let branch = -1.0 / E;
    if x.is_nan() || x < branch - 1e-15 {
        return Err(Error::Domain(format!(
            "Lambert W is defined on [-1/e, inf), got {x}"
        )));
    }
    if x == f64::INFINITY {
        return Ok(f64::INFINITY);
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let q = (E * x + 1.0).max(0.0);
    if q == 0.0 {
        return Ok(-1.0);
    }
    let p = (2.0 * q).sqrt();
    let mut w = if p < 0.5 {
        branch_point_series(p)
    } else if x < 3.0 {
        x.ln_1p()
    } else {
        let l1 = x.ln();
        let l2 = l1.ln();
        l1 - l2 + l2 / l1
    };
    // The series alone is accurate to ~p^8 there; Halley loses accuracy as w' blows up.
    if p < 1e-4 {
        return Ok(w);
    }
    for _ in 0..MAX_HALLEY_STEPS {
        let ew = w.exp();
        let f = w * ew - x;
        let wp1 = w + 1.0;
        let denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        if denom == 0.0 || !denom.is_finite() {
            break;
        }
        let step = f / denom;
        w -= step;
        if step.abs() <= 4.0 * f64::EPSILON * (1.0 + w.abs()) {
            break;
        }
    }
    Ok(w.max(-1.0))
}

fn branch_point_series(p: f64) -> f64 {
    const C: [f64; 8] = [
        -1.0,
        1.0,
        -1.0 / 3.0,
        11.0 / 72.0,
        -43.0 / 540.0,
        769.0 / 17280.0,
        -221.0 / 8505.0,
        680863.0 / 43545600.0,
    ];
    C.iter().rev().fold(0.0, |acc, c| acc * p + c)
}

/// Dilogarithm `Li₂(x) = Σ_{n≥1} xⁿ/n²` for `0 ≤ x ≤ 1`.
///
/// For `x ≤ 1/2` the series is summed until the tail bound
/// `x^{M+1}/((M+1)²(1−x))` drops below `1e−17`; above `1/2` the reflection
/// `Li₂(x) = π²/6 − ln x·ln(1−x) − Li₂(1−x)` moves the argument back.
pub fn dilog(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!(
            "dilog is evaluated on [0, 1], got {x}"
        )));
    }
    let zeta2 = PI * PI / 6.0;
    if x == 1.0 {
        return Ok(zeta2);
    }
    if x > 0.5 {
        let y = 1.0 - x;
        return Ok(zeta2 - x.ln() * y.ln() - dilog_series(y));
    }
    Ok(dilog_series(x))
}

fn dilog_series(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let mut sum = 0.0;
    let mut p = 1.0;
    let mut n = 1.0f64;
    loop {
        p *= x;
        sum += p / (n * n);
        let tail = p * x / ((n + 1.0) * (n + 1.0) * (1.0 - x));
        if tail < 1e-17 {
            return sum;
        }
        n += 1.0;
    }
}

/// Rising factorial `(a)ₙ = a(a+1)…(a+n−1)`, `(a)₀ = 1`.
pub fn pochhammer(a: f64, n: usize) -> f64 {
    (0..n).map(|k| a + k as f64).product()
}

/// Parameters `(a, b, c)` of `F(a, b, c; z) = Σ γₙ zⁿ` with
/// `γₙ = (a)ₙ(b)ₙ / ((c)ₙ n!)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HypergeometricParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl HypergeometricParams {
    /// Requires finite parameters greater than `−1` with `c ≠ 0`.
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        for (name, v) in [("a", a), ("b", b), ("c", c)] {
            if !v.is_finite() || v <= -1.0 {
                return Err(Error::Domain(format!(
                    "hypergeometric parameter {name} must be finite and > -1, got {v}"
                )));
            }
        }
        if c == 0.0 {
            return Err(Error::Domain(
                "hypergeometric parameter c must be nonzero".into(),
            ));
        }
        Ok(HypergeometricParams { a, b, c })
    }

    /// `γ_{n+1}/γₙ`.
    pub fn ratio(&self, n: usize) -> f64 {
        let n = n as f64;
        (self.a + n) * (self.b + n) / ((self.c + n) * (1.0 + n))
    }
}

/// `γ₀ … γ_N` by the ratio recurrence. Any negative coefficient rejects the
/// parameter set.
pub fn hypergeometric_coeffs(p: &HypergeometricParams, order: usize) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(order + 1);
    let mut g = 1.0;
    out.push(g);
    for n in 0..order {
        g *= p.ratio(n);
        if g < 0.0 || !g.is_finite() {
            return Err(Error::Domain(format!(
                "hypergeometric coefficient gamma_{} = {g} is not a finite nonnegative number",
                n + 1
            )));
        }
        out.push(g);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn lambert_examples() {
        assert_eq!(lambert_w(0.0).unwrap(), 0.0);
        assert_abs_diff_eq!(lambert_w(E).unwrap(), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(lambert_w(-1.0 / E).unwrap(), -1.0, epsilon = 1e-15);
        assert!(matches!(lambert_w(-0.5), Err(Error::Domain(_))));
    }

    #[test]
    fn lambert_near_branch_point() {
        for k in 1..40 {
            let x = -1.0 / E + 10f64.powi(-k);
            if x >= 0.0 {
                continue;
            }
            let w = lambert_w(x).unwrap();
            assert!(w >= -1.0);
            assert!((w * w.exp() - x).abs() <= 1e-13, "x = {x:e}, w = {w}");
        }
    }

    #[test]
    fn dilog_examples() {
        assert_eq!(dilog(0.0).unwrap(), 0.0);
        assert_abs_diff_eq!(dilog(1.0).unwrap(), PI * PI / 6.0, epsilon = 1e-15);
        let r: f64 = 0.872664;
        assert_abs_diff_eq!(dilog(r * r).unwrap(), 1.0, epsilon = 1e-4);
        assert!(dilog(1.5).is_err());
        assert!(dilog(-0.1).is_err());
    }

    #[test]
    fn dilog_reflection_is_continuous_at_half() {
        let below = dilog(0.5 - 1e-12).unwrap();
        let above = dilog(0.5 + 1e-12).unwrap();
        assert!((above - below).abs() < 1e-11);
        // Li2(1/2) = pi^2/12 - ln(2)^2/2
        let exact = PI * PI / 12.0 - 2f64.ln().powi(2) / 2.0;
        assert_abs_diff_eq!(dilog(0.5).unwrap(), exact, epsilon = 1e-15);
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(3.7, 0), 1.0);
        assert_eq!(pochhammer(1.0, 5), 120.0);
        assert_eq!(pochhammer(2.0, 3), 24.0);
    }

    #[test]
    fn hypergeometric_examples() {
        let geo = HypergeometricParams::new(1.0, 1.0, 1.0).unwrap();
        assert!(hypergeometric_coeffs(&geo, 50)
            .unwrap()
            .iter()
            .all(|&g| (g - 1.0).abs() < 1e-15));

        let int = HypergeometricParams::new(1.0, 1.0, 2.0).unwrap();
        let gam = hypergeometric_coeffs(&int, 30).unwrap();
        for (n, g) in gam.iter().enumerate() {
            let direct =
                pochhammer(1.0, n) * pochhammer(1.0, n) / (pochhammer(2.0, n) * pochhammer(1.0, n));
            assert_abs_diff_eq!(*g, direct, epsilon = 1e-15);
            assert_abs_diff_eq!(*g, 1.0 / (n as f64 + 1.0), epsilon = 1e-15);
        }

        let p = HypergeometricParams::new(0.3, 2.5, 0.7).unwrap();
        assert_eq!(hypergeometric_coeffs(&p, 10).unwrap()[0], 1.0);
    }

    #[test]
    fn hypergeometric_rejects_negative_coefficients() {
        let p = HypergeometricParams::new(-0.5, 1.0, 1.0).unwrap();
        assert!(matches!(
            hypergeometric_coeffs(&p, 5),
            Err(Error::Domain(_))
        ));
        assert!(HypergeometricParams::new(-1.0, 1.0, 1.0).is_err());
        assert!(HypergeometricParams::new(1.0, 1.0, 0.0).is_err());
    }
}
