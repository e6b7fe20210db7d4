//! Truncated power series `Σ aₙ zⁿ` with complex coefficients.
//!
//! A [`TruncatedSeries`] stores the prefix `a₀ … a_N`. Operations that can be
//! carried out exactly on prefixes (Hadamard product, composition with a
//! function fixing the origin, multiplication) return exact prefixes; the
//! majorant and point evaluations are partial sums, with an optional
//! geometric [`TailBound`] that estimates what the truncation dropped.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 256;

/// Environment variable overriding [`DEFAULT_ORDER`] for the CLI.
pub const ORDER_ENV: &str = "BOHR_ORDER";

/// Relative modulus below which a coefficient counts as zero.
const VANISH_THRESHOLD: f64 = 1e-15;

/// Radius of the circle used by [`TruncatedSeries::sup_norm_estimate`].
pub const SUP_NORM_RADIUS: f64 = 1.0 - 1e-9;

/// `|aₙ| ≤ scale · ratioⁿ` for every index beyond the stored order.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TailBound {
    pub scale: f64,
    pub ratio: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
    tail: Option<TailBound>,
}

impl TruncatedSeries {
    /// Builds a series from `a₀ … a_N`. The vector must be nonempty and finite.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidInput(
                "a truncated series needs at least the constant coefficient".into(),
            ));
        }
        if let Some(n) = coeffs
            .iter()
            .position(|c| !(c.re.is_finite() && c.im.is_finite()))
        {
            return Err(Error::InvalidInput(format!(
                "coefficient {n} is not finite"
            )));
        }
        Ok(TruncatedSeries { coeffs, tail: None })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// Series whose `n`th coefficient is `f(n)`, `0 ≤ n ≤ order`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Complex64) -> Result<Self> {
        Self::new((0..=order).map(f).collect())
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Complex64::new(0.0, 0.0); order + 1],
            tail: Some(TailBound {
                scale: 0.0,
                ratio: 0.0,
            }),
        }
    }

    /// The monomial `zᵏ`, stored up to `order` (which is raised to `k` if needed).
    pub fn monomial(k: usize, order: usize) -> Self {
        let mut s = Self::zero(order.max(k));
        s.coeffs[k] = Complex64::new(1.0, 0.0);
        s
    }

    /// `1/(1 − z)`.
    pub fn geometric(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Complex64::new(1.0, 0.0); order + 1],
            tail: Some(TailBound {
                scale: 1.0,
                ratio: 1.0,
            }),
        }
    }

    /// Expands `num(z)/den(z)` for polynomials given by coefficient lists.
    ///
    /// Runs the linear recurrence of the denominator, so the cost is
    /// `O(order · deg den)`.
    pub fn from_rational(num: &[Complex64], den: &[Complex64], order: usize) -> Result<Self> {
        let d0 = match den.first() {
            Some(d) if d.norm() > 0.0 => *d,
            _ => {
                return Err(Error::InvalidInput(
                    "denominator must have a nonzero constant term".into(),
                ))
            }
        };
        let inv = d0.inv();
        let mut out = vec![Complex64::new(0.0, 0.0); order + 1];
        for n in 0..=order {
            let mut acc = num.get(n).copied().unwrap_or_default();
            for k in 1..den.len().min(n + 1) {
                acc -= den[k] * out[n - k];
            }
            out[n] = acc * inv;
        }
        Self::new(out)
    }

    pub fn with_tail(mut self, tail: TailBound) -> Self {
        self.tail = Some(tail);
        self
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient `aₙ`, zero beyond the stored order.
    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs.get(n).copied().unwrap_or_default()
    }

    pub fn tail(&self) -> Option<TailBound> {
        self.tail
    }

    /// Index of the first coefficient that is nonzero relative to the largest
    /// one; `0` for the zero series.
    pub fn vanish_order(&self) -> usize {
        let max = self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        if max == 0.0 {
            return 0;
        }
        self.coeffs
            .iter()
            .position(|c| c.norm() > VANISH_THRESHOLD * max)
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.norm() == 0.0)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Complex64::new(0.0, 0.0));
        TruncatedSeries {
            coeffs,
            tail: if order <= self.order() {
                self.tail
            } else {
                None
            },
        }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
            tail: self.tail.map(|t| TailBound {
                scale: t.scale * factor.norm(),
                ratio: t.ratio,
            }),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..=n).map(|k| self.coeffs[k] + other.coeffs[k]).collect(),
            tail: None,
        }
    }

    /// Multiplication by `zᵏ`; the order grows by `k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); k];
        coeffs.extend_from_slice(&self.coeffs);
        TruncatedSeries { coeffs, tail: None }
    }

    /// Cauchy product truncated to the common order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![Complex64::new(0.0, 0.0); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.norm() == 0.0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries {
            coeffs: out,
            tail: None,
        }
    }

    /// Coefficientwise product `Σ aₙbₙzⁿ`, truncated to the common order.
    pub fn hadamard(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..=n).map(|k| self.coeffs[k] * other.coeffs[k]).collect(),
            tail: match (self.tail, other.tail) {
                (Some(a), Some(b)) => Some(TailBound {
                    scale: a.scale * b.scale,
                    ratio: a.ratio * b.ratio,
                }),
                _ => None,
            },
        }
    }

    /// Majorant (Bohr sum) `Σ |aₙ| rⁿ` over the stored coefficients.
    pub fn majorant(&self, r: f64) -> f64 {
        let mut acc = 0.0;
        let mut p = 1.0;
        for c in &self.coeffs {
            acc += c.norm() * p;
            p *= r;
        }
        acc
    }

    /// Upper bound on what [`majorant`](Self::majorant) dropped, when the
    /// series carries a tail bound.
    pub fn majorant_tail(&self, r: f64) -> Option<f64> {
        self.tail.map(|t| {
            let q = t.ratio * r;
            if t.scale == 0.0 {
                0.0
            } else if q >= 1.0 {
                f64::INFINITY
            } else {
                t.scale * q.powi(self.order() as i32 + 1) / (1.0 - q)
            }
        })
    }

    /// `g ∘ ω` through the common order. `ω` must fix the origin.
    pub fn compose(&self, omega: &Self) -> Result<Self> {
        let w0 = omega.coeffs[0].norm();
        let scale = omega.coeffs.iter().map(|c| c.norm()).fold(1.0, f64::max);
        if w0 > 1e-14 * scale {
            return Err(Error::InvalidInput(format!(
                "inner function must vanish at the origin, got |ω(0)| = {w0:e}"
            )));
        }
        let n = self.order().min(omega.order());
        let degree = match self.coeffs[..=n].iter().rposition(|c| c.norm() != 0.0) {
            Some(d) => d,
            None => return Ok(Self::zero(n)),
        };
        // Horner: res ← res·ω + g_k, each product truncated at n.
        let mut res = vec![Complex64::new(0.0, 0.0); n + 1];
        res[0] = self.coeffs[degree];
        let mut tmp = vec![Complex64::new(0.0, 0.0); n + 1];
        for k in (0..degree).rev() {
            for t in tmp.iter_mut() {
                *t = Complex64::new(0.0, 0.0);
            }
            for (i, r) in res.iter().enumerate() {
                if r.norm() == 0.0 {
                    continue;
                }
                for j in 1..=(n - i) {
                    tmp[i + j] += r * omega.coeffs[j];
                }
            }
            tmp[0] = self.coeffs[k];
            std::mem::swap(&mut res, &mut tmp);
        }
        Self::new(res)
    }

    /// Horner evaluation of the stored polynomial.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    }

    /// Largest modulus over `grid_points` equispaced points of the circle
    /// `|z| = 1 − 1e−9`. A lower bound for the sup-norm of the polynomial.
    pub fn sup_norm_estimate(&self, grid_points: usize) -> Result<f64> {
        if grid_points < 64 {
            return Err(Error::InvalidInput(format!(
                "sup-norm grid needs at least 64 points, got {grid_points}"
            )));
        }
        let scaled: Vec<Complex64> = {
            let mut p = 1.0;
            self.coeffs
                .iter()
                .map(|c| {
                    let v = c * p;
                    p *= SUP_NORM_RADIUS;
                    v
                })
                .collect()
        };
        let step = std::f64::consts::TAU / grid_points as f64;
        let max = (0..grid_points)
            .map(|k| {
                let z = Complex64::from_polar(1.0, step * k as f64);
                scaled
                    .iter()
                    .rev()
                    .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
                    .norm()
            })
            .fold(0.0, f64::max);
        Ok(max)
    }

    /// The extremal family `zᵐ (z + a)/(1 + a z)` for `0 ≤ a < 1`.
    pub fn disc_automorphism(a: f64, m: usize, order: usize) -> Result<Self> {
        if !(0.0..1.0).contains(&a) {
            return Err(Error::Domain(format!(
                "automorphism parameter must lie in [0, 1), got {a}"
            )));
        }
        let mut s = Self::zero(order);
        if m <= order {
            s.coeffs[m] = Complex64::new(a, 0.0);
        }
        let lead = 1.0 - a * a;
        let mut p = lead;
        for k in (m + 1)..=order {
            s.coeffs[k] = Complex64::new(p, 0.0);
            p *= -a;
        }
        let tail = if a == 0.0 {
            TailBound {
                scale: if order > m { 0.0 } else { 1.0 },
                ratio: 0.0,
            }
        } else {
            TailBound {
                scale: lead / a.powi(m as i32 + 1),
                ratio: a,
            }
        };
        s.tail = tail.scale.is_finite().then_some(tail);
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn hadamard_with_geometric_is_truncation() {
        let g = TruncatedSeries::from_real(&[1.0, -2.0, 3.5, 0.25, 7.0]).unwrap();
        let h = TruncatedSeries::geometric(3).hadamard(&g);
        assert_eq!(h.coeffs(), &g.coeffs()[..4]);
        let one = TruncatedSeries::geometric(10).hadamard(&TruncatedSeries::geometric(10));
        assert!(one.coeffs().iter().all(|&x| x == c(1.0)));
    }

    #[test]
    fn hadamard_matches_termwise_loop() {
        // z/(1-z)^2 has coefficients n.
        let f = TruncatedSeries::from_fn(40, |n| c(n as f64)).unwrap();
        let g = TruncatedSeries::geometric(40);
        let h = f.hadamard(&g);
        for n in 0..=40 {
            assert_eq!(h.coeff(n), f.coeff(n) * g.coeff(n));
            assert_eq!(h.coeff(n), c(n as f64));
        }
    }

    #[test]
    fn majorant_examples() {
        assert_abs_diff_eq!(
            TruncatedSeries::monomial(3, 5).majorant(0.7),
            0.343,
            epsilon = 1e-15
        );
        assert_eq!(TruncatedSeries::zero(12).majorant(0.9), 0.0);
        let f = TruncatedSeries::disc_automorphism(0.5, 0, 256).unwrap();
        // a + (1 - a^2) r / (1 - a r) at a = 1/2, r = 1/3
        assert_abs_diff_eq!(f.majorant(1.0 / 3.0), 0.8, epsilon = 1e-14);
        assert!(f.majorant_tail(1.0 / 3.0).unwrap() < 1e-100);
    }

    #[test]
    fn compose_examples() {
        let g = TruncatedSeries::from_real(&[0.3, -1.0, 2.0, 0.5]).unwrap();
        let id = TruncatedSeries::monomial(1, 3);
        for n in 0..=3 {
            assert_abs_diff_eq!((g.compose(&id).unwrap().coeff(n) - g.coeff(n)).norm(), 0.0);
        }

        let omega = TruncatedSeries::from_real(&[0.0, 0.5, -0.25, 0.125]).unwrap();
        let z = TruncatedSeries::monomial(1, 3);
        assert_eq!(z.compose(&omega).unwrap(), omega);

        let geo = TruncatedSeries::geometric(12);
        let z2 = TruncatedSeries::monomial(2, 12);
        let out = geo.compose(&z2).unwrap();
        for n in 0..=12 {
            let expect = if n % 2 == 0 { 1.0 } else { 0.0 };
            assert_eq!(out.coeff(n), c(expect));
        }
    }

    #[test]
    fn compose_rejects_nonzero_constant() {
        let g = TruncatedSeries::geometric(4);
        let omega = TruncatedSeries::from_real(&[0.1, 0.5]).unwrap();
        assert!(matches!(g.compose(&omega), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn evaluate_examples() {
        let geo = TruncatedSeries::geometric(256);
        assert_abs_diff_eq!(geo.evaluate(c(0.5)).re, 2.0, epsilon = 1e-12);
        let f = TruncatedSeries::from_real(&[0.7, 2.0, -3.0]).unwrap();
        assert_eq!(f.evaluate(c(0.0)), c(0.7));
        let log = TruncatedSeries::from_fn(512, |n| c(1.0 / (n as f64 + 1.0))).unwrap();
        let direct = -(1.0f64 - 0.5).ln() / 0.5;
        assert_abs_diff_eq!(log.evaluate(c(0.5)).re, direct, epsilon = 1e-12);
        assert_abs_diff_eq!(direct, 1.386294, epsilon = 1e-6);
    }

    #[test]
    fn sup_norm_examples() {
        let zm = TruncatedSeries::monomial(5, 5);
        assert_abs_diff_eq!(zm.sup_norm_estimate(256).unwrap(), 1.0, epsilon = 1e-8);
        let aut = TruncatedSeries::disc_automorphism(0.7, 0, 256).unwrap();
        assert_abs_diff_eq!(aut.sup_norm_estimate(1024).unwrap(), 1.0, epsilon = 1e-6);
        let half = TruncatedSeries::from_real(&[0.5, 0.5]).unwrap();
        assert_abs_diff_eq!(half.sup_norm_estimate(64).unwrap(), 1.0, epsilon = 1e-8);
        assert!(half.sup_norm_estimate(10).is_err());
    }

    #[test]
    fn automorphism_coefficients() {
        let z = TruncatedSeries::disc_automorphism(0.0, 0, 6).unwrap();
        assert_eq!(
            z,
            TruncatedSeries::monomial(1, 6).with_tail(z.tail().unwrap())
        );
        let f = TruncatedSeries::disc_automorphism(0.5, 0, 8).unwrap();
        // long division of (z + 1/2) by (1 + z/2)
        let expect = [0.5, 0.75, -0.375, 0.1875, -0.09375];
        for (n, e) in expect.iter().enumerate() {
            assert_abs_diff_eq!(f.coeff(n).re, *e, epsilon = 1e-15);
        }
        let g = TruncatedSeries::disc_automorphism(0.4, 3, 20).unwrap();
        assert_eq!(g.vanish_order(), 3);
        assert!(TruncatedSeries::disc_automorphism(1.0, 0, 4).is_err());
    }

    #[test]
    fn automorphism_vanishes_at_minus_a() {
        for &a in &[0.1, 0.45, 0.8] {
            let f = TruncatedSeries::disc_automorphism(a, 0, 256).unwrap();
            assert!(f.evaluate(c(-a)).norm() < 1e-12);
        }
    }

    #[test]
    fn rational_expansion_matches_automorphism() {
        let a = 0.3;
        let f = TruncatedSeries::from_rational(&[c(a), c(1.0)], &[c(1.0), c(a)], 30).unwrap();
        let g = TruncatedSeries::disc_automorphism(a, 0, 30).unwrap();
        for n in 0..=30 {
            assert!((f.coeff(n) - g.coeff(n)).norm() < 1e-15);
        }
    }

    #[test]
    fn vanish_order_is_relative() {
        let f = TruncatedSeries::from_real(&[1e-20, 0.0, 3.0]).unwrap();
        assert_eq!(f.vanish_order(), 2);
        assert_eq!(TruncatedSeries::zero(3).vanish_order(), 0);
    }

    #[test]
    fn rejects_non_finite() {
        assert!(TruncatedSeries::from_real(&[1.0, f64::NAN]).is_err());
        assert!(TruncatedSeries::new(vec![]).is_err());
    }
}
