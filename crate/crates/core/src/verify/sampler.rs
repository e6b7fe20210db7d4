//! Seeded samplers of admissible functions: finite Blaschke products,
//! Schwarz functions and random polynomials.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

/// Largest number of sampled zeros in a random Blaschke product.
pub const MAX_DEGREE: usize = 8;

const MAX_ZERO_RADIUS: f64 = 1.0 - 1e-9;

/// Reproducible generator for sample `index` of the run `seed`.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn unimodular(rng: &mut impl Rng) -> Complex64 {
    Complex64::from_polar(1.0, rng.gen_range(0.0..TAU))
}

/// Uniform point of the open disk of radius `radius`.
pub fn random_in_disk(rng: &mut impl Rng, radius: f64) -> Complex64 {
    let rho = (rng.gen::<f64>().sqrt() * radius).min(MAX_ZERO_RADIUS);
    Complex64::from_polar(rho, rng.gen_range(0.0..TAU))
}

/// `rotation · z^{pre_vanish} · Π (z − αₖ)/(1 − ᾱₖ z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BlaschkeSample {
    pub zeros: Vec<Complex64>,
    pub rotation: Complex64,
    pub pre_vanish: usize,
}

impl BlaschkeSample {
    pub fn new(zeros: Vec<Complex64>, rotation: Complex64, pre_vanish: usize) -> Result<Self> {
        if let Some(z) = zeros.iter().find(|z| !(z.norm() <= MAX_ZERO_RADIUS)) {
            return Err(Error::InvalidInput(format!(
                "Blaschke zero {z} lies outside the disk of radius 1 - 1e-9"
            )));
        }
        if (rotation.norm() - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidInput(format!(
                "rotation {rotation} is not unimodular"
            )));
        }
        Ok(BlaschkeSample {
            zeros,
            rotation,
            pre_vanish,
        })
    }

    /// Degree uniform in `0..=MAX_DEGREE`, zeros with squared modulus uniform
    /// in `[0, 1)`, uniform angles and rotation.
    pub fn random(rng: &mut impl Rng, pre_vanish: usize) -> Self {
        let degree = rng.gen_range(0..=MAX_DEGREE);
        let zeros = (0..degree).map(|_| random_in_disk(rng, 1.0)).collect();
        BlaschkeSample {
            zeros,
            rotation: unimodular(rng),
            pre_vanish,
        }
    }

    /// Numerator and denominator polynomials `(P, Q)` with `B = P/Q`.
    pub fn rational(&self) -> (Vec<Complex64>, Vec<Complex64>) {
        let mut p = vec![Complex64::new(0.0, 0.0); self.pre_vanish];
        p.push(self.rotation);
        let mut q = vec![Complex64::new(1.0, 0.0)];
        for alpha in &self.zeros {
            p = poly_mul_linear(&p, -alpha, Complex64::new(1.0, 0.0));
            q = poly_mul_linear(&q, Complex64::new(1.0, 0.0), -alpha.conj());
        }
        (p, q)
    }

    pub fn to_series(&self, order: usize) -> TruncatedSeries {
        let (p, q) = self.rational();
        TruncatedSeries::from_rational(&p, &q, order).expect("Q(0) = 1")
    }

    /// `(B + α)/(1 + ᾱB)`: an inner function whose value at the origin is
    /// `α` when `B(0) = 0`. Requires `|α| < 1`.
    pub fn inner_through(&self, alpha: Complex64, order: usize) -> TruncatedSeries {
        let (p, q) = self.rational();
        let len = p.len().max(q.len());
        let at = |v: &[Complex64], k: usize| v.get(k).copied().unwrap_or_default();
        let num: Vec<Complex64> = (0..len).map(|k| at(&p, k) + alpha * at(&q, k)).collect();
        let den: Vec<Complex64> = (0..len)
            .map(|k| at(&q, k) + alpha.conj() * at(&p, k))
            .collect();
        TruncatedSeries::from_rational(&num, &den, order).expect("|alpha| < 1 keeps den(0) nonzero")
    }
}

/// `v(z) · (c0 + c1 z)`.
fn poly_mul_linear(v: &[Complex64], c0: Complex64, c1: Complex64) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); v.len() + 1];
    for (k, a) in v.iter().enumerate() {
        out[k] += a * c0;
        out[k + 1] += a * c1;
    }
    out
}

/// `ω = z·B` for a random Blaschke product `B` of the given degree; degree
/// `0` gives `ω = cz` with `|c| ≤ 1`.
pub fn random_schwarz(seed: u64, degree: usize, order: usize) -> TruncatedSeries {
    let mut rng = sample_rng(seed, 0);
    random_schwarz_with(&mut rng, degree, order)
}

pub(crate) fn random_schwarz_with(
    rng: &mut impl Rng,
    degree: usize,
    order: usize,
) -> TruncatedSeries {
    if degree == 0 {
        let c = random_in_disk(rng, 1.0);
        return TruncatedSeries::monomial(1, order).scale(c);
    }
    let zeros = (0..degree).map(|_| random_in_disk(rng, 1.0)).collect();
    let b = BlaschkeSample {
        zeros,
        rotation: unimodular(rng),
        pre_vanish: 1,
    };
    b.to_series(order)
}

/// Polynomial `Σ_{k=m}^{m+d} bₖ zᵏ` (padded to `order`) with `d` uniform in
/// `0..=MAX_DEGREE`, moduli uniform in `[0, 1]` and uniform phases.
pub fn random_polynomial(rng: &mut impl Rng, m: usize, order: usize) -> TruncatedSeries {
    let degree = rng.gen_range(0..=MAX_DEGREE);
    let mut coeffs = vec![Complex64::new(0.0, 0.0); order + 1];
    for c in coeffs.iter_mut().skip(m).take(degree + 1) {
        *c = Complex64::from_polar(rng.gen::<f64>(), rng.gen_range(0.0..TAU));
    }
    TruncatedSeries::new(coeffs).expect("finite coefficients")
}
