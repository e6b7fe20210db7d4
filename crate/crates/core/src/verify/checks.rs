use num_complex::Complex64;
use rand::Rng;

use super::sampler::{random_in_disk, sample_rng, BlaschkeSample};
use super::{SchwarzMap, SelfMap};
use crate::error::{Error, Result};
use crate::kernels::{power_tail, ConvolutionPair, Kernel, OperatorSpec, DEFAULT_HORIZON};
use crate::series::TruncatedSeries;

/// Absolute slack when checking an inequality `lhs ≤ rhs`.
pub const SLACK: f64 = 1e-9;

/// A violation must exceed this to count as a sharpness witness.
pub const SHARPNESS_THRESHOLD: f64 = 1e-4;

/// Structured samples preceding the random ones: the automorphism and its
/// compositions with `z²`, `z³`, `z⁴`.
const LIFTS: usize = 4;

/// Coefficient moduli visited by the structured samples when `a` is free.
const FREE_GRID: usize = 50;

/// The two sides of an inequality `lhs ≤ rhs`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Comparison {
    pub lhs: f64,
    pub rhs: f64,
}

impl Comparison {
    pub fn margin(&self) -> f64 {
        self.rhs - self.lhs
    }

    pub fn holds(&self) -> bool {
        self.lhs <= self.rhs + SLACK
    }
}

/// `|Σ_{n≥m} cₙ |aₙ| r^{n+l}|`, the operator `T` applied to the majorant
/// series of `f` (over the stored coefficients).
pub fn operator_majorant(t: &OperatorSpec, f: &TruncatedSeries, r: f64) -> f64 {
    let weights = majorant_weights(t, r, f.order());
    let moduli: Vec<f64> = f.coeffs().iter().map(|c| c.norm()).collect();
    weighted(&weights, &moduli)
}

fn majorant_weights(t: &OperatorSpec, r: f64, order: usize) -> Vec<f64> {
    let m = t.order();
    let l = t.shift();
    (0..=order)
        .map(|n| {
            if n < m {
                0.0
            } else {
                t.kernel().coeff(n) * r.powi((n as i64 + l) as i32)
            }
        })
        .collect()
}

fn weighted(weights: &[f64], moduli: &[f64]) -> f64 {
    weights
        .iter()
        .zip(moduli)
        .map(|(w, a)| w * a)
        .sum::<f64>()
        .abs()
}

/// Largest empirical value over the samples at one radius.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EmpiricalValue {
    pub value: f64,
    /// Index of the sample reaching `value` (0 is the disc automorphism).
    pub best_index: usize,
}

fn check_pair(t1: &OperatorSpec, t2: &OperatorSpec) -> Result<()> {
    if t1.order() != t2.order() {
        return Err(Error::InvalidInput(format!(
            "operators act on different spaces (orders {} and {})",
            t1.order(),
            t2.order()
        )));
    }
    Ok(())
}

/// Sample `index` of the admissible class `‖T₁f‖_∞ = 1` (with
/// `|a_m| = a` when `a` is fixed): `T₁f = z^{m+l}φ` for an inner `φ`.
fn admissible(
    t1: &OperatorSpec,
    a: Option<f64>,
    seed: u64,
    index: usize,
    order: usize,
) -> Result<TruncatedSeries> {
    let m = t1.order();
    let c_m = t1.kernel().coeff(m);
    let lifted = |k: usize, alpha: f64| {
        BlaschkeSample::new(vec![], Complex64::new(1.0, 0.0), k)
            .expect("no zeros")
            .inner_through(Complex64::new(alpha, 0.0), order - m)
    };
    let phi = match a {
        Some(a) => {
            let rho = c_m * a;
            if rho > 1.0 + 1e-12 {
                return Err(Error::hypothesis(format!(
                    "no admissible function has |a_m| = {a}: |c_m a| > 1"
                )));
            }
            if rho >= 1.0 {
                let mut coeffs = vec![Complex64::new(0.0, 0.0); order - m + 1];
                coeffs[0] = Complex64::new(1.0, 0.0);
                TruncatedSeries::new(coeffs)?
            } else if index < LIFTS {
                lifted(index + 1, rho)
            } else {
                let mut rng = sample_rng(seed, index as u64);
                let alpha = Complex64::from_polar(rho, rng.gen_range(0.0..std::f64::consts::TAU));
                BlaschkeSample::random(&mut rng, 1).inner_through(alpha, order - m)
            }
        }
        None if index < LIFTS * FREE_GRID => {
            let j = index % FREE_GRID;
            let t = 1.0 - j as f64 / FREE_GRID as f64;
            lifted(index / FREE_GRID + 1, 1.0 - t * t)
        }
        None => {
            let mut rng = sample_rng(seed, index as u64);
            let alpha = random_in_disk(&mut rng, 1.0);
            BlaschkeSample::random(&mut rng, 1).inner_through(alpha, order - m)
        }
    };
    let mut coeffs = vec![Complex64::new(0.0, 0.0); order + 1];
    for (n, slot) in coeffs.iter_mut().enumerate().skip(m) {
        let c = t1.kernel().coeff(n);
        if c == 0.0 {
            return Err(Error::NotApplicable(format!(
                "T1 kernel vanishes at index {n}; T1 is not invertible"
            )));
        }
        *slot = phi.coeff(n - m) / c;
    }
    TruncatedSeries::new(coeffs)
}

/// Empirical Bohr–Bombieri values `sup |T₂M_rf| / ‖T₁f‖_∞` at each radius
/// in `rs`, over `samples` seeded admissible functions shared by all radii.
/// `a` fixes the modulus of the first coefficient `a_m`.
pub fn empirical_bombieri_grid(
    t1: &OperatorSpec,
    t2: &OperatorSpec,
    rs: &[f64],
    a: Option<f64>,
    samples: usize,
    seed: u64,
    order: usize,
) -> Result<Vec<EmpiricalValue>> {
    check_pair(t1, t2)?;
    if let Some(r) = rs.iter().find(|r| !(**r >= 0.0)) {
        return Err(Error::Domain(format!(
            "radius must be nonnegative, got {r}"
        )));
    }
    if let Some(a) = a {
        if !(0.0..=1.0).contains(&a) {
            return Err(Error::Domain(format!("a must lie in [0, 1], got {a}")));
        }
    }
    let weights: Vec<Vec<f64>> = rs.iter().map(|&r| majorant_weights(t2, r, order)).collect();
    let mut best = vec![
        EmpiricalValue {
            value: 0.0,
            best_index: 0
        };
        rs.len()
    ];
    let mut moduli = vec![0.0; order + 1];
    for index in 0..samples {
        let f = admissible(t1, a, seed, index, order)?;
        for (slot, c) in moduli.iter_mut().zip(f.coeffs()) {
            *slot = c.norm();
        }
        for (b, w) in best.iter_mut().zip(&weights) {
            let v = weighted(w, &moduli);
            if v > b.value {
                *b = EmpiricalValue {
                    value: v,
                    best_index: index,
                };
            }
        }
    }
    Ok(best)
}

/// [`empirical_bombieri_grid`] at a single radius.
pub fn empirical_bombieri(
    t1: &OperatorSpec,
    t2: &OperatorSpec,
    r: f64,
    a: Option<f64>,
    samples: usize,
    seed: u64,
    order: usize,
) -> Result<f64> {
    Ok(empirical_bombieri_grid(t1, t2, &[r], a, samples, seed, order)?[0].value)
}

/// `T₂M_rf` for the disc automorphism `f = z^m(z + a)/(1 + az)`.
pub fn automorphism_value(t2: &OperatorSpec, r: f64, a: f64, order: usize) -> Result<f64> {
    let f = TruncatedSeries::disc_automorphism(a, t2.order(), order)?;
    Ok(operator_majorant(t2, &f, r))
}

/// Both sides of `Σ_{n≥m+1} cₙdₙ|aₙ|²xⁿ ≤ (1/a − a)² a^{−2m}((h₁∗h₂)(a²x) − c_m d_m (a²x)ᵐ)`
/// with `a = |a_m|`, the right side written as
/// `(1 − a²)² x^{m+1} Σ_{k≥0} c_{m+1+k}d_{m+1+k}(a²x)ᵏ`.
pub fn check_lemma(pair: &ConvolutionPair, f: &SelfMap, x: f64) -> Result<Comparison> {
    let f = f.series();
    let m = pair.order();
    if !f.is_zero() && f.vanish_order() < m {
        return Err(Error::hypothesis(format!("f vanishes to order m = {m}")));
    }
    let inf = pair.h1.inf_ratio(DEFAULT_HORIZON)?;
    if !(x >= 0.0 && x <= inf.value) {
        return Err(Error::hypothesis(format!(
            "0 <= x <= inf c_n/c_(n+1) = {} (x = {x})",
            inf.value
        )));
    }
    let cd = |n: usize| pair.h1.coeff(n) * pair.h2.coeff(n);
    let a = f.coeff(m).norm();
    let mut lhs = 0.0;
    let mut p = x.powi(m as i32 + 1);
    for n in (m + 1)..=f.order() {
        lhs += cd(n) * f.coeff(n).norm_sqr() * p;
        p *= x;
    }
    let rhs = (1.0 - a * a).powi(2) * x.powi(m as i32 + 1) * power_tail(m + 1, a * a * x, cd);
    Ok(Comparison { lhs, rhs })
}

/// Both sides of `Σ_{n≥1} λₙ|aₙ|² ≤ Σ_{n≥1} λₙ|bₙ|²` for `f = g∘ω`
/// (`λ` nonincreasing and nonnegative, zero past its end).
pub fn check_goluzin(
    g: &TruncatedSeries,
    omega: &SchwarzMap,
    lambda: &[f64],
) -> Result<Comparison> {
    if lambda.iter().any(|l| !(*l >= 0.0)) || lambda.windows(2).skip(1).any(|w| w[1] > w[0]) {
        return Err(Error::InvalidInput(
            "lambda must be nonnegative and nonincreasing from n = 1".into(),
        ));
    }
    let omega = omega.series();
    let f = g.truncate(g.order().max(omega.order())).compose(omega)?;
    let side = |s: &TruncatedSeries| {
        (1..=s.order())
            .take_while(|&n| n < lambda.len())
            .map(|n| lambda[n] * s.coeff(n).norm_sqr())
            .sum::<f64>()
    };
    Ok(Comparison {
        lhs: side(&f),
        rhs: side(g),
    })
}

fn comparison_operator(spec: &OperatorSpec, g: &TruncatedSeries) -> Result<TruncatedSeries> {
    let m = spec.order();
    if spec.shift() != -(m as i64) {
        return Err(Error::hypothesis("T has the shape A^(m,-m)"));
    }
    if !spec.kernel().is_nondecreasing() {
        return Err(Error::hypothesis("|c_n| <= |c_(n+1)| for n >= m"));
    }
    spec.apply(g)
}

/// Subordination comparison: with `Tf = (Tg)∘ω`, both sides of
/// `M_rf ≤ M_r(Tg)`.
pub fn check_subordination_majorant(
    spec: &OperatorSpec,
    g: &TruncatedSeries,
    omega: &SchwarzMap,
    r: f64,
) -> Result<Comparison> {
    let tg = comparison_operator(spec, g)?;
    let omega = omega.series();
    let tf = tg.truncate(tg.order().max(omega.order())).compose(omega)?;
    let f = spec.invert(&tf)?;
    Ok(Comparison {
        lhs: f.majorant(r),
        rhs: tg.majorant(r),
    })
}

/// Majorization comparison: with `Tf = φ·Tg`, both sides of
/// `M_rf ≤ M_r(Tg)`.
pub fn check_majorization_majorant(
    spec: &OperatorSpec,
    g: &TruncatedSeries,
    phi: &SelfMap,
    r: f64,
) -> Result<Comparison> {
    let tg = comparison_operator(spec, g)?;
    let phi = phi.series();
    let tf = tg.truncate(tg.order().max(phi.order())).mul(phi);
    let f = spec.invert(&tf)?;
    Ok(Comparison {
        lhs: f.majorant(r),
        rhs: tg.majorant(r),
    })
}

/// Largest violation found by a sharpness search, with the family parameter
/// reaching it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sharpness {
    /// `max (lhs − rhs)` over the family.
    pub violation: f64,
    pub a: f64,
    pub samples: usize,
}

impl Sharpness {
    pub fn found(&self) -> bool {
        self.violation > SHARPNESS_THRESHOLD
    }
}

fn scan_family(grid: usize, mut excess: impl FnMut(f64) -> Result<f64>) -> Result<Sharpness> {
    let mut best = Sharpness {
        violation: f64::NEG_INFINITY,
        a: 0.0,
        samples: grid,
    };
    for k in 1..grid {
        let a = k as f64 / grid as f64;
        let v = excess(a)?;
        if v > best.violation {
            best.violation = v;
            best.a = a;
        }
    }
    Ok(best)
}

fn automorphism(a: f64, order: usize) -> Result<TruncatedSeries> {
    TruncatedSeries::disc_automorphism(a, 0, order)
}

/// Majorization with `g = zᵐ/c_m` (so `Tg = 1`) and `φ` the disc
/// automorphism with `φ(0) = a`, scanned over `a`.
pub fn majorization_sharpness(
    spec: &OperatorSpec,
    r: f64,
    grid: usize,
    order: usize,
) -> Result<Sharpness> {
    let m = spec.order();
    let g = TruncatedSeries::monomial(m, order)
        .scale(Complex64::new(1.0 / spec.kernel().coeff(m), 0.0));
    scan_family(grid, |a| {
        let phi = SelfMap::trusted(automorphism(a, order)?);
        let c = check_majorization_majorant(spec, &g, &phi, r)?;
        Ok(-c.margin())
    })
}

/// Subordination with `g = z^{m+1}/c_{m+1}` (so `Tg = z`) and `ω = zφ` for
/// the disc automorphism `φ` with `φ(0) = a`, scanned over `a`.
pub fn subordination_sharpness(
    spec: &OperatorSpec,
    r: f64,
    grid: usize,
    order: usize,
) -> Result<Sharpness> {
    let m = spec.order();
    let g = TruncatedSeries::monomial(m + 1, order)
        .scale(Complex64::new(1.0 / spec.kernel().coeff(m + 1), 0.0));
    scan_family(grid, |a| {
        let omega = SchwarzMap::trusted(automorphism(a, order)?.shift_up(1).truncate(order));
        let c = check_subordination_majorant(spec, &g, &omega, r)?;
        Ok(-c.margin())
    })
}

/// `Σ_k |a_{k·step}| r^{k·step} − 1` for `f = (z^step + a)/(1 + a z^step)`,
/// scanned over `a`.
pub fn lacunary_sharpness(step: usize, r: f64, grid: usize, order: usize) -> Result<Sharpness> {
    let selector = OperatorSpec::new(Kernel::lacunary_selector(step)?, 0)?;
    scan_family(grid, |a| {
        let f = BlaschkeSample::new(vec![], Complex64::new(1.0, 0.0), step)?
            .inner_through(Complex64::new(a, 0.0), order);
        Ok(operator_majorant(&selector, &f, r) - 1.0)
    })
}
