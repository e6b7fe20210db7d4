//! Convolution kernels `h(z) = Σ_{n≥m} cₙ zⁿ` and the operators
//! `A^{m,l}_h f = z^l (h ∗ f)` built from them.
//!
//! Built-in kernels carry exact analytic metadata (coefficient-ratio
//! infimum, radius of convergence, convex-hull witness for the factor used
//! as `h₂`); user kernels fall back to finite-horizon scans that are tagged
//! as estimates.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::TruncatedSeries;
use crate::specfun::{hypergeometric_coeffs, HypergeometricParams};

/// Horizon of numerical scans for kernels without analytic metadata.
pub const DEFAULT_HORIZON: usize = 1024;

const HYPERGEOMETRIC_TABLE: usize = 1 << 16;
const SUM_CAP: usize = 20_000_000;

/// Status of the hypothesis that `h̃₂ = Σ bₙzⁿ` (with `bₙ² = d_{n+m}`) lies in
/// the closed convex hull of normalized convex univalent maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoKWitness {
    /// Membership is a known fact for this kernel.
    ProofBacked,
    /// Membership is claimed by the caller, not verified.
    Asserted,
    Missing,
}

/// A real number with a tag telling whether it is exact or a finite-horizon
/// estimate.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tagged {
    pub value: f64,
    pub exact: bool,
}

impl Tagged {
    fn exact(value: f64) -> Self {
        Tagged { value, exact: true }
    }

    fn estimate(value: f64) -> Self {
        Tagged {
            value,
            exact: false,
        }
    }
}

type Generator = Arc<dyn Fn(usize) -> f64 + Send + Sync>;

#[derive(Clone)]
enum Coefficients {
    /// 1
    Geometric,
    /// binom(n, m)
    Binomial,
    /// 1/(n+1)
    Harmonic,
    /// 1 when (n − m) is a multiple of `step`
    Lacunary {
        step: usize,
    },
    Hypergeometric {
        params: HypergeometricParams,
        table: Arc<[f64]>,
    },
    /// factorⁿ
    Dilation {
        factor: f64,
    },
    Product(Arc<Kernel>, Arc<Kernel>),
    Custom {
        generator: Generator,
        degree: Option<usize>,
    },
}

/// A convolution function `h(z) = Σ_{n≥m} cₙ zⁿ` with real coefficients.
#[derive(Clone)]
pub struct Kernel {
    name: String,
    order: usize,
    coefficients: Coefficients,
    co_k: CoKWitness,
}

impl fmt::Debug for Kernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Kernel")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("co_k", &self.co_k)
            .finish()
    }
}

/// `binom(n, k)` by the multiplicative recurrence.
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (1..=k).fold(1.0, |acc, i| acc * (n - k + i) as f64 / i as f64)
}

impl Kernel {
    /// `zᵐ/(1 − z)`: all coefficients from index `m` on equal one.
    pub fn geometric(m: usize) -> Self {
        Kernel {
            name: "geometric".into(),
            order: m,
            coefficients: Coefficients::Geometric,
            co_k: CoKWitness::ProofBacked,
        }
    }

    /// `1/(1 − zᵏ)`, selecting indices divisible by `step`.
    pub fn lacunary_selector(step: usize) -> Result<Self> {
        if step == 0 {
            return Err(Error::InvalidInput(
                "lacunary step must be at least 1".into(),
            ));
        }
        Ok(Kernel {
            name: "lacunary".into(),
            order: 0,
            coefficients: Coefficients::Lacunary { step },
            co_k: CoKWitness::Missing,
        })
    }

    /// `c zⁿ ↦` kernel with `cₙ = factorⁿ`, i.e. `f(z) ↦ f(factor·z)`.
    pub fn dilation(factor: f64) -> Result<Self> {
        if !(factor > 0.0 && factor.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "dilation factor must be positive and finite, got {factor}"
            )));
        }
        Ok(Kernel {
            name: "dilation".into(),
            order: 0,
            coefficients: Coefficients::Dilation { factor },
            co_k: CoKWitness::Missing,
        })
    }

    /// A user kernel. `degree = Some(d)` declares a polynomial (coefficients
    /// beyond `d` are zero). Analytic metadata is estimated by scans.
    pub fn custom(
        name: impl Into<String>,
        m: usize,
        degree: Option<usize>,
        generator: impl Fn(usize) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Kernel {
            name: name.into(),
            order: m,
            coefficients: Coefficients::Custom {
                generator: Arc::new(generator),
                degree,
            },
            co_k: CoKWitness::Missing,
        }
    }

    /// Marks the convex-hull hypothesis as asserted by the caller. Results
    /// that depend on it are reported with asserted status.
    pub fn assert_co_k(mut self) -> Self {
        if self.co_k == CoKWitness::Missing {
            self.co_k = CoKWitness::Asserted;
        }
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Vanishing order `m`.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn co_k(&self) -> CoKWitness {
        self.co_k
    }

    /// Coefficient `cₙ`; zero below the vanishing order.
    pub fn coeff(&self, n: usize) -> f64 {
        if n < self.order {
            return 0.0;
        }
        match &self.coefficients {
            Coefficients::Geometric => 1.0,
            Coefficients::Binomial => binomial(n, self.order),
            Coefficients::Harmonic => 1.0 / (n as f64 + 1.0),
            Coefficients::Lacunary { step } => {
                if (n - self.order).is_multiple_of(*step) {
                    1.0
                } else {
                    0.0
                }
            }
            Coefficients::Hypergeometric { params, table } => match table.get(n) {
                Some(g) => *g,
                None => {
                    let mut g = *table.last().expect("table is nonempty");
                    for k in (table.len() - 1)..n {
                        g *= params.ratio(k);
                    }
                    g
                }
            },
            Coefficients::Dilation { factor } => factor.powf(n as f64),
            Coefficients::Product(a, b) => a.coeff(n) * b.coeff(n),
            Coefficients::Custom { generator, degree } => match degree {
                Some(d) if n > *d => 0.0,
                _ => generator(n),
            },
        }
    }

    /// `c₀ … c_N` as a truncated series.
    pub fn to_series(&self, order: usize) -> TruncatedSeries {
        TruncatedSeries::from_fn(order, |n| Complex64::new(self.coeff(n), 0.0))
            .expect("kernel coefficients are finite")
    }

    /// Whether the kernel has finitely many nonzero coefficients.
    pub fn is_polynomial(&self) -> bool {
        match &self.coefficients {
            Coefficients::Custom { degree, .. } => degree.is_some(),
            Coefficients::Hypergeometric { params, .. } => params.a == 0.0 || params.b == 0.0,
            Coefficients::Product(a, b) => a.is_polynomial() || b.is_polynomial(),
            _ => false,
        }
    }

    /// `cₙ > 0` for every `n ≥ m` (checked over the default horizon for
    /// kernels without a closed form).
    pub fn positivity(&self) -> bool {
        match &self.coefficients {
            Coefficients::Geometric
            | Coefficients::Binomial
            | Coefficients::Harmonic
            | Coefficients::Dilation { .. } => true,
            Coefficients::Lacunary { step } => *step == 1,
            Coefficients::Product(a, b) => a.positivity() && b.positivity(),
            Coefficients::Hypergeometric { .. } | Coefficients::Custom { .. } => {
                !self.is_polynomial() && (self.order..=DEFAULT_HORIZON).all(|n| self.coeff(n) > 0.0)
            }
        }
    }

    /// `min_{m+1 ≤ n ≤ horizon} cₙ/c_{n+1}` by direct scan.
    pub fn scan_inf_ratio(&self, horizon: usize) -> Result<f64> {
        let mut best = f64::INFINITY;
        for n in (self.order + 1)..=horizon.max(self.order + 1) {
            let (c0, c1) = (self.coeff(n), self.coeff(n + 1));
            if !(c0 > 0.0 && c1 > 0.0) {
                return Err(Error::InvalidInput(format!(
                    "kernel '{}' has a nonpositive coefficient near index {n}",
                    self.name
                )));
            }
            best = best.min(c0 / c1);
        }
        Ok(best)
    }

    /// `inf_{n≥m+1} cₙ/c_{n+1}`: exact for built-ins, otherwise a scan up to
    /// `horizon` tagged as an estimate.
    pub fn inf_ratio(&self, horizon: usize) -> Result<Tagged> {
        if !self.positivity() {
            return Err(Error::InvalidInput(format!(
                "kernel '{}' has nonpositive coefficients; the ratio infimum is undefined",
                self.name
            )));
        }
        Ok(match &self.coefficients {
            Coefficients::Geometric | Coefficients::Harmonic | Coefficients::Lacunary { .. } => {
                Tagged::exact(1.0)
            }
            Coefficients::Binomial => Tagged::exact(2.0 / (self.order as f64 + 2.0)),
            Coefficients::Dilation { factor } => Tagged::exact(1.0 / factor),
            Coefficients::Hypergeometric { params, .. } => {
                if params.a == params.c && params.b == 1.0
                    || params.b == params.c && params.a == 1.0
                {
                    Tagged::exact(1.0)
                } else {
                    // the ratio tends to 1, so the limit joins the scan
                    Tagged::estimate(self.scan_inf_ratio(horizon)?.min(1.0))
                }
            }
            Coefficients::Product(..) | Coefficients::Custom { .. } => {
                Tagged::estimate(self.scan_inf_ratio(horizon)?)
            }
        })
    }

    /// Radius of convergence; `+∞` for polynomial kernels.
    pub fn radius_of_convergence(&self) -> Tagged {
        if self.is_polynomial() {
            return Tagged::exact(f64::INFINITY);
        }
        match &self.coefficients {
            Coefficients::Geometric
            | Coefficients::Binomial
            | Coefficients::Harmonic
            | Coefficients::Lacunary { .. }
            | Coefficients::Hypergeometric { .. } => Tagged::exact(1.0),
            Coefficients::Dilation { factor } => Tagged::exact(1.0 / factor),
            Coefficients::Product(..) | Coefficients::Custom { .. } => {
                let limsup = (DEFAULT_HORIZON / 2..=DEFAULT_HORIZON)
                    .map(|n| self.coeff(n).abs().powf(1.0 / n as f64))
                    .fold(0.0, f64::max);
                Tagged::estimate(if limsup == 0.0 {
                    f64::INFINITY
                } else {
                    1.0 / limsup
                })
            }
        }
    }

    /// `|cₙ| ≤ |c_{n+1}|` for all `n ≥ m`.
    pub fn is_nondecreasing(&self) -> bool {
        match &self.coefficients {
            Coefficients::Geometric | Coefficients::Binomial => true,
            Coefficients::Harmonic => false,
            Coefficients::Lacunary { step } => *step == 1,
            Coefficients::Dilation { factor } => *factor >= 1.0,
            _ => (self.order..DEFAULT_HORIZON)
                .all(|n| self.coeff(n).abs() <= self.coeff(n + 1).abs()),
        }
    }

    /// Kernel of the Hadamard product `self ∗ other`.
    pub fn hadamard(&self, other: &Kernel) -> Kernel {
        let is_geo = |k: &Kernel| matches!(k.coefficients, Coefficients::Geometric);
        if is_geo(other) && other.order <= self.order {
            return self.clone();
        }
        if is_geo(self) && self.order <= other.order {
            return other.clone();
        }
        Kernel {
            name: format!("{}*{}", self.name, other.name),
            order: self.order.max(other.order),
            coefficients: Coefficients::Product(Arc::new(self.clone()), Arc::new(other.clone())),
            co_k: CoKWitness::Missing,
        }
    }

    /// `Σ_{n ≥ start} cₙ dₙ xⁿ` where `dₙ` are the coefficients of `other`,
    /// summed until the terms are negligible. Requires `0 ≤ x` below the
    /// radius of convergence of the product.
    pub fn hadamard_eval(&self, other: &Kernel, x: f64, start: usize) -> f64 {
        x.powi(start as i32) * power_tail(start, x, |n| self.coeff(n) * other.coeff(n))
    }

    /// `Σ_{n ≥ start} cₙ xⁿ`.
    pub fn eval_from(&self, x: f64, start: usize) -> f64 {
        x.powi(start as i32) * power_tail(start, x, |n| self.coeff(n))
    }

    fn descriptor_params(&self) -> Option<(&'static str, BTreeMap<String, f64>)> {
        let mut params = BTreeMap::new();
        let name = match &self.coefficients {
            Coefficients::Geometric => "geometric",
            Coefficients::Binomial => "derivative",
            Coefficients::Harmonic => "integral",
            Coefficients::Lacunary { step } => {
                params.insert("step".into(), *step as f64);
                "lacunary"
            }
            Coefficients::Hypergeometric { params: p, .. } => {
                params.insert("a".into(), p.a);
                params.insert("b".into(), p.b);
                params.insert("c".into(), p.c);
                "hypergeometric"
            }
            Coefficients::Dilation { factor } => {
                params.insert("factor".into(), *factor);
                "dilation"
            }
            Coefficients::Product(..) | Coefficients::Custom { .. } => return None,
        };
        Some((name, params))
    }
}

/// `Σ_{k≥0} coeff(start + k) xᵏ` for `x ≥ 0`, summed until the terms stay
/// below `1e−17` of the running sum.
pub(crate) fn power_tail(start: usize, x: f64, coeff: impl Fn(usize) -> f64) -> f64 {
    if x == 0.0 {
        return coeff(start);
    }
    let mut p = 1.0;
    let mut sum = 0.0;
    let mut quiet = 0usize;
    for k in 0..SUM_CAP {
        let term = coeff(start + k) * p;
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            quiet += 1;
        } else {
            quiet = 0;
        }
        p *= x;
        if (quiet >= 256 && k >= 64) || p == 0.0 {
            break;
        }
    }
    sum
}

/// Kernel of `∂ᵐ/m!` on functions vanishing to order `m`:
/// `zᵐ/(1 − z)^{m+1}`, coefficients `binom(n, m)`.
pub fn derivative_kernel(m: usize) -> Kernel {
    Kernel {
        name: "derivative".into(),
        order: m,
        coefficients: Coefficients::Binomial,
        co_k: CoKWitness::Missing,
    }
}

/// Kernel of integration from 0: `−log(1 − z)/z`, coefficients `1/(n+1)`,
/// used with shift `l = +1`.
pub fn integral_kernel() -> Kernel {
    Kernel {
        name: "integral".into(),
        order: 0,
        coefficients: Coefficients::Harmonic,
        co_k: CoKWitness::Missing,
    }
}

/// `F(a, b, c; z)` as a kernel with `cₙ = γₙ`.
pub fn hypergeometric_kernel(params: HypergeometricParams) -> Result<Kernel> {
    let table = hypergeometric_coeffs(&params, HYPERGEOMETRIC_TABLE)?;
    Ok(Kernel {
        name: "hypergeometric".into(),
        order: 0,
        coefficients: Coefficients::Hypergeometric {
            params,
            table: table.into(),
        },
        co_k: CoKWitness::Missing,
    })
}

/// The operator `f ↦ z^l (h ∗ f)` on functions vanishing to order `m`.
#[derive(Clone, Debug)]
pub struct OperatorSpec {
    kernel: Kernel,
    l: i64,
}

/// JSON form `{name, m, l, params}` of a built-in operator.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OperatorDescriptor {
    pub name: String,
    pub m: usize,
    pub l: i64,
    pub params: BTreeMap<String, f64>,
}

impl OperatorSpec {
    pub fn new(kernel: Kernel, l: i64) -> Result<Self> {
        if kernel.order as i64 + l < 0 {
            return Err(Error::InvalidInput(format!(
                "shift l = {l} would produce negative exponents for vanishing order {}",
                kernel.order
            )));
        }
        Ok(OperatorSpec { kernel, l })
    }

    /// Identity on functions vanishing to order `m`.
    pub fn identity(m: usize) -> Self {
        OperatorSpec {
            kernel: Kernel::geometric(m),
            l: 0,
        }
    }

    /// `∂ᵐ/m!` on functions vanishing to order `m`.
    pub fn derivative(m: usize) -> Self {
        OperatorSpec {
            kernel: derivative_kernel(m),
            l: -(m as i64),
        }
    }

    /// `f ↦ ∫₀ᶻ f`.
    pub fn integral() -> Self {
        OperatorSpec {
            kernel: integral_kernel(),
            l: 1,
        }
    }

    pub fn kernel(&self) -> &Kernel {
        &self.kernel
    }

    pub fn shift(&self) -> i64 {
        self.l
    }

    /// Vanishing order of the domain.
    pub fn order(&self) -> usize {
        self.kernel.order
    }

    /// Applies the operator: coefficient `n + l` of the result is `cₙaₙ`.
    pub fn apply(&self, f: &TruncatedSeries) -> Result<TruncatedSeries> {
        let m = self.kernel.order;
        if !f.is_zero() && f.vanish_order() < m {
            return Err(Error::InvalidInput(format!(
                "input vanishes to order {} but the operator needs order {m}",
                f.vanish_order()
            )));
        }
        let out_order = (f.order() as i64 + self.l).max(0) as usize;
        let mut out = vec![Complex64::new(0.0, 0.0); out_order + 1];
        for n in m..=f.order() {
            let k = (n as i64 + self.l) as usize;
            if k <= out_order {
                out[k] = f.coeff(n) * self.kernel.coeff(n);
            }
        }
        TruncatedSeries::new(out)
    }

    /// Inverse on the range: coefficient `n` of the result is `g_{n+l}/cₙ`
    /// for `n ≥ m`.
    pub fn invert(&self, g: &TruncatedSeries) -> Result<TruncatedSeries> {
        let m = self.kernel.order;
        let low = m as i64 + self.l;
        if !g.is_zero() && (g.vanish_order() as i64) < low {
            return Err(Error::InvalidInput(format!(
                "input vanishes to order {} but the range starts at order {low}",
                g.vanish_order()
            )));
        }
        let out_order = (g.order() as i64 - self.l).max(m as i64) as usize;
        let mut out = vec![Complex64::new(0.0, 0.0); out_order + 1];
        for (n, slot) in out.iter_mut().enumerate().skip(m) {
            let k = n as i64 + self.l;
            if k < 0 || k as usize > g.order() {
                continue;
            }
            let gk = g.coeff(k as usize);
            if gk.norm() == 0.0 {
                continue;
            }
            let c = self.kernel.coeff(n);
            if c == 0.0 {
                return Err(Error::NotApplicable(format!(
                    "kernel '{}' vanishes at index {n}; the operator is not invertible there",
                    self.kernel.name
                )));
            }
            *slot = gk / c;
        }
        TruncatedSeries::new(out)
    }

    pub fn descriptor(&self) -> Result<OperatorDescriptor> {
        let (name, params) = self.kernel.descriptor_params().ok_or_else(|| {
            Error::NotApplicable(format!(
                "kernel '{}' has no JSON descriptor",
                self.kernel.name
            ))
        })?;
        Ok(OperatorDescriptor {
            name: name.into(),
            m: self.kernel.order,
            l: self.l,
            params,
        })
    }

    pub fn from_descriptor(d: &OperatorDescriptor) -> Result<Self> {
        let param = |key: &str| {
            d.params.get(key).copied().ok_or_else(|| {
                Error::InvalidInput(format!("descriptor '{}' needs parameter '{key}'", d.name))
            })
        };
        let kernel = match d.name.as_str() {
            "geometric" => Kernel::geometric(d.m),
            "derivative" => derivative_kernel(d.m),
            "integral" if d.m == 0 => integral_kernel(),
            "lacunary" => {
                let step = param("step")?;
                if step < 1.0 || step.fract() != 0.0 {
                    return Err(Error::InvalidInput(format!(
                        "lacunary step {step} is not a positive integer"
                    )));
                }
                let mut k = Kernel::lacunary_selector(step as usize)?;
                k.order = d.m;
                if d.m == step as usize + 1 {
                    k.co_k = lacunary_co_k(step as usize);
                }
                k
            }
            "hypergeometric" => hypergeometric_kernel(HypergeometricParams::new(
                param("a")?,
                param("b")?,
                param("c")?,
            )?)?,
            "dilation" => Kernel::dilation(param("factor")?)?,
            other => {
                return Err(Error::InvalidInput(format!(
                    "unknown operator '{other}' with m = {}",
                    d.m
                )))
            }
        };
        OperatorSpec::new(kernel, d.l)
    }
}

/// Nth coefficient of the Cesàro means: the average of `a₀ … aₙ`.
pub fn cesaro(f: &TruncatedSeries) -> TruncatedSeries {
    let mut acc = Complex64::new(0.0, 0.0);
    let coeffs = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, a)| {
            acc += a;
            acc / (n as f64 + 1.0)
        })
        .collect();
    TruncatedSeries::new(coeffs).expect("averages of finite numbers are finite")
}

/// Kernels `(h₁, h₂)` and shift `l` for which the target operator is
/// `A^{m,l}_{h₁∗h₂}` and the source is the identity on `H_m`.
#[derive(Clone, Debug)]
pub struct ConvolutionPair {
    pub h1: Kernel,
    pub h2: Kernel,
    pub l: i64,
}

impl ConvolutionPair {
    pub fn new(h1: Kernel, h2: Kernel, l: i64) -> Result<Self> {
        if h1.order != h2.order {
            return Err(Error::InvalidInput(format!(
                "kernels must share the vanishing order, got {} and {}",
                h1.order, h2.order
            )));
        }
        if h1.order as i64 + l < 0 {
            return Err(Error::InvalidInput(format!(
                "shift {l} too negative for order {}",
                h1.order
            )));
        }
        Ok(ConvolutionPair { h1, h2, l })
    }

    /// Identity to identity on `H₀`.
    pub fn identity() -> Self {
        ConvolutionPair {
            h1: Kernel::geometric(0),
            h2: Kernel::geometric(0),
            l: 0,
        }
    }

    /// Identity on `H_m` to `∂ᵐ/m!`.
    pub fn derivative(m: usize) -> Self {
        ConvolutionPair {
            h1: derivative_kernel(m),
            h2: Kernel::geometric(m),
            l: -(m as i64),
        }
    }

    /// Identity on `H₀` to integration.
    pub fn integral() -> Self {
        ConvolutionPair {
            h1: integral_kernel(),
            h2: Kernel::geometric(0),
            l: 1,
        }
    }

    /// Vanishing order `m`.
    pub fn order(&self) -> usize {
        self.h1.order
    }

    /// The target operator `A^{m,l}_{h₁∗h₂}`.
    pub fn target(&self) -> OperatorSpec {
        OperatorSpec {
            kernel: self.h1.hadamard(&self.h2),
            l: self.l,
        }
    }

    /// The source operator, the identity on `H_m`.
    pub fn source(&self) -> OperatorSpec {
        OperatorSpec::identity(self.order())
    }
}

fn lacunary_co_k(m: usize) -> CoKWitness {
    // For m ≥ 2 the coefficient square roots form zᵐ/(1 − zᵐ), whose
    // derivative vanishes at 0; membership is only asserted.
    if m == 1 {
        CoKWitness::ProofBacked
    } else {
        CoKWitness::Asserted
    }
}

/// The lacunary pair `h₁ = z^{m+1}/(1 − z)`, `h₂ = z^{m+1}/(1 − zᵐ)` with
/// shift `l = −m − 1`, modelling the majorant `Σ_k |a_{km}| r^{km}`.
pub fn lacunary_kernel(m: usize) -> Result<ConvolutionPair> {
    if m == 0 {
        return Err(Error::InvalidInput(
            "lacunary step must be at least 1".into(),
        ));
    }
    let h2 = Kernel {
        name: "lacunary".into(),
        order: m + 1,
        coefficients: Coefficients::Lacunary { step: m },
        co_k: lacunary_co_k(m),
    };
    Ok(ConvolutionPair {
        h1: Kernel::geometric(m + 1),
        h2,
        l: -(m as i64) - 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn identity_operator_is_identity() {
        let f = TruncatedSeries::from_real(&[0.5, -1.0, 0.25, 3.0]).unwrap();
        assert_eq!(OperatorSpec::identity(0).apply(&f).unwrap(), f);
    }

    #[test]
    fn derivative_operator_on_monomial() {
        let f = TruncatedSeries::monomial(2, 2);
        let out = OperatorSpec::derivative(2).apply(&f).unwrap();
        assert_eq!(out.order(), 0);
        assert_eq!(out.coeff(0), c(1.0));
    }

    #[test]
    fn integral_operator_on_constant() {
        let one = TruncatedSeries::from_real(&[1.0]).unwrap();
        let out = OperatorSpec::integral().apply(&one).unwrap();
        assert_eq!(out.coeffs(), &[c(0.0), c(1.0)]);
    }

    #[test]
    fn apply_rejects_low_vanishing_order() {
        let f = TruncatedSeries::from_real(&[1.0, 1.0, 1.0]).unwrap();
        assert!(OperatorSpec::derivative(1).apply(&f).is_err());
        assert!(OperatorSpec::new(Kernel::geometric(1), -2).is_err());
    }

    #[test]
    fn derivative_kernel_metadata() {
        let k0 = derivative_kernel(0);
        assert_eq!(k0.inf_ratio(DEFAULT_HORIZON).unwrap(), Tagged::exact(1.0));
        assert!((0..20).all(|n| k0.coeff(n) == 1.0));
        let k1 = derivative_kernel(1);
        assert_eq!(k1.coeff(7), 7.0);
        assert_abs_diff_eq!(k1.inf_ratio(DEFAULT_HORIZON).unwrap().value, 2.0 / 3.0);
        assert_eq!(derivative_kernel(3).coeff(5), 10.0);
        assert_eq!(derivative_kernel(3).coeff(2), 0.0);
        assert_eq!(k1.radius_of_convergence(), Tagged::exact(1.0));
        assert!(k1.positivity());
    }

    #[test]
    fn integral_kernel_metadata() {
        let k = integral_kernel();
        assert_eq!(k.coeff(0), 1.0);
        assert_eq!(k.coeff(3), 0.25);
        assert_eq!(k.inf_ratio(DEFAULT_HORIZON).unwrap(), Tagged::exact(1.0));
        assert!(!k.is_nondecreasing());
    }

    #[test]
    fn cesaro_examples() {
        let geo = TruncatedSeries::geometric(20);
        assert_eq!(cesaro(&geo).coeffs(), geo.coeffs());
        let one = TruncatedSeries::from_real(&[1.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        let out = cesaro(&one);
        for n in 0..=4 {
            assert_abs_diff_eq!(out.coeff(n).re, 1.0 / (n as f64 + 1.0));
        }
        assert!(cesaro(&TruncatedSeries::zero(6)).is_zero());
    }

    #[test]
    fn lacunary_pair_shapes() {
        let p1 = lacunary_kernel(1).unwrap();
        assert!((2..30).all(|n| p1.h1.coeff(n) == p1.h2.coeff(n)));
        assert_eq!(p1.h2.co_k(), CoKWitness::ProofBacked);

        let p2 = lacunary_kernel(2).unwrap();
        let support: Vec<usize> = (0..12).filter(|&n| p2.h2.coeff(n) != 0.0).collect();
        assert_eq!(support, vec![3, 5, 7, 9, 11]);
        assert_eq!(
            p2.h1.inf_ratio(DEFAULT_HORIZON).unwrap(),
            Tagged::exact(1.0)
        );
        assert_eq!(p2.l, -3);
        assert!(lacunary_kernel(0).is_err());
    }

    #[test]
    fn hypergeometric_kernel_profiles() {
        let geo = hypergeometric_kernel(HypergeometricParams::new(1.0, 1.0, 1.0).unwrap()).unwrap();
        assert!((0..100).all(|n| geo.coeff(n) == 1.0));
        let int = hypergeometric_kernel(HypergeometricParams::new(1.0, 1.0, 2.0).unwrap()).unwrap();
        assert!((0..100).all(|n| (int.coeff(n) - 1.0 / (n as f64 + 1.0)).abs() < 1e-15));
        let k = hypergeometric_kernel(HypergeometricParams::new(1.0, 2.0, 3.0).unwrap()).unwrap();
        assert_abs_diff_eq!(k.coeff(1), 2.0 / 3.0, epsilon = 1e-15);
        // past the table the recurrence continues
        let n = HYPERGEOMETRIC_TABLE + 5;
        assert_abs_diff_eq!(int.coeff(n), 1.0 / (n as f64 + 1.0), epsilon = 1e-15);
    }

    #[test]
    fn convergence_radii() {
        assert_eq!(Kernel::geometric(0).radius_of_convergence().value, 1.0);
        assert_eq!(
            Kernel::dilation(4.0).unwrap().radius_of_convergence().value,
            0.25
        );
        let poly = Kernel::custom("poly", 0, Some(3), |n| n as f64 + 1.0);
        assert_eq!(poly.radius_of_convergence().value, f64::INFINITY);
        let est = Kernel::custom("threes", 0, None, |n| 3f64.powi(n as i32).min(1e300));
        let rc = est.radius_of_convergence();
        assert!(!rc.exact);
        assert!((rc.value - 1.0 / 3.0).abs() < 1e-3);
    }

    #[test]
    fn inf_ratio_errors_on_gaps() {
        let p = lacunary_kernel(2).unwrap();
        assert!(p.h2.inf_ratio(DEFAULT_HORIZON).is_err());
        let zeroish = Kernel::custom("gap", 0, None, |n| if n == 5 { 0.0 } else { 1.0 });
        assert!(zeroish.scan_inf_ratio(DEFAULT_HORIZON).is_err());
    }

    #[test]
    fn hadamard_eval_closed_forms() {
        let x = 0.37;
        let geo = Kernel::geometric(0);
        assert_abs_diff_eq!(
            geo.hadamard_eval(&geo, x, 0),
            1.0 / (1.0 - x),
            epsilon = 1e-14
        );
        let int = integral_kernel();
        assert_abs_diff_eq!(
            int.hadamard_eval(&geo, x, 0),
            -(1.0 - x).ln() / x,
            epsilon = 1e-14
        );
        let d2 = derivative_kernel(2);
        assert_abs_diff_eq!(
            d2.hadamard_eval(&Kernel::geometric(2), x, 0),
            x * x / (1.0 - x).powi(3),
            epsilon = 1e-14
        );
        let lac = lacunary_kernel(3).unwrap();
        assert_abs_diff_eq!(
            lac.h1.hadamard_eval(&lac.h2, x, 0),
            x.powi(4) / (1.0 - x.powi(3)),
            epsilon = 1e-15
        );
    }

    #[test]
    fn descriptor_round_trip() {
        let specs = vec![
            OperatorSpec::identity(2),
            OperatorSpec::derivative(3),
            OperatorSpec::integral(),
            OperatorSpec::new(Kernel::dilation(4.0).unwrap(), 0).unwrap(),
            OperatorSpec::new(
                hypergeometric_kernel(HypergeometricParams::new(1.0, 2.0, 3.0).unwrap()).unwrap(),
                0,
            )
            .unwrap(),
            lacunary_kernel(2).unwrap().target(),
        ];
        for spec in specs {
            let d = spec.descriptor().unwrap();
            let json = serde_json::to_string(&d).unwrap();
            let back: OperatorDescriptor = serde_json::from_str(&json).unwrap();
            let rebuilt = OperatorSpec::from_descriptor(&back).unwrap();
            assert_eq!(rebuilt.descriptor().unwrap(), d);
            assert!((0..40).all(|n| rebuilt.kernel().coeff(n) == spec.kernel().coeff(n)));
        }
        let custom = OperatorSpec::new(Kernel::custom("x", 0, None, |_| 1.0), 0).unwrap();
        assert!(custom.descriptor().is_err());
    }
}
