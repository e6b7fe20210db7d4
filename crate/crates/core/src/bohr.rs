//! Bohr–Bombieri functions and Bohr radii.
//!
//! The central object is the closed form of the Bohr–Bombieri function of
//! the pair `id_m → A^{m,l}_{h₁∗h₂}` with fixed initial coefficient modulus
//! `a = |a_m|`:
//!
//! ```text
//! m(r, a) = r^{m+l} c_m d_m a + (1/a − a) Σ_{n≥m+1} cₙ dₙ a^{n−m} r^{n+l}
//! ```
//!
//! together with the specialised radii obtained from it and a few classical
//! bounds (Cesàro, Gauss hypergeometric kernels, shift operators).

use std::f64::consts::{E, FRAC_1_SQRT_2};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernels::{power_tail, CoKWitness, ConvolutionPair, OperatorSpec, Tagged};
use crate::roots::{bisect, first_root, golden_section, SCAN_STEP};
use crate::specfun::{dilog, lambert_w, HypergeometricParams};

/// How a radius was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    Bisection,
    Minimization,
}

/// One validity condition and whether it holds at the computed value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HypothesisCheck {
    pub name: String,
    pub ok: bool,
}

/// A computed radius with provenance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RadiusResult {
    pub value: f64,
    pub method: Method,
    /// `|m(value, a) − 1|` or the residual of the defining equation.
    pub residual: f64,
    pub bracket: [f64; 2],
    pub hypotheses: Vec<HypothesisCheck>,
}

impl RadiusResult {
    fn new(value: f64, method: Method, residual: f64, bracket: [f64; 2]) -> Self {
        RadiusResult {
            value,
            method,
            residual,
            bracket,
            hypotheses: Vec::new(),
        }
    }

    fn closed_form(value: f64, residual: f64) -> Self {
        Self::new(value, Method::ClosedForm, residual, [value, value])
    }

    fn check(mut self, name: impl Into<String>, ok: bool) -> Self {
        self.hypotheses.push(HypothesisCheck {
            name: name.into(),
            ok,
        });
        self
    }

    /// Whether every recorded condition holds.
    pub fn all_hold(&self) -> bool {
        self.hypotheses.iter().all(|h| h.ok)
    }
}

fn check_coefficient(a: f64) -> Result<()> {
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::Domain(format!(
            "initial coefficient modulus a must lie in (0, 1], got {a}"
        )));
    }
    Ok(())
}

fn check_radius(r: f64) -> Result<()> {
    if !(r >= 0.0 && r.is_finite()) {
        return Err(Error::Domain(format!(
            "radius must be finite and nonnegative, got {r}"
        )));
    }
    Ok(())
}

fn co_k_label(w: CoKWitness) -> &'static str {
    match w {
        CoKWitness::ProofBacked => "h2 co-K witness (proof-backed)",
        CoKWitness::Asserted => "h2 co-K witness (asserted)",
        CoKWitness::Missing => "h2 co-K witness (missing)",
    }
}

/// Unchecked closed form, written as
/// `r^{m+l} [c_m d_m a + (1 − a²) r Σ_{k≥0} c_{m+1+k} d_{m+1+k} (ar)ᵏ]`
/// so that neither `a^{−m}` nor negative powers of `r` appear.
fn closed_form_unchecked(pair: &ConvolutionPair, a: f64, r: f64) -> f64 {
    let m = pair.order();
    let (h1, h2) = (&pair.h1, &pair.h2);
    let lead = h1.coeff(m) * h2.coeff(m) * a;
    let tail = if a == 1.0 {
        0.0
    } else {
        (1.0 - a * a) * r * power_tail(m + 1, a * r, |n| h1.coeff(n) * h2.coeff(n))
    };
    r.powi((m as i64 + pair.l) as i32) * (lead + tail)
}

/// `m(r, a)` for `id_m → A^{m,l}_{h₁∗h₂}` under the closed-form hypotheses:
/// `cₙ > 0`, `r ≤ inf cₙ/c_{n+1}`, `a > r` (or `a = 1`) and a co-K witness
/// for `h₂` (proof-backed or asserted).
///
/// The extremal argument evaluates the coefficient estimate at `x = r/a`, so
/// the value is only known to be sharp for `r ≤ a · inf cₙ/c_{n+1}`. Past that
/// point (derivative kernels with `m ≥ 2` and `r` close to `a`) the true
/// supremum can be larger.
pub fn bombieri_value_thm1(pair: &ConvolutionPair, a: f64, r: f64) -> Result<f64> {
    check_coefficient(a)?;
    check_radius(r)?;
    if pair.h2.co_k() == CoKWitness::Missing {
        return Err(Error::hypothesis(format!(
            "kernel '{}' has no co-K witness; assert it to proceed",
            pair.h2.name()
        )));
    }
    if !pair.h1.positivity() {
        return Err(Error::hypothesis("c_n > 0 for all n >= m"));
    }
    if !(r < a || a == 1.0) {
        return Err(Error::hypothesis(format!("a > r (a = {a}, r = {r})")));
    }
    let inf = pair.h1.inf_ratio(crate::kernels::DEFAULT_HORIZON)?;
    if r > inf.value {
        return Err(Error::hypothesis(format!(
            "r <= inf c_n/c_(n+1) = {} (r = {r})",
            inf.value
        )));
    }
    Ok(closed_form_unchecked(pair, a, r))
}

/// Whether `m(·, 1) ≡ 1`, in which case radii at `a = 1` come from the
/// reduced equation `(m(r, a) − 1)/(1 − a) = 0` at `a = 1`.
fn degenerate_at_one(pair: &ConvolutionPair) -> bool {
    let m = pair.order();
    m as i64 + pair.l == 0 && pair.h1.coeff(m) * pair.h2.coeff(m) == 1.0
}

/// Radius `R(a)` of a convolution pair: the smallest root of `m(r, a) = 1`
/// on `(0, a)` from the closed form, by scan then bisection.
pub fn convolution_radius(pair: &ConvolutionPair, a: f64) -> Result<RadiusResult> {
    check_coefficient(a)?;
    if pair.h2.co_k() == CoKWitness::Missing {
        return Err(Error::hypothesis(format!(
            "kernel '{}' has no co-K witness; assert it to proceed",
            pair.h2.name()
        )));
    }
    if !pair.h1.positivity() {
        return Err(Error::hypothesis("c_n > 0 for all n >= m"));
    }
    let inf = pair.h1.inf_ratio(crate::kernels::DEFAULT_HORIZON)?;
    let m = pair.order();
    let reduced = a == 1.0 && degenerate_at_one(pair);
    let excess = |r: f64| {
        if reduced {
            let cd = |n: usize| pair.h1.coeff(n) * pair.h2.coeff(n);
            2.0 * r * power_tail(m + 1, r, cd) - 1.0
        } else {
            closed_form_unchecked(pair, a, r) - 1.0
        }
    };
    let hi = if a == 1.0 && !reduced {
        1.0
    } else {
        a.min(1.0 - 1e-12)
    };
    let (root, cell) = first_root(excess, 0.0, hi, SCAN_STEP)
        .map_err(|_| Error::hypothesis(format!("a > r: m(r, {a}) stays below 1 for r < {a}")))?;
    let residual = (closed_form_unchecked(pair, a, root) - 1.0).abs();
    let residual = if reduced {
        excess(root).abs()
    } else {
        residual
    };
    Ok(RadiusResult::new(root, Method::Bisection, residual, cell)
        .check("a > r", root < a || a == 1.0)
        .check(
            format!("r <= inf c_n/c_(n+1) = {:.10}", inf.value),
            root <= inf.value,
        )
        .check(co_k_label(pair.h2.co_k()), true))
}

/// Root of `m_fun(r, a) = 1` on `bracket`, with `a > r` recorded.
pub fn radius_with_coefficient(
    m_fun: impl Fn(f64, f64) -> f64,
    a: f64,
    bracket: [f64; 2],
) -> Result<RadiusResult> {
    let [lo, hi] = bracket;
    let f = |r: f64| m_fun(r, a) - 1.0;
    if f(lo) == 0.0 && f(hi) == 0.0 && f(0.5 * (lo + hi)) == 0.0 {
        return Err(Error::hypothesis(format!(
            "m(r, {a}) is identically 1 on the bracket; use the reduced equation"
        )));
    }
    let root = bisect(f, lo, hi)?;
    Ok(RadiusResult::new(
        root,
        Method::Bisection,
        f(root).abs(),
        [lo.min(hi), lo.max(hi)],
    )
    .check("a > r", root < a || a == 1.0))
}

/// `R_{id₀}(a) = 1/(1 + 2a)` for `1/2 < a ≤ 1`.
pub fn radius_id0(a: f64) -> Result<f64> {
    check_coefficient(a)?;
    if a <= 0.5 {
        return Err(Error::hypothesis(format!("a in (1/2, 1], got a = {a}")));
    }
    Ok(1.0 / (1.0 + 2.0 * a))
}

/// Bohr–Bombieri function of `id₀`: `1` up to `1/3`, then
/// `(3 − √(8(1 − r²)))/r` up to `1/√2`. Beyond that the value is unknown.
pub fn bombieri_id0(r: f64) -> Result<f64> {
    check_radius(r)?;
    if r > FRAC_1_SQRT_2 {
        return Err(Error::OpenProblem(format!(
            "m_id0(r) is an open problem for r > 1/sqrt(2), got r = {r}"
        )));
    }
    if r <= 1.0 / 3.0 {
        return Ok(1.0);
    }
    Ok((3.0 - (8.0 * (1.0 - r * r)).sqrt()) / r)
}

/// Upper end of the range where the Cesàro bound is known to hold: the root
/// of `2x = 3(1 − x) log(1/(1 − x))` in `(0, 1)`.
pub fn cesaro_bound_limit() -> Result<f64> {
    let f = |x: f64| 2.0 * x + 3.0 * (1.0 - x) * (-x).ln_1p();
    Ok(first_root(f, 0.01, 0.99, SCAN_STEP)?.0)
}

/// `(1/r) log(1/(1 − r))`, an upper bound for the Bohr–Bombieri function of
/// the Cesàro operator on `0 < r ≤` [`cesaro_bound_limit`].
pub fn cesaro_bombieri_bound(r: f64) -> Result<f64> {
    let limit = cesaro_bound_limit()?;
    if !(r > 0.0 && r <= limit) {
        return Err(Error::hypothesis(format!(
            "r in (0, {limit:.6}], got r = {r}"
        )));
    }
    Ok(-(-r).ln_1p() / r)
}

/// `R_{id_m → ∂ᵐ/m!} = 1 − (2/3)^{1/(m+1)}`.
pub fn radius_derivative_pair(m: usize) -> f64 {
    1.0 - (2.0f64 / 3.0).powf(1.0 / (m as f64 + 1.0))
}

/// `R_{id_m → ∂ᵐ/m!}(a) = (1/a)(1 − ((1+a)/(1+2a))^{1/(m+1)})`, valid when
/// `a² > 1 − ((1+a)/(1+2a))^{1/(m+1)}`.
pub fn radius_derivative_pair_with_a(m: usize, a: f64) -> Result<RadiusResult> {
    check_coefficient(a)?;
    let q = ((1.0 + a) / (1.0 + 2.0 * a)).powf(1.0 / (m as f64 + 1.0));
    if !(a * a > 1.0 - q) {
        return Err(Error::hypothesis(format!(
            "a^2 > 1 - ((1+a)/(1+2a))^(1/(m+1)) (a = {a}, m = {m})"
        )));
    }
    let r = (1.0 - q) / a;
    let pair = BuiltinPair::Derivative(m);
    let residual = if a == 1.0 {
        0.0
    } else {
        (pair.closed_form(r, a) - 1.0).abs()
    };
    Ok(RadiusResult::closed_form(r, residual)
        .check("a^2 > 1 - ((1+a)/(1+2a))^(1/(m+1))", true)
        .check("r <= 2/(2+m)", r <= 2.0 / (m as f64 + 2.0))
        .check("a > r", r < a || a == 1.0))
}

/// The root of `Li₂(r²) = 1`, a lower bound for `R_{∂→id₁}`.
pub fn radius_integral_lower() -> Result<f64> {
    bisect(|r| dilog(r * r).unwrap_or(f64::NAN) - 1.0, 0.0, 1.0)
}

/// `r(a) = (1/a)(1 + ((a²−1)/(2a²−1)) W(((1−2a²)/(a²−1))/e))`, the radius at
/// which the integral of the disc automorphism with `f′(0) = a` reaches
/// majorant 1. Defined for every `a ∈ (0, 1]`; the point `a = 1/√2` is a
/// removable singularity.
pub fn integral_curve(a: f64) -> Result<f64> {
    check_coefficient(a)?;
    if a == 1.0 {
        return Ok(1.0);
    }
    // with c = (2a² − 1)/(1 − a²) the radius is (1 − W(c/e)/c)/a
    let c = (2.0 * a * a - 1.0) / (1.0 - a * a);
    let w_over_c = if (2.0 * a * a - 1.0).abs() < 1e-6 {
        let y = c / E;
        (1.0 - y + 1.5 * y * y) / E
    } else {
        lambert_w(c / E)? / c
    };
    Ok((1.0 - w_over_c) / a)
}

/// `√(1 + W(−2/e²)/2)`: above it the curve [`integral_curve`] lies below the
/// diagonal `r = a` and equals the Bohr radius with coefficient `a`.
pub fn integral_threshold() -> Result<f64> {
    Ok((1.0 + lambert_w(-2.0 / (E * E))? / 2.0).sqrt())
}

/// Minimum of [`integral_curve`] over `(0.7, 0.95)`, an upper bound for
/// `R_{∂→id₁}`. Returns the minimizer and its value.
pub fn radius_integral_upper() -> Result<(f64, f64)> {
    let (lo, hi) = (0.7, 0.95);
    let curve = |a: f64| integral_curve(a).unwrap_or(f64::INFINITY);
    let steps = ((hi - lo) / SCAN_STEP).round() as usize;
    let best = (0..=steps)
        .map(|k| lo + k as f64 * SCAN_STEP)
        .min_by(|x, y| curve(*x).total_cmp(&curve(*y)))
        .expect("scan grid is nonempty");
    let (a_min, r_min) = golden_section(curve, best - SCAN_STEP, best + SCAN_STEP, 1e-10);
    Ok((r_min, a_min))
}

/// Both bounds on `R_{∂→id₁}` as one result: `value` is the upper bound and
/// `bracket` is `[lower, upper]`.
pub fn radius_integral_bounds() -> Result<RadiusResult> {
    let lower = radius_integral_lower()?;
    let (upper, a_min) = radius_integral_upper()?;
    let residual = (integral_curve(a_min)? - upper).abs();
    Ok(
        RadiusResult::new(upper, Method::Minimization, residual, [lower, upper])
            .check("two-sided bound only; the exact radius is not known", true)
            .check(
                "Li2(lower^2) = 1",
                (dilog(lower * lower)? - 1.0).abs() < 1e-12,
            ),
    )
}

/// `R_{∂→id₁}(a)` for `a` above [`integral_threshold`], from the Lambert W
/// closed form.
pub fn radius_integral_with_a(a: f64) -> Result<RadiusResult> {
    check_coefficient(a)?;
    let threshold = integral_threshold()?;
    if a <= threshold {
        return Err(Error::hypothesis(format!(
            "a in ({threshold:.6}..., 1], got a = {a}"
        )));
    }
    let r = integral_curve(a)?;
    let residual = (BuiltinPair::Integral.closed_form(r, a) - 1.0).abs();
    Ok(RadiusResult::closed_form(r, residual)
        .check(format!("a > {threshold:.10}"), true)
        .check("a >= r", a >= r))
}

/// `(1/a)(a/(1+2a))^{1/m}`, the root of the lacunary closed form
/// `a + (1/a − a)(ar)ᵐ/(1 − (ar)ᵐ) = 1`, valid when `a^{2m−1} > 1/(1+2a)`.
///
/// For `m = 1` this is `1/(1+2a)`. For `m ≥ 2` the closed form is the value
/// of the plain disc automorphism only; functions of the form
/// `z^{m+1}G(zᵐ)` reach larger majorants, so this radius is an upper bound
/// rather than the supremum-based radius.
pub fn radius_lacunary_with_a(m: usize, a: f64) -> Result<RadiusResult> {
    if m == 0 {
        return Err(Error::InvalidInput(
            "lacunary step must be at least 1".into(),
        ));
    }
    check_coefficient(a)?;
    if !(a.powi(2 * m as i32 - 1) > 1.0 / (1.0 + 2.0 * a)) {
        return Err(Error::hypothesis(format!(
            "a^(2m-1) > 1/(1+2a) (a = {a}, m = {m})"
        )));
    }
    let r = (a / (1.0 + 2.0 * a)).powf(1.0 / m as f64) / a;
    let residual = if a == 1.0 {
        0.0
    } else {
        (BuiltinPair::Lacunary(m).closed_form(r, a) - 1.0).abs()
    };
    Ok(RadiusResult::closed_form(r, residual)
        .check("a^(2m-1) > 1/(1+2a)", true)
        .check("a > r", r < a || a == 1.0))
}

/// Minimal positive root of `F(a, b, c; x) − 1 = 1/2`.
pub fn radius_hypergeometric(p: HypergeometricParams) -> Result<RadiusResult> {
    let kernel = crate::kernels::hypergeometric_kernel(p)?;
    if kernel.is_polynomial() {
        return Err(Error::NoRoot("F is constant, so |F - 1| = 0 < 1/2".into()));
    }
    let f = |x: f64| kernel.eval_from(x, 0) - 1.5;
    let found =
        first_root(f, 0.0, 0.999, SCAN_STEP).or_else(|_| first_root(f, 0.999, 1.0 - 1e-6, 1e-4));
    let (root, cell) = found.map_err(|_| {
        Error::NoRoot(format!(
            "F({}, {}, {}; x) - 1 stays below 1/2 on [0, 1)",
            p.a, p.b, p.c
        ))
    })?;
    Ok(RadiusResult::new(
        root,
        Method::Bisection,
        f(root).abs(),
        cell,
    ))
}

/// Minimal positive root of `φ₀(x) = (2/p) Σ_{n≥1} φₙ(x)`.
///
/// `phi(n, x)` gives `φₙ(x)` for `n ≤ horizon`; `tail(x)` bounds the
/// remainder `Σ_{n>horizon} φₙ(x)` and is added to the partial sum.
pub fn theorem_b_radius(
    phi: impl Fn(usize, f64) -> f64,
    horizon: usize,
    tail: impl Fn(f64) -> f64,
    p: f64,
) -> Result<RadiusResult> {
    if !(p > 0.0 && p <= 2.0) {
        return Err(Error::Domain(format!("p must lie in (0, 2], got {p}")));
    }
    if !(phi(0, 0.0) > 0.0) {
        return Err(Error::InvalidInput("phi_0(0) must be positive".into()));
    }
    let f = |x: f64| {
        let sum: f64 = (1..=horizon).map(|n| phi(n, x)).sum::<f64>() + tail(x);
        phi(0, x) - 2.0 / p * sum
    };
    let (root, cell) = first_root(f, 0.0, 1.0 - 1e-9, SCAN_STEP)?;
    Ok(RadiusResult::new(
        root,
        Method::Bisection,
        f(root).abs(),
        cell,
    ))
}

/// Upper bound `R_{A→id} ≤ 1/R_c(h)` from the radius of convergence. Polynomial kernels make the
/// bound meaningless and are rejected; entire kernels give `0`.
pub fn convergence_radius_bound(spec: &OperatorSpec) -> Result<Tagged> {
    let kernel = spec.kernel();
    if kernel.is_polynomial() {
        return Err(Error::NotApplicable(format!(
            "kernel '{}' is a polynomial; the bound is not applicable",
            kernel.name()
        )));
    }
    let rc = kernel.radius_of_convergence();
    Ok(Tagged {
        value: if rc.value.is_infinite() {
            0.0
        } else {
            1.0 / rc.value
        },
        exact: rc.exact,
    })
}

/// Root of `r^{4m} + r² = 1`.
///
/// This bounds `r^m M_r f` over `‖f‖_∞ ≤ 1` with `f` vanishing to order `m`.
/// It tends to 1 as `m → ∞` but is not a lower bound for `R_{S_{m,−m}→id}`:
/// there `f/z^m` need not vanish at the origin, and the Cauchy–Schwarz bound
/// becomes `r^{2m} + r² = 1` (see [`radius_to_identity_lower_bound`]).
pub fn shift_pair_lower_bound(m: usize) -> Result<f64> {
    if m == 0 {
        return Err(Error::InvalidInput("shift order must be at least 1".into()));
    }
    let k = 4 * m as i32;
    bisect(|r| r.powi(k) + r * r - 1.0, 0.0, 1.0)
}

/// A certified lower bound for `R_{T→id}` where `T = A^{m,−m}_h`.
///
/// The identity on `H₀` gives `1/3`; kernels with `m ≥ 1` use the root of
/// `Σ_{n≥m} r^{2n}/cₙ² = 1`, which follows from `Σ|bₙ|² ≤ ‖Tf‖²_∞` and
/// Cauchy–Schwarz. For the shift `S_{m,−m}` this is `r^{2m} + r² = 1`.
pub fn radius_to_identity_lower_bound(spec: &OperatorSpec) -> Result<RadiusResult> {
    let kernel = spec.kernel();
    let m = kernel.order();
    if spec.shift() != -(m as i64) {
        return Err(Error::NotApplicable(
            "only operators of the shape A^(m,-m) are covered".into(),
        ));
    }
    let geometric = (m..m + 64).all(|n| kernel.coeff(n) == 1.0) && kernel.name() == "geometric";
    if geometric {
        if m == 0 {
            return Ok(
                RadiusResult::closed_form(1.0 / 3.0, 0.0).check("classical Bohr radius", true)
            );
        }
        let f = |r: f64| r.powi(2 * m as i32) + r * r - 1.0;
        let r = bisect(f, 0.0, 1.0)?;
        return Ok(
            RadiusResult::new(r, Method::Bisection, f(r).abs(), [0.0, 1.0])
                .check("lower bound r^(2m) + r^2 = 1", true),
        );
    }
    if m == 0 || !kernel.positivity() {
        return Err(Error::NotApplicable(format!(
            "no certified radius for kernel '{}' with m = {m}",
            kernel.name()
        )));
    }
    let f = |r: f64| {
        let x = r * r;
        x.powi(m as i32) * power_tail(m, x, |n| kernel.coeff(n).powi(-2)) - 1.0
    };
    let hi = kernel.radius_of_convergence().value.min(1.0) * 0.9999;
    let root = bisect(f, 0.0, hi)?;
    Ok(
        RadiusResult::new(root, Method::Bisection, f(root).abs(), [0.0, hi])
            .check("lower bound sum r^(2n)/c_n^2 = 1", true),
    )
}

/// The convolution pairs with closed-form Bohr–Bombieri functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuiltinPair {
    /// `id₀ → id₀`.
    Id0,
    /// `id_m → ∂ᵐ/m!`.
    Derivative(usize),
    /// `id₀ → ∫`, equivalently `∂ → id₁`.
    Integral,
    /// `id → A_{1/(1−zᵐ)}`.
    Lacunary(usize),
}

impl BuiltinPair {
    pub fn name(&self) -> String {
        match self {
            BuiltinPair::Id0 => "id0".into(),
            BuiltinPair::Derivative(m) => format!("derivative(m={m})"),
            BuiltinPair::Integral => "integral".into(),
            BuiltinPair::Lacunary(m) => format!("lacunary(m={m})"),
        }
    }

    /// Kernels and shift realising the target operator.
    pub fn convolution(&self) -> ConvolutionPair {
        match self {
            BuiltinPair::Id0 => ConvolutionPair::identity(),
            BuiltinPair::Derivative(m) => ConvolutionPair::derivative(*m),
            BuiltinPair::Integral => ConvolutionPair::integral(),
            BuiltinPair::Lacunary(m) => {
                crate::kernels::lacunary_kernel(*m).expect("lacunary step is positive")
            }
        }
    }

    /// The explicit elementary form of `m(r, a)`; no validity checks.
    pub fn closed_form(&self, r: f64, a: f64) -> f64 {
        let x = a * r;
        let k = 1.0 / a - a;
        match self {
            BuiltinPair::Id0 => a + (1.0 - a * a) * r / (1.0 - x),
            BuiltinPair::Derivative(m) => a + k * ((1.0 - x).powi(-(*m as i32) - 1) - 1.0),
            BuiltinPair::Integral => {
                if x == 0.0 {
                    return x;
                }
                x + k * r * (-(-x).ln_1p() / x - 1.0)
            }
            BuiltinPair::Lacunary(m) => {
                let p = x.powi(*m as i32);
                a + k * p / (1.0 - p)
            }
        }
    }

    /// Vanishing order of the source space.
    pub fn order(&self) -> usize {
        self.convolution().order()
    }

    /// The specialised closed-form radius with initial coefficient `a`.
    pub fn radius_with_a(&self, a: f64) -> Result<RadiusResult> {
        match self {
            BuiltinPair::Id0 => {
                let r = radius_id0(a)?;
                let residual = if a == 1.0 {
                    0.0
                } else {
                    (self.closed_form(r, a) - 1.0).abs()
                };
                Ok(RadiusResult::closed_form(r, residual)
                    .check("a > 1/2", true)
                    .check("a > r", r < a))
            }
            BuiltinPair::Derivative(m) => radius_derivative_pair_with_a(*m, a),
            BuiltinPair::Integral => radius_integral_with_a(a),
            BuiltinPair::Lacunary(m) => radius_lacunary_with_a(*m, a),
        }
    }

    /// The radius without a fixed coefficient, where one is known.
    pub fn radius(&self) -> Result<RadiusResult> {
        match self {
            BuiltinPair::Id0 => Ok(RadiusResult::closed_form(1.0 / 3.0, 0.0)),
            BuiltinPair::Derivative(m) => {
                let r = radius_derivative_pair(*m);
                let excess =
                    2.0 * r * power_tail(m + 1, r, |n| crate::kernels::binomial(n, *m)) - 1.0;
                Ok(RadiusResult::closed_form(r, excess.abs()))
            }
            BuiltinPair::Integral => radius_integral_bounds(),
            BuiltinPair::Lacunary(1) => Ok(RadiusResult::closed_form(1.0 / 3.0, 0.0)),
            BuiltinPair::Lacunary(m) => Err(Error::NotApplicable(format!(
                "no closed form for the lacunary radius with m = {m}; pass --a"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::Kernel;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::SQRT_2;

    #[test]
    fn id0_formula_and_endpoints() {
        assert_abs_diff_eq!(radius_id0(0.75).unwrap(), 0.4, epsilon = 1e-15);
        assert_abs_diff_eq!(radius_id0(1.0).unwrap(), 1.0 / 3.0, epsilon = 1e-15);
        assert!(matches!(radius_id0(0.5), Err(Error::Hypothesis { .. })));
        let pair = BuiltinPair::Id0.convolution();
        assert_abs_diff_eq!(
            bombieri_value_thm1(&pair, 0.75, 0.4).unwrap(),
            1.0,
            epsilon = 1e-14
        );
    }

    #[test]
    fn bombieri_id0_regimes() {
        assert_eq!(bombieri_id0(0.2).unwrap(), 1.0);
        assert_abs_diff_eq!(
            bombieri_id0(1.0 / 3.0 + 1e-15).unwrap(),
            1.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(bombieri_id0(1.0 / SQRT_2).unwrap(), SQRT_2, epsilon = 1e-12);
        assert!(matches!(bombieri_id0(0.8), Err(Error::OpenProblem(_))));
    }

    #[test]
    fn general_closed_form_matches_elementary_forms() {
        let cases = [
            BuiltinPair::Id0,
            BuiltinPair::Derivative(1),
            BuiltinPair::Derivative(3),
            BuiltinPair::Integral,
            BuiltinPair::Lacunary(1),
            BuiltinPair::Lacunary(2),
            BuiltinPair::Lacunary(3),
        ];
        for pair in cases {
            let conv = pair.convolution();
            for (r, a) in [(0.1, 0.5), (0.2, 0.9), (0.05, 0.3), (0.3, 0.99)] {
                let v = closed_form_unchecked(&conv, a, r);
                assert_abs_diff_eq!(v, pair.closed_form(r, a), epsilon = 1e-13);
            }
        }
    }

    #[test]
    fn general_closed_form_hypotheses() {
        let pair = BuiltinPair::Derivative(1).convolution();
        assert!(matches!(
            bombieri_value_thm1(&pair, 0.3, 0.5),
            Err(Error::Hypothesis { .. })
        ));
        // a = 1 degenerates to the leading term
        assert_eq!(bombieri_value_thm1(&pair, 1.0, 0.5).unwrap(), 1.0);
        let int = BuiltinPair::Integral.convolution();
        assert_eq!(bombieri_value_thm1(&int, 1.0, 0.4).unwrap(), 0.4);
        let plain = ConvolutionPair::new(
            crate::kernels::derivative_kernel(1),
            Kernel::custom("plain", 1, None, |_| 1.0),
            -1,
        )
        .unwrap();
        assert!(bombieri_value_thm1(&plain, 0.9, 0.1).is_err());
        let asserted =
            ConvolutionPair::new(plain.h1.clone(), plain.h2.clone().assert_co_k(), -1).unwrap();
        assert!(bombieri_value_thm1(&asserted, 0.9, 0.1).is_ok());
        let radius = convolution_radius(&asserted, 0.9).unwrap();
        assert!(radius
            .hypotheses
            .iter()
            .any(|h| h.name.contains("asserted")));
    }

    #[test]
    fn convolution_radius_agrees_with_closed_forms() {
        for a in [0.6, 0.75, 0.9, 1.0] {
            let r = convolution_radius(&BuiltinPair::Id0.convolution(), a).unwrap();
            assert_abs_diff_eq!(r.value, 1.0 / (1.0 + 2.0 * a), epsilon = 1e-13);
            assert!(r.residual < 1e-12);
        }
        for m in 0..4 {
            let r = convolution_radius(&BuiltinPair::Derivative(m).convolution(), 1.0).unwrap();
            assert_abs_diff_eq!(r.value, radius_derivative_pair(m), epsilon = 1e-13);
        }
    }

    #[test]
    fn derivative_with_a() {
        let r = radius_derivative_pair_with_a(0, 0.8).unwrap();
        assert_abs_diff_eq!(r.value, 1.0 / 2.6, epsilon = 1e-14);
        let r = radius_derivative_pair_with_a(1, 1.0).unwrap();
        assert_abs_diff_eq!(r.value, 1.0 - (2.0f64 / 3.0).sqrt(), epsilon = 1e-15);
        assert!(radius_derivative_pair_with_a(1, 0.1).is_err());
    }

    #[test]
    fn integral_curve_removable_point() {
        let a0 = 1.0 / SQRT_2;
        let mid = integral_curve(a0).unwrap();
        let left = integral_curve(a0 - 1e-5).unwrap();
        let right = integral_curve(a0 + 1e-5).unwrap();
        assert!((mid - left).abs() < 1e-4 && (mid - right).abs() < 1e-4);
        // at the removable point x = ar = 1 − 1/e
        assert_abs_diff_eq!(mid * a0, 1.0 - 1.0 / E, epsilon = 1e-9);
    }

    #[test]
    fn integral_curve_solves_the_majorant_equation() {
        for a in [0.3, 0.6, 0.8, 0.95] {
            let r = integral_curve(a).unwrap();
            assert_abs_diff_eq!(
                BuiltinPair::Integral.closed_form(r, a),
                1.0,
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn integral_validity_gate() {
        assert!(matches!(
            radius_integral_with_a(0.5),
            Err(Error::Hypothesis { .. })
        ));
        let r = radius_integral_with_a(1.0).unwrap();
        assert_eq!(r.value, 1.0);
    }

    #[test]
    fn lacunary_reduces_for_m1() {
        let r = radius_lacunary_with_a(1, 0.8).unwrap();
        assert_abs_diff_eq!(r.value, 1.0 / 2.6, epsilon = 1e-15);
        assert!(radius_lacunary_with_a(2, 0.5).is_err());
        assert!(radius_lacunary_with_a(0, 0.9).is_err());
    }

    #[test]
    fn profile_root_and_hypergeometric() {
        let geo = theorem_b_radius(|n, x| x.powi(n as i32), 0, |x| x / (1.0 - x), 1.0).unwrap();
        assert_abs_diff_eq!(geo.value, 1.0 / 3.0, epsilon = 1e-15);
        let half =
            theorem_b_radius(|n, x| x.powi(n as i32), 50, |x| x.powi(51) / (1.0 - x), 2.0).unwrap();
        assert_abs_diff_eq!(half.value, 0.5, epsilon = 1e-15);
        assert!(matches!(
            theorem_b_radius(|n, _| if n == 0 { 1.0 } else { 0.0 }, 10, |_| 0.0, 1.0),
            Err(Error::NoRoot(_))
        ));
        let h = radius_hypergeometric(HypergeometricParams::new(1.0, 1.0, 1.0).unwrap()).unwrap();
        assert_abs_diff_eq!(h.value, 1.0 / 3.0, epsilon = 1e-14);
        let constant = HypergeometricParams::new(0.0, 1.0, 1.0).unwrap();
        assert!(matches!(
            radius_hypergeometric(constant),
            Err(Error::NoRoot(_))
        ));
    }

    #[test]
    fn cesaro_bound() {
        assert_abs_diff_eq!(
            cesaro_bombieri_bound(0.5).unwrap(),
            2.0 * 2f64.ln(),
            epsilon = 1e-15
        );
        assert!(cesaro_bombieri_bound(0.6).is_err());
        assert_abs_diff_eq!(cesaro_bombieri_bound(1e-9).unwrap(), 1.0, epsilon = 1e-8);
    }

    #[test]
    fn shift_pair_m1() {
        let r = shift_pair_lower_bound(1).unwrap();
        assert_abs_diff_eq!(r * r, (5f64.sqrt() - 1.0) / 2.0, epsilon = 1e-15);
    }

    #[test]
    fn cauchy_schwarz_bound_for_first_derivative() {
        let r = radius_to_identity_lower_bound(&OperatorSpec::derivative(1)).unwrap();
        assert_abs_diff_eq!(dilog(r.value * r.value).unwrap(), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(r.value, radius_integral_lower().unwrap(), epsilon = 1e-12);
        let id = radius_to_identity_lower_bound(&OperatorSpec::identity(0)).unwrap();
        assert_eq!(id.value, 1.0 / 3.0);
        let shift =
            radius_to_identity_lower_bound(&OperatorSpec::new(Kernel::geometric(1), -1).unwrap())
                .unwrap();
        assert_abs_diff_eq!(shift.value, 0.5f64.sqrt(), epsilon = 1e-12);
    }
}
