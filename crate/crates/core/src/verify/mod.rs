//! Independent numerical oracles for the closed forms.
//!
//! Empirical Bohr–Bombieri values come from seeded samples of functions
//! with sup-norm exactly one (Blaschke products composed with disc
//! automorphisms), so every empirical supremum is a certified lower bound up
//! to truncation, which only lowers it further. The inequality checkers take
//! self-maps of the disk wrapped in [`SelfMap`] / [`SchwarzMap`].

mod checks;
mod sampler;
mod suites;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernels::OperatorSpec;
use crate::series::TruncatedSeries;

pub use checks::{
    automorphism_value, check_goluzin, check_lemma, check_majorization_majorant,
    check_subordination_majorant, empirical_bombieri, empirical_bombieri_grid, lacunary_sharpness,
    majorization_sharpness, operator_majorant, subordination_sharpness, Comparison, EmpiricalValue,
    Sharpness, SHARPNESS_THRESHOLD, SLACK,
};
pub use sampler::{
    random_in_disk, random_polynomial, random_schwarz, sample_rng, BlaschkeSample, MAX_DEGREE,
};
pub use suites::{
    builtin_pairs, comparison_operators, run_suite, validity_grid, Suite, SuiteConfig,
    ORACLE_TOLERANCE,
};

/// Grid used when validating user-supplied maps.
pub const VALIDATION_GRID: usize = 4096;

/// Tolerance on the estimated sup-norm of a user-supplied map.
pub const NORM_SLACK: f64 = 1e-6;

/// Outcome of a verification check, serialized as
/// `{check, params, samples, worst_margin, holds}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub samples: usize,
    /// Smallest `rhs − lhs` over all samples (negative when violated).
    pub worst_margin: f64,
    pub holds: bool,
}

/// An analytic self-map of the disk, `‖φ‖_∞ ≤ 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct SelfMap(TruncatedSeries);

impl SelfMap {
    /// Accepts the series when its estimated sup-norm is at most `1 + 1e−6`.
    pub fn new(series: TruncatedSeries) -> Result<Self> {
        let norm = series.sup_norm_estimate(VALIDATION_GRID)?;
        if norm > 1.0 + NORM_SLACK {
            return Err(Error::InvalidInput(format!(
                "sup-norm estimate {norm} exceeds 1"
            )));
        }
        Ok(SelfMap(series))
    }

    /// For series known to be self-maps by construction.
    pub(crate) fn trusted(series: TruncatedSeries) -> Self {
        SelfMap(series)
    }

    pub fn series(&self) -> &TruncatedSeries {
        &self.0
    }
}

/// A Schwarz function: a self-map of the disk fixing the origin.
#[derive(Clone, Debug, PartialEq)]
pub struct SchwarzMap(TruncatedSeries);

impl SchwarzMap {
    pub fn new(series: TruncatedSeries) -> Result<Self> {
        if series.coeff(0).norm() > 1e-15 {
            return Err(Error::InvalidInput(format!(
                "a Schwarz function vanishes at 0, got {}",
                series.coeff(0)
            )));
        }
        Ok(SchwarzMap(SelfMap::new(series)?.0))
    }

    pub(crate) fn trusted(series: TruncatedSeries) -> Self {
        SchwarzMap(series)
    }

    /// Wraps a sample of [`random_schwarz`], which is a Schwarz function by
    /// construction.
    pub fn random(seed: u64, degree: usize, order: usize) -> Self {
        SchwarzMap(random_schwarz(seed, degree, order))
    }

    pub fn series(&self) -> &TruncatedSeries {
        &self.0
    }
}

/// `T⁻¹g` for `T = A^{m,l}_h`: coefficient `n` is `g_{n+l}/cₙ`.
pub fn inverse_operator(spec: &OperatorSpec, g: &TruncatedSeries) -> Result<TruncatedSeries> {
    spec.invert(g)
}
