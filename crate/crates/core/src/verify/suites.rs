use std::collections::BTreeMap;
use std::str::FromStr;

use num_complex::Complex64;
use rand::Rng;
use serde_json::{json, Value};

use super::checks::{
    automorphism_value, check_goluzin, check_lemma, check_majorization_majorant,
    check_subordination_majorant, empirical_bombieri, empirical_bombieri_grid, lacunary_sharpness,
    majorization_sharpness, subordination_sharpness, Comparison, Sharpness, SLACK,
};
use super::sampler::{
    random_in_disk, random_polynomial, random_schwarz_with, sample_rng, BlaschkeSample, MAX_DEGREE,
};
use super::{Report, SchwarzMap, SelfMap};
use crate::bohr::{bombieri_value_thm1, radius_to_identity_lower_bound, BuiltinPair};
use crate::error::{Error, Result};
use crate::kernels::{CoKWitness, Kernel, OperatorSpec, DEFAULT_HORIZON};
use crate::series::DEFAULT_ORDER;

/// Tolerance of the closed form against the sampled supremum.
pub const ORACLE_TOLERANCE: f64 = 1e-6;

const GRID: usize = 10;
const SHARPNESS_GRID: usize = 2000;

/// Named groups of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Thm1Oracle,
    Lemma,
    Goluzin,
    Thm8,
    Thm9,
    Sharpness,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "thm1-oracle" => Suite::Thm1Oracle,
            "lemma" => Suite::Lemma,
            "goluzin" => Suite::Goluzin,
            "thm8" => Suite::Thm8,
            "thm9" => Suite::Thm9,
            "sharpness" => Suite::Sharpness,
            "all" => Suite::All,
            other => {
                return Err(Error::InvalidInput(format!(
                    "unknown suite '{other}' (expected thm1-oracle, lemma, goluzin, thm8, thm9, sharpness or all)"
                )))
            }
        })
    }
}

/// Sample counts, seed, truncation order, oracle tolerance and an optional
/// pair filter.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub samples: usize,
    pub seed: u64,
    pub order: usize,
    pub tolerance: f64,
    pub pair: Option<BuiltinPair>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            samples: 1000,
            seed: 0,
            order: DEFAULT_ORDER,
            tolerance: ORACLE_TOLERANCE,
            pair: None,
        }
    }
}

impl SuiteConfig {
    fn selected(&self, pairs: &[BuiltinPair]) -> Vec<BuiltinPair> {
        match self.pair {
            Some(p) => pairs.iter().copied().filter(|q| *q == p).collect(),
            None => pairs.to_vec(),
        }
    }
}

/// Runs a suite and returns one report per check.
pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Result<Vec<Report>> {
    match suite {
        Suite::Thm1Oracle => closed_form_oracle(config),
        Suite::Lemma => lemma(config),
        Suite::Goluzin => goluzin(config),
        Suite::Thm8 => comparison_suite(config, false),
        Suite::Thm9 => comparison_suite(config, true),
        Suite::Sharpness => sharpness(config),
        Suite::All => {
            let mut out = Vec::new();
            for s in [
                Suite::Thm1Oracle,
                Suite::Lemma,
                Suite::Goluzin,
                Suite::Thm8,
                Suite::Thm9,
                Suite::Sharpness,
            ] {
                out.extend(run_suite(s, config)?);
            }
            Ok(out)
        }
    }
}

/// Pairs with a closed-form Bohr–Bombieri function.
pub fn builtin_pairs() -> Vec<BuiltinPair> {
    let mut pairs = vec![BuiltinPair::Id0];
    pairs.extend((1..=3).map(BuiltinPair::Derivative));
    pairs.push(BuiltinPair::Integral);
    pairs.extend((1..=3).map(BuiltinPair::Lacunary));
    pairs
}

fn proof_backed(pair: &BuiltinPair) -> bool {
    pair.convolution().h2.co_k() == CoKWitness::ProofBacked
}

fn params(entries: &[(&str, Value)]) -> BTreeMap<String, Value> {
    entries
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

/// The 10×10 grid `a ∈ {0.095, …, 0.95}`, `r = (j+1)/11 · a · min(1, inf ratio)`.
pub fn validity_grid(pair: &BuiltinPair) -> Vec<(f64, Vec<f64>)> {
    let inf = pair
        .convolution()
        .h1
        .inf_ratio(DEFAULT_HORIZON)
        .map(|t| t.value)
        .unwrap_or(1.0);
    (1..=GRID)
        .map(|k| {
            let a = 0.095 * k as f64;
            let top = a * inf.min(1.0);
            let rs = (1..=GRID)
                .map(|j| j as f64 / (GRID + 1) as f64 * top)
                .collect();
            (a, rs)
        })
        .collect()
}

fn closed_form_oracle(config: &SuiteConfig) -> Result<Vec<Report>> {
    let mut reports = Vec::new();
    for pair in config.selected(&builtin_pairs()) {
        let conv = pair.convolution();
        let t1 = conv.source();
        let t2 = conv.target();
        let mut worst_excess = f64::INFINITY;
        let mut worst_at = (0.0, 0.0, 0usize);
        let mut worst_attain = 0.0f64;
        let mut attain_at = (0.0, 0.0);
        for (a, rs) in validity_grid(&pair) {
            let empirical = empirical_bombieri_grid(
                &t1,
                &t2,
                &rs,
                Some(a),
                config.samples,
                config.seed,
                config.order,
            )?;
            for (r, e) in rs.iter().zip(&empirical) {
                let closed = bombieri_value_thm1(&conv, a, *r)?;
                let margin = closed - e.value;
                if margin < worst_excess {
                    worst_excess = margin;
                    worst_at = (*r, a, e.best_index);
                }
                let attain = (automorphism_value(&t2, *r, a, config.order)? - closed).abs();
                if attain > worst_attain {
                    worst_attain = attain;
                    attain_at = (*r, a);
                }
            }
        }
        let co_k = format!("{:?}", conv.h2.co_k()).to_lowercase();
        reports.push(Report {
            check: format!("thm1-oracle/{}", pair.name()),
            params: params(&[
                ("grid", json!("10x10")),
                ("tolerance", json!(config.tolerance)),
                ("co_k", json!(co_k)),
                ("worst_r", json!(worst_at.0)),
                ("worst_a", json!(worst_at.1)),
                ("worst_sample", json!(worst_at.2)),
            ]),
            samples: config.samples * GRID,
            worst_margin: worst_excess,
            holds: worst_excess >= -config.tolerance,
        });
        reports.push(Report {
            check: format!("thm1-attainment/{}", pair.name()),
            params: params(&[
                ("grid", json!("10x10")),
                ("tolerance", json!(config.tolerance)),
                ("worst_r", json!(attain_at.0)),
                ("worst_a", json!(attain_at.1)),
            ]),
            samples: GRID * GRID,
            worst_margin: -worst_attain,
            holds: worst_attain <= config.tolerance,
        });
    }
    Ok(reports)
}

struct Tally {
    worst: f64,
    worst_index: usize,
    failures: usize,
}

impl Tally {
    fn new() -> Self {
        Tally {
            worst: f64::INFINITY,
            worst_index: 0,
            failures: 0,
        }
    }

    fn add(&mut self, index: usize, c: Comparison) {
        if !c.holds() {
            self.failures += 1;
        }
        if c.margin() < self.worst {
            self.worst = c.margin();
            self.worst_index = index;
        }
    }

    fn report(self, check: String, samples: usize, mut extra: BTreeMap<String, Value>) -> Report {
        extra.insert("slack".into(), json!(SLACK));
        extra.insert("failures".into(), json!(self.failures));
        extra.insert("worst_sample".into(), json!(self.worst_index));
        Report {
            check,
            params: extra,
            samples,
            worst_margin: self.worst,
            holds: self.failures == 0,
        }
    }
}

fn random_inner(rng: &mut impl Rng, order: usize) -> crate::series::TruncatedSeries {
    let alpha = random_in_disk(rng, 1.0);
    BlaschkeSample::random(rng, 1).inner_through(alpha, order)
}

fn lemma(config: &SuiteConfig) -> Result<Vec<Report>> {
    let pairs: Vec<BuiltinPair> = builtin_pairs().into_iter().filter(proof_backed).collect();
    let mut reports = Vec::new();
    for pair in config.selected(&pairs) {
        let conv = pair.convolution();
        let m = conv.order();
        let x_max = conv.h1.inf_ratio(DEFAULT_HORIZON)?.value.min(0.99);
        let mut tally = Tally::new();
        for i in 0..config.samples {
            let mut rng = sample_rng(config.seed, i as u64);
            let t: f64 = 1.0 - rng.gen::<f64>();
            let phi = random_inner(&mut rng, config.order - m);
            let f = phi
                .shift_up(m)
                .truncate(config.order)
                .scale(Complex64::new(t, 0.0));
            let x = rng.gen::<f64>() * x_max;
            tally.add(i, check_lemma(&conv, &SelfMap::trusted(f), x)?);
        }
        reports.push(tally.report(
            format!("lemma/{}", pair.name()),
            config.samples,
            params(&[("x_max", json!(x_max))]),
        ));
    }
    Ok(reports)
}

fn goluzin(config: &SuiteConfig) -> Result<Vec<Report>> {
    let pairs: Vec<BuiltinPair> = builtin_pairs()
        .into_iter()
        .filter(|p| p.convolution().h2.positivity())
        .collect();
    let mut tally = Tally::new();
    for i in 0..config.samples {
        let mut rng = sample_rng(config.seed, i as u64);
        let pair = pairs[i % pairs.len()].convolution();
        let m = pair.order();
        let inf = pair.h1.inf_ratio(DEFAULT_HORIZON)?.value.min(1.0);
        let x = rng.gen::<f64>() * inf;
        let mut p = 1.0;
        let lambda: Vec<f64> = (0..=config.order)
            .map(|n| {
                let v = pair.h1.coeff(n + m) * pair.h2.coeff(n + m) * p;
                p *= x;
                v
            })
            .collect();
        let g = random_polynomial(&mut rng, 0, config.order);
        let degree = rng.gen_range(0..=MAX_DEGREE);
        let omega = SchwarzMap::trusted(random_schwarz_with(&mut rng, degree, config.order));
        tally.add(i, check_goluzin(&g, &omega, &lambda)?);
    }
    Ok(vec![tally.report(
        "goluzin".into(),
        config.samples,
        BTreeMap::new(),
    )])
}

/// Operators `A^{m,−m}_h` with nondecreasing coefficients and a certified
/// radius `R_{T→id}`.
pub fn comparison_operators() -> Vec<(String, OperatorSpec)> {
    let mut ops = vec![("id0".to_string(), OperatorSpec::identity(0))];
    for m in 1..=3 {
        ops.push((format!("derivative(m={m})"), OperatorSpec::derivative(m)));
    }
    for m in 1..=2 {
        let shift = OperatorSpec::new(Kernel::geometric(m), -(m as i64)).expect("m + l = 0");
        ops.push((format!("shift(m={m})"), shift));
    }
    ops
}

fn comparison_suite(config: &SuiteConfig, majorization: bool) -> Result<Vec<Report>> {
    let name = if majorization { "thm9" } else { "thm8" };
    let mut reports = Vec::new();
    for (label, spec) in comparison_operators() {
        let radius = radius_to_identity_lower_bound(&spec)?.value;
        let r = 0.95 * radius;
        let m = spec.order();
        let mut tally = Tally::new();
        for i in 0..config.samples {
            let mut rng = sample_rng(config.seed, i as u64);
            let g = random_polynomial(&mut rng, m, config.order);
            let c = if majorization {
                let phi = {
                    let alpha = random_in_disk(&mut rng, 1.0);
                    BlaschkeSample::random(&mut rng, 0).inner_through(alpha, config.order)
                };
                check_majorization_majorant(&spec, &g, &SelfMap::trusted(phi), r)?
            } else {
                let degree = rng.gen_range(0..=MAX_DEGREE);
                let omega = random_schwarz_with(&mut rng, degree, config.order);
                check_subordination_majorant(&spec, &g, &SchwarzMap::trusted(omega), r)?
            };
            tally.add(i, c);
        }
        reports.push(tally.report(
            format!("{name}/{label}"),
            config.samples,
            params(&[("r", json!(r)), ("radius", json!(radius))]),
        ));
    }
    Ok(reports)
}

fn sharpness_report(check: &str, r: f64, s: Sharpness, expect_violation: bool) -> Report {
    Report {
        check: check.into(),
        params: params(&[
            ("r", json!(r)),
            ("a", json!(s.a)),
            ("violation", json!(s.violation)),
            ("threshold", json!(super::SHARPNESS_THRESHOLD)),
        ]),
        samples: s.samples,
        worst_margin: -s.violation,
        holds: if expect_violation {
            s.found()
        } else {
            s.violation <= SLACK
        },
    }
}

fn sharpness(config: &SuiteConfig) -> Result<Vec<Report>> {
    let mut reports = Vec::new();
    let want = |p: BuiltinPair| config.pair.is_none() || config.pair == Some(p);
    if want(BuiltinPair::Id0) {
        let id = OperatorSpec::identity(0);
        let r0 = 1.0 / 3.0;
        let above = r0 + 0.01;
        reports.push(sharpness_report(
            "sharpness/thm9/id0/at-radius",
            r0,
            majorization_sharpness(&id, r0, SHARPNESS_GRID, config.order)?,
            false,
        ));
        reports.push(sharpness_report(
            "sharpness/thm9/id0/above-radius",
            above,
            majorization_sharpness(&id, above, SHARPNESS_GRID, config.order)?,
            true,
        ));
        reports.push(sharpness_report(
            "sharpness/thm8/id0/above-radius",
            above,
            subordination_sharpness(&id, above, SHARPNESS_GRID, config.order)?,
            true,
        ));
    }
    if want(BuiltinPair::Lacunary(2)) {
        let r0 = 1.0 / 3f64.sqrt();
        let below = r0 - 0.005;
        let above = r0 + 0.005;
        let id = OperatorSpec::identity(0);
        let selector = OperatorSpec::new(Kernel::lacunary_selector(2)?, 0)?;
        let empirical = empirical_bombieri(
            &id,
            &selector,
            below,
            None,
            config.samples,
            config.seed,
            config.order,
        )?;
        reports.push(Report {
            check: "sharpness/lacunary(m=2)/below-radius".into(),
            params: params(&[("r", json!(below)), ("empirical", json!(empirical))]),
            samples: config.samples,
            worst_margin: 1.0 - empirical,
            holds: empirical <= 1.0 + SLACK,
        });
        reports.push(sharpness_report(
            "sharpness/lacunary(m=2)/above-radius",
            above,
            lacunary_sharpness(2, above, SHARPNESS_GRID, config.order)?,
            true,
        ));
    }
    Ok(reports)
}
