//! Command-line front end: `radius`, `bombieri`, `verify` and `sweep`.
//!
//! [`run`] parses arguments and returns the exit code and both output streams,
//! so the binary is a thin wrapper and the behaviour is testable in-process.
//!
//! | code | outcome |
//! |------|---------|
//! | 0 | success |
//! | 1 | malformed arguments |
//! | 2 | hypothesis, domain, open problem or not applicable |
//! | 3 | no root |
//! | 4 | a verification check failed |
//! | 5 | I/O failure |

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::bohr::{
    bombieri_id0, bombieri_value_thm1, cesaro_bombieri_bound, convolution_radius, integral_curve,
    radius_hypergeometric, BuiltinPair, RadiusResult,
};
use crate::error::Error;
use crate::kernels::{hypergeometric_kernel, CoKWitness, ConvolutionPair, Kernel, DEFAULT_HORIZON};
use crate::series::{DEFAULT_ORDER, ORDER_ENV};
use crate::specfun::HypergeometricParams;
use crate::verify::{run_suite, Report, Suite, SuiteConfig, ORACLE_TOLERANCE};

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Verify(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Lib(e) => e.exit_code(),
            CliError::Usage(_) => 1,
            CliError::Verify(_) => 4,
            CliError::Io(_) => 5,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "bohr",
    version,
    about = "Bohr radii and Bohr-Bombieri functions of convolution operators"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Truncation order of sampled series.
    #[arg(long, global = true, env = ORDER_ENV, default_value_t = DEFAULT_ORDER)]
    order: usize,
    /// Tolerance of the closed form against sampled suprema.
    #[arg(long, global = true, default_value_t = ORACLE_TOLERANCE)]
    tol: f64,
    /// Seed of the sampler.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Samples per check.
    #[arg(long, global = true, default_value_t = 1000)]
    samples: usize,
    /// Emit JSON (default except for `sweep`).
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV (default for `sweep`).
    #[arg(long, global = true)]
    csv: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bohr radius of a pair, optionally with fixed |a_m| = a.
    Radius(RadiusArgs),
    /// Bohr-Bombieri function m(r) or m(r, a).
    Bombieri(BombieriArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Tabulate r(a) over a grid of a.
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PairName {
    Id0,
    Derivative,
    Integral,
    Lacunary,
    Hypergeometric,
    Cesaro,
}

#[derive(Args, Debug)]
struct PairArgs {
    #[arg(long, value_enum)]
    pair: PairName,
    /// Order of the derivative or step of the lacunary kernel.
    #[arg(long, default_value_t = 1)]
    m: usize,
    /// Hypergeometric parameters `a,b,c`.
    #[arg(long, default_value = "1,1,1")]
    params: String,
}

#[derive(Args, Debug)]
struct RadiusArgs {
    #[command(flatten)]
    pair: PairArgs,
    #[arg(long)]
    a: Option<f64>,
}

#[derive(Args, Debug)]
struct BombieriArgs {
    #[command(flatten)]
    pair: PairArgs,
    #[arg(long)]
    r: f64,
    #[arg(long)]
    a: Option<f64>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// thm1-oracle, lemma, goluzin, thm8, thm9, sharpness or all.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, value_enum)]
    pair: Option<PairName>,
    #[arg(long, default_value_t = 1)]
    m: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Quantity {
    #[value(name = "id0")]
    Id0,
    #[value(name = "integral_with_a")]
    IntegralWithA,
    #[value(name = "derivative_with_a")]
    DerivativeWithA,
    #[value(name = "lacunary")]
    Lacunary,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long, value_enum)]
    quantity: Quantity,
    #[arg(long, default_value_t = 1)]
    m: usize,
    #[arg(long)]
    start: f64,
    #[arg(long)]
    stop: f64,
    #[arg(long)]
    count: usize,
    /// Output file; standard output when absent.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let mut stdout = String::new();
    match dispatch(&cli, &mut stdout) {
        Ok(()) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout,
            stderr: format!("error: {e}\n"),
        },
    }
}

fn dispatch(cli: &Cli, out: &mut String) -> Result<(), CliError> {
    let g = &cli.global;
    match &cli.command {
        Command::Radius(args) => radius(args, format(g, Format::Json), out),
        Command::Bombieri(args) => bombieri(args, format(g, Format::Json), out),
        Command::Verify(args) => verify(args, g, out),
        Command::Sweep(args) => sweep(args, format(g, Format::Csv), out),
    }
}

fn format(g: &Global, default: Format) -> Format {
    if g.json {
        Format::Json
    } else if g.csv {
        Format::Csv
    } else {
        default
    }
}

/// Rounds to 10 significant digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.9e}").parse().expect("formatted float parses")
}

fn round_value(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = round_sig(n.as_f64().expect("f64 number"));
            serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(round_value).collect()),
        Value::Object(map) => {
            Value::Object(map.into_iter().map(|(k, v)| (k, round_value(v))).collect())
        }
        other => other,
    }
}

/// Serializes with sorted keys and numbers rounded to 10 significant digits.
/// Parsing the output and serializing it again reproduces it byte for byte.
pub fn canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable output");
    serde_json::to_string(&round_value(v)).expect("json values serialize")
}

fn fmt_num(x: f64) -> String {
    canonical_json(&x)
}

fn builtin(name: PairName, m: usize) -> Result<BuiltinPair, CliError> {
    match name {
        PairName::Id0 => Ok(BuiltinPair::Id0),
        PairName::Derivative => Ok(BuiltinPair::Derivative(m)),
        PairName::Integral => Ok(BuiltinPair::Integral),
        PairName::Lacunary if m >= 1 => Ok(BuiltinPair::Lacunary(m)),
        PairName::Lacunary => Err(CliError::Usage(
            "lacunary step --m must be at least 1".into(),
        )),
        other => Err(CliError::Usage(
            format!("{other:?} is not a built-in closed-form pair").to_lowercase(),
        )),
    }
}

fn hypergeometric_params(text: &str) -> Result<HypergeometricParams, CliError> {
    let parts: Vec<f64> = text
        .split(',')
        .map(|s| s.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Usage(format!("--params expects three numbers a,b,c: {e}")))?;
    match parts[..] {
        [a, b, c] => Ok(HypergeometricParams::new(a, b, c)?),
        _ => Err(CliError::Usage(format!(
            "--params expects three numbers a,b,c, got '{text}'"
        ))),
    }
}

fn hypergeometric_pair(text: &str) -> Result<ConvolutionPair, CliError> {
    let kernel = hypergeometric_kernel(hypergeometric_params(text)?)?;
    Ok(ConvolutionPair::new(kernel, Kernel::geometric(0), 0)?)
}

fn radius_csv(r: &RadiusResult) -> String {
    let holds = r.all_hold();
    format!(
        "value,method,residual,bracket_lo,bracket_hi,hypotheses_hold\n{},{},{},{},{},{holds}\n",
        fmt_num(r.value),
        canonical_json(&r.method).trim_matches('"'),
        fmt_num(r.residual),
        fmt_num(r.bracket[0]),
        fmt_num(r.bracket[1]),
    )
}

fn radius(args: &RadiusArgs, fmt: Format, out: &mut String) -> Result<(), CliError> {
    let p = &args.pair;
    let result = match (p.pair, args.a) {
        (PairName::Hypergeometric, None) => radius_hypergeometric(hypergeometric_params(&p.params)?)?,
        (PairName::Hypergeometric, Some(a)) => convolution_radius(&hypergeometric_pair(&p.params)?, a)?,
        (PairName::Cesaro, _) => {
            return Err(Error::NotApplicable(
                "only an upper bound on the Bohr-Bombieri function is known for the Cesaro operator; use `bombieri`".into(),
            )
            .into())
        }
        (name, Some(a)) => builtin(name, p.m)?.radius_with_a(a)?,
        (name, None) => builtin(name, p.m)?.radius()?,
    };
    match fmt {
        Format::Json => {
            out.push_str(&canonical_json(&result));
            out.push('\n');
        }
        Format::Csv => out.push_str(&radius_csv(&result)),
    }
    Ok(())
}

fn check(name: impl Into<String>, ok: bool) -> Value {
    json!({ "name": name.into(), "ok": ok })
}

fn co_k_name(w: CoKWitness) -> &'static str {
    match w {
        CoKWitness::ProofBacked => "h2 co-K witness (proof-backed)",
        CoKWitness::Asserted => "h2 co-K witness (asserted)",
        CoKWitness::Missing => "h2 co-K witness (missing)",
    }
}

fn bombieri(args: &BombieriArgs, fmt: Format, out: &mut String) -> Result<(), CliError> {
    let p = &args.pair;
    let r = args.r;
    let (value, hypotheses) = match (p.pair, args.a) {
        (PairName::Id0, None) => {
            let v = bombieri_id0(r)?;
            (v, vec![check("r <= 1/sqrt(2)", true)])
        }
        (PairName::Cesaro, None) => {
            let v = cesaro_bombieri_bound(r)?;
            (v, vec![check("upper bound only", true)])
        }
        (PairName::Cesaro, Some(_)) => {
            return Err(CliError::Usage("the Cesaro bound takes no --a".into()));
        }
        (name, Some(a)) => {
            let pair = if name == PairName::Hypergeometric {
                hypergeometric_pair(&p.params)?
            } else {
                builtin(name, p.m)?.convolution()
            };
            let v = bombieri_value_thm1(&pair, a, r)?;
            let inf = pair.h1.inf_ratio(DEFAULT_HORIZON)?.value;
            (
                v,
                vec![
                    check(
                        co_k_name(pair.h2.co_k()),
                        pair.h2.co_k() != CoKWitness::Missing,
                    ),
                    check("a > r", r < a || a == 1.0),
                    check(
                        format!("r <= inf c_n/c_(n+1) = {}", round_sig(inf)),
                        r <= inf,
                    ),
                ],
            )
        }
        (name, None) => {
            return Err(Error::NotApplicable(format!(
                "no closed form for {name:?} without a fixed coefficient; pass --a"
            ))
            .into())
        }
    };
    let mut obj = Map::new();
    obj.insert("value".into(), json!(value));
    obj.insert("r".into(), json!(r));
    obj.insert("a".into(), args.a.map_or(Value::Null, |a| json!(a)));
    obj.insert("hypotheses".into(), Value::Array(hypotheses));
    match fmt {
        Format::Json => {
            out.push_str(&canonical_json(&Value::Object(obj)));
            out.push('\n');
        }
        Format::Csv => {
            let a = args.a.map(fmt_num).unwrap_or_default();
            out.push_str(&format!(
                "value,r,a\n{},{},{a}\n",
                fmt_num(value),
                fmt_num(r)
            ));
        }
    }
    Ok(())
}

fn verify(args: &VerifyArgs, g: &Global, out: &mut String) -> Result<(), CliError> {
    let suite: Suite = args.suite.parse()?;
    let pair = args.pair.map(|p| builtin(p, args.m)).transpose()?;
    let config = SuiteConfig {
        samples: g.samples,
        seed: g.seed,
        order: g.order,
        tolerance: g.tol,
        pair,
    };
    let reports = run_suite(suite, &config)?;
    let holds = reports.iter().all(|r| r.holds);
    match format(g, Format::Json) {
        Format::Json => {
            out.push_str(&canonical_json(
                &json!({ "holds": holds, "reports": reports }),
            ));
            out.push('\n');
        }
        Format::Csv => {
            out.push_str("check,samples,worst_margin,holds\n");
            for r in &reports {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    r.check,
                    r.samples,
                    fmt_num(r.worst_margin),
                    r.holds
                ));
            }
        }
    }
    if holds {
        return Ok(());
    }
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.holds)
        .map(|r: &Report| {
            format!(
                "{} (worst margin {}, {})",
                r.check,
                fmt_num(r.worst_margin),
                canonical_json(&r.params)
            )
        })
        .collect();
    Err(CliError::Verify(failed.join("; ")))
}

#[derive(Serialize)]
struct SweepRow {
    a: f64,
    r: Option<f64>,
    valid: bool,
    condition: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    curve: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    diagonal: Option<f64>,
}

fn sweep_row(q: Quantity, m: usize, a: f64) -> Result<SweepRow, CliError> {
    let pair = match q {
        Quantity::Id0 => BuiltinPair::Id0,
        Quantity::IntegralWithA => BuiltinPair::Integral,
        Quantity::DerivativeWithA => BuiltinPair::Derivative(m),
        Quantity::Lacunary => builtin(PairName::Lacunary, m)?,
    };
    let (r, valid, condition) = match pair.radius_with_a(a) {
        Ok(res) => {
            let failing: Vec<&str> = res
                .hypotheses
                .iter()
                .filter(|h| !h.ok)
                .map(|h| h.name.as_str())
                .collect();
            (Some(res.value), failing.is_empty(), failing.join("; "))
        }
        Err(Error::Hypothesis { condition }) => (None, false, condition),
        Err(e @ Error::Domain(_)) => (None, false, e.to_string()),
        Err(e) => return Err(e.into()),
    };
    let integral = q == Quantity::IntegralWithA;
    Ok(SweepRow {
        a,
        r,
        valid,
        condition,
        curve: if integral {
            integral_curve(a).ok()
        } else {
            None
        },
        diagonal: integral.then_some(a),
    })
}

fn sweep(args: &SweepArgs, fmt: Format, out: &mut String) -> Result<(), CliError> {
    if args.count < 2 {
        return Err(CliError::Usage(format!(
            "--count must be at least 2, got {}",
            args.count
        )));
    }
    if !(args.start < args.stop) {
        return Err(CliError::Usage(format!(
            "--start must be below --stop, got {} and {}",
            args.start, args.stop
        )));
    }
    let step = (args.stop - args.start) / (args.count - 1) as f64;
    let rows = (0..args.count)
        .map(|k| {
            let a = if k + 1 == args.count {
                args.stop
            } else {
                args.start + k as f64 * step
            };
            sweep_row(args.quantity, args.m, a)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let body = match fmt {
        Format::Json => format!("{}\n", canonical_json(&rows)),
        Format::Csv => sweep_csv(&rows, args.quantity == Quantity::IntegralWithA)?,
    };
    match &args.output {
        Some(path) => {
            std::fs::write(path, body)?;
            out.push_str(&canonical_json(
                &json!({ "output": path.display().to_string(), "rows": rows.len() }),
            ));
            out.push('\n');
        }
        None => out.push_str(&body),
    }
    Ok(())
}

fn sweep_csv(rows: &[SweepRow], extra: bool) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["a", "r", "valid", "condition"];
    if extra {
        header.extend(["curve", "diagonal"]);
    }
    w.write_record(&header)?;
    let opt = |x: Option<f64>| x.map(fmt_num).unwrap_or_default();
    for row in rows {
        let mut record = vec![
            fmt_num(row.a),
            opt(row.r),
            row.valid.to_string(),
            row.condition.clone(),
        ];
        if extra {
            record.extend([opt(row.curve), opt(row.diagonal)]);
        }
        w.write_record(&record)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
