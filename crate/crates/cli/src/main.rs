//! `gcalg`: expand Cayley expressions, check identities, scan permutation
//! signs and run Pappus configurations.
//!
//! Exit codes: 0 PASS/ok, 1 FAIL, 2 syntax error, 3 step error,
//! 4 invalid configuration or argument, 5 degenerate meet.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gcalg::cayley::{eval_symbolic, raw_expansion_terms, EvalError};
use gcalg::exterior::NumericError;
use gcalg::verify::{
    check_identity_numeric, check_identity_symbolic, derive_seed, pappus_check, permutation_scan, random_pappus_config,
    validate_pappus_hypotheses, CheckReport, Configuration, NumericCheck, SignSpec, VerifyError, SCHEMA_VERSION,
};
use gcalg::{parse, print, CayleyExpr, PointSet, Sign, StepError, StepValue};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "gcalg",
    version,
    about = "Exact Grassmann-Cayley algebra in the projective plane"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckMode {
    Symbolic,
    Numeric,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Expand an expression into canonical bracket form.
    Expand {
        expr: String,
        /// Print the distributive expansion before normalization.
        #[arg(long)]
        raw: bool,
    },
    /// Decide whether LHS = ±RHS.
    Check {
        lhs: String,
        rhs: String,
        #[arg(long, value_enum, default_value_t = CheckMode::Symbolic)]
        mode: CheckMode,
        /// Expected relative sign: +, - or either.
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        sign: SignSpec,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Coordinates of numeric trials are integers in [-bound, bound].
        #[arg(long, default_value_t = 1_000_000)]
        bound: u64,
    },
    /// Sign of the expression under every permutation of its points.
    PermScan {
        expr: String,
        /// Seed for sampling the multiplicativity pairs.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of sampled pairs (σ, τ) for the multiplicativity check.
        #[arg(long, default_value_t = 200)]
        pairs: usize,
    },
    /// Check Pappus' theorem on a random or given configuration.
    Pappus {
        #[arg(long, default_value_t = 0, conflicts_with = "config")]
        seed: u64,
        /// JSON configuration file: {"points": {"a": ["0","0","1"], ...}}.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Repeat with seeds derived from --seed.
        #[arg(long, conflicts_with = "config")]
        runs: Option<u64>,
        /// Size of the integers used to draw random configurations.
        #[arg(long, default_value_t = 1000)]
        bound: u64,
    },
}

/// A failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<StepError> for Failure {
    fn from(e: StepError) -> Self {
        Failure {
            code: 3,
            message: format!("step error: {e}"),
        }
    }
}

impl From<EvalError> for Failure {
    fn from(e: EvalError) -> Self {
        match e {
            EvalError::Step(s) => s.into(),
            EvalError::NotBracketValued(_) => Failure {
                code: 3,
                message: format!("step error: {e}"),
            },
            other => Failure {
                code: 4,
                message: other.to_string(),
            },
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        let code = match &e {
            VerifyError::Eval(inner) => return inner.clone().into(),
            VerifyError::Numeric(NumericError::Step(s)) => return s.clone().into(),
            VerifyError::StepMismatch { .. } => 3,
            VerifyError::DegenerateMeet(_) | VerifyError::DegenerateSampling { .. } => 5,
            VerifyError::Numeric(_) | VerifyError::InvalidConfig(_) | VerifyError::InvalidArgument(_) => 4,
        };
        let message = match &e {
            VerifyError::StepMismatch { .. } => format!("step error: {e}"),
            _ => e.to_string(),
        };
        Failure { code, message }
    }
}

/// Result of a subcommand: rendered output and whether it passed.
struct Outcome {
    output: String,
    passed: bool,
}

fn parse_expr(text: &str) -> Result<CayleyExpr, Failure> {
    parse(text).map_err(|e| Failure {
        code: 2,
        message: format!("{e}\n  {text}\n  {}^", " ".repeat(text[..e.span.start].chars().count())),
    })
}

fn to_json_text(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON values serialize")
}

fn expand(expr: &str, raw: bool, format: Format) -> Result<Outcome, Failure> {
    let expr = parse_expr(expr)?;
    let points = PointSet::pappus().extended_with(&expr).map_err(EvalError::from)?;
    // Evaluate first so that step errors surface before the raw listing.
    let value: StepValue = eval_symbolic(&expr, &points)?;
    let output = if raw {
        let terms = raw_expansion_terms(&expr)?;
        match format {
            Format::Text => terms.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n"),
            Format::Json => to_json_text(&json!({
                "schema": SCHEMA_VERSION,
                "expression": print(&expr),
                "raw": terms.iter().map(|t| json!({
                    "sign": if t.negative { "-" } else { "+" },
                    "factors": t.factors,
                })).collect::<Vec<_>>(),
            })),
        }
    } else {
        match format {
            Format::Text => value.to_string(),
            Format::Json => to_json_text(&json!({
                "schema": SCHEMA_VERSION,
                "expression": print(&expr),
                "value": value.to_json(),
            })),
        }
    };
    Ok(Outcome { output, passed: true })
}

fn render_reports(reports: &[CheckReport], format: Format) -> String {
    match format {
        Format::Text => reports.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n"),
        Format::Json => match reports {
            [single] => to_json_text(&single.to_json()),
            _ => to_json_text(&json!({
                "schema": SCHEMA_VERSION,
                "verdict": if reports.iter().all(CheckReport::passed) { "PASS" } else { "FAIL" },
                "reports": reports.iter().map(CheckReport::to_json).collect::<Vec<_>>(),
            })),
        },
    }
}

fn check(lhs: &str, rhs: &str, mode: CheckMode, params: NumericCheck, format: Format) -> Result<Outcome, Failure> {
    let (lhs, rhs) = (parse_expr(lhs)?, parse_expr(rhs)?);
    let mut reports = Vec::new();
    if mode != CheckMode::Numeric {
        reports.push(check_identity_symbolic(&lhs, &rhs, params.sign)?);
    }
    if mode != CheckMode::Symbolic {
        reports.push(check_identity_numeric(&lhs, &rhs, params)?);
    }
    Ok(Outcome {
        passed: reports.iter().all(CheckReport::passed),
        output: render_reports(&reports, format),
    })
}

fn sign_label(sign: Option<Sign>) -> &'static str {
    match sign {
        Some(Sign::Plus) => "+1",
        Some(Sign::Minus) => "-1",
        None => "FAIL",
    }
}

fn perm_scan(expr: &str, seed: u64, pairs: usize, format: Format) -> Result<Outcome, Failure> {
    let expr = parse_expr(expr)?;
    let scan = permutation_scan(&expr, pairs, seed)?;
    let passed = scan.passed();
    let verdict = if passed { "PASS" } else { "FAIL" };
    let output = match format {
        Format::Text => {
            let mut lines: Vec<String> = scan
                .rows
                .iter()
                .map(|r| format!("{} {}", r.permutation.one_line(), sign_label(r.sign)))
                .collect();
            lines.push(format!(
                "summary: {} permutations, +1: {}, -1: {}, FAIL: {}, multiplicative on {} pairs: {}{}; {verdict}",
                scan.rows.len(),
                scan.count(Sign::Plus),
                scan.count(Sign::Minus),
                scan.failures(),
                scan.pairs.len(),
                if scan.multiplicative() { "yes" } else { "no" },
                if scan.identically_zero {
                    ", expression is identically zero"
                } else {
                    ""
                },
            ));
            lines.join("\n")
        }
        Format::Json => to_json_text(&json!({
            "schema": SCHEMA_VERSION,
            "expression": print(&expr),
            "seed": seed,
            "domain": scan.rows.first().map(|r| r.permutation.domain().to_vec()).unwrap_or_default(),
            "rows": scan.rows.iter().map(|r| json!({
                "permutation": r.permutation.one_line(),
                "sign": r.sign.map(|s| s.to_i8()),
            })).collect::<Vec<_>>(),
            "summary": {
                "permutations": scan.rows.len(),
                "plus": scan.count(Sign::Plus),
                "minus": scan.count(Sign::Minus),
                "fail": scan.failures(),
                "pairs": scan.pairs.len(),
                "multiplicative": scan.multiplicative(),
                "identically_zero": scan.identically_zero,
            },
            "verdict": verdict,
        })),
    };
    Ok(Outcome { output, passed })
}

fn pappus(
    seed: u64,
    config: Option<PathBuf>,
    runs: Option<u64>,
    bound: u64,
    format: Format,
) -> Result<Outcome, Failure> {
    if let Some(runs) = runs {
        return pappus_runs(seed, runs, bound, format);
    }
    let config = match config {
        Some(path) => {
            let text = fs::read_to_string(&path).map_err(|e| Failure {
                code: 4,
                message: format!("invalid configuration: cannot read {}: {e}", path.display()),
            })?;
            let config = Configuration::from_json_str(&text)?;
            validate_pappus_hypotheses(&config)?;
            config
        }
        None => random_pappus_config(seed, bound)?,
    };
    let report = pappus_check(&config)?;
    Ok(Outcome {
        passed: report.passed(),
        output: render_reports(std::slice::from_ref(&report), format),
    })
}

fn pappus_runs(root: u64, runs: u64, bound: u64, format: Format) -> Result<Outcome, Failure> {
    let mut rows = Vec::new();
    let (mut pass, mut fail, mut degenerate) = (0u64, 0u64, 0u64);
    for index in 0..runs {
        let seed = derive_seed(root, index);
        let outcome = random_pappus_config(seed, bound).and_then(|c| pappus_check(&c));
        let (status, note) = match outcome {
            Ok(report) if report.passed() => {
                pass += 1;
                ("PASS", None)
            }
            Ok(report) => {
                fail += 1;
                ("FAIL", Some(report.to_string()))
            }
            Err(e @ (VerifyError::DegenerateMeet(_) | VerifyError::DegenerateSampling { .. })) => {
                degenerate += 1;
                ("DEGENERATE", Some(e.to_string()))
            }
            Err(e) => return Err(e.into()),
        };
        rows.push((index, seed, status, note));
    }
    let passed = fail == 0;
    let verdict = if passed { "PASS" } else { "FAIL" };
    let output = match format {
        Format::Text => {
            let mut lines: Vec<String> = rows
                .iter()
                .map(|(i, s, status, note)| match note {
                    Some(n) => format!("run {i} seed={s}: {status}: {n}"),
                    None => format!("run {i} seed={s}: {status}"),
                })
                .collect();
            lines.push(format!(
                "summary: {runs} runs, PASS: {pass}, FAIL: {fail}, degenerate: {degenerate}; {verdict}"
            ));
            lines.join("\n")
        }
        Format::Json => to_json_text(&json!({
            "schema": SCHEMA_VERSION,
            "seed": root,
            "bound": bound,
            "runs": rows.iter().map(|(i, s, status, note)| json!({
                "index": i,
                "seed": s,
                "status": status,
                "note": note,
            })).collect::<Vec<_>>(),
            "summary": {"pass": pass, "fail": fail, "degenerate": degenerate},
            "verdict": verdict,
        })),
    };
    Ok(Outcome { output, passed })
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Expand { expr, raw } => expand(&expr, raw, format),
        Command::Check {
            lhs,
            rhs,
            mode,
            sign,
            trials,
            seed,
            bound,
        } => check(
            &lhs,
            &rhs,
            mode,
            NumericCheck {
                trials,
                seed,
                bound,
                sign,
            },
            format,
        ),
        Command::PermScan { expr, seed, pairs } => perm_scan(&expr, seed, pairs, format),
        Command::Pappus {
            seed,
            config,
            runs,
            bound,
        } => pappus(seed, config, runs, bound, format),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(outcome) => {
            println!("{}", outcome.output);
            ExitCode::from(if outcome.passed { 0 } else { 1 })
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
