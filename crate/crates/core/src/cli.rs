//! The `qhom` command line.
//!
//! Exit codes: 0 when every check passes, 1 when a verification suite finds a
//! counterexample, 2 for input and usage errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::affine::{coefficient_table, CoefficientTable};
use crate::cyclotomic::Order;
use crate::error::{Error, Result};
use crate::formats::{parse_document, Document};
use crate::ncomplex::{build_point_complex, homology_report, AmplitudeHomologyReport, Degree, GradedNComplex};
use crate::simplicial::to_ncomplex;
use crate::verify::{run_suite, Suite, SuiteConfig, SuiteReport};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Table,
    Json,
}

/// A single amplitude `m` or every amplitude.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Amplitude {
    #[default]
    All,
    One(u32),
}

impl FromStr for Amplitude {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s == "all" {
            return Ok(Amplitude::All);
        }
        s.parse()
            .map(Amplitude::One)
            .map_err(|_| format!("expected an amplitude m >= 1 or `all`, got `{s}`"))
    }
}

#[derive(Debug, Parser)]
#[command(name = "qhom", version, about = "Exact (N,q)-analog homology")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Amplitude homology of a complex, simplicial set or pair read from JSON.
    Homology {
        #[arg(long)]
        input: PathBuf,
        /// Order of the root of unity; taken from the file for complexes.
        #[arg(long = "N")]
        order: Option<u32>,
        /// Top degree of the window for simplicial inputs.
        #[arg(long)]
        max_degree: Option<Degree>,
        #[arg(long, default_value = "all")]
        amplitude: Amplitude,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run a verification suite.
    Verify {
        /// qnumbers, iteration, leibnitz, newton, tails, homotopy,
        /// augmentation, coeff-table, exactness or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long = "N")]
        order: u32,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Amplitude homology of a point.
    Point {
        #[arg(long = "N")]
        order: u32,
        /// Defaults to 2N.
        #[arg(long)]
        max_degree: Option<Degree>,
        #[arg(long, default_value = "all")]
        amplitude: Amplitude,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// The coefficient table of the homotopy expansion.
    Table {
        #[arg(long = "N")]
        order: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandName {
    Homology,
    Verify,
    Point,
    Table,
}

/// Everything one invocation needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: CommandName,
    pub order: Option<u32>,
    pub input: Option<PathBuf>,
    pub max_degree: Option<Degree>,
    pub amplitude: Amplitude,
    pub suite: Option<String>,
    pub trials: usize,
    pub seed: u64,
    pub format: Format,
}

impl RunConfig {
    fn from_cli(cli: Cli) -> Self {
        let base = RunConfig {
            command: CommandName::Table,
            order: None,
            input: None,
            max_degree: None,
            amplitude: Amplitude::All,
            suite: None,
            trials: 100,
            seed: 0,
            format: Format::Table,
        };
        match cli.command {
            Command::Homology {
                input,
                order,
                max_degree,
                amplitude,
                format,
            } => RunConfig {
                command: CommandName::Homology,
                order,
                input: Some(input),
                max_degree,
                amplitude,
                format,
                ..base
            },
            Command::Verify {
                suite,
                order,
                trials,
                seed,
                format,
            } => RunConfig {
                command: CommandName::Verify,
                order: Some(order),
                suite: Some(suite),
                trials,
                seed,
                format,
                ..base
            },
            Command::Point {
                order,
                max_degree,
                amplitude,
                format,
            } => RunConfig {
                command: CommandName::Point,
                order: Some(order),
                max_degree,
                amplitude,
                format,
                ..base
            },
            Command::Table { order, format } => RunConfig {
                command: CommandName::Table,
                order: Some(order),
                format,
                ..base
            },
        }
    }
}

/// What a run produced: text for stdout and stderr plus the exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses arguments (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&RunConfig::from_cli(cli)),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), text)
            } else {
                (text, String::new())
            };
            Outcome { code, stdout, stderr }
        }
    }
}

pub fn execute(config: &RunConfig) -> Outcome {
    let result = match config.command {
        CommandName::Homology => cmd_homology(config),
        CommandName::Verify => cmd_verify(config),
        CommandName::Point => cmd_point(config),
        CommandName::Table => cmd_table(config),
    };
    match result {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => {
            let stdout = match config.format {
                Format::Json => json(&ErrorReport {
                    error: ErrorBody {
                        kind: e.kind(),
                        message: e.to_string(),
                    },
                }),
                Format::Table => String::new(),
            };
            Outcome {
                code: EXIT_USAGE,
                stdout,
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

#[derive(Serialize)]
struct ErrorReport {
    error: ErrorBody,
}

#[derive(Serialize)]
struct ErrorBody {
    kind: &'static str,
    message: String,
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn require_order(config: &RunConfig) -> Result<Order> {
    match config.order {
        Some(n) => Order::new(n),
        None => Err(Error::Precondition("--N is required for this input".into())),
    }
}

fn filter_amplitude(mut report: AmplitudeHomologyReport, amplitude: Amplitude) -> Result<AmplitudeHomologyReport> {
    if let Amplitude::One(m) = amplitude {
        if m == 0 || m >= report.order {
            return Err(Error::OutOfRange {
                what: "amplitude",
                value: m as i64,
                lo: 1,
                hi: report.order as i64 - 1,
            });
        }
        report.entries.retain(|e| e.m == m);
    }
    Ok(report)
}

fn render_homology(report: &AmplitudeHomologyReport, complex: &GradedNComplex, format: Format) -> String {
    match format {
        Format::Json => json(report),
        Format::Table => {
            let mut out = report.to_string();
            if complex.truncated() {
                out.push_str("? = the window cannot certify this entry\n");
            }
            out
        }
    }
}

fn cmd_homology(config: &RunConfig) -> Result<(i32, String)> {
    let path = config.input.as_ref().expect("homology takes --input");
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let order = config.order.map(Order::new).transpose()?;
    let complex = match parse_document(&text, order)? {
        Document::Complex(c) => {
            if let Some(o) = order {
                if o != c.order() {
                    return Err(Error::OrderMismatch {
                        left: o.get(),
                        right: c.order().get(),
                    });
                }
            }
            c
        }
        Document::Simplicial(x) => {
            let order = require_order(config)?;
            let hi = config.max_degree.unwrap_or_else(|| default_top(x.top_dim(), x.truncated(), order));
            to_ncomplex(&x, order, hi)?
        }
        Document::Pair(p) => {
            let order = require_order(config)?;
            let x = p.space();
            let hi = config.max_degree.unwrap_or_else(|| default_top(x.top_dim(), x.truncated(), order));
            p.relative_complex(order, hi)?
        }
        Document::AffineChain(_) => {
            return Err(Error::Precondition(
                "an affine chain is not a complex; homology takes a complex, simplicial set or pair".into(),
            ))
        }
    };
    let report = filter_amplitude(homology_report(&complex), config.amplitude)?;
    Ok((EXIT_PASS, render_homology(&report, &complex, config.format)))
}

/// The top cell for finite models, `2N` for models marked truncated.
fn default_top(top: Option<usize>, truncated: bool, order: Order) -> Degree {
    if truncated {
        2 * order.get() as Degree
    } else {
        top.unwrap_or(0) as Degree
    }
}

#[derive(Serialize)]
struct VerifyReport {
    #[serde(rename = "N")]
    order: u32,
    seed: u64,
    trials: usize,
    passed: bool,
    suites: Vec<SuiteReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    table: Option<CoefficientTable>,
}

fn cmd_verify(config: &RunConfig) -> Result<(i32, String)> {
    let order = require_order(config)?;
    if config.trials == 0 {
        return Err(Error::OutOfRange {
            what: "trials",
            value: 0,
            lo: 1,
            hi: i64::MAX,
        });
    }
    let suites = Suite::parse_selection(config.suite.as_deref().unwrap_or("all"))?;
    let suite_config = SuiteConfig {
        order,
        trials: config.trials,
        seed: config.seed,
    };
    let reports: Vec<SuiteReport> = suites.iter().map(|&s| run_suite(s, &suite_config)).collect();
    let passed = reports.iter().all(|r| r.passed);
    let table = suites.contains(&Suite::CoeffTable).then(|| coefficient_table(order));
    let report = VerifyReport {
        order: order.get(),
        seed: config.seed,
        trials: config.trials,
        passed,
        suites: reports,
        table,
    };
    let text = match config.format {
        Format::Json => json(&report),
        Format::Table => render_verify(&report),
    };
    Ok((if passed { EXIT_PASS } else { EXIT_COUNTEREXAMPLE }, text))
}

fn render_verify(report: &VerifyReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "N = {}, seed = {}, trials = {}", report.order, report.seed, report.trials);
    for s in &report.suites {
        let verdict = if s.passed { "pass" } else { "FAIL" };
        let _ = writeln!(out, "{:<14}{:>8} cases{:>6} failed  {verdict}", s.suite.name(), s.cases, s.failures);
        for c in &s.counterexamples {
            let _ = writeln!(out, "  counterexample {}: {}", c.case, c.detail);
        }
    }
    if let Some(table) = &report.table {
        let _ = writeln!(out, "\n{table}");
    }
    let _ = writeln!(out, "{}", if report.passed { "all checks pass" } else { "counterexamples found" });
    out
}

fn cmd_point(config: &RunConfig) -> Result<(i32, String)> {
    let order = require_order(config)?;
    let hi = config.max_degree.unwrap_or(2 * order.get() as Degree);
    if hi < 0 {
        return Err(Error::OutOfRange {
            what: "max-degree",
            value: hi,
            lo: 0,
            hi: i64::MAX,
        });
    }
    let complex = build_point_complex(order, hi);
    let report = filter_amplitude(homology_report(&complex), config.amplitude)?;
    let text = match config.format {
        Format::Json => json(&report),
        Format::Table => render_point(&report),
    };
    Ok((EXIT_PASS, text))
}

/// `Z[q]` where the homology is one-dimensional, `0` where it vanishes and
/// `?` beyond the reliable window.
fn render_point(report: &AmplitudeHomologyReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "homology of a point, N = {}", report.order);
    let _ = write!(out, "{:>6}", "m \\ n");
    for n in report.lo..=report.hi {
        let _ = write!(out, "{n:>6}");
    }
    let _ = writeln!(out);
    let amplitudes: std::collections::BTreeSet<u32> = report.entries.iter().map(|e| e.m).collect();
    for m in amplitudes {
        let _ = write!(out, "{m:>6}");
        for e in report.entries.iter().filter(|e| e.m == m) {
            let cell = match (e.reliable, e.dim) {
                (false, _) => "?".to_string(),
                (true, 0) => "0".to_string(),
                (true, 1) => "Z[q]".to_string(),
                (true, d) => format!("Z[q]^{d}"),
            };
            let _ = write!(out, "{cell:>6}");
        }
        let _ = writeln!(out);
    }
    out
}

fn cmd_table(config: &RunConfig) -> Result<(i32, String)> {
    let order = require_order(config)?;
    let table = coefficient_table(order);
    let text = match config.format {
        Format::Json => json(&table),
        Format::Table => format!("{table}\n"),
    };
    Ok((EXIT_PASS, text))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("qhom").chain(args.iter().copied()))
    }

    #[test]
    fn table_three() {
        let out = run_args(&["table", "--N", "3"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("alpha_0 = 0"));
        assert!(out.stdout.contains("alpha_1 = 0"));
        assert!(out.stdout.contains("alpha_2 = 1"));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(&["table", "--N", "4"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["verify", "--N", "3", "--suite", "nope"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["verify", "--N", "3", "--trials", "0"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["frobnicate"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["point", "--N", "3", "--amplitude", "3"]).code, EXIT_USAGE);
    }

    #[test]
    fn point_marks() {
        let out = run_args(&["point", "--N", "3", "--max-degree", "6", "--format", "json"]);
        let report: AmplitudeHomologyReport = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(report.nonzero_reliable(), vec![(1, 0, 1), (2, 1, 1)]);
    }

    #[test]
    fn amplitude_selector() {
        let out = run_args(&["point", "--N", "5", "--amplitude", "2", "--format", "json"]);
        let report: AmplitudeHomologyReport = serde_json::from_str(&out.stdout).unwrap();
        assert!(report.entries.iter().all(|e| e.m == 2));
        assert_eq!(report.nonzero_reliable(), vec![(2, 1, 1)]);
    }

    #[test]
    fn help_is_not_an_error() {
        let out = run_args(&["--help"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("homology"));
    }
}
