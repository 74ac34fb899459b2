//! Argument handling and output formatting for the `uniwalk` binary.
//!
//! [`run`] takes the full argument vector and writes to caller-supplied
//! streams, so the whole surface is testable in-process.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use uniwalk_core::oracle::{self, OracleConfig};
use uniwalk_core::verify::{verify_sweep, SweepConfig};
use uniwalk_core::{
    adjacency_power_row, factorize, unit_sum_count, walks, Count, Error, WalkQuery,
};

/// Environment variable holding the default oracle size cap.
pub const ORACLE_CAP_ENV: &str = "UNIWALK_ORACLE_CAP";

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "uniwalk",
    version,
    about = "Exact walk counts on unitary Cayley graphs X_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Print one JSON object per result line.
    #[arg(long, global = true)]
    json: bool,

    /// Evaluation path for single queries.
    #[arg(long, global = true, value_enum, default_value_t = Method::ClosedForm)]
    method: Method,

    /// Largest modulus the brute-force oracle accepts.
    #[arg(long, global = true, env = ORACLE_CAP_ENV)]
    oracle_cap: Option<u64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of length-k walks from i to j in X_n.
    Walks { n: u64, k: u32, i: u64, j: u64 },
    /// Number of ordered k-tuples of units mod n summing to r.
    UnitSums { n: u64, k: u32, r: u64 },
    /// First row of the circulant A(X_n)^k.
    CircRow { n: u64, k: u32 },
    /// Radical of n.
    Rad { n: u64 },
    /// Euler totient of n.
    Phi { n: u64 },
    /// Compare closed forms against the oracle for all n <= max-n, k <= max-k.
    Verify {
        #[arg(long, default_value_t = 20)]
        max_n: u64,
        #[arg(long, default_value_t = 6)]
        max_k: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    ClosedForm,
    Oracle,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed-form",
            Method::Oracle => "oracle",
        }
    }
}

enum Output {
    Scalar(Count),
    Row(Vec<Count>),
    Verify {
        summary: Value,
        text: String,
        counterexample: Option<String>,
    },
}

struct Outcome {
    query: Value,
    output: Output,
    method: Method,
}

fn oracle_config(cli: &Cli) -> OracleConfig {
    let mut cfg = OracleConfig::default();
    if let Some(cap) = cli.oracle_cap {
        cfg.size_cap = cap;
    }
    cfg
}

fn execute(cli: &Cli) -> Result<Outcome, Error> {
    let cfg = oracle_config(cli);
    let method = cli.method;
    let oracle = method == Method::Oracle;
    let (query, output) = match cli.command {
        Command::Walks { n, k, i, j } => {
            let q = WalkQuery::new(n, k, i, j)?;
            let value = if oracle {
                let a = oracle::build_adjacency(n, &cfg)?;
                oracle::matrix_power_walks(&a, k, i as usize, j as usize)?
            } else {
                walks(&q)?
            };
            (
                json!({"command": "walks", "n": n, "k": k, "i": i, "j": j}),
                Output::Scalar(value),
            )
        }
        Command::UnitSums { n, k, r } => {
            let value = if oracle {
                oracle::enumerate_unit_sums(n, k, r, &cfg)?
            } else {
                unit_sum_count(n, k, r)?
            };
            (
                json!({"command": "unit-sums", "n": n, "k": k, "r": r}),
                Output::Scalar(value),
            )
        }
        Command::CircRow { n, k } => {
            let row = if oracle {
                let power = oracle::build_adjacency(n, &cfg)?.pow(k);
                power.row(0).to_vec()
            } else {
                adjacency_power_row(n, k)?.into_vec()
            };
            (
                json!({"command": "circ-row", "n": n, "k": k}),
                Output::Row(row),
            )
        }
        Command::Rad { n } => {
            if oracle {
                return Err(Error::Domain("rad has no oracle path".into()));
            }
            (
                json!({"command": "rad", "n": n}),
                Output::Scalar(factorize(n)?.radical().into()),
            )
        }
        Command::Phi { n } => {
            let value = if oracle {
                // the unit count is the common row sum of A(X_n)
                let a = oracle::build_adjacency(n, &cfg)?;
                a.row(0).iter().sum()
            } else {
                factorize(n)?.totient().into()
            };
            (json!({"command": "phi", "n": n}), Output::Scalar(value))
        }
        Command::Verify { max_n, max_k } => {
            let sweep = SweepConfig {
                oracle: cfg,
                ..SweepConfig::new(max_n, max_k)
            };
            let report = verify_sweep(&sweep)?;
            let first = report.first_mismatch().map(ToString::to_string);
            let status = if report.passed() {
                "all comparisons passed".to_string()
            } else {
                format!("{} mismatches", report.mismatches.len())
            };
            let text = format!(
                "verify n in 2..={max_n}, k in 0..={max_k}: {} comparisons, {} unit-sum cells skipped, {status}",
                report.comparisons, report.skipped_cells
            );
            let summary = json!({
                "passed": report.passed(),
                "comparisons": report.comparisons,
                "mismatches": report.mismatches.len(),
                "skipped_cells": report.skipped_cells,
                "first_mismatch": first,
            });
            (
                json!({"command": "verify", "max_n": max_n, "max_k": max_k}),
                Output::Verify {
                    summary,
                    text,
                    counterexample: first,
                },
            )
        }
    };
    // verify exercises both paths; it is reported as an oracle run
    let method = if matches!(cli.command, Command::Verify { .. }) {
        Method::Oracle
    } else {
        method
    };
    Ok(Outcome {
        query,
        output,
        method,
    })
}

/// Parses `argv` (including the program name), runs the subcommand and
/// returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    if !rendered.contains("Usage:") {
                        let _ = writeln!(err, "\n{}", Cli::command().render_usage());
                    }
                    EXIT_USAGE
                }
            };
        }
    };

    let start = Instant::now();
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_DOMAIN;
        }
    };
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    emit(outcome, cli.json, elapsed_ms, out, err)
}

fn emit(
    outcome: Outcome,
    as_json: bool,
    elapsed_ms: f64,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let mut code = EXIT_OK;
    let (value, text) = match outcome.output {
        Output::Scalar(c) => {
            let s = c.to_string();
            (Value::String(s.clone()), s)
        }
        Output::Row(row) => {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            let text = cells.join(" ");
            (json!(cells), text)
        }
        Output::Verify {
            summary,
            text,
            counterexample,
        } => {
            if let Some(c) = counterexample {
                let _ = writeln!(err, "counterexample: {c}");
                code = EXIT_MISMATCH;
            }
            (summary, text)
        }
    };

    let line = if as_json {
        json!({
            "query": outcome.query,
            "value": value,
            "method": outcome.method.name(),
            "elapsed_ms": elapsed_ms,
        })
        .to_string()
    } else {
        text
    };
    let _ = writeln!(out, "{line}");
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mismatch_reports_counterexample_and_exit_three() {
        let outcome = Outcome {
            query: json!({"command": "verify", "max_n": 4, "max_k": 2}),
            output: Output::Verify {
                summary: json!({"passed": false}),
                text: "verify: 1 mismatches".into(),
                counterexample: Some("walks n=4 k=2 i=0 j=0: closed-form 3 != oracle 2".into()),
            },
            method: Method::Oracle,
        };
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(emit(outcome, false, 0.0, &mut out, &mut err), EXIT_MISMATCH);
        assert_eq!(String::from_utf8(out).unwrap(), "verify: 1 mismatches\n");
        let err = String::from_utf8(err).unwrap();
        assert!(err.starts_with("counterexample: walks n=4 k=2"), "{err}");
    }
}
