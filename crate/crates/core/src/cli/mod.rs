//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 when at least one check fails,
//! 2 on usage or parameter errors.

mod args;
mod cases;
mod render;

use std::ffi::OsString;

use clap::Parser;
use serde::Serialize;

pub use args::{Cli, Command, Format};
pub use cases::{factored, Case};

use crate::error::Error;

#[derive(Debug, Serialize)]
struct ConfigEcho<'a> {
    family: Option<&'a str>,
    dim: Option<usize>,
    dims: Option<&'a str>,
    max_dim: Option<usize>,
    params: &'a [String],
    samples: usize,
    seed: u64,
    trials: usize,
    max_n: usize,
    trace: bool,
    paper_literal: bool,
    variant: Option<&'static str>,
}

#[derive(Debug, Serialize)]
struct Summary {
    total: usize,
    passed: usize,
    failed: usize,
}

#[derive(Debug, Serialize)]
struct JsonReport<'a> {
    command: Command,
    config: ConfigEcho<'a>,
    cases: &'a [Case],
    summary: Summary,
}

/// Outcome of a successful run: the rendered report and whether every check
/// passed.
#[derive(Debug)]
pub struct Outcome {
    pub output: String,
    pub cases: Vec<Case>,
    pub all_passed: bool,
    pub warnings: Vec<String>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.all_passed {
            0
        } else {
            1
        }
    }
}

/// Exit code for an error that aborted the run.
pub fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::Singular { .. } => 1,
        _ => 2,
    }
}

pub fn execute(cli: &Cli) -> crate::Result<Outcome> {
    let cases = cases::run_cases(cli)?;
    let passed = cases.iter().filter(|c| c.passed()).count();
    let summary = Summary { total: cases.len(), passed, failed: cases.len() - passed };
    let mut warnings = Vec::new();
    if cli.command == Command::Identity && cli.trials == 0 {
        warnings.push("--trials 0: every identity check is vacuous".to_string());
    }
    let output = match cli.format {
        Format::Json => {
            let report = JsonReport {
                command: cli.command,
                config: ConfigEcho {
                    family: cli.family.as_deref(),
                    dim: cli.dim,
                    dims: cli.dims.as_deref(),
                    max_dim: cli.max_dim,
                    params: &cli.params,
                    samples: cli.samples,
                    seed: cli.seed,
                    trials: cli.trials,
                    max_n: cli.max_n,
                    trace: cli.trace,
                    paper_literal: cli.paper_literal,
                    variant: cli.variant.map(|v| v.name()),
                },
                cases: &cases,
                summary,
            };
            let mut s = serde_json::to_string_pretty(&report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let table = cli.command == Command::Table;
            let mut s = render::render_text(&cases, table);
            if !table && cli.command != Command::Eval {
                s.push_str(&format!(
                    "summary: total {}, passed {}, failed {}\n",
                    summary.total, summary.passed, summary.failed
                ));
            }
            s
        }
    };
    Ok(Outcome { output, all_passed: passed == cases.len(), cases, warnings })
}

/// Parse arguments, run, print, and return the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return error_exit_code(&e);
        }
    };
    for w in &outcome.warnings {
        eprintln!("warning: {w}");
    }
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.output) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{}", outcome.output),
    }
    outcome.exit_code()
}
