//! Command-line front end. [`run`] parses arguments, runs the requested
//! computation and returns the rendered report with an exit code, so the
//! binary, the tests and the C interface share one code path.

mod args;
mod commands;
mod render;

pub use args::{Algebra, BimoduleKind, Builtin, Cli, Command, Format, Options, Suite, Target};
pub use render::{render_table, SCHEMAS};

use crate::error::Error;
use clap::Parser;
use serde::Serialize;
use serde_json::Value;

/// Exit status: all checks passed.
pub const EXIT_PASS: i32 = 0;
/// Exit status: the computation ran but a check failed.
pub const EXIT_FAIL: i32 = 1;
/// Exit status: invalid input or a computation error.
pub const EXIT_ERROR: i32 = 2;

/// Everything a run produces.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    /// The error behind an [`EXIT_ERROR`] status, when it came from a
    /// computation rather than from argument parsing.
    pub error: Option<Error>,
}

/// The resolved settings of a run, echoed in every report.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub q: Option<String>,
    pub degree_bound: Option<usize>,
    pub max_degree: Option<usize>,
    pub group: Option<String>,
    pub algebra: Option<String>,
    pub bimodule: Option<String>,
    pub input: Option<String>,
    pub builtin: Option<String>,
    pub n: Option<usize>,
    pub format: String,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Versions {
    pub hopfgs: &'static str,
    pub report_format: u32,
}

pub const VERSIONS: Versions = Versions {
    hopfgs: env!("CARGO_PKG_VERSION"),
    report_format: 1,
};

/// Report envelope shared by all commands.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub versions: Versions,
    pub config: RunConfig,
    pub seed: u64,
    pub pass: bool,
    pub result: Value,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_PASS };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                    error: None,
                }
            } else {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                    error: None,
                }
            };
        }
    };
    run_cli(&cli)
}

pub fn run_cli(cli: &Cli) -> Outcome {
    match commands::execute(cli) {
        Ok(commands::Output::Report(report)) => {
            let stdout = match cli.opts.format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&report).expect("reports serialize");
                    s.push('\n');
                    s
                }
                Format::Table => render_table(&serde_json::to_value(&report).expect("reports serialize")),
            };
            Outcome {
                code: if report.pass { EXIT_PASS } else { EXIT_FAIL },
                stdout,
                stderr: String::new(),
                error: None,
            }
        }
        Ok(commands::Output::Text(text)) => Outcome {
            code: EXIT_PASS,
            stdout: text,
            stderr: String::new(),
            error: None,
        },
        Err(e) => Outcome {
            code: EXIT_ERROR,
            stdout: String::new(),
            stderr: format!("error: {}\n", message(&e)),
            error: Some(e),
        },
    }
}

fn message(e: &Error) -> String {
    match e {
        Error::Invalid(m) => m.clone(),
        other => other.to_string(),
    }
}
