//! Report-producing commands behind the `sg` binary.
//!
//! Every command returns an [`Outcome`]: a JSON report plus an exit code
//! (0 pass, 1 check failure, 2 usage or parse error). Reports use sorted
//! keys and omit timing unless asked for, so identical invocations print
//! identical bytes.

mod byleen_cmd;
mod finite_cmd;
mod models_cmd;
mod report;

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;
use thiserror::Error;

pub use byleen_cmd::{base_by_name, cmd_byleen, ByleenCommand};
pub use finite_cmd::{
    cmd_check, cmd_enumerate, cmd_witness, witness_json, CheckOptions, EnumerateOptions,
};
pub use models_cmd::{cmd_models, ModelName};
pub use report::Check;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub exit: i32,
}

impl Outcome {
    pub fn new(report: Value, pass: bool) -> Self {
        Outcome {
            report,
            exit: if pass { EXIT_PASS } else { EXIT_FAIL },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Parse(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => EXIT_FAIL,
            _ => EXIT_USAGE,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "sg", version, about = "Diagonal subsemigroups and congruences")]
pub struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Add wall-clock timing to the report.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a Cayley table and report its structure and DSC status.
    Check {
        path: PathBuf,
        #[command(flatten)]
        options: CheckArgs,
    },
    /// Enumerate every labeled semigroup of a small order.
    Enumerate {
        n: usize,
        /// Check the DSC decision against "is a group" on every table.
        #[arg(long)]
        oracle: bool,
        /// Report labeled and isomorphism-class counts.
        #[arg(long)]
        count: bool,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Print a verified non-congruence diagonal subsemigroup.
    Witness { path: PathBuf },
    /// Arithmetic and certificates in Byleen's monoid.
    Byleen {
        /// Base monoid: `trivial`, `cN` for the cyclic group of order N, or
        /// a Cayley JSON file.
        #[arg(long, default_value = "c2")]
        base: String,
        #[command(subcommand)]
        command: ByleenCommand,
    },
    /// Run an infinite model's witness and window checks.
    Models {
        #[arg(value_enum)]
        name: ModelName,
    },
}

#[derive(Debug, Clone, Args)]
pub struct CheckArgs {
    /// Also run the exhaustive subset scan (order ≤ 4).
    #[arg(long)]
    pub brute: bool,
    /// Include the full witness relation and its axiom report.
    #[arg(long)]
    pub witness: bool,
    /// Exit 1 if any check fails.
    #[arg(long)]
    pub strict: bool,
}

/// Parses arguments, runs the command and renders its output. Returns the
/// text for stdout, the text for stderr and the exit code.
pub fn run<I, T>(args: I) -> (String, String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let text = err.render().to_string();
            return if err.use_stderr() {
                (String::new(), text, code)
            } else {
                (text, String::new(), code)
            };
        }
    };
    let start = Instant::now();
    let result = dispatch(&cli.command);
    match result {
        Ok(mut outcome) => {
            if cli.timing {
                if let Value::Object(map) = &mut outcome.report {
                    map.insert(
                        "timing_ms".into(),
                        Value::from(start.elapsed().as_secs_f64() * 1000.0),
                    );
                }
            }
            (
                render(&outcome.report, cli.pretty),
                String::new(),
                outcome.exit,
            )
        }
        Err(err) => {
            let report = serde_json::json!({ "error": err.to_string() });
            (
                render(&report, cli.pretty),
                format!("sg: {err}\n"),
                err.exit_code(),
            )
        }
    }
}

fn render(report: &Value, pretty: bool) -> String {
    let mut text = if pretty {
        serde_json::to_string_pretty(report)
    } else {
        serde_json::to_string(report)
    }
    .expect("JSON values serialize");
    text.push('\n');
    text
}

fn dispatch(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Check { path, options } => cmd_check(
            path,
            &CheckOptions {
                brute: options.brute,
                witness: options.witness,
                strict: options.strict,
            },
        ),
        Command::Enumerate {
            n,
            oracle,
            count,
            jobs,
        } => cmd_enumerate(
            *n,
            &EnumerateOptions {
                oracle: *oracle,
                count: *count,
                jobs: *jobs,
            },
        ),
        Command::Witness { path } => cmd_witness(path),
        Command::Byleen { base, command } => {
            let base = base_by_name(base)?;
            cmd_byleen(base, command)
        }
        Command::Models { name } => cmd_models(*name, crate::models::window_from_env()),
    }
}

pub(crate) fn read_file(path: &std::path::Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}
