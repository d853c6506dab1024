//! Command-line front end for `subbundle-core`.
//!
//! Exit codes are a stable contract: 0 success, 1 verification failure,
//! 2 invalid or ill-posed instance (including bad flags), 3 unsupported rank
//! pair.

pub mod args;
pub mod commands;
pub mod verify;

use std::io::{self, Write};

use clap::Parser;
use thiserror::Error;

pub use args::{CaseArg, Cli, Command, Format, InstanceArgs, MethodChoice};
pub use commands::{cmd_count, cmd_table, cmd_trace, OutputRecord};
pub use verify::{run_verification, verification_system, CheckTally, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_INVALID_INSTANCE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] subbundle_core::Error),

    #[error("{0}")]
    Usage(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use subbundle_core::Error as E;
        match self {
            CliError::Core(E::UnsupportedRankPair { .. }) => EXIT_UNSUPPORTED,
            CliError::Core(_) | CliError::Usage(_) => EXIT_INVALID_INSTANCE,
            CliError::Verification(_) | CliError::Io(_) | CliError::Json(_) => {
                EXIT_VERIFICATION_FAILED
            }
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

/// Runs an already-parsed command, writing results to `out`.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Count {
            instance,
            method,
            format,
        } => {
            let record = cmd_count(instance, *method)?;
            commands::write_count(&record, *format, out)?;
            if !record.agreement {
                return Err(CliError::Verification(
                    "computation paths disagree for this instance".into(),
                ));
            }
            Ok(())
        }
        Command::Table {
            case,
            r,
            max_g,
            format,
        } => cmd_table(*case, *r, *max_g, *format, out),
        Command::Verify { max_g, format } => {
            let max_g = commands::positive_genus(*max_g, "--max-g")?;
            let report = run_verification(max_g, &verification_system());
            verify::write_report(&report, *format, out)?;
            if !report.ok {
                return Err(CliError::Verification(format!(
                    "{} check(s) failed",
                    report.failed_checks().count()
                )));
            }
            Ok(())
        }
        Command::Trace { instance, format } => {
            let tree = cmd_trace(instance)?;
            commands::write_trace(&tree, *format, out)
        }
    }
}

/// Parses `args` and runs the command; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{e}");
            return e.exit_code();
        }
    };
    match execute(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
