//! Command-line front end for `fgltheta-core`: configuration, the
//! subcommands and their reports.

pub mod commands;
pub mod config;
pub mod error;
pub mod report;

use std::io::Write;

pub use commands::{run, Outcome};
pub use config::{Cli, Command, Format, RunConfig, SeriesChoice};
pub use error::CliError;

/// Exit status for a run that completed.
pub fn exit_code(outcome: &Outcome) -> u8 {
    u8::from(!outcome.passed)
}

/// Writes the report to `config.out`, or to standard output.
pub fn emit(config: &RunConfig, body: &str) -> Result<(), CliError> {
    match &config.out {
        Some(path) => std::fs::write(path, body).map_err(|source| CliError::Unwritable { path: path.clone(), source }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(body.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|source| CliError::Unwritable { path: "<stdout>".into(), source })
        }
    }
}
