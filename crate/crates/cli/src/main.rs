use std::process::ExitCode;

use clap::Parser;
use fgltheta::{emit, exit_code, run, Cli, RunConfig};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = RunConfig::from_cli(cli).and_then(|config| {
        let outcome = run(&config)?;
        emit(&config, &outcome.body)?;
        Ok(exit_code(&outcome))
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("fgltheta: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
