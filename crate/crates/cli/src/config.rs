use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use fgltheta_core::{DEFAULT_FGL_ORDER, DEFAULT_PADIC_DIGITS, DEFAULT_SERIES_ORDER};

use crate::error::CliError;

pub const MIN_DIGITS: u32 = 8;
pub const MAX_DIGITS: u32 = 128;
pub const MIN_ORDER: usize = 2;
pub const MIN_FGL_ORDER: usize = 5;

/// Verifies the θ-stability computation for the curve y² + a·xy + b·y = x³
/// and emits the underlying coefficient tables.
#[derive(Debug, Parser)]
#[command(name = "fgltheta", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// 2-adic precision N: residues are kept mod 2^N.
    #[arg(long, global = true, env = "FGLTHETA_DEFAULT_DIGITS", default_value_t = DEFAULT_PADIC_DIGITS)]
    pub digits: u32,

    /// Truncation order K in s = t⁻³.
    #[arg(long, global = true, default_value_t = DEFAULT_SERIES_ORDER)]
    pub order: usize,

    /// Total-degree truncation of bivariate formal group laws.
    #[arg(long, global = true, default_value_t = DEFAULT_FGL_ORDER)]
    pub fgl_order: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Add a spurious `t` to ψ²(t) before the stability check.
    #[arg(long, global = true)]
    pub inject_negative_control: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Run every check and exit 0 only if all of them pass.
    Verify,
    /// The stability check for θ on Z₂[x⁻¹]^∧.
    Theta,
    /// Coefficient tables of c(s), ψ²(s) and θ(s).
    Coefficients {
        /// Table written in CSV output.
        #[arg(long, value_enum, default_value_t = SeriesChoice::C)]
        series: SeriesChoice,
    },
    /// The degree-2 isogeny out of y² + t·xy + y = x³.
    Velu,
    /// Invariants and heights over the Lubin-Tate ring.
    LubinTate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesChoice {
    C,
    Psi2,
    Theta,
}

/// A validated configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub padic_digits: u32,
    pub series_order: usize,
    pub fgl_order: usize,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub negative_control: bool,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let config = Self {
            command: cli.command,
            padic_digits: cli.digits,
            series_order: cli.order,
            fgl_order: cli.fgl_order,
            format: cli.format,
            out: cli.out,
            negative_control: cli.inject_negative_control,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if !(MIN_DIGITS..=MAX_DIGITS).contains(&self.padic_digits) {
            return Err(CliError::InvalidConfig(format!(
                "--digits must lie in {MIN_DIGITS}..={MAX_DIGITS}, got {}",
                self.padic_digits
            )));
        }
        if self.series_order < MIN_ORDER {
            return Err(CliError::InvalidConfig(format!(
                "--order must be at least {MIN_ORDER}, got {}",
                self.series_order
            )));
        }
        if self.fgl_order < MIN_FGL_ORDER {
            return Err(CliError::InvalidConfig(format!(
                "--fgl-order must be at least {MIN_FGL_ORDER}, got {}",
                self.fgl_order
            )));
        }
        let tabular = matches!(self.command, Command::Coefficients { .. });
        if self.format == Format::Csv && !tabular {
            return Err(CliError::InvalidConfig("CSV output is only available for the coefficients command".into()));
        }
        Ok(())
    }
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            command: Command::Verify,
            padic_digits: DEFAULT_PADIC_DIGITS,
            series_order: DEFAULT_SERIES_ORDER,
            fgl_order: DEFAULT_FGL_ORDER,
            format: Format::Text,
            out: None,
            negative_control: false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Result<RunConfig, CliError> {
        let cli = Cli::try_parse_from(std::iter::once("fgltheta").chain(args.iter().copied())).unwrap();
        RunConfig::from_cli(cli)
    }

    #[test]
    fn defaults() {
        let c = parse(&["verify"]).unwrap();
        assert_eq!(c.series_order, 16);
        assert_eq!(c.fgl_order, 12);
        assert!(!c.negative_control);
    }

    #[test]
    fn global_flags_after_subcommand() {
        let c = parse(&["theta", "--digits", "16", "--order", "4", "--format", "json"]).unwrap();
        assert_eq!((c.padic_digits, c.series_order, c.format), (16, 4, Format::Json));
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(matches!(parse(&["verify", "--fgl-order", "3"]), Err(CliError::InvalidConfig(_))));
        assert!(matches!(parse(&["verify", "--digits", "7"]), Err(CliError::InvalidConfig(_))));
        assert!(matches!(parse(&["verify", "--digits", "129"]), Err(CliError::InvalidConfig(_))));
        assert!(matches!(parse(&["verify", "--order", "1"]), Err(CliError::InvalidConfig(_))));
        assert!(matches!(parse(&["velu", "--format", "csv"]), Err(CliError::InvalidConfig(_))));
    }
}
