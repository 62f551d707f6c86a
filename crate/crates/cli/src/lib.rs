//! Command-line front end for `ctcsim-core`.
//!
//! [`run`] is the whole program: it parses arguments, executes one subcommand
//! and writes results to the chosen sink. The binary is a thin wrapper, which
//! keeps the commands testable in-process.

mod commands;
pub mod config;
pub mod format;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Success.
pub const EXIT_OK: i32 = 0;
/// Invalid input or configuration.
pub const EXIT_VALIDATION: i32 = 2;
/// The request is physically infeasible for the simulator.
pub const EXIT_INFEASIBLE: i32 = 3;
/// The parameters do not form a closed timelike curve.
pub const EXIT_CTC_UNMET: i32 = 4;
/// I/O failure while writing results.
pub const EXIT_IO: i32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "ctcsim",
    version,
    about = "Closed-timelike-curve analysis for boosted-wire analogue spacetimes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Flags shared by every subcommand.
#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Vacuum light speed used for normalization
    #[arg(long = "c-v", default_value_t = 1.0)]
    pub c_v: f64,
    /// Line speed of the unbiased SQUID array
    #[arg(long, default_value_t = 1.0)]
    pub c0: f64,
    /// Largest DC flux fraction the array may be biased with
    #[arg(long = "flux-ceiling", default_value_t = 0.45)]
    pub flux_ceiling: f64,
    /// Largest total flux fraction the array may carry
    #[arg(long = "total-flux-limit", default_value_t = 0.5)]
    pub total_flux_limit: f64,
    /// Output format; each subcommand picks a sensible default
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    /// Write results here instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Flat `key = value` file setting any long flag; command-line flags win
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Symmetric,
    AsGiven,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Return-leg speed and region over a (c_z, beta) grid
    #[command(args_override_self = true, allow_negative_numbers = true)]
    ScanFig2 {
        #[command(flatten)]
        common: Common,
        #[arg(long = "beta-range", default_value = "0.01:0.99", value_parser = parse_range)]
        beta_range: (f64, f64),
        /// Rest-frame light speed range, units of c_v
        #[arg(long = "speed-range", default_value = "1:2.5", value_parser = parse_range)]
        speed_range: (f64, f64),
        #[arg(long = "beta-steps", default_value_t = 200)]
        beta_steps: usize,
        #[arg(long = "speed-steps", default_value_t = 200)]
        speed_steps: usize,
        /// Shape value of the boosted wire when it differs from the lab wire
        #[arg(long = "boosted-f")]
        boosted_f: Option<f64>,
    },
    /// Pulse-frame speeds against F at fixed beta
    #[command(args_override_self = true, allow_negative_numbers = true)]
    PulseFig3 {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        beta: f64,
        #[arg(long = "f-range", default_value = "1:7", value_parser = parse_range)]
        f_range: (f64, f64),
        #[arg(long = "f-steps", default_value_t = 601)]
        f_steps: usize,
    },
    /// Flux needed to realise a shape value, or a whole wire profile
    #[command(args_override_self = true, allow_negative_numbers = true)]
    FluxProfile {
        #[command(flatten)]
        common: Common,
        /// Target shape value
        #[arg(long = "F")]
        f_target: Option<f64>,
        /// DC flux fraction
        #[arg(long, default_value_t = 0.45)]
        dc: f64,
        /// Wire radius; switches to radial profile output
        #[arg(long)]
        radius: Option<f64>,
        #[arg(long, default_value_t = 2)]
        exponent: u32,
        /// Radial sample range; defaults to radius/2 : 2*radius
        #[arg(long = "r-range", value_parser = parse_range)]
        r_range: Option<(f64, f64)>,
        #[arg(long = "r-steps", default_value_t = 101)]
        r_steps: usize,
        /// Time stamp attached to the static profile
        #[arg(long, default_value_t = 0.0)]
        t: f64,
    },
    /// Full report for one (F1, F2, beta) point
    #[command(args_override_self = true, allow_negative_numbers = true)]
    CtcCheck {
        #[command(flatten)]
        common: Common,
        #[arg(long = "F1")]
        f1: f64,
        #[arg(long = "F2")]
        f2: f64,
        #[arg(long)]
        beta: f64,
        /// Path length of each leg
        #[arg(long = "L", default_value_t = 1.0)]
        length: f64,
        #[arg(long, default_value_t = 0.45)]
        dc: f64,
    },
    /// Scattering-surface assembly and image timeline
    #[command(args_override_self = true, allow_negative_numbers = true)]
    OpticsDesign {
        #[command(flatten)]
        common: Common,
        #[arg(long = "F1")]
        f1: f64,
        #[arg(long = "F2")]
        f2: f64,
        /// Boost; implies as-given mode unless --mode says otherwise
        #[arg(long)]
        beta: Option<f64>,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        #[arg(long = "n-samples", default_value_t = 11)]
        n_samples: usize,
    },
}

fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| format!("expected MIN:MAX, got `{s}`"))?;
    let a: f64 = a
        .trim()
        .parse()
        .map_err(|e| format!("bad range start `{a}`: {e}"))?;
    let b: f64 = b
        .trim()
        .parse()
        .map_err(|e| format!("bad range end `{b}`: {e}"))?;
    Ok((a, b))
}

/// What a subcommand produced: the payload and its exit status.
pub(crate) struct Outcome {
    pub body: String,
    pub code: i32,
    pub note: Option<String>,
}

/// A subcommand failure with no payload.
pub(crate) struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<ctcsim_core::Error> for Failure {
    fn from(e: ctcsim_core::Error) -> Self {
        let code = match e {
            ctcsim_core::Error::CtcConditionUnmet { .. } => EXIT_CTC_UNMET,
            _ => EXIT_VALIDATION,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

/// Runs the program on `args` (including the program name) and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let args = match config::expand_config_args(args) {
        Ok(a) => a,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            return EXIT_VALIDATION;
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_VALIDATION
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
    };

    let sink = commands::output_path(&cli.command);
    match commands::execute(&cli.command) {
        Ok(outcome) => {
            if let Some(note) = &outcome.note {
                let _ = writeln!(err, "{note}");
            }
            if let Err(e) = emit(&outcome.body, sink.as_ref(), out) {
                let _ = writeln!(err, "error: {e}");
                return EXIT_IO;
            }
            outcome.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn emit(body: &str, path: Option<&PathBuf>, out: &mut dyn Write) -> std::io::Result<()> {
    match path {
        Some(p) => fs::write(p, body),
        None => {
            out.write_all(body.as_bytes())?;
            out.flush()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parser() {
        assert_eq!(parse_range("0.5:0.5"), Ok((0.5, 0.5)));
        assert_eq!(parse_range(" 1 : 2.5 "), Ok((1.0, 2.5)));
        assert!(parse_range("1-2").is_err());
        assert!(parse_range("a:1").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
