mod args;
mod commands;
mod config;
mod failure;
mod labels;
mod output;

use std::ffi::OsString;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::failure::Failure;

/// Support intervals, minimum support intervals and their calibration to
/// confidence intervals.
#[derive(Debug, Parser)]
#[command(name = "supcal", version)]
struct Cli {
    /// JSON job file; each key stands in for the flag of the same name.
    /// Flags given on the command line win.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute a confidence, support or minimum support interval.
    #[command(allow_negative_numbers = true, args_override_self = true)]
    Calibrate(commands::calibrate::Args),
    /// Map between confidence levels and minimum support levels.
    #[command(allow_negative_numbers = true, args_override_self = true)]
    Map(commands::map::Args),
    /// Tabulate the Bayes factor as a function of the null value.
    #[command(allow_negative_numbers = true, args_override_self = true)]
    BfCurve(commands::curve::Args),
    /// Sample size for a future k > 1 support interval.
    #[command(allow_negative_numbers = true, args_override_self = true)]
    Design(commands::design::Args),
    /// Monte Carlo coverage of support intervals, with optional stopping.
    #[command(allow_negative_numbers = true, args_override_self = true)]
    Simulate(commands::simulate::Args),
    /// Print the JSON schema of a command's --json output.
    Schema(commands::schema::Args),
}

fn main() -> ExitCode {
    let argv: Vec<OsString> = std::env::args_os().collect();
    let argv = match config::splice(argv) {
        Ok(argv) => argv,
        Err(err) => return fail(err),
    };
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => return clap_failure(err),
    };
    let outcome = match cli.command {
        Command::Calibrate(args) => commands::calibrate::run(args),
        Command::Map(args) => commands::map::run(args),
        Command::BfCurve(args) => commands::curve::run(args),
        Command::Design(args) => commands::design::run(args),
        Command::Simulate(args) => commands::simulate::run(args),
        Command::Schema(args) => commands::schema::run(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => fail(err),
    }
}

fn fail(err: Failure) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(err.code())
}

fn clap_failure(err: clap::Error) -> ExitCode {
    match err.kind() {
        ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
            let _ = err.print();
            ExitCode::SUCCESS
        }
        _ => {
            // one line is enough; --help has the rest
            let rendered = err.render().to_string();
            let reason: Vec<&str> = rendered
                .lines()
                .take_while(|l| !l.starts_with("Usage:"))
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .collect();
            let line = reason.join(" ");
            let line = line.strip_prefix("error: ").unwrap_or(&line);
            fail(Failure::Usage(line.to_string()))
        }
    }
}
