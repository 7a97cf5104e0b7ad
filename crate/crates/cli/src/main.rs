use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use revineq_cli::commands::{
    cmd_extremal, cmd_report, cmd_sample, cmd_verify, ExtremalArgs, ReportArgs, SampleArgs,
    VerifyArgs,
};

/// Verification and exploration of reverse triangle and reverse Schwarz
/// inequalities in finite-dimensional inner product spaces.
#[derive(Parser)]
#[command(name = "revineq", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a family document against one inequality.
    Verify(VerifyArgs),
    /// Draw constrained random families and write them as a family document.
    Sample(SampleArgs),
    /// Search for configurations that make a bound tight.
    Extremal(ExtremalArgs),
    /// Aggregate verify run records into a CSV table.
    Report(ReportArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let result = match &cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Sample(args) => cmd_sample(args),
        Command::Extremal(args) => cmd_extremal(args),
        Command::Report(args) => cmd_report(args),
    };
    // timing goes to stderr only, never into output files, so repeated runs
    // stay byte-identical
    eprintln!("elapsed: {:.3}s", started.elapsed().as_secs_f64());
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
