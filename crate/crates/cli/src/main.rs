//! `hartogs`: kernel evaluation, coefficient tables, verification suites and
//! L^p scans for the generalized Hartogs triangles.
//!
//! Exit codes: 0 on success, 1 when a check fails (or output cannot be
//! written), 2 on invalid arguments.

mod commands;
mod error;
mod grid;
mod report;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use error::CliError;
use report::Report;

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_SAMPLES: u64 = 1_000_000;

#[derive(Debug, Parser)]
#[command(name = "hartogs", version, about = "Bergman kernels and L^p regularity on generalized Hartogs triangles")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args, Serialize)]
struct Common {
    /// Base seed for every Monte Carlo estimate.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Monte Carlo samples per estimate.
    #[arg(long, global = true, default_value_t = DEFAULT_SAMPLES)]
    samples: u64,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true, conflicts_with = "format")]
    #[serde(skip)]
    json: bool,
    /// Write the report here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Worker threads; 0 means one per logical core.
    #[arg(long, global = true, env = "HARTOGS_THREADS", default_value_t = 0)]
    #[serde(skip)]
    threads: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
enum Command {
    /// Evaluate the Bergman kernel B(x, y).
    Kernel(commands::KernelArgs),
    /// Exact coefficient tables of the numerator polynomials g_l(b).
    Coeffs(commands::CoeffsArgs),
    /// Bounded-composition counts of pairs and triples in [0, k-1].
    Counts(commands::CountsArgs),
    /// Run verification suites and report pass/fail per check.
    Verify(commands::VerifyArgs),
    /// Classify exponents p and evaluate the truncated norm of the projected test function.
    LpScan(commands::LpScanArgs),
    /// Schur-test ratios over evaluation points and exponents eps.
    SchurScan(commands::SchurScanArgs),
    /// Draw uniform points from the domain.
    Sample(commands::SampleArgs),
}

fn run(cli: Cli) -> Result<Report, CliError> {
    rayon::ThreadPoolBuilder::new().num_threads(cli.common.threads).build_global()?;
    let config = serde_json::json!({
        "seed": cli.common.seed,
        "samples": cli.common.samples,
        "format": cli.common.format,
        "subcommand": &cli.command,
    });
    let ctx = commands::Context {
        seed: cli.common.seed,
        samples: cli.common.samples,
    };
    let mut report = match &cli.command {
        Command::Kernel(a) => commands::kernel(a, &ctx),
        Command::Coeffs(a) => commands::coeffs(a),
        Command::Counts(a) => commands::counts(a),
        Command::Verify(a) => commands::verify(a, &ctx),
        Command::LpScan(a) => commands::lp_scan(a),
        Command::SchurScan(a) => commands::schur_scan(a, &ctx),
        Command::Sample(a) => commands::sample(a, &ctx),
    }?;
    report.config = config;
    Ok(report)
}

fn emit(report: &Report, common: &Common) -> Result<(), CliError> {
    let out: Box<dyn Write> = match &common.output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let format = if common.json { Format::Json } else { common.format };
    match format {
        Format::Json => report.write_json(out),
        Format::Csv => report.write_csv(out),
        Format::Latex => report.write_latex(out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = cli.common.clone();
    let outcome = run(cli).and_then(|report| emit(&report, &common).map(|_| report.any_failed()));
    match outcome {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn defaults() {
        let cli = Cli::try_parse_from(["hartogs", "counts", "--k", "3"]).unwrap();
        assert_eq!(cli.common.seed, 42);
        assert_eq!(cli.common.samples, 1_000_000);
        assert_eq!(cli.common.format, Format::Json);
    }
}
