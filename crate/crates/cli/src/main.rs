//! `replica-knots` command-line front end.

mod commands;
mod error;
mod reproduce;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use error::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "replica-knots",
    version,
    about = "Zero-replica Gaussian moments and knot invariants"
)]
pub struct Cli {
    #[command(flatten)]
    pub run: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Options shared by every subcommand; each has an environment override.
#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Output format.
    #[arg(long, global = true, env = "REPLICA_KNOTS_FORMAT", value_enum)]
    pub format: Option<Format>,
    /// Shorthand for `--format json`.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Shorthand for `--format csv`.
    #[arg(long, global = true)]
    pub csv: bool,
    /// Write results here instead of stdout.
    #[arg(long, global = true, env = "REPLICA_KNOTS_OUT")]
    pub out: Option<PathBuf>,
    /// Worker threads; 0 lets the pool decide.
    #[arg(
        long,
        global = true,
        env = "REPLICA_KNOTS_THREADS",
        default_value_t = 0
    )]
    pub threads: usize,
    /// Maximum number of Wick pairings a brute-force moment may enumerate.
    #[arg(long, global = true, env = "REPLICA_KNOTS_PAIRING_BUDGET",
          default_value_t = replica_knots::exactmoments::DEFAULT_PAIRING_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub pairing_budget: u64,
    /// Maximum crossings for a Kauffman state sum.
    #[arg(long, global = true, env = "REPLICA_KNOTS_CROSSING_CAP",
          default_value_t = replica_knots::knotpoly::DEFAULT_CROSSING_CAP as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub crossing_cap: u64,
    /// Maximum rungs for a sign census.
    #[arg(long, global = true, env = "REPLICA_KNOTS_RUNG_CAP",
          default_value_t = replica_knots::bands::DEFAULT_CENSUS_CAP as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub rung_cap: u64,
    /// Largest working precision, in decimal digits, for root finding.
    #[arg(long, global = true, env = "REPLICA_KNOTS_DIGITS",
          default_value_t = replica_knots::zeros::DEFAULT_MAX_DIGITS,
          value_parser = clap::value_parser!(u32).range(15..))]
    pub digits: u32,
}

impl RunConfig {
    pub fn format(&self, default: Format) -> Format {
        match (self.json, self.csv) {
            (true, _) => Format::Json,
            (_, true) => Format::Csv,
            _ => self.format.unwrap_or(default),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact moment of a trace monomial as a polynomial in N.
    Moments(commands::MomentsArgs),
    /// Homogeneous coefficients of the replica generating series.
    ReplicaSeries(commands::ReplicaSeriesArgs),
    /// Seifert matrix, Alexander and Conway polynomials of a family member.
    Seifert(commands::SeifertArgs),
    /// Alexander zeros of a family, with optional angular density.
    Zeros(commands::ZerosArgs),
    /// Floor numbering of one ladder diagram, or a census of a skeleton's sign assignments.
    Bands(commands::BandsArgs),
    /// Kauffman bracket and Jones polynomial of a planar diagram.
    Jones(commands::DiagramArgs),
    /// Taylor coefficients of V(e^x) for a planar diagram.
    Vassiliev(commands::VassilievArgs),
    /// Knot to Gaussian-mean lookups.
    Catalogue(commands::CatalogueArgs),
    /// Recompute a published result and compare.
    Reproduce(reproduce::ReproduceArgs),
}

fn run(cli: Cli) -> Result<(), CliError> {
    if cli.run.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.run.threads)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let cfg = &cli.run;
    let text = match &cli.command {
        Command::Moments(a) => commands::moments(a, cfg)?,
        Command::ReplicaSeries(a) => commands::replica_series(a, cfg)?,
        Command::Seifert(a) => commands::seifert(a, cfg)?,
        Command::Zeros(a) => commands::zeros(a, cfg)?,
        Command::Bands(a) => commands::bands(a, cfg)?,
        Command::Jones(a) => commands::jones(a, cfg)?,
        Command::Vassiliev(a) => commands::vassiliev(a, cfg)?,
        Command::Catalogue(a) => commands::catalogue(a, cfg)?,
        Command::Reproduce(a) => return reproduce::run(a, cfg),
    };
    emit(cfg, &text)
}

pub fn emit(cfg: &RunConfig, text: &str) -> Result<(), CliError> {
    match &cfg.out {
        Some(path) => std::fs::write(path, text)?,
        None => match std::io::stdout().lock().write_all(text.as_bytes()) {
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
            r => r?,
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.render().to_string();
            let first = msg
                .lines()
                .next()
                .unwrap_or("invalid arguments")
                .trim_start_matches("error: ");
            eprintln!("{}", CliError::Usage(first.to_string()).record());
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.record());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
