//! `crankmex`: partition statistics, identity verification and bijection
//! checks from the command line.
//!
//! Exit codes: 0 when everything requested passed, 1 when a check failed or
//! a map's precondition was violated, 2 for usage errors.

mod commands;
mod emit;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "crankmex",
    version,
    about = "Crank and mex partition statistics, q-series identities and bijections"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tabulate one statistic for n = 0..=max-n.
    Stats {
        /// Statistic name, e.g. p, q_o, m_1_2, m_3_4_e, crank, crank_ge,
        /// crank_le0_o, frob_no_zero, frob_no_j_top, frob_crank0.
        name: String,
        #[arg(long, default_value_t = 30)]
        max_n: u32,
        #[arg(long, allow_negative_numbers = true)]
        j: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        m: Option<i64>,
        #[command(flatten)]
        output: Output,
    },
    /// The nine refined odd-mex rows for n = 2..=15.
    Table1 {
        #[command(flatten)]
        output: Output,
    },
    /// Verify catalog identities.
    #[command(group(ArgGroup::new("target").required(true).args(["id", "all"])))]
    Verify {
        /// Catalog id, e.g. thm2.1.
        id: Option<String>,
        /// Every entry over its default parameter grid.
        #[arg(long)]
        all: bool,
        #[arg(long, allow_negative_numbers = true, conflicts_with = "all")]
        j: Option<i64>,
        #[arg(long, allow_negative_numbers = true, conflicts_with = "all")]
        m: Option<i64>,
        #[arg(long, default_value_t = 40)]
        order: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Trace one application of a map, or check it exhaustively.
    #[command(group(ArgGroup::new("mode").required(true).args(["check", "trace"])))]
    Bijection {
        name: MapName,
        /// Check every element of weight at most this bound.
        #[arg(long)]
        check: Option<u32>,
        /// A partition "5,3,1", or a triple "pi;kappa;nu" for the triple maps.
        #[arg(long)]
        trace: Option<String>,
        #[arg(long, default_value_t = 0)]
        j: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Reference sequences: the embedded A064428 prefix cross-checked
    /// against enumeration, or the coefficients of (q;q)_∞.
    Sequence {
        name: SequenceName,
        #[arg(long, default_value_t = 30)]
        max_n: u32,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
#[value(rename_all = "snake_case")]
enum MapName {
    Franklin,
    FirstCancellation,
    SecondCancellation,
    Cor36,
    Cor38,
    Cor38Fixed,
    Crank0,
    CrankLeNegJ,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
#[value(rename_all = "lower")]
enum SequenceName {
    A064428,
    Pentagonal,
}

/// Why a command did not succeed.
#[derive(Debug)]
enum Failure {
    /// A check ran and failed, or a map's precondition was violated.
    Failed(String),
    /// Bad input detected before any computation.
    Usage(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Failed(_) => 1,
            Failure::Usage(_) => 2,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Failed(msg) | Failure::Usage(msg) if !msg.is_empty() => {
                    eprintln!("error: {msg}");
                }
                _ => {}
            }
            ExitCode::from(f.code())
        }
    }
}
