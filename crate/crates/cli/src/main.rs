//! `braidtk`: command-line front end for positive permutation braids.

mod commands;

use std::process::ExitCode;

use braidtk::{BraidError, Limits};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Markdown,
}

#[derive(Parser, Debug)]
#[command(
    name = "braidtk",
    version,
    about = "Positive permutation braids: normal forms, conjugacy, invariants and census"
)]
struct Cli {
    /// Number of strands; inferred from the input when omitted.
    #[arg(long, global = true)]
    n: Option<usize>,

    #[arg(long, global = true, value_enum, default_value = "text")]
    format: OutputFormat,

    /// Largest n accepted by enumeration and classification.
    #[arg(long, global = true, env = "BRAIDTK_MAX_N", default_value_t = 8,
          value_parser = clap::value_parser!(u64).range(1..=64))]
    max_n: u64,

    /// Largest super summit set built before giving up.
    #[arg(long, global = true, default_value_t = 100_000,
          value_parser = clap::value_parser!(u64).range(1..))]
    summit_cap: u64,

    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Positive permutation braid of a permutation, e.g. "(1423)" or "4 3 1 2".
    Perm2braid { permutation: String },
    /// Permutation of a braid word, e.g. "n=3 2 1" or "1 -2 1".
    Braid2perm { word: String },
    /// Left-canonical normal form.
    Nf { word: String },
    /// Decide conjugacy of two braids.
    Conj { a: String, b: String },
    /// Writhe, components, genus, Burau characteristic polynomial, Alexander
    /// polynomial and knot type.
    Invariants { word: String },
    /// List the positive permutation braids on n strands that close to knots.
    Enumerate { size: usize },
    /// Partition the census into conjugacy classes.
    Classify {
        size: usize,
        /// With --format json, emit one census entry per line instead of the
        /// class reports.
        #[arg(long)]
        census: bool,
    },
    /// Check a classification statement on the census, or run the seeded
    /// property suite.
    Verify {
        #[arg(value_enum)]
        check: Check,
        /// Strand count (required except for props).
        size: Option<usize>,
    },
    /// The 6-strand pair with equal closures that are not conjugate.
    DemoNonconj,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    Thm6,
    Props,
}

/// Settings shared by every subcommand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub max_n: usize,
    pub summit_cap: usize,
    pub format: OutputFormat,
    pub seed: u64,
}

impl Config {
    pub fn limits(&self) -> Limits {
        Limits {
            max_n: self.max_n,
            summit_cap: self.summit_cap,
        }
    }
}

/// Printed output of a command; `success: false` exits with status 1.
pub struct Report {
    pub body: String,
    pub success: bool,
}

/// Errors that stop a command before it can report.
pub enum Failure {
    Usage(String),
    Braid(BraidError),
}

impl From<BraidError> for Failure {
    fn from(e: BraidError) -> Self {
        Failure::Braid(e)
    }
}

fn exit_code(failure: &Failure) -> u8 {
    match failure {
        Failure::Usage(_) => 2,
        Failure::Braid(BraidError::SummitCapExceeded { .. }) => 3,
        Failure::Braid(BraidError::OutOfRange { n, max, .. }) if n > max => 3,
        Failure::Braid(_) => 2,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let config = Config {
        max_n: cli.max_n as usize,
        summit_cap: cli.summit_cap as usize,
        format: cli.format,
        seed: cli.seed,
    };
    let n = cli.n;
    let result = match cli.command {
        Command::Perm2braid { permutation } => commands::perm2braid(&config, &permutation, n),
        Command::Braid2perm { word } => commands::braid2perm(&config, &word, n),
        Command::Nf { word } => commands::nf(&config, &word, n),
        Command::Conj { a, b } => commands::conj(&config, &a, &b, n),
        Command::Invariants { word } => commands::invariants(&config, &word, n),
        Command::Enumerate { size } => commands::enumerate(&config, size),
        Command::Classify { size, census } => commands::classify(&config, size, census),
        Command::Verify { check, size } => commands::verify(&config, check, size.or(n)),
        Command::DemoNonconj => commands::demo_nonconj(&config),
    };
    match result {
        Ok(report) => {
            print!("{}", report.body);
            ExitCode::from(if report.success { 0 } else { 1 })
        }
        Err(failure) => {
            match &failure {
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Braid(e) => eprintln!("error: {e}"),
            }
            ExitCode::from(exit_code(&failure))
        }
    }
}
