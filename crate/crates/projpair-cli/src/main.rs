//! `projpair` — deterministic reports over the two-projection calculus.
//!
//! Five subcommands: `pair` (localization report), `geodesic` (minimal
//! geodesic exponent of a Fourier pair), `dft` (spectral data of the DFT
//! logarithm), `sweep` (uncertainty trend over sizes), `factorize`
//! (canonical-factorization comparison of two projection matrices read from
//! files). Output is byte-deterministic for a fixed command line and seed.
//! Exit codes are documented in the book's CLI manual chapter.

mod args;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use projpair::{
    dft_report, factorize_report, geodesic_report, io, localization_report, render_sweep,
    uncertainty_sweep, Error, ReportFormat, CORNER_TOL,
};

#[derive(Parser)]
#[command(name = "projpair", version, about = "Reports over pairs of orthogonal projections")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    /// `key = value` lines, one record per block
    StructuredText,
    /// one header line plus data rows
    Csv,
}

impl From<OutputFormat> for ReportFormat {
    fn from(f: OutputFormat) -> ReportFormat {
        match f {
            OutputFormat::StructuredText => ReportFormat::StructuredText,
            OutputFormat::Csv => ReportFormat::Csv,
        }
    }
}

#[derive(clap::Args)]
struct CommonArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::StructuredText)]
    format: OutputFormat,
    /// Tolerance override (also settable via PROJPAIR_TOL)
    #[arg(long)]
    tol: Option<f64>,
    /// Write the report here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
    /// Seed for any sampled quantity
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Localization report for the pair (P_I, Q_J) over the DFT of size n
    Pair {
        #[arg(long)]
        n: usize,
        /// Index-set spec, e.g. "0..16" or "1,2:sym"
        #[arg(long = "set-i")]
        set_i: String,
        /// Defaults to set-i
        #[arg(long = "set-j")]
        set_j: Option<String>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Minimal geodesic exponent between P_I and Q_J
    Geodesic {
        #[arg(long)]
        n: usize,
        #[arg(long = "set-i")]
        set_i: String,
        #[arg(long = "set-j")]
        set_j: Option<String>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Eigenprojection ranks and logarithm of the DFT
    Dft {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Uncertainty sweep over sizes at a fixed fill fraction
    Sweep {
        /// Comma-separated sizes
        #[arg(long, default_value = "16,32,64,128,256")]
        ns: String,
        /// Fill fraction: I = J = first floor(fill*n) indices
        #[arg(long, default_value_t = 0.25)]
        fill: f64,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Canonical-factorization comparison of two projections read from files
    Factorize {
        /// First projection, matrix CSV format
        #[arg(long = "file-p")]
        file_p: PathBuf,
        /// Second projection, matrix CSV format
        #[arg(long = "file-q")]
        file_q: PathBuf,
        /// Number of sampled unit vectors
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn emit(text: &str, output: Option<&PathBuf>) -> projpair::Result<()> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(Error::from),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> projpair::Result<()> {
    match cli.command {
        Command::Pair {
            n,
            set_i,
            set_j,
            common,
        } => {
            let set_i = args::parse_index_set(&set_i, n)?;
            let set_j = match set_j {
                Some(spec) => args::parse_index_set(&spec, n)?,
                None => set_i.clone(),
            };
            let report = localization_report(n, &set_i, &set_j)?;
            emit(&report.render(common.format.into()), common.output.as_ref())
        }
        Command::Geodesic {
            n,
            set_i,
            set_j,
            common,
        } => {
            let corner_tol = args::resolve_tol(common.tol, CORNER_TOL)?;
            let set_i = args::parse_index_set(&set_i, n)?;
            let set_j = match set_j {
                Some(spec) => args::parse_index_set(&spec, n)?,
                None => set_i.clone(),
            };
            let report = geodesic_report(n, &set_i, &set_j, corner_tol)?;
            emit(&report.render(common.format.into()), common.output.as_ref())
        }
        Command::Dft { n, common } => {
            let report = dft_report(n)?;
            emit(&report.render(common.format.into()), common.output.as_ref())
        }
        Command::Sweep { ns, fill, common } => {
            let sizes = args::parse_sizes(&ns)?;
            let rows = uncertainty_sweep(&sizes, fill)?;
            emit(
                &render_sweep(&rows, common.format.into()),
                common.output.as_ref(),
            )
        }
        Command::Factorize {
            file_p,
            file_q,
            samples,
            common,
        } => {
            let p = io::read_matrix_file(&file_p)?;
            let q = io::read_matrix_file(&file_q)?;
            let report = factorize_report(&p, &q, samples, common.seed)?;
            emit(&report.render(common.format.into()), common.output.as_ref())
        }
    }
}

/// Module errors map to distinct exit codes; see the manual.
fn exit_code(error: &Error) -> u8 {
    match error {
        Error::NoUniqueGeodesic { .. } => 4,
        Error::NotAProjectionProduct { .. } => 5,
        Error::Undefined => 6,
        Error::Io(_) => 7,
        Error::NoConvergence { .. } | Error::InternalConsistency { .. } => 8,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) => {
            eprintln!("projpair: {error}");
            ExitCode::from(exit_code(&error))
        }
    }
}
