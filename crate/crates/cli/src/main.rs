//! `cubist` — exact checks of the two-point counting relation on cubic
//! hypersurfaces over small prime fields, plus the Hodge and Euler
//! shadows of the same identity.
//!
//! Exit codes are a stable contract: `0` pass, `1` usage or input error,
//! `2` verification failure.

mod catalog;
mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "cubist",
    version,
    about = "Counting identities for cubic hypersurfaces: lines, two-point schemes, \
             and their Hodge and Euler shadows",
    arg_required_else_help = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit machine-readable JSON on stdout instead of tables.
    #[arg(long, global = true)]
    pub json: bool,
    /// Advisory worker-thread count; results do not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Subcommand)]
pub enum Command {
    /// Count lines on a cubic twice: exhaustive enumeration against the
    /// point-count formula.
    Lines(GeometricArgs),
    /// Check the two-point counting identities (length-2 subschemes and
    /// point pairs) by brute-force enumeration.
    Verify(GeometricArgs),
    /// Print the Hodge diamonds of a smooth cubic and of its variety of
    /// lines.
    Hodge(HodgeArgs),
    /// Line count of the variety of lines from the Euler characteristic
    /// of the cubic.
    Euler(EulerArgs),
    /// Real line count from real and complex Euler characteristics.
    Real(RealArgs),
    /// Run the symbolic identity suite in the Grothendieck ring.
    Symbolic(SymbolicArgs),
    /// Truncated zeta data: point counts and symmetric-power counts,
    /// cross-checked against independent orbit enumeration.
    Zeta(ZetaArgs),
}

/// Flags shared by the subcommands that take an explicit cubic. Exactly
/// one source must be given; `--file` carries its own dimension and
/// characteristic in the header, the other sources need `--dim`/`--p`.
#[derive(Args)]
#[command(group(clap::ArgGroup::new("source").required(true).multiple(false)))]
pub struct GeometricArgs {
    /// Field characteristic (a prime).
    #[arg(long)]
    pub p: Option<u64>,
    /// Hypersurface dimension d (the cubic lives in projective (d+1)-space).
    #[arg(long)]
    pub dim: Option<u32>,
    /// Catalog cubic: fermat, node, or cayley.
    #[arg(long, group = "source")]
    pub named: Option<String>,
    /// Read the cubic from a file: header `cubic d=<d> p=<p>`, then one
    /// `<coeff> <e_0> ... <e_{d+1}>` term per line.
    #[arg(long, group = "source")]
    pub file: Option<PathBuf>,
    /// Draw a seeded random cubic with uniform coefficients.
    #[arg(long, group = "source")]
    pub random: bool,
    /// Seed for --random (default 0).
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Args)]
pub struct HodgeArgs {
    /// Dimension of the smooth cubic hypersurface (at least 2).
    #[arg(long)]
    pub dim: u32,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
pub struct EulerArgs {
    /// Euler characteristic of the cubic.
    #[arg(long)]
    pub chi: i64,
    /// Euler characteristic of its singular locus.
    #[arg(long, default_value_t = 0)]
    pub sing: i64,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
pub struct RealArgs {
    /// Euler characteristic of the real point set.
    #[arg(long = "chiR")]
    pub chi_r: i64,
    /// Euler characteristic of the complex point set.
    #[arg(long = "chiC")]
    pub chi_c: i64,
    /// Parity of the cubic's dimension.
    #[arg(long, value_enum)]
    pub parity: Parity,
    /// Euler characteristic of the real singular locus.
    #[arg(long = "chiRSing", default_value_t = 0)]
    pub chi_r_sing: i64,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Args)]
pub struct SymbolicArgs {
    /// Which identity family to run.
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Number of random classes for the series-inverse property.
    #[arg(long, default_value_t = 40)]
    pub cases: u32,
    /// Seed for the random classes.
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Every identity family.
    All,
    /// Two-point identity rearranged through the defect formula.
    Rearrangement,
    /// Symmetric squares of projective spaces.
    Squares,
    /// One-node cubics: lines from the projection complete intersection.
    Singular,
    /// Symmetric series of a class times the series of its negative.
    Inverse,
}

#[derive(Args)]
pub struct ZetaArgs {
    #[command(flatten)]
    pub geo: GeometricArgs,
    /// Truncation order (1 to 3).
    #[arg(long)]
    pub order: u32,
}

/// Failures after successful argument parsing, split by exit code.
pub enum CliError {
    /// Invalid or unusable input — exit code 1.
    Input(String),
    /// A checked relation did not hold — exit code 2.
    Failed(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version are successful exits; everything else
            // is a usage error with the stable code 1.
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = cli.threads {
        // Advisory: shrinks or grows the worker pool, never the results.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match commands::dispatch(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Failed(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(2)
        }
    }
}
