//! `wreath`: descent statistics and Euler–Mahonian polynomials on `C_a ≀ S_n`.
//!
//! Exit codes: 0 success (or identity holds), 1 identity fails, 2 usage or
//! parse error, 3 enumeration limit exceeded.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "wreath", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print Des_L, des_L and rmaj_{L,n} of a colored permutation.
    Stats(StatsArgs),
    /// Print A^maj_{a,ℓ,n}(t,q), or with --q1 the Eulerian polynomial A_{a,ℓ,n}(t).
    Poly(PolyArgs),
    /// Print the polynomials for n = 0..=N.
    Table(TableArgs),
    /// Check one identity exactly.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Method {
    Enumerate,
    #[default]
    Recurrence,
    Derivative,
    Specialize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum SourceArg {
    #[default]
    Recurrence,
    Enumeration,
}

/// The color set: either an explicit `--L` list or a size `--ell`,
/// which selects `L = {0, …, ℓ-1}`.
#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct ColorArgs {
    /// Comma-separated colors forming L (empty for L = ∅).
    #[arg(long = "L", value_name = "COLORS")]
    pub colors: Option<String>,
    /// |L|; uses L = {0, …, ℓ-1}.
    #[arg(long)]
    pub ell: Option<u32>,
}

#[derive(Debug, Args)]
pub struct EnumArgs {
    /// Worker threads for enumeration.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Largest group size a^n·n! that may be enumerated.
    #[arg(long, default_value_t = wreath_mahonian::perm::DEFAULT_ENUMERATION_LIMIT)]
    pub limit: u64,
    /// Lift the enumeration limit entirely.
    #[arg(long)]
    pub no_guard: bool,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    #[arg(long)]
    pub a: u32,
    #[command(flatten)]
    pub colors: ColorArgs,
    /// Window, e.g. "3^2 1^0 2^1" (for a = 2 also "-3 1 2").
    #[arg(long, allow_hyphen_values = true)]
    pub perm: String,
    /// Also print the tilde statistics (right sentinel).
    #[arg(long)]
    pub tilde: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    #[arg(long)]
    pub a: u32,
    #[command(flatten)]
    pub colors: ColorArgs,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t)]
    pub method: Method,
    /// Set q = 1 (Eulerian polynomial).
    #[arg(long)]
    pub q1: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    #[command(flatten)]
    pub enumeration: EnumArgs,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub a: u32,
    #[command(flatten)]
    pub colors: ColorArgs,
    /// Largest n in the table.
    #[arg(long = "N", value_name = "N")]
    pub max_n: usize,
    #[arg(long, value_enum, default_value_t)]
    pub method: Method,
    #[arg(long)]
    pub q1: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    #[command(flatten)]
    pub enumeration: EnumArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// One of: recursion, recursion2, quotient, des-quotient, gf, egf, lemma,
    /// l-independence, maj-rmaj, tilde.
    #[arg(long)]
    pub identity: String,
    #[arg(long, default_value_t = 1)]
    pub a: u32,
    #[command(flatten)]
    pub colors: ColorArgs,
    #[arg(long, default_value_t = 0)]
    pub n: usize,
    /// Highest power of t compared by the quotient identities.
    #[arg(long = "S", value_name = "S")]
    pub t_truncation: Option<usize>,
    /// Order in u for the generating-function identities.
    #[arg(long = "N", value_name = "N")]
    pub u_order: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    pub source: SourceArg,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    #[command(flatten)]
    pub enumeration: EnumArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Stats(args) => commands::stats(&args),
        Command::Poly(args) => commands::poly(&args),
        Command::Table(args) => commands::table(&args),
        Command::Verify(args) => commands::verify(&args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(commands::exit_code(&err))
        }
    }
}
