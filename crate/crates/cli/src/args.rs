use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Quadratic-field coefficient sums, main-term constants and residual reports.
///
/// All logarithms are natural logarithms.
#[derive(Debug, Parser)]
#[command(name = "qfield", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output format; defaults to json for `constants`, csv for `verify`, human otherwise.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write the report here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Include primes up to this bound in Euler products.
    #[arg(long, global = true, env = "QFIELD_PRIME_BOUND", default_value_t = 1_000_000)]
    pub prime_bound: u64,

    /// Sieve segment length.
    #[arg(long, global = true, env = "QFIELD_SEGMENT_SIZE", default_value_t = 1 << 20)]
    pub segment_size: usize,

    /// Worker threads for the sieve (default: all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    /// Largest x accepted by sum, count, identity and verify.
    #[arg(long, global = true, default_value_t = 100_000_000)]
    pub max_x: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Human,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Main-term constants A, B and every ingredient constant.
    Constants(ConstantsArgs),
    /// Exact sum of a(n) for n <= x.
    Sum(SumArgs),
    /// Integer solutions of Q(u,v) = w^3 with w <= x.
    Count(CountArgs),
    /// Dirichlet-series partial sum against its closed form.
    Identity(IdentityArgs),
    /// Exact sums, main terms and residuals on a grid of x.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct ConstantsArgs {
    /// 1: sum r_K(n)^2; 2: sum r_K(n^3); 3: solutions of Q(u,v) = w^3.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    pub corollary: u8,

    /// Discriminant (corollaries 1 and 2; for 3 the principal form is used).
    #[arg(long = "D", allow_negative_numbers = true, required_unless_present = "form")]
    pub discriminant: Option<i64>,

    /// Form "a,b,c" (corollary 3).
    #[arg(long, allow_hyphen_values = true, conflicts_with = "discriminant")]
    pub form: Option<String>,
}

#[derive(Debug, Args)]
pub struct SumArgs {
    /// rk, rk2 or rk3.
    #[arg(long)]
    pub kind: String,

    #[arg(long = "D", allow_negative_numbers = true)]
    pub discriminant: i64,

    #[arg(long)]
    pub x: u64,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    /// Form "a,b,c" of class number one.
    #[arg(long, allow_hyphen_values = true)]
    pub form: String,

    #[arg(long, allow_negative_numbers = true)]
    pub x: f64,
}

#[derive(Debug, Args)]
pub struct IdentityArgs {
    /// rk, rk2 or rk3.
    #[arg(long)]
    pub kind: String,

    #[arg(long = "D", allow_negative_numbers = true)]
    pub discriminant: i64,

    #[arg(long, allow_negative_numbers = true)]
    pub s: f64,

    /// Number of terms of the partial sum.
    #[arg(long = "N")]
    pub terms: u64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// rk2 or rk3.
    #[arg(long)]
    pub kind: String,

    #[arg(long = "D", allow_negative_numbers = true)]
    pub discriminant: i64,

    /// Comma list ("1e4,1e5") or "lo:hi:points-per-decade".
    #[arg(long)]
    pub grid: String,
}
