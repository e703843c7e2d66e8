use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "zetanorm", version, about = "Asymptotic expansions of p-norm integrals and moments")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct GlobalOpts {
    /// Working precision in decimal digits.
    #[arg(long, global = true, default_value_t = 30, value_parser = clap::value_parser!(u32).range(15..=2000))]
    pub digits: u32,

    /// Tolerance for checks comparing two evaluation routes.
    #[arg(long, global = true, default_value_t = 1e-7, value_parser = positive_f64)]
    pub tol: f64,

    /// Seed for Monte Carlo sampling.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    pub seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Omit the timestamp and wall time from the report.
    #[arg(long, global = true)]
    pub no_timestamp: bool,

    /// Write the report to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    #[serde(skip)]
    pub out: Option<PathBuf>,

    /// Relative tolerance of adaptive quadrature.
    #[arg(long, global = true, default_value_t = 1e-12, value_parser = positive_f64)]
    pub quad_tol: f64,

    /// Leading-index terms summed by the multiple zeta oracle.
    #[arg(long, global = true, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1000..))]
    pub sum_terms: u64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Poly,
    Alt,
    Both,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteArg {
    Exact,
    Numeric,
    All,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Coefficients I_0 … I_P of I(n) = ∫₀¹ [xⁿ + (1−x)ⁿ]^{1/n} dx.
    Coeffs(CoeffsArgs),
    /// Truncated series for I(n) against quadrature.
    Eval(EvalArgs),
    /// Moment expansion of ‖(U, 1−U)‖_n.
    Moments(MomentsArgs),
    /// Monte Carlo moments of ‖(U₁, …, U_r)‖_n.
    Norms(NormsArgs),
    /// Distance between the distribution functions of Z_n and Z_∞.
    Cdf(CdfArgs),
    /// Run the identity and cross-check suites.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct CoeffsArgs {
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(2..=16))]
    pub max_order: u32,

    #[arg(long, value_enum, default_value_t = Basis::Poly)]
    pub basis: Basis,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct EvalArgs {
    /// Comma-separated values of n (each ≥ 2).
    #[arg(long = "n", value_delimiter = ',', default_values_t = vec![10.0, 20.0, 40.0], value_parser = n_value)]
    pub n: Vec<f64>,

    /// Truncation order P.
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(0..=16))]
    pub order: u32,

    /// Skip the quadrature comparison.
    #[arg(long)]
    pub no_compare: bool,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct MomentsArgs {
    /// Moment order s > 0.
    #[arg(long, default_value_t = 2.0, value_parser = positive_f64)]
    pub s: f64,

    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(2..=16))]
    pub max_order: u32,

    /// Use the Bell-polynomial route even for integer s.
    #[arg(long)]
    pub real: bool,

    /// Evaluate the truncated series at this n.
    #[arg(long = "n", value_parser = n_value)]
    pub n: Option<f64>,

    /// Compare against quadrature at n.
    #[arg(long, requires = "n")]
    pub compare: bool,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct NormsArgs {
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(2..=64))]
    pub r: u32,

    #[arg(long, default_value_t = 1.0, value_parser = positive_f64)]
    pub s: f64,

    #[arg(long = "n", default_value_t = 20.0, value_parser = n_value)]
    pub n: f64,

    #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1000..))]
    pub samples: u64,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct CdfArgs {
    #[arg(long = "n", value_delimiter = ',', default_values_t = vec![16.0, 32.0, 64.0], value_parser = n_value)]
    pub n: Vec<f64>,

    #[arg(long, default_value_t = 512, value_parser = clap::value_parser!(u64).range(64..=1_000_000))]
    pub grid: u64,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    pub suite: SuiteArg,
}

fn positive_f64(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(format!("expected a positive number, got {s}"))
    }
}

fn n_value(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() && v >= 2.0 {
        Ok(v)
    } else {
        Err(format!("n must be a number ≥ 2, got {s}"))
    }
}
