use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;

/// Exact invariants of hyperelliptic curves y^2 = f(x) over GF(p) and
/// stability of syzygy bundles.
#[derive(Debug, Parser)]
#[command(
    name = "hypersyz",
    version,
    arg_required_else_help = true,
    args_conflicts_with_subcommands = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,

    /// Render the result as a table instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,

    /// Write the JSON document to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    /// Re-run the job recorded in a result file and compare byte for byte.
    #[arg(long, value_name = "RESULT_JSON")]
    pub replay: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CurveArg {
    /// Curve record `p=<prime>,f=<poly>`.
    #[arg(long)]
    pub curve: String,
}

#[derive(Debug, Args)]
pub struct OneDivisor {
    #[command(flatten)]
    pub curve: CurveArg,
    /// Divisor `[place,n]+...`; places are inf, split(u,v), ram(u), inert(u).
    #[arg(long)]
    pub divisor: String,
}

#[derive(Debug, Args)]
pub struct TwoDivisors {
    #[command(flatten)]
    pub curve: CurveArg,
    #[arg(long)]
    pub divisor: String,
    #[arg(long)]
    pub divisor2: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Basis of the Riemann-Roch space L(D).
    Rr(OneDivisor),
    /// h0(D) and h1(D).
    H0h1(OneDivisor),
    /// Clifford index of a divisor.
    Clifford(OneDivisor),
    /// Clifford index of the curve by exhaustive search.
    CliffordCurve {
        #[command(flatten)]
        curve: CurveArg,
        /// Largest degree searched; defaults to max(2, g - 1).
        #[arg(long)]
        bound: Option<usize>,
        /// Largest degree of the places used to build divisors.
        #[arg(long, default_value_t = 1)]
        place_degree: usize,
    },
    /// Base locus of |D|.
    BaseLocus(OneDivisor),
    /// Linear equivalence of two divisors.
    ClassEq(TwoDivisors),
    /// Rank, degree and slope of E_L.
    Invariants(OneDivisor),
    /// H0(D1) ⊗ H0(D2) -> H0(D1 + D2).
    Multmap(TwoDivisors),
    /// H0(K) ⊗ H0(K) -> H0(2K).
    Noether(CurveArg),
    /// Stability of E_L on the given curve.
    Verdict(OneDivisor),
    /// Stability of E_L from numerical invariants alone.
    VerdictAbstract {
        #[arg(long)]
        g: usize,
        /// Clifford index of the curve.
        #[arg(long)]
        c: i64,
        #[arg(long)]
        deg: i64,
        #[arg(long, default_value_t = 0)]
        h1: usize,
        #[arg(long)]
        hyperelliptic: bool,
        /// L = K(p+q) for points p, q.
        #[arg(long)]
        k_plus_2pts: bool,
    },
    /// Line-bundle quotients of E_L among low-degree pencils.
    WitnessSearch {
        #[command(flatten)]
        divisor: OneDivisor,
        /// Largest quotient degree examined.
        #[arg(long, default_value_t = 2)]
        bound: usize,
    },
    /// Build a non-semistable E_L of degree 2g - 1.
    Prop31 {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        max_attempts: usize,
    },
    /// Slopes predicted for the degree 2g - c - 1 construction.
    Prop31Predict {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        c: i64,
    },
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
