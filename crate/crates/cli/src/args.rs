use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "casas",
    version,
    about = "Exact checks and searches for Casas-Alvero counterexamples"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Write the versioned JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Print only the verdict line (text mode).
    #[arg(long, global = true)]
    pub quiet: bool,
    /// Include wall-clock timings in the JSON report.
    #[arg(long, global = true)]
    pub timings: bool,
    /// Worker threads for searches; defaults to the available cores.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub threads: Option<u64>,
    /// Seed for randomized steps; results never depend on it.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest enumeration a search may attempt.
    #[arg(long, global = true, env = "CASAS_BUDGET", default_value_t = casas_core::casas::DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a monic polynomial is a counterexample.
    Check {
        #[arg(long)]
        field: String,
        #[arg(long)]
        poly: String,
        #[arg(long, conflicts_with = "expect_no_counterexample")]
        expect_counterexample: bool,
        #[arg(long)]
        expect_no_counterexample: bool,
    },
    /// Print Hasse derivatives P_i.
    Hasse {
        #[arg(long)]
        field: String,
        #[arg(long)]
        poly: String,
        /// Only this index; default is every 1 <= i < deg P.
        #[arg(long)]
        index: Option<usize>,
    },
    /// Enumerate the normalized degree-d slice over a finite field.
    Search(SearchArgs),
    /// Coefficient-elimination trace for d = n p^k.
    Cascade {
        #[arg(long)]
        degree: u64,
        #[arg(long)]
        prime: u64,
    },
    /// Degrees 1 <= d < max settled by the prime-power rules.
    Coverage {
        #[arg(long)]
        max: u64,
    },
    /// Resultants Res(P, P_i) of the generic polynomial.
    Symbolic {
        #[arg(long)]
        degree: usize,
        /// Only this index; default is every 1 <= i < d.
        #[arg(long)]
        index: Option<usize>,
        /// Coefficient field; default is the integers.
        #[arg(long)]
        field: Option<String>,
        /// Check whether the resultants form a Groebner basis (needs a field).
        #[arg(long)]
        gb: bool,
        /// Lift the degree ceilings.
        #[arg(long)]
        long: bool,
    },
    /// The quadrinomial family X^6 + a X^4 + X^3 + b X^2.
    #[command(subcommand)]
    Quad(QuadCommand),
    /// Rebuild the integer M from its factorization.
    VerifyM,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub degree: usize,
    #[arg(long)]
    pub field: String,
    /// Half-open candidate index range `START..END`.
    #[arg(long)]
    pub range: Option<String>,
    #[arg(long, default_value_t = 1 << 16, value_parser = clap::value_parser!(u64).range(1..))]
    pub block_size: u64,
    /// Cross-check every n-th candidate through resultants; 0 disables.
    #[arg(long, default_value_t = 100)]
    pub consistency_stride: u64,
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    /// Seconds between checkpoint writes.
    #[arg(long, default_value_t = 30, requires = "checkpoint")]
    pub checkpoint_interval: u64,
    /// Continue from the checkpoint file if it exists.
    #[arg(long, requires = "checkpoint")]
    pub resume: bool,
    #[command(flatten)]
    pub expect: ExpectHits,
}

#[derive(Debug, Args)]
pub struct ExpectHits {
    /// Exit 1 if any hit is found.
    #[arg(long, conflicts_with = "expect_hits")]
    pub expect_empty: bool,
    /// Exit 1 if no hit is found.
    #[arg(long)]
    pub expect_hits: bool,
}

#[derive(Debug, Subcommand)]
pub enum QuadCommand {
    /// All (a, b) in F_p^2 giving a counterexample, by a sweep over a.
    Scan {
        #[arg(long)]
        prime: u64,
        #[command(flatten)]
        expect: ExpectHits,
    },
    /// Whether a counterexample exists over the algebraic closure of F_p.
    Closure {
        #[arg(long)]
        prime: u64,
        #[arg(long, conflicts_with = "expect_no_point")]
        expect_point: bool,
        #[arg(long)]
        expect_no_point: bool,
    },
    /// Check one member of the family.
    Point {
        #[arg(long)]
        prime: String,
        /// Any integer; reduced mod p.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, conflicts_with = "expect_no_counterexample")]
        expect_counterexample: bool,
        #[arg(long)]
        expect_no_counterexample: bool,
    },
    /// Res(P, P_i) over Z[a, b] and the indices where it vanishes.
    Resultants {
        /// Random integer points used to cross-check each resultant.
        #[arg(long, default_value_t = 8)]
        samples: usize,
    },
}
