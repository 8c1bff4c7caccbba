//! Command-line surface.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "ringlocal",
    version,
    about = "Ring experiments: simulations, sweeps, oracle checks and adversarial constructions, emitted as deterministic CSV"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate the worst-case segment recurrence against the popcount-sum
    /// oracle: rows `p,a_p,oracle,match`.
    Recurrence {
        #[arg(long)]
        p_max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one algorithm on one instance: rows `node,id,output,radius`,
    /// then a summary row `n,sum,max,avg_num,avg_den`.
    Simulate {
        /// Strategy name from the registry.
        #[arg(long)]
        algorithm: String,
        /// Explicit comma-separated identifier sequence.
        #[arg(long, value_delimiter = ',')]
        ids: Option<Vec<u64>>,
        /// Use the deterministic worst-case construction on n nodes.
        #[arg(long)]
        builder: bool,
        /// Use a seeded random permutation of {1..n}.
        #[arg(long)]
        random: bool,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 64)]
        universe_bits: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Measure an algorithm on worst-case instances over a range of n:
    /// rows `n,max_radius,sum_radii,avg_num,avg_den`.
    Sweep {
        #[arg(long)]
        algorithm: String,
        /// `a:b` for a linear range, `a:b:geom` for doubling.
        #[arg(long)]
        n_range: String,
        #[arg(long, default_value_t = 64)]
        universe_bits: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive worst-case search for largest-id:
    /// row `n,max_sum,max_radius,witness,predicted`.
    Bruteforce {
        #[arg(long)]
        n: usize,
        /// Enumeration cap (defaults to RINGLOCAL_ENUM_CAP or 9; at most 10).
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the concatenated hard permutation and report per-slice radii:
    /// rows `slice,centre,source_radius,pi_radius`.
    Adversary {
        #[arg(long)]
        algorithm: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Randomized)]
        mode: ModeArg,
        /// Profile evaluations per search in randomized mode.
        #[arg(long, default_value_t = 200)]
        max_evals: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = ObjectiveArg::Max)]
        objective: ObjectiveArg,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, default_value_t = 64)]
        universe_bits: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Randomized,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ObjectiveArg {
    Max,
    Average,
}
