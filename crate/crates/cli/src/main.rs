//! rpstruct: exact verification runs for holonomy trace maps and diagonal flows.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;

#[derive(Parser)]
#[command(name = "rpstruct", version, about = "Exact holonomy and flow verification suite")]
struct Cli {
    #[command(flatten)]
    global: Global,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug)]
pub struct Global {
    /// Write the machine-readable result here ("-" for stdout)
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,

    /// Seed for every random choice
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Record wall-clock time in the report
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Recompute every reference determinant and closed-form trace
    ReproduceAppendix {
        /// Random points per size for each closed form
        #[arg(long, default_value_t = 25)]
        points: usize,

        #[arg(long, hide = true)]
        corrupt_recipe: bool,
    },

    /// Fixed components, stratum table, leaf space and involution for C_i on RP^n
    Leafspace {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
    },

    /// Exact Jacobian of the trace map at a rational point
    Jacobian {
        /// case1, case2 or case3
        #[arg(long)]
        recipe: String,
        #[arg(long)]
        t: usize,
        /// Number of variables (case3 only)
        #[arg(long)]
        k: Option<usize>,
        /// Comma-separated rationals, e.g. 2,3 or 7/3,-2/5
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// Pair with Symplectic(t) instead of DiagonalPM(t, k)
        #[arg(long)]
        symplectic: bool,
    },

    /// Compare a closed-form trace with the direct computation
    TraceCheck {
        /// case1-odd, case1-even, case2-even, case2-odd-half-even, case2-odd-half-odd
        #[arg(long)]
        formula: String,
        #[arg(long)]
        t: usize,
        /// Check at this point; otherwise at --samples random points
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        #[arg(long, default_value_t = 25)]
        samples: usize,
    },

    /// Distinct-eigenvalue test for C = APAP^-1
    Admissibility {
        #[arg(long)]
        recipe: String,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// Test C^power instead of C
        #[arg(long, default_value_t = 1)]
        power: u32,
    },

    /// Seeded Monte Carlo scenarios: admissibility, flow-oracle
    Montecarlo {
        #[arg(long)]
        scenario: String,
        #[arg(long)]
        trials: usize,
    },

    /// Invariant-embedding obstruction on the interval quotients
    IntervalObstruction {
        #[arg(long, default_value_t = 6)]
        max_i: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = &cli.global;
    let outcome = match cli.command {
        Command::ReproduceAppendix { points, corrupt_recipe } => {
            commands::reproduce_appendix(g, points, corrupt_recipe)
        }
        Command::Leafspace { n, i } => commands::leafspace(g, n, i),
        Command::Jacobian { recipe, t, k, point, symplectic } => {
            commands::jacobian(g, &recipe, t, k, &point, symplectic)
        }
        Command::TraceCheck { formula, t, point, samples } => {
            commands::trace_check(g, &formula, t, point.as_deref(), samples)
        }
        Command::Admissibility { recipe, t, k, point, power } => {
            commands::admissibility(g, &recipe, t, k, &point, power)
        }
        Command::Montecarlo { scenario, trials } => commands::montecarlo(g, &scenario, trials),
        Command::IntervalObstruction { max_i } => commands::interval_obstruction(g, max_i),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::USAGE)
        }
    }
}
