//! Command-line arguments.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Direction flags within this distance of unit norm are rescaled; farther
/// ones are rejected. Wide enough for four-decimal truncations like 0.7071.
pub const AUTO_NORMALIZE_WINDOW: f64 = 1e-4;

#[derive(Debug, Parser)]
#[command(
    name = "hvdiscord",
    version,
    about = "Hidden-variable conditioning and quantum discord checks"
)]
#[command(
    after_help = "Exit codes: 0 all checks pass, 1 a physics check failed, 2 usage or input error, \
3 degenerate configuration."
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Seed for every random draw.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,

    /// Absolute tolerance for exact identities.
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub tol: f64,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Emit::Json)]
    pub emit: Emit,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RigidityMode {
    Operator,
    State,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that the hidden-variable model reproduces (1 + s·m)/2.
    ///
    /// CSV columns: sx,sy,sz,mx,my,mz,measure,expected,abs_error (one row per random pair).
    VerifyBell {
        /// Number of random (s, m) pairs.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        /// Monte Carlo draws of the hidden variable for the sampling cross-check.
        #[arg(long, default_value_t = 1_000_000)]
        mc_samples: usize,
    },
    /// Compare the reduction-first and operator-product conditional representations.
    ///
    /// CSV columns: omega_start,omega_end,rep9_value,rep12_value over half-open [start, end).
    Conflict {
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
        s: [f64; 3],
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
        n: [f64; 3],
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
        m: [f64; 3],
    },
    /// Term-by-term values of λP_n + (1−λ)P_m against its spectrum.
    ///
    /// CSV columns: omega_start,omega_end,value,n_fires,m_fires,in_spectrum over half-open [start, end).
    Linearity {
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
        n: [f64; 3],
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
        m: [f64; 3],
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
        s: [f64; 3],
    },
    /// Quantum discord of a two-qubit state with a projective measurement on X.
    ///
    /// CSV columns: discord,ax,ay,az,s_x,s_y,s_xy,cond_entropy_min.
    /// Landscape CSV columns: ax,ay,az,cond_entropy.
    Discord {
        #[command(flatten)]
        state: StateArgs,
        /// Directions in the coarse hemisphere grid.
        #[arg(long, default_value_t = 1000)]
        grid: usize,
        /// Also write the grid landscape as CSV to this path.
        #[arg(long)]
        landscape: Option<PathBuf>,
    },
    /// Operator and state rigidity under the classical conditioning rule.
    Rigidity {
        #[arg(long, value_enum, default_value_t = RigidityMode::Operator)]
        mode: RigidityMode,
        /// Random projector pairs (operator mode) or random states (state mode).
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
    /// Check that the joint representation's marginals reproduce both prescriptions.
    ///
    /// CSV columns: omega_start,omega_end,marginal_omega,rep9_value,marginal_omega_prime,rep12_value.
    Unified {
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
        m: [f64; 3],
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
        n: [f64; 3],
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
        s: [f64; 3],
    },
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct StateArgs {
    /// `named:<preset>` or an inline JSON state document.
    #[arg(long)]
    pub state: Option<String>,
    /// Path to a JSON state document.
    #[arg(long)]
    pub state_file: Option<PathBuf>,
}

/// Parses `x,y,z`.
pub fn parse_triple(text: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated numbers, got '{text}'"));
    }
    let mut out = [0.0f64; 3];
    for (slot, part) in out.iter_mut().zip(parts) {
        *slot = part.parse().map_err(|_| format!("'{part}' is not a number"))?;
        if !slot.is_finite() {
            return Err(format!("'{part}' is not finite"));
        }
    }
    Ok(out)
}
