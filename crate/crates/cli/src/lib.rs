//! The `glmn` command-line front end.
//!
//! Every subcommand renders into a caller-supplied writer so the same code
//! path serves the binary, the integration tests and the acceptance suite.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use glmn_core::{ModuleKind, SuperParams, Weight};

pub mod commands;
pub mod error;
pub mod weights;

pub use error::{CliError, CliResult, EXIT_DOMAIN, EXIT_INTERNAL, EXIT_OK, EXIT_USAGE};

#[derive(Parser, Debug)]
#[command(name = "glmn", version, about = "Block combinatorics, complexity and oracles for gl(m|n)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Where the weights of an experiment come from.
#[derive(Args, Debug, Clone)]
pub struct WeightSpec {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    /// Comma-separated coefficients; repeatable.
    #[arg(long = "weight", allow_hyphen_values = true)]
    pub weights: Vec<String>,
    /// Newline-delimited file of comma-separated coefficient lists.
    #[arg(long)]
    pub weights_file: Option<PathBuf>,
    /// Every dominant weight with coefficients in `lo:hi`.
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Option<String>,
    /// Draw this many grid points instead of taking all of them.
    #[arg(long, requires = "grid")]
    pub sample: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl WeightSpec {
    pub fn params(&self) -> CliResult<SuperParams> {
        Ok(SuperParams::new(self.m, self.n)?)
    }

    /// Inline weights, then file weights, then grid weights, in that order.
    pub fn resolve(&self) -> CliResult<Vec<Weight>> {
        let params = self.params()?;
        let mut out = Vec::new();
        for w in &self.weights {
            out.push(weights::parse_weight(params, w)?);
        }
        if let Some(path) = &self.weights_file {
            out.extend(weights::read_weights_file(params, path)?);
        }
        if let Some(g) = &self.grid {
            let (lo, hi) = weights::parse_range(g)?;
            let grid = weights::dominant_grid(params, lo, hi)?;
            out.extend(match self.sample {
                Some(count) => weights::sample(grid, count, self.seed),
                None => grid,
            });
        }
        if out.is_empty() {
            return Err(CliError::usage("no weights given (use --weight, --weights-file or --grid)"));
        }
        Ok(out)
    }
}

fn parse_kind(s: &str) -> Result<ModuleKind, String> {
    s.parse().map_err(|e: glmn_core::Error| e.to_string())
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Atypicality, Ω, core, lengths and dominance of weights.
    Classify {
        #[command(flatten)]
        spec: WeightSpec,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Closed-form complexity, z-invariant and variety dimensions.
    Invariants {
        #[command(flatten)]
        spec: WeightSpec,
        #[arg(long, value_parser = parse_kind)]
        kind: ModuleKind,
        /// Cross-check against explicit matrix modules where feasible.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Lattice-point counts of the dilated polytope and the quasipolynomial fit.
    Ehrhart {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        dmin: u64,
        #[arg(long, default_value_t = 60)]
        dmax: u64,
        /// Counts used for the fit run over `1..=fit-dmax`.
        #[arg(long)]
        fit_dmax: Option<u64>,
        /// Write the fitted quasipolynomial as JSON here.
        #[arg(long)]
        qp_out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Minimal projective resolution of a gl(1|1) module and its growth.
    Resolve {
        #[arg(long, value_parser = parse_kind, default_value = "simple")]
        kind: ModuleKind,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// `a` for the weight `a(ε_1 − ε_2)`, or both coefficients `a,−a`.
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        weight: String,
        #[arg(long, default_value_t = 15)]
        depth: usize,
        /// Emit the KL table for `λ, μ ∈ [−R, R]`.
        #[arg(long, default_value_t = 0)]
        kl_window: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match commands::dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "glmn: {e}");
            e.code
        }
    }
}
