//! Flag grammar and run configuration.

use std::path::PathBuf;

use antcycle::{LogBase, Params};
use clap::{Parser, ValueEnum};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Fixed,
    Entropy,
    Compare,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Fixed => "fixed",
            Mode::Entropy => "entropy",
            Mode::Compare => "compare",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LogBaseArg {
    Two,
    Natural,
}

impl From<LogBaseArg> for LogBase {
    fn from(value: LogBaseArg) -> Self {
        match value {
            LogBaseArg::Two => LogBase::Two,
            LogBaseArg::Natural => LogBase::Natural,
        }
    }
}

/// TSP benchmark driver: fixed-length, entropy-terminated and side-by-side
/// colony runs with CSV traces, histogram tables and JSON summaries.
#[derive(Clone, Debug, Parser)]
#[command(name = "antcycle", version)]
pub struct Cli {
    /// TSPLIB instance file (EUC_2D).
    #[arg(long)]
    pub instance: PathBuf,

    /// What to run.
    #[arg(long, value_enum, default_value = "compare")]
    pub mode: Mode,

    /// Pheromone exponent.
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,

    /// Heuristic exponent.
    #[arg(long, default_value_t = 8.0)]
    pub beta: f64,

    /// Evaporation fraction in [0, 1).
    #[arg(long, default_value_t = 0.4)]
    pub rho: f64,

    /// Pheromone deposit constant.
    #[arg(long, default_value_t = 100.0)]
    pub q: f64,

    /// Initial pheromone per edge.
    #[arg(long, default_value_t = 1.0)]
    pub tau0: f64,

    /// Number of ants; defaults to one per city.
    #[arg(long)]
    pub ants: Option<usize>,

    /// Iteration count for fixed runs (default 500) and safety cap for
    /// entropy runs (default 1000).
    #[arg(long)]
    pub iters: Option<usize>,

    /// Relative-change threshold of the stopping criterion.
    #[arg(long, default_value_t = 1e-3)]
    pub epsilon: f64,

    /// Consecutive criterion hits required before stopping.
    #[arg(long, default_value_t = 1)]
    pub patience: usize,

    /// Master seed; repeat r runs with seed + r.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Runs per mode.
    #[arg(long, default_value_t = 1)]
    pub repeats: usize,

    /// Entropy logarithm base.
    #[arg(long = "log-base", value_enum, default_value = "natural")]
    pub log_base: LogBaseArg,

    /// Histogram bin width; defaults to (max-min)/ceil(sqrt(m)).
    #[arg(long = "hist-delta")]
    pub hist_delta: Option<f64>,

    /// Histogram origin; defaults to the smallest length.
    #[arg(long = "hist-origin")]
    pub hist_origin: Option<f64>,

    /// Iterations to emit histograms for (default: 1,10,50,100 and the last
    /// one, where available).
    #[arg(long = "hist-iters", value_delimiter = ',')]
    pub hist_iters: Option<Vec<usize>>,

    /// Output directory.
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

/// Fully resolved configuration of one invocation.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub instance_name: String,
    pub mode: Mode,
    /// Base parameters; `seed` is the base seed and `nc_max` is filled per
    /// mode from `fixed_iters` / `entropy_cap`.
    pub params: Params,
    pub fixed_iters: usize,
    pub entropy_cap: usize,
    pub repeats: usize,
    pub out: PathBuf,
    pub hist_delta: Option<f64>,
    pub hist_origin: Option<f64>,
    pub hist_iters: Option<Vec<usize>>,
}

impl Cli {
    /// Resolves defaults against the parsed instance and validates the
    /// parameter ranges.
    pub fn to_config(&self, instance_name: &str, n_cities: usize) -> Result<RunConfig, CliError> {
        let params = Params {
            alpha: self.alpha,
            beta: self.beta,
            rho: self.rho,
            q: self.q,
            tau0: self.tau0,
            ants: self.ants.unwrap_or(n_cities),
            nc_max: self.iters.unwrap_or(500),
            epsilon: self.epsilon,
            log_base: self.log_base.into(),
            seed: self.seed,
            patience: self.patience,
            restart_starts: true,
        };
        params
            .validate()
            .map_err(|e| CliError::Usage(e.to_string()))?;
        if self.repeats == 0 {
            return Err(CliError::Usage("--repeats must be at least 1".into()));
        }
        if let Some(delta) = self.hist_delta {
            if delta.is_nan() || delta <= 0.0 {
                return Err(CliError::Usage(format!(
                    "--hist-delta must be > 0, got {delta}"
                )));
            }
        }
        Ok(RunConfig {
            instance_name: instance_name.to_string(),
            mode: self.mode,
            params,
            fixed_iters: self.iters.unwrap_or(500),
            entropy_cap: self.iters.unwrap_or(1000),
            repeats: self.repeats,
            out: self.out.clone(),
            hist_delta: self.hist_delta,
            hist_origin: self.hist_origin,
            hist_iters: self.hist_iters.clone(),
        })
    }
}

impl RunConfig {
    /// Parameters for repeat `r` of the given mode.
    pub fn params_for(&self, mode: Mode, repeat: usize) -> Params {
        let mut p = self.params.clone();
        p.seed = self.params.seed.wrapping_add(repeat as u64);
        p.nc_max = match mode {
            Mode::Entropy => self.entropy_cap,
            _ => self.fixed_iters,
        };
        p
    }
}
