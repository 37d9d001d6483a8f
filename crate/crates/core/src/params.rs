//! Run parameters.

use core::fmt;

#[allow(unused_imports)]
use num_traits::Float;

/// Logarithm base used for entropy values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LogBase {
    Two,
    Natural,
}

impl LogBase {
    pub fn log(self, x: f64) -> f64 {
        match self {
            LogBase::Two => x.log2(),
            LogBase::Natural => x.ln(),
        }
    }
}

/// All tunables of a colony run.
///
/// `rho` is the fraction of pheromone that evaporates each iteration: the
/// update keeps `(1 - rho)` of the old trail and adds the fresh deposits.
#[derive(Clone, Debug, PartialEq)]
pub struct Params {
    /// Pheromone exponent.
    pub alpha: f64,
    /// Heuristic exponent.
    pub beta: f64,
    /// Evaporation fraction in `[0, 1)`.
    pub rho: f64,
    /// Pheromone constant deposited as `q / tour_length` per edge.
    pub q: f64,
    /// Initial pheromone on every edge.
    pub tau0: f64,
    /// Number of ants `m`.
    pub ants: usize,
    /// Iteration cap.
    pub nc_max: usize,
    /// Relative-change threshold of the entropy stopping criterion.
    pub epsilon: f64,
    /// Base of the entropy logarithm.
    pub log_base: LogBase,
    /// Master RNG seed; together with the instance it fully determines a run.
    pub seed: u64,
    /// Number of consecutive iterations the stopping criterion must hold
    /// before an entropy-terminated run stops.
    pub patience: usize,
    /// Redraw start cities every iteration instead of keeping the initial
    /// placement for the whole run.
    pub restart_starts: bool,
}

/// Parameter validation failures.
#[derive(Clone, Debug, PartialEq)]
pub enum ParamsError {
    AlphaNegative(f64),
    BetaNegative(f64),
    RhoOutOfRange(f64),
    QNotPositive(f64),
    Tau0NotPositive(f64),
    NoAnts,
    NoIterations,
    EpsilonNotPositive(f64),
    NoPatience,
}

impl fmt::Display for ParamsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamsError::AlphaNegative(v) => write!(f, "alpha must be >= 0, got {v}"),
            ParamsError::BetaNegative(v) => write!(f, "beta must be >= 0, got {v}"),
            ParamsError::RhoOutOfRange(v) => write!(f, "rho must lie in [0, 1), got {v}"),
            ParamsError::QNotPositive(v) => write!(f, "q must be > 0, got {v}"),
            ParamsError::Tau0NotPositive(v) => write!(f, "tau0 must be > 0, got {v}"),
            ParamsError::NoAnts => write!(f, "need at least one ant"),
            ParamsError::NoIterations => write!(f, "need at least one iteration"),
            ParamsError::EpsilonNotPositive(v) => write!(f, "epsilon must be > 0, got {v}"),
            ParamsError::NoPatience => write!(f, "patience must be >= 1"),
        }
    }
}

impl core::error::Error for ParamsError {}

impl Params {
    /// The benchmark defaults: `alpha = 1`, `beta = 8`, `rho = 0.4`,
    /// `q = 100`, `tau0 = 1`, one ant per city, cap 1000, `epsilon = 0.001`,
    /// natural-log entropy, single-hit patience, fresh start cities each
    /// iteration.
    pub fn standard(n_cities: usize) -> Self {
        Params {
            alpha: 1.0,
            beta: 8.0,
            rho: 0.4,
            q: 100.0,
            tau0: 1.0,
            ants: n_cities,
            nc_max: 1000,
            epsilon: 1e-3,
            log_base: LogBase::Natural,
            seed: 0,
            patience: 1,
            restart_starts: true,
        }
    }

    /// NaN fails every check below.
    pub fn validate(&self) -> Result<(), ParamsError> {
        if self.alpha.is_nan() || self.alpha < 0.0 {
            return Err(ParamsError::AlphaNegative(self.alpha));
        }
        if self.beta.is_nan() || self.beta < 0.0 {
            return Err(ParamsError::BetaNegative(self.beta));
        }
        if self.rho.is_nan() || self.rho < 0.0 || self.rho >= 1.0 {
            return Err(ParamsError::RhoOutOfRange(self.rho));
        }
        if self.q.is_nan() || self.q <= 0.0 {
            return Err(ParamsError::QNotPositive(self.q));
        }
        if self.tau0.is_nan() || self.tau0 <= 0.0 {
            return Err(ParamsError::Tau0NotPositive(self.tau0));
        }
        if self.ants == 0 {
            return Err(ParamsError::NoAnts);
        }
        if self.nc_max == 0 {
            return Err(ParamsError::NoIterations);
        }
        if self.epsilon.is_nan() || self.epsilon <= 0.0 {
            return Err(ParamsError::EpsilonNotPositive(self.epsilon));
        }
        if self.patience == 0 {
            return Err(ParamsError::NoPatience);
        }
        Ok(())
    }
}
