//! Entropy of the pheromone probabilities and the entropy-based stopping
//! rule.
//!
//! The entropy `H_t = -sum(p_i * log(p_i))` of the pheromone probability
//! set measures how evenly the trail is spread over the colony's routes:
//! `log(m)` when every route carries the same share, 0 once a single route
//! holds everything. A run stops when the relative change
//! `|H_t - H_{t-1}| / H_{t-1}` stays below `epsilon` for `patience`
//! consecutive iterations, with an iteration cap as a safety net.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::time::Duration;

#[allow(unused_imports)]
use num_traits::Float;

use crate::colony::{ColonyState, Tour};
use crate::params::{LogBase, Params};
use crate::stats::{self, IterationRecord};
use crate::tsplib::Instance;

/// Near-zero guard for the criterion's division: entropies at or below this
/// are treated as fully concentrated.
const ZERO_ENTROPY: f64 = 1e-12;

/// Errors from the entropy computation.
#[derive(Clone, Debug, PartialEq)]
pub enum EntropyError {
    /// Probabilities do not sum to 1 within 1e-9.
    SumViolation { sum: f64 },
    /// A probability was negative.
    NegativeProbability { index: usize, value: f64 },
}

impl fmt::Display for EntropyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EntropyError::SumViolation { sum } => {
                write!(f, "probabilities sum to {sum}, expected 1")
            }
            EntropyError::NegativeProbability { index, value } => {
                write!(f, "probability {value} at index {index} is negative")
            }
        }
    }
}

impl core::error::Error for EntropyError {}

/// Shannon entropy of a probability vector in the chosen base, with the
/// convention `0 * log(0) = 0`. All entries count, duplicates included.
pub fn entropy(probs: &[f64], log_base: LogBase) -> Result<f64, EntropyError> {
    let mut sum = 0.0;
    for (index, &p) in probs.iter().enumerate() {
        if p < 0.0 {
            return Err(EntropyError::NegativeProbability { index, value: p });
        }
        sum += p;
    }
    if (sum - 1.0).abs() > 1e-9 {
        return Err(EntropyError::SumViolation { sum });
    }
    let mut h = 0.0;
    for &p in probs {
        if p > 0.0 {
            h -= p * log_base.log(p);
        }
    }
    Ok(h)
}

/// One evaluation of the stopping criterion:
/// `|h_curr - h_prev| / h_prev < epsilon`. A vanished `h_prev` means total
/// concentration, so the step counts as converged only if `h_curr` vanished
/// too.
pub fn converged(h_prev: f64, h_curr: f64, epsilon: f64) -> bool {
    if h_prev.abs() <= ZERO_ENTROPY {
        h_curr.abs() <= ZERO_ENTROPY
    } else {
        (h_curr - h_prev).abs() / h_prev < epsilon
    }
}

/// Entropy sequence of a run, starting at the `H_0 = log(m)` prior.
#[derive(Clone, Debug, PartialEq)]
pub struct EntropyTrace {
    /// `H_0, H_1, ..., H_T`; index `t` is iteration `t`'s entropy.
    pub values: Vec<f64>,
    pub log_base: LogBase,
    pub epsilon: f64,
    /// First iteration at which the criterion had held for `patience`
    /// consecutive steps, whether or not the run stopped there.
    pub converged_at: Option<usize>,
}

impl EntropyTrace {
    /// Relative change `|H_t - H_{t-1}| / H_{t-1}` for iteration `t >= 1`,
    /// 0 when both entropies have vanished.
    pub fn relative_change(&self, t: usize) -> f64 {
        let prev = self.values[t - 1];
        let curr = self.values[t];
        if prev.abs() <= ZERO_ENTROPY {
            if curr.abs() <= ZERO_ENTROPY {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            (curr - prev).abs() / prev
        }
    }
}

/// Why a run ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Termination {
    EntropyConverged,
    IterationCap,
}

impl fmt::Display for Termination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Termination::EntropyConverged => write!(f, "entropy-converged"),
            Termination::IterationCap => write!(f, "iteration-cap"),
        }
    }
}

/// Outcome of a full run.
#[derive(Clone, Debug)]
pub struct RunResult {
    pub best_tour: Tour,
    pub iterations_run: usize,
    pub termination: Termination,
    /// One record per executed iteration.
    pub trace: Vec<IterationRecord>,
    pub entropy: EntropyTrace,
    /// Zero when the crate is built without `std`.
    pub wall_time: Duration,
}

/// Whether the driver may stop on the entropy criterion or only at the cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum StopRule {
    IterationCapOnly,
    EntropyCriterion,
}

/// Shared driver behind both run modes. The stopping rule only decides when
/// to stop; iteration `t` of a seed is identical under either rule, so an
/// entropy-terminated trace is a prefix of the fixed trace.
pub(crate) fn run_colony(inst: &Instance, params: &Params, stop: StopRule) -> RunResult {
    params.validate().expect("invalid run parameters");

    #[cfg(feature = "std")]
    let started = std::time::Instant::now();

    let mut state = ColonyState::init(inst, params);
    let mut entropy_trace = EntropyTrace {
        values: vec![params.log_base.log(params.ants as f64)],
        log_base: params.log_base,
        epsilon: params.epsilon,
        converged_at: None,
    };
    let mut trace = Vec::new();
    let mut termination = Termination::IterationCap;
    let mut streak = 0usize;

    for _ in 0..params.nc_max {
        let tours = state.run_iteration(params);
        let record = stats::build_record(state.iteration(), &tours, &state, params);
        let h_prev = *entropy_trace.values.last().expect("seeded with H_0");
        let h_curr = record.entropy;
        entropy_trace.values.push(h_curr);
        trace.push(record);

        if converged(h_prev, h_curr, params.epsilon) {
            streak += 1;
        } else {
            streak = 0;
        }
        if streak >= params.patience && entropy_trace.converged_at.is_none() {
            entropy_trace.converged_at = Some(state.iteration());
            if stop == StopRule::EntropyCriterion {
                termination = Termination::EntropyConverged;
                break;
            }
        }
    }

    #[cfg(feature = "std")]
    let wall_time = started.elapsed();
    #[cfg(not(feature = "std"))]
    let wall_time = Duration::ZERO;

    RunResult {
        best_tour: state
            .best_tour()
            .expect("nc_max >= 1 guarantees one iteration")
            .clone(),
        iterations_run: trace.len(),
        termination,
        trace,
        entropy: entropy_trace,
        wall_time,
    }
}

/// Runs until the entropy criterion has held for `params.patience`
/// consecutive iterations, or until `params.nc_max` as a safety cap.
///
/// Panics if `params` fails validation.
pub fn run_entropy_terminated(inst: &Instance, params: &Params) -> RunResult {
    run_colony(inst, params, StopRule::EntropyCriterion)
}
