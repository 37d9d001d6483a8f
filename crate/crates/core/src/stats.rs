//! Per-iteration route statistics: pheromone probabilities, histograms and
//! the four moments of the route length set.
//!
//! For iteration `t`, every ant `i` contributes its tour length `L_i` and
//! the total pheromone `f_i` found on its route after the update. The
//! pheromone probabilities `p_i = f_i / sum(f)` weight the pseudo variants
//! of the histogram and moments; with uniform probabilities they reduce
//! exactly to the plain ones. Two ants on the same route both keep their
//! own entry.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[allow(unused_imports)]
use num_traits::Float;

use crate::colony::{ColonyState, Tour};
use crate::params::Params;

/// One row of a run trace.
#[derive(Clone, Debug, PartialEq)]
pub struct IterationRecord {
    /// 1-based iteration index.
    pub t: usize,
    /// Tour length per ant.
    pub lengths: Vec<u64>,
    /// Pheromone probability per ant; sums to 1.
    pub pheromone_probs: Vec<f64>,
    /// Mean tour length.
    pub mean: f64,
    /// Population standard deviation of the lengths.
    pub std_dev: f64,
    /// Pheromone-probability-weighted mean length.
    pub pseudo_mean: f64,
    /// Pheromone-probability-weighted deviation.
    pub pseudo_std_dev: f64,
    /// Entropy of the pheromone probabilities.
    pub entropy: f64,
    /// Incumbent (best-so-far) length after this iteration.
    pub best_length: u64,
}

/// Equal-width histogram over route lengths. Bins are half-open
/// `[lo, hi)`; the maximum length lands in the last bin.
#[derive(Clone, Debug, PartialEq)]
pub struct Histogram {
    /// Left edge of the first bin.
    pub origin: f64,
    /// Bin width.
    pub bin_width: f64,
    /// Probability mass per bin; sums to 1.
    pub masses: Vec<f64>,
}

impl Histogram {
    pub fn bin_edges(&self, bin: usize) -> (f64, f64) {
        let lo = self.origin + bin as f64 * self.bin_width;
        (lo, lo + self.bin_width)
    }

    /// Mass of the bin containing `x`; 0 outside the covered range.
    pub fn mass_at(&self, x: f64) -> f64 {
        if x < self.origin {
            return 0.0;
        }
        let bin = ((x - self.origin) / self.bin_width).floor() as usize;
        self.masses.get(bin).copied().unwrap_or(0.0)
    }

    pub fn total_mass(&self) -> f64 {
        self.masses.iter().sum()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum StatsError {
    EmptyInput,
    NonPositiveBinWidth(f64),
    /// Histogram origin sits above the smallest length.
    OriginAboveMinimum { origin: f64, min: f64 },
    /// Lengths and probabilities differ in count.
    LengthMismatch { lengths: usize, probs: usize },
    /// A route pheromone total was not positive.
    NonPositivePheromone { index: usize },
}

impl fmt::Display for StatsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatsError::EmptyInput => write!(f, "empty input"),
            StatsError::NonPositiveBinWidth(w) => write!(f, "bin width must be > 0, got {w}"),
            StatsError::OriginAboveMinimum { origin, min } => {
                write!(f, "origin {origin} exceeds smallest length {min}")
            }
            StatsError::LengthMismatch { lengths, probs } => {
                write!(f, "{lengths} lengths but {probs} probabilities")
            }
            StatsError::NonPositivePheromone { index } => {
                write!(f, "route pheromone total at index {index} is not positive")
            }
        }
    }
}

impl core::error::Error for StatsError {}

/// Total pheromone on a tour: the sum of the trail over its `n` edges,
/// including the closing edge, read from the current (post-update) matrix.
pub fn route_pheromone(state: &ColonyState, tour: &Tour) -> f64 {
    tour.edges()
        .map(|(a, b)| state.pheromone().get(a, b))
        .sum()
}

/// Normalizes route pheromone totals into probabilities `p_i = f_i / sum`.
pub fn pheromone_probabilities(f_values: &[f64]) -> Result<Vec<f64>, StatsError> {
    if f_values.is_empty() {
        return Err(StatsError::EmptyInput);
    }
    let mut total = 0.0;
    for (index, &f) in f_values.iter().enumerate() {
        if f.is_nan() || f <= 0.0 {
            return Err(StatsError::NonPositivePheromone { index });
        }
        total += f;
    }
    Ok(f_values.iter().map(|&f| f / total).collect())
}

fn min_max(values: &[f64]) -> (f64, f64) {
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    for &v in values {
        if v < min {
            min = v;
        }
        if v > max {
            max = v;
        }
    }
    (min, max)
}

fn bin_layout(lengths: &[f64], bin_width: f64, origin: f64) -> Result<usize, StatsError> {
    if lengths.is_empty() {
        return Err(StatsError::EmptyInput);
    }
    if bin_width.is_nan() || bin_width <= 0.0 {
        return Err(StatsError::NonPositiveBinWidth(bin_width));
    }
    let (min, max) = min_max(lengths);
    if origin > min {
        return Err(StatsError::OriginAboveMinimum { origin, min });
    }
    Ok(((max - origin) / bin_width).floor() as usize + 1)
}

fn bin_of(value: f64, bin_width: f64, origin: f64, bins: usize) -> usize {
    (((value - origin) / bin_width).floor() as usize).min(bins - 1)
}

/// Counting histogram: bin `b` holds the fraction of lengths falling in
/// `[origin + b*w, origin + (b+1)*w)`.
pub fn histogram(lengths: &[f64], bin_width: f64, origin: f64) -> Result<Histogram, StatsError> {
    let bins = bin_layout(lengths, bin_width, origin)?;
    let mut masses = vec![0.0; bins];
    let share = 1.0 / lengths.len() as f64;
    for &len in lengths {
        masses[bin_of(len, bin_width, origin, bins)] += share;
    }
    Ok(Histogram {
        origin,
        bin_width,
        masses,
    })
}

/// Pseudo-histogram: like [`histogram`] but each ant contributes its
/// pheromone probability instead of `1/m`.
pub fn pseudo_histogram(
    lengths: &[f64],
    probs: &[f64],
    bin_width: f64,
    origin: f64,
) -> Result<Histogram, StatsError> {
    if lengths.len() != probs.len() {
        return Err(StatsError::LengthMismatch {
            lengths: lengths.len(),
            probs: probs.len(),
        });
    }
    let bins = bin_layout(lengths, bin_width, origin)?;
    let mut masses = vec![0.0; bins];
    for (&len, &p) in lengths.iter().zip(probs) {
        masses[bin_of(len, bin_width, origin, bins)] += p;
    }
    Ok(Histogram {
        origin,
        bin_width,
        masses,
    })
}

/// Default bin geometry when none is requested: `ceil(sqrt(m))` bins
/// spanning `[min, max]`, origin at the smallest length. Falls back to unit
/// width when all lengths coincide.
pub fn default_binning(lengths: &[f64]) -> (f64, f64) {
    let (min, max) = min_max(lengths);
    let bins = (lengths.len() as f64).sqrt().ceil().max(1.0);
    let width = (max - min) / bins;
    if width > 0.0 {
        (width, min)
    } else {
        (1.0, min)
    }
}

/// Arithmetic mean. Panics on empty input.
pub fn expectation(lengths: &[f64]) -> f64 {
    assert!(!lengths.is_empty(), "expectation of empty set");
    lengths.iter().sum::<f64>() / lengths.len() as f64
}

/// Population standard deviation around the given mean (divisor `m`).
/// Panics on empty input.
pub fn std_deviation(lengths: &[f64], mean: f64) -> f64 {
    assert!(!lengths.is_empty(), "deviation of empty set");
    let var = lengths
        .iter()
        .map(|&l| {
            let d = l - mean;
            d * d
        })
        .sum::<f64>()
        / lengths.len() as f64;
    var.sqrt()
}

/// Probability-weighted mean `sum(L_i * p_i)`. Panics on a length/probability
/// count mismatch or empty input.
pub fn pseudo_expectation(lengths: &[f64], probs: &[f64]) -> f64 {
    assert!(!lengths.is_empty(), "pseudo-expectation of empty set");
    assert_eq!(lengths.len(), probs.len(), "lengths and probs must align");
    lengths.iter().zip(probs).map(|(&l, &p)| l * p).sum()
}

/// Probability-weighted deviation `sqrt(sum(p_i * |L_i - mean'|^2))`.
/// Panics on a count mismatch or empty input.
pub fn pseudo_deviation(lengths: &[f64], probs: &[f64], pseudo_mean: f64) -> f64 {
    assert!(!lengths.is_empty(), "pseudo-deviation of empty set");
    assert_eq!(lengths.len(), probs.len(), "lengths and probs must align");
    lengths
        .iter()
        .zip(probs)
        .map(|(&l, &p)| {
            let d = l - pseudo_mean;
            p * d * d
        })
        .sum::<f64>()
        .sqrt()
}

/// Assembles the trace row for iteration `t` from that iteration's tours and
/// the post-update colony state.
pub fn build_record(
    t: usize,
    tours: &[Tour],
    state: &ColonyState,
    params: &Params,
) -> IterationRecord {
    let f_values: Vec<f64> = tours.iter().map(|tr| route_pheromone(state, tr)).collect();
    let probs = pheromone_probabilities(&f_values)
        .expect("route pheromone totals are positive by the trail floor");
    let lengths: Vec<u64> = tours.iter().map(|tr| tr.length).collect();
    let lengths_f: Vec<f64> = lengths.iter().map(|&l| l as f64).collect();
    let mean = expectation(&lengths_f);
    let std_dev = std_deviation(&lengths_f, mean);
    let pseudo_mean = pseudo_expectation(&lengths_f, &probs);
    let pseudo_std_dev = pseudo_deviation(&lengths_f, &probs, pseudo_mean);
    let entropy = crate::entropy::entropy(&probs, params.log_base)
        .expect("normalized probabilities");
    let best_length = state
        .best_tour()
        .expect("at least one completed iteration")
        .length;
    IterationRecord {
        t,
        lengths,
        pheromone_probs: probs,
        mean,
        std_dev,
        pseudo_mean,
        pseudo_std_dev,
        entropy,
        best_length,
    }
}
