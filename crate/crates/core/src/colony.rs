//! Ant-Cycle colony: probabilistic tour construction and pheromone
//! evaporation/deposit.
//!
//! One iteration puts every ant on its start city, lets each ant build a
//! closed tour by sampling the next city from the pheromone/heuristic
//! transition probabilities over the unvisited set, then evaporates the
//! trail and adds `q / tour_length` on every edge each ant used. All tours
//! of an iteration read the same pheromone snapshot, so ants are
//! independent within an iteration.

use alloc::vec::Vec;
use core::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

#[allow(unused_imports)]
use num_traits::Float;

use crate::entropy::{self, RunResult};
use crate::matrix::SquareMatrix;
use crate::params::Params;
use crate::rng;
use crate::tsplib::{build_distance_matrix, distance, DistanceMatrix, Instance};

/// Floor applied to every pheromone entry after an update so transition
/// weights can never collapse to exactly zero.
pub const TAU_MIN: f64 = 1e-12;

/// A closed tour: a permutation of the city indices plus its length
/// including the edge back to the start.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tour {
    pub order: Vec<usize>,
    pub length: u64,
}

impl Tour {
    /// Iterates the `n` undirected edges of the closed tour.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.order.len();
        (0..n).map(move |k| (self.order[k], self.order[(k + 1) % n]))
    }
}

/// Errors from the transition-probability computation.
#[derive(Clone, Debug, PartialEq)]
pub enum ColonyError {
    /// No city left to move to.
    EmptyAllowed,
    /// The weight sum vanished or overflowed; pheromone has underflowed or a
    /// parameter drove `tau^alpha * eta^beta` out of `f64` range.
    NonFiniteWeight { current: usize },
}

impl fmt::Display for ColonyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColonyError::EmptyAllowed => write!(f, "allowed set is empty"),
            ColonyError::NonFiniteWeight { current } => {
                write!(f, "non-finite transition weights leaving city {current}")
            }
        }
    }
}

impl core::error::Error for ColonyError {}

/// Mutable state of one colony run: the pheromone trail, the iteration
/// counter, the current ant placement and the incumbent tour.
#[derive(Clone, Debug)]
pub struct ColonyState {
    dist: DistanceMatrix,
    pheromone: SquareMatrix,
    t: usize,
    seed: u64,
    best: Option<Tour>,
    start_cities: Vec<usize>,
}

/// `x^e` with cheap paths for the ubiquitous exponents 0, 1 and small
/// integers. Both the sampler and the public probability query go through
/// this, so they always agree bit for bit.
#[inline]
fn pow_opt(base: f64, exp: f64) -> f64 {
    if exp == 1.0 {
        base
    } else if exp == 0.0 {
        1.0
    } else if exp.fract() == 0.0 && exp.abs() <= 32.0 {
        base.powi(exp as i32)
    } else {
        base.powf(exp)
    }
}

/// Start cities for one iteration: a uniform draw without replacement while
/// unused cities remain, then with replacement once every city hosts an ant.
fn draw_start_cities(seed: u64, iteration: u64, ants: usize, n: usize) -> Vec<usize> {
    let mut rng = rng::placement_rng(seed, iteration);
    let mut pool: Vec<usize> = (0..n).collect();
    pool.shuffle(&mut rng);
    pool.truncate(ants.min(n));
    while pool.len() < ants {
        pool.push(rng.gen_range(0..n));
    }
    pool
}

impl ColonyState {
    /// Sets up a colony on `inst`: every edge starts at `params.tau0`, the
    /// iteration counter at zero, and the ants on start cities drawn from
    /// the master seed.
    pub fn init(inst: &Instance, params: &Params) -> Self {
        let dist = build_distance_matrix(inst);
        let n = inst.dimension();
        ColonyState {
            dist,
            pheromone: SquareMatrix::filled(n, params.tau0),
            t: 0,
            seed: params.seed,
            best: None,
            start_cities: draw_start_cities(params.seed, 0, params.ants, n),
        }
    }

    pub fn n(&self) -> usize {
        self.dist.n()
    }

    /// Completed iterations.
    pub fn iteration(&self) -> usize {
        self.t
    }

    pub fn pheromone(&self) -> &SquareMatrix {
        &self.pheromone
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    pub fn best_tour(&self) -> Option<&Tour> {
        self.best.as_ref()
    }

    pub fn start_cities(&self) -> &[usize] {
        &self.start_cities
    }

    /// Builds the closed tour of ant `ant_index` against the current
    /// pheromone snapshot, consuming only that ant's RNG stream for the
    /// current iteration.
    pub fn construct_tour(&self, params: &Params, ant_index: usize) -> Tour {
        let n = self.n();
        let mut rng = rng::ant_rng(self.seed, self.t as u64, ant_index as u64);
        let start = self.start_cities[ant_index];
        let mut order = Vec::with_capacity(n);
        order.push(start);
        let mut allowed: Vec<usize> = (0..n).filter(|&c| c != start).collect();
        let mut current = start;
        let mut length = 0u64;
        while !allowed.is_empty() {
            let probs = transition_probabilities(self, params, current, &allowed)
                .expect("allowed non-empty and pheromone floored above zero");
            let u: f64 = rng.gen();
            let mut pick = allowed.len() - 1;
            let mut cum = 0.0;
            for (idx, p) in probs.iter().enumerate() {
                cum += *p;
                if u < cum {
                    pick = idx;
                    break;
                }
            }
            let next = allowed.remove(pick);
            length += self.dist.dist(current, next);
            order.push(next);
            current = next;
        }
        length += self.dist.dist(current, start);
        Tour { order, length }
    }

    /// Evaporates the trail and adds the deposits:
    /// `tau <- max((1 - rho) * tau + delta, TAU_MIN)` on every edge.
    /// Symmetry of the deposit matrix is assumed and preserved.
    pub fn update_pheromone(&mut self, deposits: &SquareMatrix, params: &Params) {
        let n = self.n();
        let keep = 1.0 - params.rho;
        for i in 0..n {
            for j in (i + 1)..n {
                let v = (keep * self.pheromone.get(i, j) + deposits.get(i, j)).max(TAU_MIN);
                self.pheromone.set_sym(i, j, v);
            }
        }
    }

    /// Runs one full iteration: constructs all `m` tours against the
    /// iteration-start snapshot, deposits, evaporates, advances the counter
    /// and updates the incumbent (earliest ant wins ties).
    pub fn run_iteration(&mut self, params: &Params) -> Vec<Tour> {
        let n = self.n();
        if self.t > 0 && params.restart_starts {
            self.start_cities = draw_start_cities(self.seed, self.t as u64, params.ants, n);
        }
        let tours: Vec<Tour> = (0..params.ants)
            .map(|k| self.construct_tour(params, k))
            .collect();
        let deposits = deposit_matrix(&tours, params, n);
        self.update_pheromone(&deposits, params);
        self.t += 1;
        for tour in &tours {
            if self.best.as_ref().is_none_or(|b| tour.length < b.length) {
                self.best = Some(tour.clone());
            }
        }
        tours
    }

    #[cfg(test)]
    pub(crate) fn pheromone_mut(&mut self) -> &mut SquareMatrix {
        &mut self.pheromone
    }
}

/// Transition probabilities out of `current` over the `allowed` cities,
/// aligned with the input slice:
/// `p_j = tau_cj^alpha * eta_cj^beta / sum over allowed`.
pub fn transition_probabilities(
    state: &ColonyState,
    params: &Params,
    current: usize,
    allowed: &[usize],
) -> Result<Vec<f64>, ColonyError> {
    if allowed.is_empty() {
        return Err(ColonyError::EmptyAllowed);
    }
    let mut weights = Vec::with_capacity(allowed.len());
    let mut total = 0.0f64;
    for &j in allowed {
        let w = pow_opt(state.pheromone.get(current, j), params.alpha)
            * pow_opt(state.dist.eta(current, j), params.beta);
        total += w;
        weights.push(w);
    }
    if !total.is_finite() || total <= 0.0 {
        return Err(ColonyError::NonFiniteWeight { current });
    }
    for w in &mut weights {
        *w /= total;
    }
    Ok(weights)
}

/// Length of the closed tour visiting `order`, including the closing edge.
///
/// Panics if `order` is not a permutation of `0..n`.
pub fn tour_length(inst: &Instance, order: &[usize]) -> u64 {
    let n = inst.dimension();
    assert_eq!(order.len(), n, "order must visit every city exactly once");
    let mut seen = alloc::vec![false; n];
    for &c in order {
        assert!(c < n && !seen[c], "order is not a permutation of 0..{n}");
        seen[c] = true;
    }
    let mut length = 0u64;
    for k in 0..n {
        length += distance(inst, order[k], order[(k + 1) % n]);
    }
    length
}

/// Per-edge pheromone deposits of one iteration: each ant adds
/// `q / tour_length` on every edge of its tour. Symmetric; edges no ant
/// used stay zero.
pub fn deposit_matrix(tours: &[Tour], params: &Params, n: usize) -> SquareMatrix {
    let mut deposits = SquareMatrix::filled(n, 0.0);
    for tour in tours {
        let share = params.q / tour.length as f64;
        for (a, b) in tour.edges() {
            deposits.add_sym(a, b, share);
        }
    }
    deposits
}

/// Runs exactly `params.nc_max` iterations and returns the full trace.
///
/// Panics if `params` fails validation.
pub fn run_fixed(inst: &Instance, params: &Params) -> RunResult {
    entropy::run_colony(inst, params, entropy::StopRule::IterationCapOnly)
}
