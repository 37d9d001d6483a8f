//! Ant-Cycle ant colony optimization for the symmetric TSP, instrumented
//! with per-iteration route statistics and an entropy-based stopping rule.
//!
//! The crate provides:
//!
//! - [`tsplib`]: parsing and serialization of EUC_2D TSPLIB instances and
//!   exact integer distances.
//! - [`colony`]: the Ant-Cycle colony itself — probabilistic tour
//!   construction, pheromone evaporation and deposit, fixed-length runs.
//! - [`stats`]: route length sets, pheromone probabilities, histograms,
//!   pseudo-histograms and the plain/weighted moments.
//! - [`entropy`]: entropy of the pheromone probabilities, the relative-
//!   change stopping criterion, and entropy-terminated runs.
//!
//! Runs are deterministic: the instance and [`Params`] (including the seed)
//! fully determine every tour, record and result. The crate is `no_std`
//! compatible (with `alloc`) when built without the default `std` feature;
//! only wall-clock timing is stubbed out in that configuration.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod colony;
pub mod entropy;
pub mod matrix;
pub mod params;
pub mod rng;
pub mod stats;
pub mod tsplib;

pub use colony::{run_fixed, ColonyState, Tour};
pub use entropy::{run_entropy_terminated, EntropyTrace, RunResult, Termination};
pub use params::{LogBase, Params};
pub use stats::{Histogram, IterationRecord};
pub use tsplib::{parse_instance, Instance};
