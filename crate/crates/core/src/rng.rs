//! Deterministic random-number streams.
//!
//! Every random decision in a run draws from a ChaCha stream addressed by
//! `(master seed, iteration, lane)`. Lane 0 is reserved for ant placement;
//! lane `k + 1` belongs to ant `k`. Streams never overlap, so per-ant work
//! can be reordered or parallelized without changing any result.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Bits reserved for the lane part of the stream id. Bounds the colony to
/// `2^21 - 1` ants and `2^43` iterations, far beyond anything practical.
const LANE_BITS: u64 = 21;

fn stream_rng(seed: u64, iteration: u64, lane: u64) -> ChaCha8Rng {
    debug_assert!(lane < (1 << LANE_BITS));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((iteration << LANE_BITS) | lane);
    rng
}

/// Stream used to place ants on start cities for iteration `t`.
pub fn placement_rng(seed: u64, iteration: u64) -> ChaCha8Rng {
    stream_rng(seed, iteration, 0)
}

/// Stream consumed by ant `ant` while constructing its tour at iteration `t`.
pub fn ant_rng(seed: u64, iteration: u64, ant: u64) -> ChaCha8Rng {
    stream_rng(seed, iteration, ant + 1)
}
