//! Shared helpers for integration tests: random instance generation and an
//! exhaustive-enumeration length oracle that never touches the colony code.

// Each test target compiles its own copy; not all of them use every helper.
#![allow(dead_code)]

use antcycle::tsplib::{distance, Instance};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

/// Random EUC_2D instance with `n` distinct integer coordinates.
pub fn random_instance(n: usize, seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut coords = Vec::with_capacity(n);
    while coords.len() < n {
        let p = (rng.gen_range(0..=1000), rng.gen_range(0..=1000));
        if seen.insert(p) {
            coords.push((p.0 as f64, p.1 as f64));
        }
    }
    Instance::from_coords(&format!("rand{n}-{seed}"), coords).unwrap()
}

/// Closed-tour length computed straight from scalar distances.
pub fn closed_length(inst: &Instance, order: &[usize]) -> u64 {
    let n = order.len();
    (0..n)
        .map(|k| distance(inst, order[k], order[(k + 1) % n]))
        .sum()
}

/// Exhaustive optimum: enumerates every distinct closed tour (city 0 fixed,
/// mirrored orientations skipped) and returns the shortest length together
/// with the number of tours inspected.
pub fn brute_force_optimum(inst: &Instance) -> (u64, usize) {
    let n = inst.dimension();
    assert!((3..=10).contains(&n), "enumeration only meant for tiny instances");
    let mut rest: Vec<usize> = (1..n).collect();
    let mut best = u64::MAX;
    let mut inspected = 0usize;
    permute(inst, &mut rest, 0, &mut best, &mut inspected);
    (best, inspected)
}

fn permute(inst: &Instance, rest: &mut Vec<usize>, k: usize, best: &mut u64, inspected: &mut usize) {
    if k == rest.len() {
        // Skip the mirror image of each cycle.
        if rest[0] < rest[rest.len() - 1] {
            let mut order = Vec::with_capacity(rest.len() + 1);
            order.push(0);
            order.extend_from_slice(rest);
            let len = closed_length(inst, &order);
            *inspected += 1;
            if len < *best {
                *best = len;
            }
        }
        return;
    }
    for i in k..rest.len() {
        rest.swap(k, i);
        permute(inst, rest, k + 1, best, inspected);
        rest.swap(k, i);
    }
}
