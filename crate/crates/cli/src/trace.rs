//! CSV writers for run traces and histogram tables.
//!
//! Floats are written with 17 significant digits, enough for a re-read to
//! reproduce every `f64` bit for bit.

use std::fs;
use std::path::{Path, PathBuf};

use antcycle::stats::{self, IterationRecord};
use antcycle::RunResult;

use crate::args::RunConfig;
use crate::error::CliError;

pub const TRACE_HEADER: &str =
    "iteration,best_length,mean_length,std_dev,pseudo_mean,pseudo_std_dev,entropy,entropy_rel_change";
pub const HISTOGRAM_HEADER: &str = "bin_lo,bin_hi,mass_true,mass_pseudo";

fn full(x: f64) -> String {
    format!("{x:.16e}")
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Writes one CSV row per executed iteration.
pub fn write_trace(result: &RunResult, path: &Path) -> Result<(), CliError> {
    let mut out = String::with_capacity(64 * (result.trace.len() + 1));
    out.push_str(TRACE_HEADER);
    out.push('\n');
    for record in &result.trace {
        let rel = result.entropy.relative_change(record.t);
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            record.t,
            record.best_length,
            full(record.mean),
            full(record.std_dev),
            full(record.pseudo_mean),
            full(record.pseudo_std_dev),
            full(record.entropy),
            full(rel),
        ));
    }
    write_file(path, &out)
}

/// Iterations histogram tables are emitted for: the requested list, or
/// 1, 10, 50, 100 and the final iteration, clipped to what the trace holds.
fn histogram_iterations(config: &RunConfig, available: usize) -> Result<Vec<usize>, CliError> {
    match &config.hist_iters {
        Some(list) => {
            for &t in list {
                if t == 0 || t > available {
                    return Err(CliError::Usage(format!(
                        "--hist-iters entry {t} outside 1..={available}"
                    )));
                }
            }
            let mut list = list.clone();
            list.sort_unstable();
            list.dedup();
            Ok(list)
        }
        None => {
            let mut list: Vec<usize> = [1, 10, 50, 100, available]
                .into_iter()
                .filter(|&t| t >= 1 && t <= available)
                .collect();
            list.sort_unstable();
            list.dedup();
            Ok(list)
        }
    }
}

/// Writes the true and pseudo histogram of one iteration record side by
/// side. Both share the same bin geometry, so the pseudo masses line up
/// with the counting masses row for row.
pub fn write_histogram(
    record: &IterationRecord,
    config: &RunConfig,
    path: &Path,
) -> Result<(), CliError> {
    let lengths: Vec<f64> = record.lengths.iter().map(|&l| l as f64).collect();
    let (default_width, default_origin) = stats::default_binning(&lengths);
    let origin = config.hist_origin.unwrap_or(default_origin);
    let width = config.hist_delta.unwrap_or(default_width);
    let true_hist = stats::histogram(&lengths, width, origin)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let pseudo_hist = stats::pseudo_histogram(&lengths, &record.pheromone_probs, width, origin)
        .map_err(|e| CliError::Usage(e.to_string()))?;

    let mut out = String::new();
    out.push_str(HISTOGRAM_HEADER);
    out.push('\n');
    for (bin, (mass_true, mass_pseudo)) in true_hist
        .masses
        .iter()
        .zip(&pseudo_hist.masses)
        .enumerate()
    {
        let (lo, hi) = true_hist.bin_edges(bin);
        out.push_str(&format!(
            "{},{},{},{}\n",
            full(lo),
            full(hi),
            full(*mass_true),
            full(*mass_pseudo)
        ));
    }
    write_file(path, &out)
}

/// Emits histogram tables for the configured iterations of one run.
/// Returns the written paths.
pub fn emit_histograms(
    result: &RunResult,
    config: &RunConfig,
    label: &str,
    seed: u64,
) -> Result<Vec<PathBuf>, CliError> {
    let iterations = histogram_iterations(config, result.trace.len())?;
    let mut written = Vec::with_capacity(iterations.len());
    for t in iterations {
        let path = config.out.join(format!("hist_{label}_seed{seed}_t{t}.csv"));
        write_histogram(&result.trace[t - 1], config, &path)?;
        written.push(path);
    }
    Ok(written)
}
