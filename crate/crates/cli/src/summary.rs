//! JSON summaries and the comparison table.

use serde::{Deserialize, Serialize};

use antcycle::RunResult;

/// Aggregates of one mode across the repeats.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModeAggregate {
    pub avg_best: f64,
    pub avg_iters: f64,
    pub avg_seconds: f64,
}

impl ModeAggregate {
    pub fn from_runs(runs: &[RunResult]) -> Self {
        let k = runs.len() as f64;
        ModeAggregate {
            avg_best: runs.iter().map(|r| r.best_tour.length as f64).sum::<f64>() / k,
            avg_iters: runs.iter().map(|r| r.iterations_run as f64).sum::<f64>() / k,
            avg_seconds: runs.iter().map(|r| r.wall_time.as_secs_f64()).sum::<f64>() / k,
        }
    }
}

/// Side-by-side summary of fixed and entropy-terminated runs. Wall-clock
/// seconds are reported for orientation only; they are hardware-bound.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComparisonSummary {
    pub instance: String,
    pub repeats: usize,
    pub mode_fixed: ModeAggregate,
    pub mode_entropy: ModeAggregate,
    /// Fixed-mode iterations per entropy-mode iteration.
    pub iteration_ratio: f64,
    /// (entropy avg best - fixed avg best) / fixed avg best.
    pub quality_gap: f64,
}

impl ComparisonSummary {
    pub fn new(
        instance: &str,
        repeats: usize,
        fixed_runs: &[RunResult],
        entropy_runs: &[RunResult],
    ) -> Self {
        let mode_fixed = ModeAggregate::from_runs(fixed_runs);
        let mode_entropy = ModeAggregate::from_runs(entropy_runs);
        let iteration_ratio = mode_fixed.avg_iters / mode_entropy.avg_iters;
        let quality_gap = (mode_entropy.avg_best - mode_fixed.avg_best) / mode_fixed.avg_best;
        ComparisonSummary {
            instance: instance.to_string(),
            repeats,
            mode_fixed,
            mode_entropy,
            iteration_ratio,
            quality_gap,
        }
    }

    /// Human-readable table.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "comparison on {} ({} repeats)\n",
            self.instance, self.repeats
        ));
        out.push_str(&format!(
            "{:<9} {:>14} {:>12} {:>13}\n",
            "mode", "avg_best", "avg_iters", "avg_seconds"
        ));
        for (name, agg) in [("fixed", &self.mode_fixed), ("entropy", &self.mode_entropy)] {
            out.push_str(&format!(
                "{:<9} {:>14.1} {:>12.1} {:>13.3}\n",
                name, agg.avg_best, agg.avg_iters, agg.avg_seconds
            ));
        }
        out.push_str(&format!(
            "iteration_ratio: {:.2}   quality_gap: {:.2}%\n",
            self.iteration_ratio,
            self.quality_gap * 100.0
        ));
        out
    }
}

/// Per-run entry of a single-mode summary.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunEntry {
    pub seed: u64,
    pub best_length: u64,
    pub iterations: usize,
    pub termination: String,
    pub seconds: f64,
}

impl RunEntry {
    pub fn from_run(seed: u64, run: &RunResult) -> Self {
        RunEntry {
            seed,
            best_length: run.best_tour.length,
            iterations: run.iterations_run,
            termination: run.termination.to_string(),
            seconds: run.wall_time.as_secs_f64(),
        }
    }
}

/// Summary of a fixed- or entropy-mode invocation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SingleModeSummary {
    pub instance: String,
    pub mode: String,
    pub repeats: usize,
    pub avg_best: f64,
    pub avg_iters: f64,
    pub avg_seconds: f64,
    pub runs: Vec<RunEntry>,
}

impl SingleModeSummary {
    pub fn new(instance: &str, mode: &str, base_seed: u64, runs: &[RunResult]) -> Self {
        let agg = ModeAggregate::from_runs(runs);
        SingleModeSummary {
            instance: instance.to_string(),
            mode: mode.to_string(),
            repeats: runs.len(),
            avg_best: agg.avg_best,
            avg_iters: agg.avg_iters,
            avg_seconds: agg.avg_seconds,
            runs: runs
                .iter()
                .enumerate()
                .map(|(r, run)| RunEntry::from_run(base_seed.wrapping_add(r as u64), run))
                .collect(),
        }
    }
}
