//! Library half of the `antcycle` binary: flag parsing, run orchestration
//! and file output, kept callable from integration tests.

pub mod args;
pub mod error;
pub mod summary;
pub mod trace;

use std::fs;
use std::path::{Path, PathBuf};

use antcycle::{run_entropy_terminated, run_fixed, Instance, RunResult};

pub use args::{Cli, LogBaseArg, Mode, RunConfig};
pub use error::CliError;
pub use summary::{ComparisonSummary, ModeAggregate, SingleModeSummary};
pub use trace::{emit_histograms, write_histogram, write_trace};

/// Loads and parses the instance file. Read failures exit 4, parse failures
/// exit 3.
pub fn load_instance(path: &Path) -> Result<Instance, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    antcycle::parse_instance(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

fn trace_path(out: &Path, label: &str, seed: u64) -> PathBuf {
    out.join(format!("trace_{label}_seed{seed}.csv"))
}

fn write_summary_json<T: serde::Serialize>(out: &Path, summary: &T) -> Result<PathBuf, CliError> {
    let path = out.join("summary.json");
    let body = serde_json::to_string_pretty(summary).expect("summary serializes");
    fs::write(&path, body).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })?;
    Ok(path)
}

/// Runs all repeats of both modes on the same seeds. Repeat `r` uses seed
/// `base + r` in both modes, so the two legs are directly comparable.
pub fn compare_modes(
    inst: &Instance,
    config: &RunConfig,
) -> (ComparisonSummary, Vec<RunResult>, Vec<RunResult>) {
    let mut fixed_runs = Vec::with_capacity(config.repeats);
    let mut entropy_runs = Vec::with_capacity(config.repeats);
    for repeat in 0..config.repeats {
        fixed_runs.push(run_fixed(inst, &config.params_for(Mode::Fixed, repeat)));
        entropy_runs.push(run_entropy_terminated(
            inst,
            &config.params_for(Mode::Entropy, repeat),
        ));
    }
    let summary = ComparisonSummary::new(
        &config.instance_name,
        config.repeats,
        &fixed_runs,
        &entropy_runs,
    );
    (summary, fixed_runs, entropy_runs)
}

fn run_single(inst: &Instance, config: &RunConfig) -> Result<(), CliError> {
    let label = config.mode.as_str();
    let mut runs = Vec::with_capacity(config.repeats);
    for repeat in 0..config.repeats {
        let params = config.params_for(config.mode, repeat);
        let result = match config.mode {
            Mode::Entropy => run_entropy_terminated(inst, &params),
            _ => run_fixed(inst, &params),
        };
        write_trace(&result, &trace_path(&config.out, label, params.seed))?;
        emit_histograms(&result, config, label, params.seed)?;
        println!(
            "{label} run seed {}: best {} after {} iterations ({}, {:.3}s)",
            params.seed,
            result.best_tour.length,
            result.iterations_run,
            result.termination,
            result.wall_time.as_secs_f64()
        );
        runs.push(result);
    }
    let summary = SingleModeSummary::new(&config.instance_name, label, config.params.seed, &runs);
    let path = write_summary_json(&config.out, &summary)?;
    println!("summary written to {}", path.display());
    Ok(())
}

fn run_compare(inst: &Instance, config: &RunConfig) -> Result<(), CliError> {
    let (summary, fixed_runs, entropy_runs) = compare_modes(inst, config);
    for (repeat, run) in fixed_runs.iter().enumerate() {
        let seed = config.params.seed.wrapping_add(repeat as u64);
        write_trace(run, &trace_path(&config.out, "fixed", seed))?;
    }
    for (repeat, run) in entropy_runs.iter().enumerate() {
        let seed = config.params.seed.wrapping_add(repeat as u64);
        write_trace(run, &trace_path(&config.out, "entropy", seed))?;
    }
    let path = write_summary_json(&config.out, &summary)?;
    print!("{}", summary.render_table());
    println!("summary written to {}", path.display());
    Ok(())
}

/// Executes one parsed invocation end to end.
pub fn execute(cli: &Cli) -> Result<(), CliError> {
    let inst = load_instance(&cli.instance)?;
    let config = cli.to_config(inst.name(), inst.dimension())?;
    fs::create_dir_all(&config.out).map_err(|source| CliError::Io {
        path: config.out.clone(),
        source,
    })?;
    match config.mode {
        Mode::Compare => run_compare(&inst, &config),
        _ => run_single(&inst, &config),
    }
}
