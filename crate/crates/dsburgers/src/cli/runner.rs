//! Execution of one resolved [`RunConfig`]: march, emit snapshots and
//! metadata, warn about superluminal regimes.

use super::output::{emit_metadata, emit_snapshot_csv, RunMetadata};
use super::{CliError, RunConfig, StopRule};
use crate::godunov::{self, Grid, Snapshot};
use std::path::PathBuf;
use std::time::Instant;

/// Files written by a run plus the recorded metadata.
#[derive(Debug)]
pub struct RunOutcome {
    pub metadata: RunMetadata,
    pub emitted: Vec<PathBuf>,
}

/// Run the configured experiment and write `snap_<iter>.csv` files and
/// `metadata.json` into the output directory.
pub fn execute_run(config: &RunConfig) -> Result<RunOutcome, CliError> {
    let grid = Grid::new(config.nx)?;
    config.scheme.validate(&grid, &config.params)?;
    let initial = config.ic.sample(&grid, &config.params)?;

    std::fs::create_dir_all(&config.out_dir)
        .map_err(|source| CliError::Io { path: config.out_dir.clone(), source })?;

    let dt = godunov::compute_dt(&initial, &grid, &config.params, &config.scheme);
    let max_factor = godunov::max_interface_factor(&grid, &config.params);
    let superluminal = max_factor > config.params.c;
    if superluminal {
        eprintln!(
            "warning: Λ = {} makes the characteristic factor reach {max_factor} > c = {}; \
             transport exceeds the light speed",
            config.params.lambda, config.params.c
        );
    }

    let start = Instant::now();
    let snapshots = match config.stop {
        StopRule::Iterations(_) => {
            godunov::run(initial, &grid, &config.params, &config.scheme, &config.schedule)?
        }
        StopRule::Time(t_end) => {
            let first = Snapshot {
                iter: initial.iter,
                time: initial.time,
                v: initial.v.clone(),
                max_speed: max_factor,
            };
            let last =
                godunov::run_until(initial, &grid, &config.params, &config.scheme, t_end)?;
            vec![
                first,
                Snapshot { iter: last.iter, time: last.time, v: last.v, max_speed: max_factor },
            ]
        }
    };
    let wall_seconds = start.elapsed().as_secs_f64();

    let mut emitted = Vec::with_capacity(snapshots.len() + 1);
    for snapshot in &snapshots {
        emitted.push(emit_snapshot_csv(snapshot, &grid, &config.out_dir)?);
    }

    let metadata = RunMetadata {
        config: config.clone(),
        dt,
        max_characteristic_factor: max_factor,
        superluminal,
        wall_seconds,
        order: config.scheme.order.number(),
        source_form: match config.scheme.source_form {
            crate::model::SourceForm::Conservative => "conservative".into(),
            crate::model::SourceForm::PaperNonConservative => "paper".into(),
        },
    };
    let meta_path = config.out_dir.join("metadata.json");
    emit_metadata(&metadata, &meta_path)?;
    emitted.push(meta_path);

    Ok(RunOutcome { metadata, emitted })
}
