//! Snapshot CSV and run-metadata emission.
//!
//! Snapshots are written with 17 significant digits so that re-reading
//! a file reproduces the state bit for bit.

use super::{CliError, RunConfig};
use crate::godunov::{Grid, Snapshot};
use serde::Serialize;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

/// Everything recorded about one run, serialized to `metadata.json`.
/// Keys are stable across releases.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunMetadata {
    /// Echo of the fully resolved configuration.
    pub config: RunConfig,
    /// Time step of the first executed update (the fixed step when one
    /// was configured).
    pub dt: f64,
    /// max_k |1 − Λ r_k²| over the grid interfaces.
    pub max_characteristic_factor: f64,
    /// True iff the factor above exceeds the light speed.
    pub superluminal: bool,
    pub wall_seconds: f64,
    pub order: u8,
    pub source_form: String,
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io { path: path.to_path_buf(), source }
}

/// Write one snapshot as `snap_<iter>.csv` under `dir`: header `r,v`,
/// one row per cell, newline-terminated, 17 significant digits.
pub fn emit_snapshot_csv(
    snapshot: &Snapshot,
    grid: &Grid,
    dir: &Path,
) -> Result<PathBuf, CliError> {
    let path = dir.join(format!("snap_{}.csv", snapshot.iter));
    let mut text = String::with_capacity(snapshot.v.len() * 52 + 4);
    text.push_str("r,v\n");
    for (r, v) in grid.centers().zip(&snapshot.v) {
        writeln!(text, "{r:.16e},{v:.16e}").expect("string writes are infallible");
    }
    std::fs::write(&path, text).map_err(io_err(&path))?;
    Ok(path)
}

/// Read a snapshot CSV back into (r, v) rows.
pub fn read_snapshot_csv(path: &Path) -> Result<Vec<(f64, f64)>, CliError> {
    let text = std::fs::read_to_string(path).map_err(io_err(path))?;
    let mut lines = text.lines();
    if lines.next() != Some("r,v") {
        return Err(CliError::Malformed {
            path: path.to_path_buf(),
            message: "expected header `r,v`".into(),
        });
    }
    let mut rows = Vec::new();
    for (index, line) in lines.enumerate() {
        let parse = |field: &str| {
            field.parse::<f64>().map_err(|_| CliError::Malformed {
                path: path.to_path_buf(),
                message: format!("row {}: cannot parse `{field}`", index + 1),
            })
        };
        let (r, v) = line.split_once(',').ok_or_else(|| CliError::Malformed {
            path: path.to_path_buf(),
            message: format!("row {}: expected two comma-separated fields", index + 1),
        })?;
        rows.push((parse(r)?, parse(v)?));
    }
    Ok(rows)
}

/// Write `metadata.json`.
pub fn emit_metadata(meta: &RunMetadata, path: &Path) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(meta).expect("metadata serializes");
    std::fs::write(path, text + "\n").map_err(io_err(path))
}
