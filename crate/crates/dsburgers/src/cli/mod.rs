//! Command-line driver: configuration parsing with
//! defaults < config file < flags precedence, experiment presets,
//! snapshot/metadata emission and convergence studies.
//!
//! Exit codes are part of the interface:
//!
//! | code | meaning                                   |
//! |------|-------------------------------------------|
//! | 0    | success                                   |
//! | 2    | malformed config file or CLI syntax       |
//! | 3    | unknown configuration key                 |
//! | 4    | invariant or domain violation             |
//! | 5    | numerical instability / CFL abort         |
//! | 6    | i/o failure                               |
//!
//! Diagnostics (superluminal warnings and the like) go to stderr;
//! stdout carries only the paths of emitted files and result tables.

mod convergence;
mod output;
mod preset;
mod runner;

pub use convergence::{convergence_study, ConvergenceRow};
pub use output::{emit_metadata, emit_snapshot_csv, read_snapshot_csv, RunMetadata};
pub use preset::{run_preset, FrontRecord, PresetKind, PresetOptions, PresetSummary};
pub use runner::execute_run;

use crate::geometry::Params;
use crate::godunov::{DtMode, Grid, Limiter, Order, SchemeConfig, SolverError, State};
use crate::model::{self, Branch, SourceForm, StaticSolutionSpec};
use clap::Parser;
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};
use thiserror::Error;

/// Environment variable supplying the default output directory.
pub const OUT_ENV_VAR: &str = "DSBURGERS_OUT";

const DEFAULT_NX: usize = 400;
const DEFAULT_ITERS: u64 = 400;
const PRESET_NX: usize = 2500;
const PRESET_SCHEDULE: [u64; 4] = [100, 400, 600, 800];

#[derive(Debug, Error)]
pub enum CliError {
    #[error("malformed config file {path}: {message}")]
    Malformed { path: PathBuf, message: String },
    #[error("unknown configuration key `{key}`")]
    UnknownKey { key: String },
    #[error("invalid configuration: {0}")]
    Invariant(String),
    #[error("run aborted: {0}")]
    Instability(SolverError),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Malformed { .. } => 2,
            CliError::UnknownKey { .. } => 3,
            CliError::Invariant(_) => 4,
            CliError::Instability(_) => 5,
            CliError::Io { .. } => 6,
        }
    }
}

impl From<SolverError> for CliError {
    fn from(err: SolverError) -> Self {
        match err {
            SolverError::Instability { .. } | SolverError::CflViolation { .. } => {
                CliError::Instability(err)
            }
            other => CliError::Invariant(other.to_string()),
        }
    }
}

/// Command-line flags. Every flag overrides the matching config-file
/// key, which in turn overrides the built-in default.
#[derive(Debug, Default, Parser)]
#[command(
    name = "dsburgers",
    about = "Finite-volume Godunov solver for the relativistic Burgers equation \
             on a de Sitter background",
    allow_negative_numbers = true
)]
pub struct Args {
    /// JSON config file with the same keys as the long flags.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Cosmological constant Λ (0 = flat, > 0 de Sitter, < 0 anti-de Sitter).
    #[arg(long)]
    pub lambda: Option<f64>,
    /// Light speed (default 1).
    #[arg(long)]
    pub c: Option<f64>,
    /// Number of grid cells on [0, 1].
    #[arg(long)]
    pub nx: Option<usize>,
    /// Scheme order: 1 or 2.
    #[arg(long)]
    pub order: Option<u8>,
    /// CFL safety factor in (0, 1].
    #[arg(long)]
    pub cfl: Option<f64>,
    /// Source splitting: "conservative" or "paper".
    #[arg(long)]
    pub source_form: Option<String>,
    /// Initial condition: shock | rarefaction | static | riemann | smooth | file.
    #[arg(long)]
    pub ic: Option<String>,
    /// Left state of a riemann initial condition.
    #[arg(long)]
    pub vl: Option<f64>,
    /// Right state of a riemann initial condition.
    #[arg(long)]
    pub vr: Option<f64>,
    /// Jump location of a riemann initial condition.
    #[arg(long)]
    pub r0: Option<f64>,
    /// Constant N of the static initial condition.
    #[arg(long)]
    pub static_n: Option<f64>,
    /// Sign branch of the static initial condition: 1 or -1.
    #[arg(long)]
    pub static_sign: Option<i8>,
    /// Snapshot CSV to load when --ic file is selected.
    #[arg(long)]
    pub ic_file: Option<PathBuf>,
    /// March this many iterations.
    #[arg(long, conflicts_with = "t_end")]
    pub iters: Option<u64>,
    /// March to this time instead of an iteration count.
    #[arg(long)]
    pub t_end: Option<f64>,
    /// Comma list of iterations at which to write snapshots.
    #[arg(long)]
    pub snapshots: Option<String>,
    /// Fixed time step (validated against the CFL bound); omit for
    /// adaptive stepping.
    #[arg(long)]
    pub dt: Option<f64>,
    /// Slope limiter for order 2: "minmod" or "none".
    #[arg(long)]
    pub limiter: Option<String>,
    /// Output directory (falls back to $DSBURGERS_OUT, then ./out).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Experiment preset: fig1-rarefaction | fig2-shock.
    #[arg(long)]
    pub preset: Option<String>,
    /// Comma list of Λ values for a preset (default "0,1").
    #[arg(long, allow_hyphen_values = true)]
    pub lambdas: Option<String>,
    /// Comma list of cell counts (each double the previous) for a
    /// convergence study against the matching exact solution.
    #[arg(long)]
    pub convergence: Option<String>,
    /// Seed recorded for randomized test tooling.
    #[arg(long)]
    pub seed: Option<u64>,
}

/// Initial-condition selection, resolved from flags or file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InitialConditionSpec {
    /// Riemann data 0.8 / 0.2 with the jump at r = 0.3.
    Shock,
    /// Riemann data 0.2 / 0.8 with the jump at r = 0.3.
    Rarefaction,
    Static { n: f64, sign: i8 },
    Riemann { vl: f64, vr: f64, r0: f64 },
    /// 0.5 + 0.25 sin(2πr), the convergence-study profile.
    Smooth,
    File { path: PathBuf },
}

impl InitialConditionSpec {
    /// The Riemann data behind the shock preset.
    pub fn shock_data() -> (f64, f64, f64) {
        (0.8, 0.2, 0.3)
    }

    /// The Riemann data behind the rarefaction preset.
    pub fn rarefaction_data() -> (f64, f64, f64) {
        (0.2, 0.8, 0.3)
    }

    /// Sample the initial condition at the cell centers, re-validating
    /// the model invariants (static radicand, file length).
    pub fn sample(&self, grid: &Grid, params: &Params) -> Result<State, CliError> {
        match self {
            InitialConditionSpec::Shock => {
                let (vl, vr, r0) = Self::shock_data();
                Ok(State::from_profile(grid, |r| if r < r0 { vl } else { vr }))
            }
            InitialConditionSpec::Rarefaction => {
                let (vl, vr, r0) = Self::rarefaction_data();
                Ok(State::from_profile(grid, |r| if r < r0 { vl } else { vr }))
            }
            InitialConditionSpec::Riemann { vl, vr, r0 } => {
                let (vl, vr, r0) = (*vl, *vr, *r0);
                Ok(State::from_profile(grid, move |r| if r < r0 { vl } else { vr }))
            }
            InitialConditionSpec::Static { n, sign } => {
                let branch = if *sign >= 0 { Branch::Positive } else { Branch::Negative };
                let spec = StaticSolutionSpec::new(params, *n, branch)
                    .map_err(|e| CliError::Invariant(format!("static-n: {e}")))?;
                Ok(State::from_profile(grid, |r| {
                    model::static_solution(params, &spec, r).expect("validated over [0,1]")
                }))
            }
            InitialConditionSpec::Smooth => Ok(State::from_profile(grid, |r| {
                0.5 + 0.25 * (2.0 * std::f64::consts::PI * r).sin()
            })),
            InitialConditionSpec::File { path } => {
                let rows = read_snapshot_csv(path)?;
                if rows.len() != grid.nx() {
                    return Err(CliError::Invariant(format!(
                        "ic-file: {} has {} rows but the grid has {} cells",
                        path.display(),
                        rows.len(),
                        grid.nx()
                    )));
                }
                Ok(State { v: rows.iter().map(|&(_, v)| v).collect(), time: 0.0, iter: 0 })
            }
        }
    }
}

/// When to stop marching.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StopRule {
    Iterations(u64),
    Time(f64),
}

/// A fully resolved run: every invariant of the solver modules has
/// been re-validated.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunConfig {
    pub params: Params,
    pub nx: usize,
    pub scheme: SchemeConfig,
    pub ic: InitialConditionSpec,
    pub stop: StopRule,
    /// Iterations at which snapshots are written (iteration 0 is
    /// always captured). Empty in time-stop mode.
    pub schedule: Vec<u64>,
    pub out_dir: PathBuf,
    pub seed: u64,
}

/// Config-file representation: same keys as the long flags, all
/// optional.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    lambda: Option<f64>,
    c: Option<f64>,
    nx: Option<usize>,
    order: Option<u8>,
    cfl: Option<f64>,
    source_form: Option<String>,
    ic: Option<String>,
    vl: Option<f64>,
    vr: Option<f64>,
    r0: Option<f64>,
    static_n: Option<f64>,
    static_sign: Option<i8>,
    ic_file: Option<PathBuf>,
    iters: Option<u64>,
    t_end: Option<f64>,
    snapshots: Option<Vec<u64>>,
    dt: Option<f64>,
    limiter: Option<String>,
    out: Option<PathBuf>,
    lambdas: Option<Vec<f64>>,
    seed: Option<u64>,
}

const KNOWN_KEYS: &[&str] = &[
    "lambda", "c", "nx", "order", "cfl", "source_form", "ic", "vl", "vr", "r0", "static_n",
    "static_sign", "ic_file", "iters", "t_end", "snapshots", "dt", "limiter", "out", "lambdas",
    "seed",
];

impl FileConfig {
    fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
        let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| {
            CliError::Malformed { path: path.to_path_buf(), message: e.to_string() }
        })?;
        let object = value.as_object().ok_or_else(|| CliError::Malformed {
            path: path.to_path_buf(),
            message: "top level must be a JSON object".into(),
        })?;
        // Report unknown keys by name before type checking.
        for key in object.keys() {
            if !KNOWN_KEYS.contains(&key.as_str()) {
                return Err(CliError::UnknownKey { key: key.clone() });
            }
        }
        serde_json::from_value(value).map_err(|e| CliError::Malformed {
            path: path.to_path_buf(),
            message: e.to_string(),
        })
    }
}

/// Flags merged over config-file values; `None` means "use the
/// default".
#[derive(Debug, Default)]
pub struct Merged {
    pub lambda: Option<f64>,
    pub c: Option<f64>,
    pub nx: Option<usize>,
    pub order: Option<u8>,
    pub cfl: Option<f64>,
    pub source_form: Option<String>,
    pub ic: Option<String>,
    pub vl: Option<f64>,
    pub vr: Option<f64>,
    pub r0: Option<f64>,
    pub static_n: Option<f64>,
    pub static_sign: Option<i8>,
    pub ic_file: Option<PathBuf>,
    pub iters: Option<u64>,
    pub t_end: Option<f64>,
    pub snapshots: Option<Vec<u64>>,
    pub dt: Option<f64>,
    pub limiter: Option<String>,
    pub out: Option<PathBuf>,
    pub lambdas: Option<Vec<f64>>,
    pub seed: Option<u64>,
}

fn parse_list<T: std::str::FromStr>(text: &str, key: &str) -> Result<Vec<T>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<T>()
                .map_err(|_| CliError::Invariant(format!("{key}: cannot parse `{s}`")))
        })
        .collect()
}

/// Merge flags over file values over defaults and resolve into a
/// validated [`RunConfig`]. Rejects unknown file keys; every invariant
/// violation names the offending key.
pub fn parse_config(args: &Args) -> Result<(RunConfig, Merged), CliError> {
    let file = match &args.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };

    let merged = Merged {
        lambda: args.lambda.or(file.lambda),
        c: args.c.or(file.c),
        nx: args.nx.or(file.nx),
        order: args.order.or(file.order),
        cfl: args.cfl.or(file.cfl),
        source_form: args.source_form.clone().or(file.source_form),
        ic: args.ic.clone().or(file.ic),
        vl: args.vl.or(file.vl),
        vr: args.vr.or(file.vr),
        r0: args.r0.or(file.r0),
        static_n: args.static_n.or(file.static_n),
        static_sign: args.static_sign.or(file.static_sign),
        ic_file: args.ic_file.clone().or(file.ic_file),
        iters: args.iters.or(file.iters),
        t_end: args.t_end.or(file.t_end),
        snapshots: match &args.snapshots {
            Some(text) => Some(parse_list(text, "snapshots")?),
            None => file.snapshots,
        },
        dt: args.dt.or(file.dt),
        limiter: args.limiter.clone().or(file.limiter),
        out: args.out.clone().or(file.out),
        lambdas: match &args.lambdas {
            Some(text) => Some(parse_list(text, "lambdas")?),
            None => file.lambdas,
        },
        seed: args.seed.or(file.seed),
    };

    let config = resolve(&merged)?;
    Ok((config, merged))
}

fn resolve(merged: &Merged) -> Result<RunConfig, CliError> {
    let c = merged.c.unwrap_or(1.0);
    let params = Params::new(merged.lambda.unwrap_or(1.0), c)
        .map_err(|e| CliError::Invariant(format!("c: {e}")))?;

    let nx = merged.nx.unwrap_or(DEFAULT_NX);
    let grid = Grid::new(nx).map_err(|e| CliError::Invariant(format!("nx: {e}")))?;

    let order = match merged.order {
        None => Order::Second,
        Some(n) => Order::from_number(n)
            .ok_or_else(|| CliError::Invariant(format!("order: must be 1 or 2, got {n}")))?,
    };
    let source_form = match merged.source_form.as_deref() {
        None | Some("conservative") => SourceForm::Conservative,
        Some("paper") => SourceForm::PaperNonConservative,
        Some(other) => {
            return Err(CliError::Invariant(format!(
                "source-form: expected `conservative` or `paper`, got `{other}`"
            )))
        }
    };
    let limiter = match merged.limiter.as_deref() {
        None | Some("minmod") => Limiter::Minmod,
        Some("none") => Limiter::None,
        Some(other) => {
            return Err(CliError::Invariant(format!(
                "limiter: expected `minmod` or `none`, got `{other}`"
            )))
        }
    };
    let dt_mode = match merged.dt {
        Some(dt) => DtMode::Fixed(dt),
        None => DtMode::Adaptive,
    };
    let scheme = SchemeConfig {
        order,
        cfl_number: merged.cfl.unwrap_or(0.9),
        source_form,
        limiter,
        bc: Default::default(),
        dt_mode,
    };
    scheme
        .validate(&grid, &params)
        .map_err(|e| CliError::Invariant(e.to_string()))?;

    let ic = match merged.ic.as_deref() {
        None | Some("shock") => InitialConditionSpec::Shock,
        Some("rarefaction") => InitialConditionSpec::Rarefaction,
        Some("smooth") => InitialConditionSpec::Smooth,
        Some("static") => InitialConditionSpec::Static {
            n: merged.static_n.unwrap_or(0.5),
            sign: match merged.static_sign {
                None | Some(1) => 1,
                Some(-1) => -1,
                Some(other) => {
                    return Err(CliError::Invariant(format!(
                        "static-sign: must be 1 or -1, got {other}"
                    )))
                }
            },
        },
        Some("riemann") => InitialConditionSpec::Riemann {
            vl: merged.vl.unwrap_or(0.8),
            vr: merged.vr.unwrap_or(0.2),
            r0: merged.r0.unwrap_or(0.3),
        },
        Some("file") => InitialConditionSpec::File {
            path: merged
                .ic_file
                .clone()
                .ok_or_else(|| CliError::Invariant("ic-file: required with --ic file".into()))?,
        },
        Some(other) => {
            return Err(CliError::Invariant(format!(
                "ic: expected shock|rarefaction|static|riemann|smooth|file, got `{other}`"
            )))
        }
    };
    if let InitialConditionSpec::Riemann { r0, .. } = ic {
        if !(0.0..=1.0).contains(&r0) {
            return Err(CliError::Invariant(format!("r0: jump location {r0} outside [0, 1]")));
        }
    }
    // Re-validate the model invariants behind the IC (static radicand,
    // file shape) at load time.
    ic.sample(&grid, &params)?;

    let (stop, schedule) = match (merged.t_end, merged.iters, &merged.snapshots) {
        (Some(t), None, None) => {
            if !(t > 0.0) {
                return Err(CliError::Invariant(format!("t-end: must be positive, got {t}")));
            }
            (StopRule::Time(t), Vec::new())
        }
        (Some(_), _, _) => {
            return Err(CliError::Invariant(
                "t-end: cannot be combined with iters or snapshots (snapshots are \
                 iteration-indexed)"
                    .into(),
            ))
        }
        (None, iters, snapshots) => {
            let mut schedule = snapshots.clone().unwrap_or_default();
            if schedule.windows(2).any(|w| w[0] >= w[1]) {
                return Err(CliError::Invariant(
                    "snapshots: list must be strictly increasing".into(),
                ));
            }
            let last_snapshot = schedule.last().copied().unwrap_or(0);
            let end = match iters {
                Some(n) => {
                    if n < last_snapshot {
                        return Err(CliError::Invariant(format!(
                            "iters: {n} is before the last scheduled snapshot {last_snapshot}"
                        )));
                    }
                    n
                }
                None if last_snapshot > 0 => last_snapshot,
                None => DEFAULT_ITERS,
            };
            if schedule.last() != Some(&end) {
                schedule.push(end);
            }
            (StopRule::Iterations(end), schedule)
        }
    };

    let out_dir = merged
        .out
        .clone()
        .or_else(|| std::env::var_os(OUT_ENV_VAR).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("out"));

    Ok(RunConfig {
        params,
        nx,
        scheme,
        ic,
        stop,
        schedule,
        out_dir,
        seed: merged.seed.unwrap_or(0),
    })
}

/// Top-level dispatch behind the binary: preset mode, convergence
/// mode, or a single run.
pub fn execute(args: Args) -> Result<(), CliError> {
    let convergence_list = match &args.convergence {
        Some(text) => Some(parse_list::<usize>(text, "convergence")?),
        None => None,
    };
    let preset_name = args.preset.clone();
    let (config, merged) = parse_config(&args)?;

    if let Some(name) = preset_name {
        let kind = PresetKind::from_name(&name)?;
        let lambdas = merged.lambdas.clone().unwrap_or_else(|| vec![0.0, 1.0]);
        let options = PresetOptions {
            nx: merged.nx.unwrap_or(PRESET_NX),
            schedule: merged.snapshots.clone().unwrap_or_else(|| PRESET_SCHEDULE.to_vec()),
            cfl: config.scheme.cfl_number,
            source_form: config.scheme.source_form,
            limiter: config.scheme.limiter,
            out_dir: config.out_dir.clone(),
        };
        let summary = run_preset(kind, &lambdas, &options)?;
        println!("{}", summary.summary_path.display());
        return Ok(());
    }

    if let Some(nx_list) = convergence_list {
        let rows = convergence_study(&config, &nx_list)?;
        for row in &rows {
            match row.order {
                Some(order) => println!("nx={:<6} l1={:.6e} order={:.3}", row.nx, row.l1, order),
                None => println!("nx={:<6} l1={:.6e}", row.nx, row.l1),
            }
        }
        return Ok(());
    }

    let outcome = execute_run(&config)?;
    for path in &outcome.emitted {
        println!("{}", path.display());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args() -> Args {
        Args::default()
    }

    #[test]
    fn defaults_fill_a_minimal_flag_set() {
        let mut a = args();
        a.lambda = Some(1.0);
        a.nx = Some(200);
        a.order = Some(2);
        a.ic = Some("shock".into());
        a.out = Some(PathBuf::from("/tmp/dsb-test-defaults"));
        let (config, _) = parse_config(&a).unwrap();
        assert_eq!(config.params.lambda, 1.0);
        assert_eq!(config.params.c, 1.0);
        assert_eq!(config.nx, 200);
        assert_eq!(config.scheme.order, Order::Second);
        assert_eq!(config.scheme.cfl_number, 0.9);
        assert_eq!(config.scheme.source_form, SourceForm::Conservative);
        assert_eq!(config.ic, InitialConditionSpec::Shock);
        assert_eq!(config.stop, StopRule::Iterations(DEFAULT_ITERS));
        assert_eq!(config.schedule, vec![DEFAULT_ITERS]);
    }

    #[test]
    fn static_radicand_is_revalidated_at_load() {
        let mut a = args();
        a.lambda = Some(1.0);
        a.ic = Some("static".into());
        a.static_n = Some(2.0);
        let err = parse_config(&a).unwrap_err();
        assert_eq!(err.exit_code(), 4);
        assert!(err.to_string().contains("static-n"), "{err}");
    }

    #[test]
    fn order_three_is_an_invariant_violation() {
        let mut a = args();
        a.order = Some(3);
        let err = parse_config(&a).unwrap_err();
        assert_eq!(err.exit_code(), 4);
        assert!(err.to_string().contains("order"), "{err}");
    }

    #[test]
    fn oversized_fixed_dt_is_rejected_at_validation() {
        let mut a = args();
        a.lambda = Some(0.0);
        a.nx = Some(100);
        a.dt = Some(0.02);
        let err = parse_config(&a).unwrap_err();
        assert_eq!(err.exit_code(), 4);
        assert!(err.to_string().contains("CFL"), "{err}");
    }

    #[test]
    fn unknown_file_keys_are_named() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("config.json");
        std::fs::write(&path, r#"{"lambda": 1.0, "cflnumber": 0.5}"#).unwrap();
        let mut a = args();
        a.config = Some(path);
        let err = parse_config(&a).unwrap_err();
        assert_eq!(err.exit_code(), 3);
        assert!(err.to_string().contains("cflnumber"), "{err}");
    }

    #[test]
    fn malformed_files_are_distinguished_from_unknown_keys() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("config.json");
        std::fs::write(&path, "{not json").unwrap();
        let mut a = args();
        a.config = Some(path.clone());
        let err = parse_config(&a).unwrap_err();
        assert_eq!(err.exit_code(), 2);

        std::fs::write(&path, r#"{"order": "two"}"#).unwrap();
        let err = parse_config(&a).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn flags_override_file_values() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("config.json");
        std::fs::write(
            &path,
            r#"{"lambda": 0.0, "nx": 128, "cfl": 0.5, "snapshots": [10, 20]}"#,
        )
        .unwrap();
        let mut a = args();
        a.config = Some(path);
        a.lambda = Some(1.0);
        let (config, _) = parse_config(&a).unwrap();
        assert_eq!(config.params.lambda, 1.0);
        assert_eq!(config.nx, 128);
        assert_eq!(config.scheme.cfl_number, 0.5);
        assert_eq!(config.schedule, vec![10, 20]);
        assert_eq!(config.stop, StopRule::Iterations(20));
    }

    #[test]
    fn t_end_mode_excludes_iteration_schedules() {
        let mut a = args();
        a.t_end = Some(0.5);
        let (config, _) = parse_config(&a).unwrap();
        assert_eq!(config.stop, StopRule::Time(0.5));
        assert!(config.schedule.is_empty());

        let mut a = args();
        a.t_end = Some(0.5);
        a.snapshots = Some("10,20".into());
        assert_eq!(parse_config(&a).unwrap_err().exit_code(), 4);
    }

    #[test]
    fn snapshot_lists_must_increase() {
        let mut a = args();
        a.snapshots = Some("10,10".into());
        assert_eq!(parse_config(&a).unwrap_err().exit_code(), 4);

        let mut a = args();
        a.snapshots = Some("100,400".into());
        a.iters = Some(50);
        assert_eq!(parse_config(&a).unwrap_err().exit_code(), 4);
    }

    #[test]
    fn riemann_ic_takes_its_parameters_from_flags() {
        let mut a = args();
        a.lambda = Some(0.0);
        a.ic = Some("riemann".into());
        a.vl = Some(0.6);
        a.vr = Some(0.1);
        a.r0 = Some(0.4);
        let (config, _) = parse_config(&a).unwrap();
        assert_eq!(config.ic, InitialConditionSpec::Riemann { vl: 0.6, vr: 0.1, r0: 0.4 });
    }
}
