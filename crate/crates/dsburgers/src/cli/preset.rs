//! Experiment presets: the shock and rarefaction comparisons across a
//! list of Λ values on a shared grid, shared fixed time step and
//! shared snapshot checkpoints, so fronts are comparable iteration by
//! iteration.

use super::output::{emit_metadata, emit_snapshot_csv, RunMetadata};
use super::{CliError, InitialConditionSpec, RunConfig, StopRule};
use crate::geometry::Params;
use crate::godunov::{self, DtMode, Grid, Limiter, Order, SchemeConfig};
use crate::model::SourceForm;
use crate::reference;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

/// Which experiment to reproduce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PresetKind {
    /// Rarefaction comparison: jump up 0.2 → 0.8 at r = 0.3; fronts
    /// track the right edge of the fan.
    Fig1Rarefaction,
    /// Shock comparison: jump down 0.8 → 0.2 at r = 0.3; fronts track
    /// the midpoint crossing.
    Fig2Shock,
}

impl PresetKind {
    pub fn from_name(name: &str) -> Result<Self, CliError> {
        match name {
            "fig1-rarefaction" => Ok(PresetKind::Fig1Rarefaction),
            "fig2-shock" => Ok(PresetKind::Fig2Shock),
            other => Err(CliError::Invariant(format!(
                "preset: expected `fig1-rarefaction` or `fig2-shock`, got `{other}`"
            ))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PresetKind::Fig1Rarefaction => "fig1-rarefaction",
            PresetKind::Fig2Shock => "fig2-shock",
        }
    }

    fn ic(self) -> InitialConditionSpec {
        match self {
            PresetKind::Fig1Rarefaction => InitialConditionSpec::Rarefaction,
            PresetKind::Fig2Shock => InitialConditionSpec::Shock,
        }
    }

    fn states(self) -> (f64, f64, f64) {
        match self {
            PresetKind::Fig1Rarefaction => InitialConditionSpec::rarefaction_data(),
            PresetKind::Fig2Shock => InitialConditionSpec::shock_data(),
        }
    }

    /// Level whose rightmost crossing defines the tracked front. The
    /// shock uses the midpoint of the two states; the rarefaction uses
    /// the 90% quantile, which sits just behind the right edge of the
    /// fan and survives the source-driven drift of the plateau states.
    pub fn front_level(self) -> f64 {
        let (vl, vr, _) = self.states();
        match self {
            PresetKind::Fig2Shock => 0.5 * (vl + vr),
            PresetKind::Fig1Rarefaction => vl + 0.9 * (vr - vl),
        }
    }
}

/// Grid, checkpoints and scheme options shared by every Λ in the
/// preset invocation.
#[derive(Clone, Debug)]
pub struct PresetOptions {
    pub nx: usize,
    pub schedule: Vec<u64>,
    pub cfl: f64,
    pub source_form: SourceForm,
    pub limiter: Limiter,
    pub out_dir: PathBuf,
}

/// One front measurement, matching a row of `summary.csv`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FrontRecord {
    pub lambda: f64,
    pub iter: u64,
    pub front_r: f64,
}

#[derive(Debug)]
pub struct PresetSummary {
    /// The fixed time step shared by all Λ runs.
    pub dt: f64,
    pub records: Vec<FrontRecord>,
    pub summary_path: PathBuf,
}

impl PresetSummary {
    /// Front position for one (Λ, iteration) pair.
    pub fn front(&self, lambda: f64, iter: u64) -> Option<f64> {
        self.records
            .iter()
            .find(|rec| rec.lambda == lambda && rec.iter == iter)
            .map(|rec| rec.front_r)
    }
}

/// Run the preset for every requested Λ with the second-order scheme
/// and a fixed dt from the CFL bound of the worst case over the Λ
/// list, then record front positions per checkpoint in `summary.csv`.
pub fn run_preset(
    kind: PresetKind,
    lambdas: &[f64],
    options: &PresetOptions,
) -> Result<PresetSummary, CliError> {
    if lambdas.is_empty() {
        return Err(CliError::Invariant("lambdas: preset needs at least one Λ value".into()));
    }
    let grid = Grid::new(options.nx)?;

    // Shared fixed step: CFL with the configured safety factor against
    // the fastest factor over every requested Λ.
    let worst_factor = lambdas
        .iter()
        .map(|&lambda| godunov::max_interface_factor(&grid, &Params::with_lambda(lambda)))
        .fold(0.0, f64::max);
    let dt = options.cfl * grid.dr() / worst_factor;

    let scheme = SchemeConfig {
        order: Order::Second,
        cfl_number: options.cfl,
        source_form: options.source_form,
        limiter: options.limiter,
        bc: Default::default(),
        dt_mode: DtMode::Fixed(dt),
    };
    let level = kind.front_level();
    let last_iter = options.schedule.last().copied().unwrap_or(0);

    let mut records = Vec::new();
    for &lambda in lambdas {
        let params = Params::with_lambda(lambda);
        scheme.validate(&grid, &params)?;

        let dir = options.out_dir.join(kind.name()).join(format!("lambda_{lambda}"));
        std::fs::create_dir_all(&dir)
            .map_err(|source| CliError::Io { path: dir.clone(), source })?;

        let initial = kind.ic().sample(&grid, &params)?;
        let start = Instant::now();
        let snapshots = godunov::run(initial, &grid, &params, &scheme, &options.schedule)?;
        let wall_seconds = start.elapsed().as_secs_f64();

        let max_factor = godunov::max_interface_factor(&grid, &params);
        let superluminal = max_factor > params.c;
        if superluminal {
            eprintln!(
                "warning: preset {} with Λ = {lambda}: characteristic factor {max_factor} \
                 exceeds c = {}",
                kind.name(),
                params.c
            );
        }

        for snapshot in &snapshots {
            emit_snapshot_csv(snapshot, &grid, &dir)?;
            let front_r = reference::front_position(&snapshot.v, &grid, level)
                .map_err(|e| CliError::Invariant(format!("front tracking: {e}")))?;
            records.push(FrontRecord { lambda, iter: snapshot.iter, front_r });
        }

        let config_echo = RunConfig {
            params,
            nx: options.nx,
            scheme,
            ic: kind.ic(),
            stop: StopRule::Iterations(last_iter),
            schedule: options.schedule.clone(),
            out_dir: dir.clone(),
            seed: 0,
        };
        let metadata = RunMetadata {
            config: config_echo,
            dt,
            max_characteristic_factor: max_factor,
            superluminal,
            wall_seconds,
            order: 2,
            source_form: match options.source_form {
                SourceForm::Conservative => "conservative".into(),
                SourceForm::PaperNonConservative => "paper".into(),
            },
        };
        emit_metadata(&metadata, &dir.join("metadata.json"))?;
    }

    let summary_path = options.out_dir.join(kind.name()).join("summary.csv");
    let mut text = String::from("lambda,iter,front_r\n");
    for rec in &records {
        writeln!(text, "{:.16e},{},{:.16e}", rec.lambda, rec.iter, rec.front_r)
            .expect("string writes are infallible");
    }
    std::fs::write(&summary_path, text)
        .map_err(|source| CliError::Io { path: summary_path.clone(), source })?;

    Ok(PresetSummary { dt, records, summary_path })
}
