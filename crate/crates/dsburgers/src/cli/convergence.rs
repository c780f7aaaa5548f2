//! Refinement studies against the exact solutions: the smooth Λ = 0
//! profile is compared with the characteristics oracle, static initial
//! data with the closed-form static solution.
//!
//! The error is integrated over the subdomain not influenced by the
//! boundary data. Both study profiles are positive at r = 0, so the
//! left boundary is an inflow whose zero-gradient ghost cells supply
//! the upstream state to first order only; cells inside the boundary's
//! domain of influence therefore carry an O(Δr) data error at any
//! scheme order (replacing the ghosts with exact upstream values
//! restores clean second order there). The window — left edge at
//! t_end times the fastest characteristic, right edge at 1 − t_end for
//! the smooth profile and at 1 for static runs (the factor 1 − Λr²
//! stops transport at the horizon) — restricts the measurement to the
//! region determined purely by the interior initial data, where the
//! oracle is the true continuum limit and the rates measure the
//! scheme.

use super::{CliError, InitialConditionSpec, RunConfig, StopRule};
use crate::godunov::{self, Grid};
use crate::model::{self, Branch, StaticSolutionSpec};
use crate::reference::{self, SmoothProfile};
use std::fmt::Write as _;

/// One row of `convergence.csv`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConvergenceRow {
    pub nx: usize,
    pub l1: f64,
    /// Observed order against the previous resolution; absent on the
    /// first row.
    pub order: Option<f64>,
}

fn exact_profile(
    config: &RunConfig,
    t_end: f64,
) -> Result<(Box<dyn Fn(f64) -> f64>, (f64, f64)), CliError> {
    match &config.ic {
        InitialConditionSpec::Smooth => {
            if config.params.lambda != 0.0 {
                return Err(CliError::Invariant(
                    "convergence: the smooth oracle requires lambda = 0".into(),
                ));
            }
            if !(t_end < 0.5) {
                return Err(CliError::Invariant(format!(
                    "convergence: t-end {t_end} leaves no boundary-uninfluenced window"
                )));
            }
            let profile = SmoothProfile::sine();
            if t_end >= profile.shock_time() {
                return Err(CliError::Invariant(format!(
                    "convergence: t-end {t_end} is past shock formation at {}",
                    profile.shock_time()
                )));
            }
            let oracle: Box<dyn Fn(f64) -> f64> = Box::new(move |r| {
                reference::exact_smooth_classical(&profile, t_end, r)
                    .expect("checked pre-shock above")
            });
            Ok((oracle, (t_end, 1.0 - t_end)))
        }
        InitialConditionSpec::Static { n, sign } => {
            let params = config.params;
            let branch = if *sign >= 0 { Branch::Positive } else { Branch::Negative };
            let spec = StaticSolutionSpec::new(&params, *n, branch)
                .map_err(|e| CliError::Invariant(format!("static-n: {e}")))?;
            let oracle: Box<dyn Fn(f64) -> f64> = Box::new(move |r| {
                model::static_solution(&params, &spec, r).expect("validated over [0,1]")
            });
            let fastest = (0..=1000)
                .map(|i| {
                    let r = i as f64 / 1000.0;
                    model::characteristic_speed(&params, r, oracle(r)).abs()
                })
                .fold(0.0, f64::max);
            let window_lo = 1.05 * t_end * fastest;
            if window_lo >= 1.0 {
                return Err(CliError::Invariant(format!(
                    "convergence: t-end {t_end} leaves no boundary-uninfluenced window"
                )));
            }
            Ok((oracle, (window_lo, 1.0)))
        }
        other => Err(CliError::Invariant(format!(
            "convergence: no exact oracle for the `{}` initial condition",
            match other {
                InitialConditionSpec::Shock => "shock",
                InitialConditionSpec::Rarefaction => "rarefaction",
                InitialConditionSpec::Riemann { .. } => "riemann",
                InitialConditionSpec::File { .. } => "file",
                _ => unreachable!(),
            }
        ))),
    }
}

/// Run the configured problem at every resolution in `nx_list` (each
/// exactly double the previous), compare against the matching exact
/// solution at the configured end time, and write `convergence.csv`
/// (columns `nx,l1,order`) into the output directory.
pub fn convergence_study(
    config: &RunConfig,
    nx_list: &[usize],
) -> Result<Vec<ConvergenceRow>, CliError> {
    if nx_list.len() < 2 {
        return Err(CliError::Invariant(
            "convergence: need at least two resolutions".into(),
        ));
    }
    for pair in nx_list.windows(2) {
        if pair[1] != 2 * pair[0] {
            return Err(CliError::Invariant(format!(
                "convergence: {} is not a 2x refinement of {}",
                pair[1], pair[0]
            )));
        }
    }
    let StopRule::Time(t_end) = config.stop else {
        return Err(CliError::Invariant(
            "convergence: requires --t-end (iteration counts are not refinement-invariant)"
                .into(),
        ));
    };
    let (exact, (window_lo, window_hi)) = exact_profile(config, t_end)?;

    let mut rows: Vec<ConvergenceRow> = Vec::with_capacity(nx_list.len());
    for &nx in nx_list {
        let grid = Grid::new(nx)?;
        let initial = config.ic.sample(&grid, &config.params)?;
        let state =
            godunov::run_until(initial, &grid, &config.params, &config.scheme, t_end)?;
        let l1 = grid
            .centers()
            .zip(&state.v)
            .filter(|&(r, _)| r >= window_lo && r <= window_hi)
            .map(|(r, &v)| (v - exact(r)).abs())
            .sum::<f64>()
            * grid.dr();
        let order = rows.last().map(|prev| reference::observed_order(prev.l1, l1));
        rows.push(ConvergenceRow { nx, l1, order });
    }

    std::fs::create_dir_all(&config.out_dir)
        .map_err(|source| CliError::Io { path: config.out_dir.clone(), source })?;
    let path = config.out_dir.join("convergence.csv");
    let mut text = String::from("nx,l1,order\n");
    for row in &rows {
        match row.order {
            Some(order) => writeln!(text, "{},{:.16e},{:.16e}", row.nx, row.l1, order),
            None => writeln!(text, "{},{:.16e},", row.nx, row.l1),
        }
        .expect("string writes are infallible");
    }
    std::fs::write(&path, text).map_err(|source| CliError::Io { path, source })?;

    Ok(rows)
}
