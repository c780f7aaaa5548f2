//! The discrete solver: uniform grid on [0, 1], exact Godunov
//! interface fluxes, first-order and MUSCL-Hancock second-order
//! updates, CFL-controlled time stepping, transmissive boundaries and
//! snapshot capture.
//!
//! Both schemes difference the conservative flux b(r) v²/2 at cell
//! interfaces, with b evaluated at the exact interface coordinates and
//! the source at cell centers. The second-order scheme reconstructs a
//! limited in-cell slope, advances both face values half a step with
//! the in-cell flux difference, and solves the interface Riemann
//! problems between the predicted face values.

use crate::geometry::Params;
use crate::model::{self, SourceForm};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Fallback time step when every transport coefficient vanishes. Not
/// reachable on [0, 1] where b(0) = 1, but keeps the division safe for
/// degenerate configurations.
const MAX_DT_FALLBACK: f64 = 1.0;

/// Uniform cell-centered mesh on [0, 1]: cell j covers
/// [j Δr, (j+1) Δr] with center (j + 1/2) Δr.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    nx: usize,
    dr: f64,
}

impl Grid {
    /// The second-order stencil needs two ghost layers, so at least
    /// four interior cells.
    pub fn new(nx: usize) -> Result<Self, SolverError> {
        if nx < 4 {
            return Err(SolverError::GridTooCoarse { nx });
        }
        Ok(Grid { nx, dr: 1.0 / nx as f64 })
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn dr(&self) -> f64 {
        self.dr
    }

    /// Center of cell `j`.
    pub fn center(&self, j: usize) -> f64 {
        (j as f64 + 0.5) * self.dr
    }

    /// Interface `k` for k = 0..=nx; interface k sits left of cell k.
    pub fn interface(&self, k: usize) -> f64 {
        k as f64 * self.dr
    }

    pub fn centers(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.nx).map(move |j| self.center(j))
    }
}

/// Cell-averaged velocity field at a discrete time.
#[derive(Clone, Debug, PartialEq)]
pub struct State {
    pub v: Vec<f64>,
    pub time: f64,
    pub iter: u64,
}

impl State {
    /// Sample a profile at the cell centers of `grid`.
    pub fn from_profile(grid: &Grid, profile: impl Fn(f64) -> f64) -> Self {
        State {
            v: grid.centers().map(profile).collect(),
            time: 0.0,
            iter: 0,
        }
    }

    fn first_non_finite(&self) -> Option<usize> {
        self.v.iter().position(|x| !x.is_finite())
    }
}

/// Scheme order: plain Godunov or the MUSCL-Hancock predictor-corrector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Order {
    First,
    Second,
}

impl Order {
    pub fn number(self) -> u8 {
        match self {
            Order::First => 1,
            Order::Second => 2,
        }
    }

    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(Order::First),
            2 => Some(Order::Second),
            _ => None,
        }
    }
}

/// Slope limiter for the second-order reconstruction. `Minmod` keeps
/// the face values between the neighboring averages; `None` uses the
/// unlimited central slope (accuracy studies only).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Limiter {
    None,
    #[default]
    Minmod,
}

/// Boundary rule; ghost cells copy the nearest interior value so waves
/// leave the domain without reflection.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Boundary {
    #[default]
    Transmissive,
}

/// Time-step policy: recompute from the CFL bound each step, or use a
/// fixed value (validated once against the bound).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DtMode {
    Adaptive,
    Fixed(f64),
}

/// Everything that selects a concrete scheme.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SchemeConfig {
    pub order: Order,
    pub cfl_number: f64,
    pub source_form: SourceForm,
    pub limiter: Limiter,
    pub bc: Boundary,
    pub dt_mode: DtMode,
}

impl Default for SchemeConfig {
    fn default() -> Self {
        SchemeConfig {
            order: Order::Second,
            cfl_number: 0.9,
            source_form: SourceForm::Conservative,
            limiter: Limiter::Minmod,
            bc: Boundary::Transmissive,
            dt_mode: DtMode::Adaptive,
        }
    }
}

impl SchemeConfig {
    /// Check the configuration against a grid and parameters. A fixed
    /// time step must satisfy the CFL bound
    /// (Δt/Δr) max_k |1 − Λ r_k²| ≤ 1 over the interface set or
    /// construction of the run fails.
    pub fn validate(&self, grid: &Grid, params: &Params) -> Result<(), SolverError> {
        if !(self.cfl_number > 0.0 && self.cfl_number <= 1.0) {
            return Err(SolverError::InvalidCfl { cfl: self.cfl_number });
        }
        if let DtMode::Fixed(dt) = self.dt_mode {
            let max_factor = max_interface_factor(grid, params);
            if !(dt > 0.0) || dt / grid.dr() * max_factor > 1.0 {
                return Err(SolverError::FixedDtViolatesCfl {
                    dt,
                    max_dt: grid.dr() / max_factor,
                });
            }
        }
        Ok(())
    }
}

/// Cell averages at a scheduled iteration, plus the largest interface
/// speed factor for superluminal diagnostics.
#[derive(Clone, Debug, PartialEq)]
pub struct Snapshot {
    pub iter: u64,
    pub time: f64,
    pub v: Vec<f64>,
    /// max_k |1 − Λ r_k²| over the interface set; values above c mean
    /// the model transports faster than light.
    pub max_speed: f64,
}

#[derive(Debug, Error, PartialEq)]
pub enum SolverError {
    #[error("grid needs at least 4 cells, got nx = {nx}")]
    GridTooCoarse { nx: usize },
    #[error("CFL number must lie in (0, 1], got {cfl}")]
    InvalidCfl { cfl: f64 },
    #[error("fixed dt = {dt} violates the CFL bound; the largest admissible step is {max_dt}")]
    FixedDtViolatesCfl { dt: f64, max_dt: f64 },
    #[error("snapshot schedule must be strictly increasing")]
    ScheduleNotIncreasing,
    #[error("state length {got} does not match grid size {expected}")]
    StateSizeMismatch { expected: usize, got: usize },
    #[error("executed step dt = {dt} violated the CFL bound {bound}")]
    CflViolation { dt: f64, bound: f64 },
    #[error("non-finite value in cell {cell} at iteration {iter}")]
    Instability { cell: usize, iter: u64 },
}

/// max_k |1 − Λ r_k²| over all nx + 1 interfaces — the denominator of
/// the CFL bound and the superluminal detector.
pub fn max_interface_factor(grid: &Grid, params: &Params) -> f64 {
    (0..=grid.nx())
        .map(|k| model::flux_coefficient(params, grid.interface(k)).abs())
        .fold(0.0, f64::max)
}

/// Exact Godunov flux for the classical flux v²/2:
///
/// ```text
/// f(v1, v2) = v1²/2   if v1 > v2 and v1 + v2 > 0
///             v2²/2   if v1 > v2 and v1 + v2 < 0
///             v1²/2   if v1 ≤ v2 and v1 > 0
///             v2²/2   if v1 ≤ v2 and v2 < 0
///             0       if v1 ≤ v2 and v1 ≤ 0 ≤ v2
/// ```
///
/// For v1 > v2 with v1 + v2 = 0 both candidate branches coincide
/// (v1² = v2²), so the stationary shock is well defined.
//
// The expression order here is pinned: `reference::plain_burgers_step`
// mirrors these exact arithmetic expressions so that the Λ = 0
// first-order scheme reproduces the classical scheme bit for bit.
pub fn riemann_flux(v1: f64, v2: f64) -> f64 {
    if v1 > v2 {
        if v1 + v2 >= 0.0 {
            v1 * v1 / 2.0
        } else {
            v2 * v2 / 2.0
        }
    } else if v1 > 0.0 {
        v1 * v1 / 2.0
    } else if v2 < 0.0 {
        v2 * v2 / 2.0
    } else {
        0.0
    }
}

/// Time step for the next update. In adaptive mode this is the CFL
/// bound with the configured safety factor, additionally capped by the
/// actual characteristic speeds |b v| so that superluminal states
/// remain stable; in fixed mode it is the configured step.
pub fn compute_dt(state: &State, grid: &Grid, params: &Params, config: &SchemeConfig) -> f64 {
    match config.dt_mode {
        DtMode::Fixed(dt) => dt,
        DtMode::Adaptive => {
            let max_factor = max_interface_factor(grid, params);
            let max_char = state
                .v
                .iter()
                .enumerate()
                .map(|(j, &v)| {
                    model::flux_coefficient(params, grid.center(j)).abs() * v.abs().max(1e-12)
                })
                .fold(0.0, f64::max);
            let denom = max_factor.max(max_char);
            if denom <= 0.0 {
                return MAX_DT_FALLBACK;
            }
            config.cfl_number * grid.dr() / denom
        }
    }
}

/// Extend the cell averages with two ghost layers per side; each ghost
/// copies the nearest interior value (zero-gradient extrapolation).
pub fn apply_bc(v: &[f64], config: &SchemeConfig) -> Vec<f64> {
    let Boundary::Transmissive = config.bc;
    let n = v.len();
    let mut ext = Vec::with_capacity(n + 4);
    ext.push(v[0]);
    ext.push(v[0]);
    ext.extend_from_slice(v);
    ext.push(v[n - 1]);
    ext.push(v[n - 1]);
    ext
}

/// Reconstructed face values of one cell.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FacePair {
    pub left: f64,
    pub right: f64,
}

fn minmod(a: f64, b: f64) -> f64 {
    if a * b <= 0.0 {
        0.0
    } else if a.abs() < b.abs() {
        a
    } else {
        b
    }
}

/// Reconstruct per-cell face values (v_L, v_R) from the ghost-extended
/// averages. First order keeps the averages; second order applies the
/// configured limiter to the neighbor jumps, which for minmod keeps
/// v_L between v_{i-1} and v_i and v_R between v_i and v_{i+1}. The
/// outermost entries have no neighbors and stay piecewise constant.
pub fn reconstruct(ext: &[f64], config: &SchemeConfig) -> Vec<FacePair> {
    let n = ext.len();
    let mut pairs: Vec<FacePair> = ext.iter().map(|&v| FacePair { left: v, right: v }).collect();
    if config.order == Order::First {
        return pairs;
    }
    for i in 1..n - 1 {
        let jump = match config.limiter {
            Limiter::Minmod => minmod(ext[i] - ext[i - 1], ext[i + 1] - ext[i]),
            Limiter::None => 0.5 * (ext[i + 1] - ext[i - 1]),
        };
        pairs[i] = FacePair { left: ext[i] - 0.5 * jump, right: ext[i] + 0.5 * jump };
    }
    pairs
}

/// Advance every reconstructed pair by half a step using the in-cell
/// flux difference and the source at the cell center:
///
/// ```text
/// v_X ← v_X − (Δt / 2Δr) (b_{j+1/2} v_R²/2 − b_{j-1/2} v_L²/2) + (Δt/2) S(r_j, v̄_j)
/// ```
///
/// Both faces of a cell receive the same increment. `ext` holds the
/// cell averages in the same ghost-extended indexing as `pairs` (ghost
/// cell e corresponds to the physical position of cell e − 2).
pub fn half_step(
    pairs: &mut [FacePair],
    ext: &[f64],
    grid: &Grid,
    params: &Params,
    config: &SchemeConfig,
    dt: f64,
) {
    let dr = grid.dr();
    let n = pairs.len();
    for e in 1..n - 1 {
        let j = e as f64 - 2.0;
        let r_left = j * dr;
        let r_right = (j + 1.0) * dr;
        let r_center = (j + 0.5) * dr;
        let b_left = model::flux_coefficient(params, r_left);
        let b_right = model::flux_coefficient(params, r_right);
        let g_left = pairs[e].left * pairs[e].left / 2.0;
        let g_right = pairs[e].right * pairs[e].right / 2.0;
        let s = model::source(params, r_center, ext[e], config.source_form);
        let increment = -(dt / (2.0 * dr)) * (b_right * g_right - b_left * g_left) + 0.5 * dt * s;
        pairs[e].left += increment;
        pairs[e].right += increment;
    }
}

/// One update with an explicit time step. Checks the CFL bound as
/// executed and aborts with the offending cell on any non-finite
/// result.
fn advance(
    state: &State,
    grid: &Grid,
    params: &Params,
    config: &SchemeConfig,
    dt: f64,
) -> Result<State, SolverError> {
    let nx = grid.nx();
    if state.v.len() != nx {
        return Err(SolverError::StateSizeMismatch { expected: nx, got: state.v.len() });
    }
    let dr = grid.dr();
    let bound = dt / dr * max_interface_factor(grid, params);
    if bound > 1.0 {
        return Err(SolverError::CflViolation { dt, bound });
    }

    let ext = apply_bc(&state.v, config);
    let mut v_new = vec![0.0; nx];

    match config.order {
        Order::First => {
            for j in 0..nx {
                // Flux difference written exactly as
                // b_r f(v_j, v_{j+1}) − b_l f(v_{j-1}, v_j); the
                // classical path in reference::plain_burgers_step
                // mirrors this expression for the Λ = 0 bit-equality.
                let fl = model::flux_coefficient(params, grid.interface(j))
                    * riemann_flux(ext[j + 1], ext[j + 2]);
                let fr = model::flux_coefficient(params, grid.interface(j + 1))
                    * riemann_flux(ext[j + 2], ext[j + 3]);
                let s = model::source(params, grid.center(j), ext[j + 2], config.source_form);
                v_new[j] = ext[j + 2] - (dt / dr) * (fr - fl) + dt * s;
            }
        }
        Order::Second => {
            let mut pairs = reconstruct(&ext, config);
            half_step(&mut pairs, &ext, grid, params, config, dt);

            // Interface k separates cells k-1 and k, i.e. extended
            // cells k+1 and k+2.
            let mut flux = vec![0.0; nx + 1];
            for (k, slot) in flux.iter_mut().enumerate() {
                let g = riemann_flux(pairs[k + 1].right, pairs[k + 2].left);
                *slot = model::flux_coefficient(params, grid.interface(k)) * g;
            }
            for j in 0..nx {
                let half_avg = 0.5 * (pairs[j + 2].left + pairs[j + 2].right);
                let s = model::source(params, grid.center(j), half_avg, config.source_form);
                v_new[j] = state.v[j] - (dt / dr) * (flux[j + 1] - flux[j]) + dt * s;
            }
        }
    }

    let next = State { v: v_new, time: state.time + dt, iter: state.iter + 1 };
    if let Some(cell) = next.first_non_finite() {
        return Err(SolverError::Instability { cell, iter: next.iter });
    }
    Ok(next)
}

/// One full update v^n → v^{n+1}; the time step comes from
/// [`compute_dt`].
pub fn step(
    state: &State,
    grid: &Grid,
    params: &Params,
    config: &SchemeConfig,
) -> Result<State, SolverError> {
    let dt = compute_dt(state, grid, params, config);
    advance(state, grid, params, config, dt)
}

/// March from `initial` until the last scheduled iteration, capturing
/// a snapshot at every scheduled iteration (iteration 0 is always
/// included).
pub fn run(
    initial: State,
    grid: &Grid,
    params: &Params,
    config: &SchemeConfig,
    schedule: &[u64],
) -> Result<Vec<Snapshot>, SolverError> {
    config.validate(grid, params)?;
    if schedule.windows(2).any(|w| w[0] >= w[1]) {
        return Err(SolverError::ScheduleNotIncreasing);
    }
    if initial.v.len() != grid.nx() {
        return Err(SolverError::StateSizeMismatch { expected: grid.nx(), got: initial.v.len() });
    }
    if let Some(cell) = initial.first_non_finite() {
        return Err(SolverError::Instability { cell, iter: initial.iter });
    }

    let max_speed = max_interface_factor(grid, params);
    let snapshot = |state: &State| Snapshot {
        iter: state.iter,
        time: state.time,
        v: state.v.clone(),
        max_speed,
    };

    let mut out = Vec::with_capacity(schedule.len() + 1);
    out.push(snapshot(&initial));

    let last = schedule.last().copied().unwrap_or(0);
    let mut state = initial;
    let mut targets = schedule.iter().copied().filter(|&n| n > 0).peekable();
    while state.iter < last {
        state = step(&state, grid, params, config)?;
        if targets.peek() == Some(&state.iter) {
            out.push(snapshot(&state));
            targets.next();
        }
    }
    Ok(out)
}

/// March from `initial` until `t_end`, clipping the final step so the
/// returned state lands on `t_end` exactly (up to rounding).
pub fn run_until(
    initial: State,
    grid: &Grid,
    params: &Params,
    config: &SchemeConfig,
    t_end: f64,
) -> Result<State, SolverError> {
    config.validate(grid, params)?;
    let mut state = initial;
    while state.time < t_end {
        let remaining = t_end - state.time;
        if remaining <= f64::EPSILON * t_end.max(1.0) {
            break;
        }
        let dt = compute_dt(&state, grid, params, config).min(remaining);
        state = advance(&state, grid, params, config, dt)?;
    }
    Ok(state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Params;
    use crate::model::Branch;
    use approx::assert_abs_diff_eq;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn flat() -> Params {
        Params::with_lambda(0.0)
    }

    #[test]
    fn grid_layout() {
        let grid = Grid::new(100).unwrap();
        assert_eq!(grid.dr(), 0.01);
        assert_abs_diff_eq!(grid.center(0), 0.005, epsilon = 1e-15);
        assert_eq!(grid.interface(0), 0.0);
        assert_eq!(grid.interface(100), 1.0);
        for j in 0..100 {
            assert_abs_diff_eq!(
                grid.interface(j + 1),
                grid.interface(j) + grid.dr(),
                epsilon = 1e-15
            );
        }
        assert!(matches!(Grid::new(3), Err(SolverError::GridTooCoarse { nx: 3 })));
    }

    #[test]
    fn riemann_flux_branches() {
        assert_eq!(riemann_flux(1.0, 0.0), 0.5);
        assert_eq!(riemann_flux(-0.2, 0.4), 0.0);
        assert_eq!(riemann_flux(-1.0, -0.5), 0.125);
        // Stationary shock: both candidate branches agree.
        assert_eq!(riemann_flux(0.5, -0.5), 0.125);
        assert_eq!(riemann_flux(0.2, 0.8), 0.2 * 0.2 / 2.0);
    }

    #[test]
    fn dt_from_the_cfl_bound() {
        let grid = Grid::new(100).unwrap();
        let config = SchemeConfig::default();
        let state = State::from_profile(&grid, |_| 0.5);

        let dt = compute_dt(&state, &grid, &flat(), &config);
        assert_abs_diff_eq!(dt, 0.009, epsilon = 1e-15);

        // max |1 - r²| over the interfaces of [0,1] is 1, attained at
        // r = 0.
        let dt = compute_dt(&state, &grid, &Params::with_lambda(1.0), &config);
        assert_abs_diff_eq!(dt, 0.009, epsilon = 1e-15);

        // Λ = -1 doubles the fastest factor (2 at r = 1) and halves
        // the step.
        let dt = compute_dt(&state, &grid, &Params::with_lambda(-1.0), &config);
        assert_abs_diff_eq!(dt, 0.0045, epsilon = 1e-15);
    }

    #[test]
    fn fixed_dt_is_validated_against_the_bound() {
        let grid = Grid::new(100).unwrap();
        let good = SchemeConfig { dt_mode: DtMode::Fixed(0.009), ..SchemeConfig::default() };
        assert!(good.validate(&grid, &flat()).is_ok());

        let oversized = SchemeConfig { dt_mode: DtMode::Fixed(0.02), ..SchemeConfig::default() };
        assert!(matches!(
            oversized.validate(&grid, &flat()),
            Err(SolverError::FixedDtViolatesCfl { .. })
        ));

        // The same dt that is fine for Λ = 0 is oversized once Λ = -1
        // doubles the wave speed.
        let marginal = SchemeConfig { dt_mode: DtMode::Fixed(0.0095), ..SchemeConfig::default() };
        assert!(marginal.validate(&grid, &flat()).is_ok());
        assert!(marginal.validate(&grid, &Params::with_lambda(-1.0)).is_err());
    }

    #[test]
    fn ghost_cells_copy_the_nearest_interior_value() {
        let config = SchemeConfig::default();
        let ext = apply_bc(&[1.0, 2.0, 3.0, 4.0], &config);
        assert_eq!(ext, vec![1.0, 1.0, 1.0, 2.0, 3.0, 4.0, 4.0, 4.0]);

        let ext = apply_bc(&[0.7; 6], &config);
        assert!(ext.iter().all(|&x| x == 0.7));
    }

    #[test]
    fn reconstruction_examples() {
        let config = SchemeConfig::default();

        // Constant data reconstructs to itself at any order.
        let pairs = reconstruct(&[2.0; 8], &config);
        assert!(pairs.iter().all(|p| p.left == 2.0 && p.right == 2.0));

        // Linear data: central cell gets the full slope.
        let pairs = reconstruct(&[0.0, 1.0, 2.0], &config);
        assert_eq!(pairs[1].left, 0.5);
        assert_eq!(pairs[1].right, 1.5);

        // Local extremum: minmod kills the slope.
        let pairs = reconstruct(&[0.0, 1.0, 0.0], &config);
        assert_eq!(pairs[1].left, 1.0);
        assert_eq!(pairs[1].right, 1.0);

        let first = SchemeConfig { order: Order::First, ..config };
        let pairs = reconstruct(&[0.0, 1.0, 2.0], &first);
        assert_eq!(pairs[1].left, 1.0);
        assert_eq!(pairs[1].right, 1.0);
    }

    #[test]
    fn minmod_faces_stay_between_the_neighboring_averages() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let config = SchemeConfig::default();
        let data: Vec<f64> = (0..50).map(|_| rng.random_range(-1.0..1.0)).collect();
        let pairs = reconstruct(&data, &config);
        for i in 1..data.len() - 1 {
            let lo_l = data[i - 1].min(data[i]);
            let hi_l = data[i - 1].max(data[i]);
            let lo_r = data[i].min(data[i + 1]);
            let hi_r = data[i].max(data[i + 1]);
            assert!(pairs[i].left >= lo_l - 1e-15 && pairs[i].left <= hi_l + 1e-15);
            assert!(pairs[i].right >= lo_r - 1e-15 && pairs[i].right <= hi_r + 1e-15);
        }
    }

    #[test]
    fn half_step_keeps_constant_flat_states() {
        let grid = Grid::new(10).unwrap();
        let config = SchemeConfig::default();
        let ext = apply_bc(&[0.4; 10], &config);
        let mut pairs = reconstruct(&ext, &config);
        half_step(&mut pairs, &ext, &grid, &flat(), &config, 0.01);
        assert!(pairs.iter().all(|p| p.left == 0.4 && p.right == 0.4));
    }

    #[test]
    fn half_step_at_light_speed_moves_only_through_the_coefficient() {
        // With v = c the non-conservative source vanishes and the pair
        // changes only because b varies across the cell.
        let grid = Grid::new(10).unwrap();
        let params = Params::with_lambda(1.0);
        let config = SchemeConfig {
            source_form: SourceForm::PaperNonConservative,
            ..SchemeConfig::default()
        };
        let dt = 0.005;
        let ext = apply_bc(&[1.0; 10], &config);
        let mut pairs = reconstruct(&ext, &config);
        half_step(&mut pairs, &ext, &grid, &params, &config, dt);

        // Hand evaluation for interior cell j: increment is
        // -(dt/2dr) (b_{j+1/2} - b_{j-1/2}) / 2 with v = 1.
        let j = 4usize;
        let b_l = 1.0 - grid.interface(j) * grid.interface(j);
        let b_r = 1.0 - grid.interface(j + 1) * grid.interface(j + 1);
        let expected = 1.0 - dt / (2.0 * grid.dr()) * (b_r * 0.5 - b_l * 0.5);
        assert_abs_diff_eq!(pairs[j + 2].left, expected, epsilon = 1e-14);
        assert_abs_diff_eq!(pairs[j + 2].right, expected, epsilon = 1e-14);
    }

    #[test]
    fn half_step_change_on_static_data_shrinks_quadratically() {
        // On a discrete static solution the predictor's per-cell change
        // is the truncation residual, which must drop like O(dr²) when
        // the grid is refined (dt ∝ dr).
        let params = Params::with_lambda(1.0);
        let spec = crate::model::StaticSolutionSpec::new(&params, 0.5, Branch::Positive).unwrap();
        let change = |nx: usize| -> f64 {
            let grid = Grid::new(nx).unwrap();
            let config = SchemeConfig::default();
            let state = State::from_profile(&grid, |r| {
                crate::model::static_solution(&params, &spec, r).unwrap()
            });
            let dt = compute_dt(&state, &grid, &params, &config);
            let ext = apply_bc(&state.v, &config);
            let before = reconstruct(&ext, &config);
            let mut after = before.clone();
            half_step(&mut after, &ext, &grid, &params, &config, dt);
            before
                .iter()
                .zip(&after)
                .skip(2)
                .take(nx)
                .map(|(b, a)| (a.left - b.left).abs().max((a.right - b.right).abs()))
                .fold(0.0, f64::max)
        };
        let coarse = change(100);
        let fine = change(200);
        assert!(
            coarse / fine >= 3.0,
            "half-step residual decayed too slowly: {coarse:e} -> {fine:e}"
        );
    }

    #[test]
    fn constant_state_is_a_fixed_point_in_flat_space() {
        let grid = Grid::new(50).unwrap();
        for order in [Order::First, Order::Second] {
            let config = SchemeConfig { order, ..SchemeConfig::default() };
            let state = State::from_profile(&grid, |_| 0.6);
            let next = step(&state, &grid, &flat(), &config).unwrap();
            assert_eq!(next.v, state.v);
            assert_eq!(next.iter, 1);
            assert!(next.time > 0.0);
        }
    }

    #[test]
    fn flat_boundary_cells_are_untouched_by_constant_data() {
        let grid = Grid::new(32).unwrap();
        let config = SchemeConfig::default();
        let state = State::from_profile(&grid, |_| -0.3);
        let next = step(&state, &grid, &flat(), &config).unwrap();
        assert_eq!(next.v[0], -0.3);
        assert_eq!(next.v[31], -0.3);
    }

    #[test]
    fn total_mass_is_conserved_away_from_the_boundaries() {
        // Compactly supported bump: boundary fluxes vanish, so the cell
        // sum may change only through rounding in the summation.
        let grid = Grid::new(200).unwrap();
        let config = SchemeConfig::default();
        let bump = |r: f64| {
            if (0.4..=0.6).contains(&r) {
                let s = (r - 0.4) / 0.2;
                (std::f64::consts::PI * s).sin().powi(2)
            } else {
                0.0
            }
        };
        let mut state = State::from_profile(&grid, bump);
        let mass = |s: &State| s.v.iter().sum::<f64>() * grid.dr();
        let initial_mass = mass(&state);
        for _ in 0..40 {
            let next = step(&state, &grid, &flat(), &config).unwrap();
            assert!((mass(&next) - mass(&state)).abs() <= 1e-13);
            state = next;
        }
        assert!((mass(&state) - initial_mass).abs() <= 1e-12);
    }

    #[test]
    fn total_variation_never_grows_at_first_order() {
        let grid = Grid::new(64).unwrap();
        let config = SchemeConfig { order: Order::First, ..SchemeConfig::default() };
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let tv = |v: &[f64]| v.windows(2).map(|w| (w[1] - w[0]).abs()).sum::<f64>();
        for _ in 0..10 {
            let mut state = State {
                v: (0..64).map(|_| rng.random_range(-1.0..1.0)).collect(),
                time: 0.0,
                iter: 0,
            };
            for _ in 0..30 {
                let next = step(&state, &grid, &flat(), &config).unwrap();
                assert!(tv(&next.v) <= tv(&state.v) + 1e-13);
                state = next;
            }
        }
    }

    #[test]
    fn constant_state_develops_structure_under_positive_lambda() {
        // No spatially homogeneous solutions: one step of the source
        // must already break the constancy.
        let grid = Grid::new(100).unwrap();
        let params = Params::with_lambda(1.0);
        for form in [SourceForm::Conservative, SourceForm::PaperNonConservative] {
            let config = SchemeConfig { source_form: form, ..SchemeConfig::default() };
            let state = State::from_profile(&grid, |_| 0.5);
            let next = step(&state, &grid, &params, &config).unwrap();
            let max = next.v.iter().cloned().fold(f64::MIN, f64::max);
            let min = next.v.iter().cloned().fold(f64::MAX, f64::min);
            assert!(max - min > 1e-12);
        }
    }

    #[test]
    fn first_order_static_preservation_error_is_grid_scale() {
        let params = Params::with_lambda(1.0);
        let spec = crate::model::StaticSolutionSpec::new(&params, 0.5, Branch::Positive).unwrap();
        let grid = Grid::new(200).unwrap();
        let config = SchemeConfig { order: Order::First, ..SchemeConfig::default() };
        let exact = |r: f64| crate::model::static_solution(&params, &spec, r).unwrap();
        let mut state = State::from_profile(&grid, exact);
        for _ in 0..100 {
            state = step(&state, &grid, &params, &config).unwrap();
        }
        let l1: f64 = grid
            .centers()
            .zip(&state.v)
            .map(|(r, &v)| (v - exact(r)).abs())
            .sum::<f64>()
            * grid.dr();
        assert!(l1 <= grid.dr(), "L1 deviation {l1:e} exceeds dr");
    }

    #[test]
    fn run_captures_the_schedule_and_the_initial_state() {
        let grid = Grid::new(50).unwrap();
        let config = SchemeConfig::default();
        let initial = State::from_profile(&grid, |r| if r < 0.3 { 0.8 } else { 0.2 });
        let snaps = run(initial.clone(), &grid, &flat(), &config, &[10, 20, 40]).unwrap();
        assert_eq!(snaps.len(), 4);
        assert_eq!(snaps[0].iter, 0);
        assert_eq!(snaps.iter().map(|s| s.iter).collect::<Vec<_>>(), vec![0, 10, 20, 40]);
        assert!(snaps.windows(2).all(|w| w[0].time < w[1].time));
        assert_eq!(snaps[0].v, initial.v);

        let echo = run(initial.clone(), &grid, &flat(), &config, &[0]).unwrap();
        assert_eq!(echo.len(), 1);
        assert_eq!(echo[0].v, initial.v);

        let err = run(initial, &grid, &flat(), &config, &[10, 10]).unwrap_err();
        assert_eq!(err, SolverError::ScheduleNotIncreasing);
    }

    #[test]
    fn run_records_the_superluminal_factor() {
        let grid = Grid::new(50).unwrap();
        let config = SchemeConfig::default();
        let initial = State::from_profile(&grid, |r| if r < 0.3 { 0.8 } else { 0.2 });
        let snaps = run(initial, &grid, &Params::with_lambda(-1.0), &config, &[5]).unwrap();
        assert!(snaps.iter().all(|s| s.max_speed == 2.0));
    }

    #[test]
    fn run_until_lands_on_the_requested_time() {
        let grid = Grid::new(50).unwrap();
        let config = SchemeConfig::default();
        let initial = State::from_profile(&grid, |r| 0.5 + 0.25 * (2.0 * std::f64::consts::PI * r).sin());
        let state = run_until(initial, &grid, &flat(), &config, 0.1).unwrap();
        assert_abs_diff_eq!(state.time, 0.1, epsilon = 1e-12);
    }

    #[test]
    fn instability_reports_cell_and_iteration() {
        let grid = Grid::new(10).unwrap();
        let config = SchemeConfig::default();
        let mut v = vec![0.5; 10];
        v[3] = f64::NAN;
        let bad = State { v, time: 0.0, iter: 0 };
        let err = run(bad, &grid, &flat(), &config, &[5]).unwrap_err();
        assert_eq!(err, SolverError::Instability { cell: 3, iter: 0 });
    }
}
