//! Independent oracles and analysis tools: exact classical Riemann and
//! characteristics solutions, an independent plain Burgers scheme for
//! bit-equivalence checks, error norms, and front tracking.
//!
//! Everything here deliberately avoids the code paths in
//! [`crate::godunov`], so agreement between the two is evidence rather
//! than tautology.

use crate::godunov::Grid;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ReferenceError {
    #[error("exact smooth solution valid only before shock formation at t = {shock_time}, got t = {t}")]
    PreShockOnly { t: f64, shock_time: f64 },
    #[error("profile never crosses the level {level}")]
    FrontNotFound { level: f64 },
}

/// Two-state Riemann initial data with a jump at `r0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RiemannData {
    pub vl: f64,
    pub vr: f64,
    pub r0: f64,
}

/// Exact entropy solution of the classical Riemann problem for
/// ∂t v + ∂r(v²/2) = 0.
///
/// A jump down (vl > vr) travels as a shock with the Rankine-Hugoniot
/// speed (vl + vr)/2; a jump up opens into the self-similar fan
/// v = (r − r0)/t between the characteristics of the two states.
pub fn exact_riemann_classical(data: &RiemannData, t: f64, r: f64) -> f64 {
    debug_assert!(t >= 0.0);
    if t == 0.0 {
        return if r < data.r0 { data.vl } else { data.vr };
    }
    if data.vl > data.vr {
        let s = 0.5 * (data.vl + data.vr);
        if r < data.r0 + s * t {
            data.vl
        } else {
            data.vr
        }
    } else if r <= data.r0 + data.vl * t {
        data.vl
    } else if r >= data.r0 + data.vr * t {
        data.vr
    } else {
        (r - data.r0) / t
    }
}

/// A smooth initial profile together with the sampled bounds and first
/// shock time 1/max(−v0') needed by the characteristics solver.
pub struct SmoothProfile {
    profile: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    v_min: f64,
    v_max: f64,
    shock_time: f64,
}

impl SmoothProfile {
    /// Wrap a profile, estimating its range and steepest descent by
    /// sampling `samples` points over `scan` (which must cover every
    /// characteristic foot point the solver will query).
    pub fn new(
        profile: impl Fn(f64) -> f64 + Send + Sync + 'static,
        scan: (f64, f64),
        samples: usize,
    ) -> Self {
        assert!(samples >= 3 && scan.1 > scan.0);
        let dx = (scan.1 - scan.0) / (samples - 1) as f64;
        let values: Vec<f64> = (0..samples).map(|i| profile(scan.0 + i as f64 * dx)).collect();
        let v_min = values.iter().cloned().fold(f64::MAX, f64::min);
        let v_max = values.iter().cloned().fold(f64::MIN, f64::max);
        let steepest_descent = values
            .windows(3)
            .map(|w| -(w[2] - w[0]) / (2.0 * dx))
            .fold(0.0, f64::max);
        let shock_time = if steepest_descent > 0.0 { 1.0 / steepest_descent } else { f64::INFINITY };
        SmoothProfile { profile: Box::new(profile), v_min, v_max, shock_time }
    }

    /// The profile 0.5 + 0.25 sin(2πr) used by the convergence
    /// studies; its first shock forms at t = 2/π ≈ 0.637.
    ///
    /// Outside [0, 1] the profile continues with its boundary value
    /// 0.5. That constant extension is exactly the Cauchy problem the
    /// transmissive boundary condition realizes (the inflow at r = 0
    /// carries the boundary value), so the oracle matches the problem
    /// the solver actually computes.
    pub fn sine() -> Self {
        SmoothProfile::new(
            |r: f64| 0.5 + 0.25 * (2.0 * std::f64::consts::PI * r.clamp(0.0, 1.0)).sin(),
            (-2.0, 3.0),
            20_001,
        )
    }

    /// Initial value v0(r).
    pub fn initial(&self, r: f64) -> f64 {
        (self.profile)(r)
    }

    pub fn shock_time(&self) -> f64 {
        self.shock_time
    }
}

/// Exact pre-shock solution of the classical Burgers equation by the
/// method of characteristics: the unique root of v = v0(r − v t),
/// found by bisection to 1e-12 on the bracket
/// [min v0 − 1, max v0 + 1].
pub fn exact_smooth_classical(
    profile: &SmoothProfile,
    t: f64,
    r: f64,
) -> Result<f64, ReferenceError> {
    if t >= profile.shock_time {
        return Err(ReferenceError::PreShockOnly { t, shock_time: profile.shock_time });
    }
    let g = |v: f64| v - profile.initial(r - v * t);
    let mut lo = profile.v_min - 1.0;
    let mut hi = profile.v_max + 1.0;
    debug_assert!(g(lo) < 0.0 && g(hi) > 0.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= 1e-12 {
            break;
        }
        if g(mid) <= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

// Same five branches as the interface flux of the solver, written out
// independently; the expression order is pinned so the Λ = 0
// first-order scheme and this one agree bit for bit.
fn classical_godunov_flux(v1: f64, v2: f64) -> f64 {
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

/// One step of a plain first-order Godunov scheme for the classical
/// Burgers equation with transmissive boundaries. Independent of the
/// `godunov` module; the Λ = 0 first-order path over there must
/// reproduce this update bit for bit.
pub fn plain_burgers_step(v: &[f64], dr: f64, dt: f64) -> Vec<f64> {
    let n = v.len();
    let mut out = vec![0.0; n];
    for j in 0..n {
        let left = if j == 0 { v[0] } else { v[j - 1] };
        let right = if j + 1 == n { v[n - 1] } else { v[j + 1] };
        let fl = classical_godunov_flux(left, v[j]);
        let fr = classical_godunov_flux(v[j], right);
        out[j] = v[j] - (dt / dr) * (fr - fl);
    }
    out
}

/// Rightmost position where the profile crosses `level`, by linear
/// interpolation between cell centers, scanning from the right
/// boundary leftward.
pub fn front_position(values: &[f64], grid: &Grid, level: f64) -> Result<f64, ReferenceError> {
    let n = values.len();
    for j in (0..n.saturating_sub(1)).rev() {
        let a = values[j] - level;
        let b = values[j + 1] - level;
        // A span sitting exactly at the level (a = b = 0) is skipped:
        // a constant profile has no front.
        if a * b <= 0.0 && (a != 0.0 || b != 0.0) {
            let fraction = a / (a - b);
            return Ok(grid.center(j) + fraction * grid.dr());
        }
    }
    Err(ReferenceError::FrontNotFound { level })
}

/// L1 and max-norm errors of a numeric solution against an exact
/// profile sampled at the cell centers.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ErrorReport {
    pub l1: f64,
    pub linf: f64,
    /// log2(e_coarse / e_fine), set when the report came out of a
    /// refinement pair.
    pub observed_order: Option<f64>,
}

pub fn error_norms(values: &[f64], exact: impl Fn(f64) -> f64, grid: &Grid) -> ErrorReport {
    let mut l1 = 0.0;
    let mut linf = 0.0f64;
    for (r, &v) in grid.centers().zip(values) {
        let e = (v - exact(r)).abs();
        l1 += e;
        linf = linf.max(e);
    }
    ErrorReport { l1: l1 * grid.dr(), linf, observed_order: None }
}

/// Convergence order from one refinement pair under halving of the
/// grid spacing.
pub fn observed_order(e_coarse: f64, e_fine: f64) -> f64 {
    (e_coarse / e_fine).log2()
}

/// Total variation Σ |v_{j+1} − v_j| of a discrete profile.
pub fn total_variation(values: &[f64]) -> f64 {
    values.windows(2).map(|w| (w[1] - w[0]).abs()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Params;
    use crate::godunov::{self, DtMode, Order, SchemeConfig, State};
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn shock_solution_values() {
        let data = RiemannData { vl: 0.8, vr: 0.2, r0: 0.3 };
        assert_eq!(exact_riemann_classical(&data, 1.0, 0.79), 0.8);
        assert_eq!(exact_riemann_classical(&data, 1.0, 0.81), 0.2);
        assert_eq!(exact_riemann_classical(&data, 0.0, 0.29), 0.8);
        assert_eq!(exact_riemann_classical(&data, 0.0, 0.3), 0.2);
    }

    #[test]
    fn rarefaction_solution_values() {
        let data = RiemannData { vl: 0.2, vr: 0.8, r0: 0.3 };
        assert_abs_diff_eq!(exact_riemann_classical(&data, 1.0, 0.7), 0.4, epsilon = 1e-15);
        assert_eq!(exact_riemann_classical(&data, 1.0, 0.4), 0.2);
        assert_eq!(exact_riemann_classical(&data, 1.0, 1.2), 0.8);
    }

    #[test]
    fn rarefaction_is_continuous_at_the_fan_edges() {
        let data = RiemannData { vl: -0.4, vr: 0.9, r0: 0.5 };
        let t = 0.7;
        for edge in [data.r0 + data.vl * t, data.r0 + data.vr * t] {
            let delta = 1e-13;
            let jump =
                exact_riemann_classical(&data, t, edge + delta) - exact_riemann_classical(&data, t, edge - delta);
            assert!(jump.abs() <= 1e-12);
        }
    }

    proptest! {
        #[test]
        fn shock_satisfies_the_weak_form(
            vl in -2.0..2.0f64,
            gap in 1e-6..2.0f64,
        ) {
            // Flux jump equals shock speed times state jump.
            let vr = vl - gap;
            let s = 0.5 * (vl + vr);
            let lhs = vl * vl / 2.0 - vr * vr / 2.0;
            prop_assert!((lhs - s * (vl - vr)).abs() <= 1e-12);
        }
    }

    #[test]
    fn characteristics_of_constant_profiles() {
        let profile = SmoothProfile::new(|_| 0.7, (-2.0, 3.0), 101);
        assert_eq!(profile.shock_time(), f64::INFINITY);
        for (t, r) in [(0.0, 0.1), (1.0, 0.5), (5.0, 0.9)] {
            assert_abs_diff_eq!(exact_smooth_classical(&profile, t, r).unwrap(), 0.7, epsilon = 1e-12);
        }
    }

    #[test]
    fn characteristics_reduce_to_the_profile_at_time_zero() {
        let profile = SmoothProfile::sine();
        for r in [0.0, 0.25, 0.5, 0.77] {
            assert_abs_diff_eq!(
                exact_smooth_classical(&profile, 0.0, r).unwrap(),
                profile.initial(r),
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn characteristics_solve_the_implicit_relation() {
        let profile = SmoothProfile::sine();
        let v = exact_smooth_classical(&profile, 0.1, 0.5).unwrap();
        assert_abs_diff_eq!(v, profile.initial(0.5 - 0.1 * v), epsilon = 1e-11);
    }

    #[test]
    fn characteristics_reject_post_shock_times() {
        let profile = SmoothProfile::sine();
        // First shock of the sine profile at 2/π.
        assert_abs_diff_eq!(profile.shock_time(), 2.0 / std::f64::consts::PI, epsilon = 1e-5);
        let err = exact_smooth_classical(&profile, 1.0, 0.5).unwrap_err();
        assert!(matches!(err, ReferenceError::PreShockOnly { .. }));
    }

    #[test]
    fn characteristics_satisfy_the_pde_residual() {
        let profile = SmoothProfile::sine();
        let h = 1e-5;
        let t = 0.1;
        let sol = |t: f64, r: f64| exact_smooth_classical(&profile, t, r).unwrap();
        // Stay right of the slope kink that enters at r = 0 with the
        // constant extension (it has moved to r = t/2 by time t).
        for i in 0..50 {
            let r = 0.1 + 0.85 * i as f64 / 49.0;
            let v = sol(t, r);
            let dvdt = (sol(t + h, r) - sol(t - h, r)) / (2.0 * h);
            let dvdr = (sol(t, r + h) - sol(t, r - h)) / (2.0 * h);
            let residual = dvdt + v * dvdr;
            assert!(residual.abs() <= 1e-6, "residual {residual:e} at r = {r}");
        }
    }

    #[test]
    fn plain_scheme_keeps_constants() {
        let v = vec![0.4; 20];
        assert_eq!(plain_burgers_step(&v, 0.05, 0.04), v);
    }

    #[test]
    fn plain_scheme_spike_decays_monotonically() {
        let mut v = vec![0.0; 40];
        v[20] = 1.0;
        let dr = 1.0 / 40.0;
        let dt = 0.9 * dr;
        for _ in 0..30 {
            let next = plain_burgers_step(&v, dr, dt);
            let max_old = v.iter().cloned().fold(f64::MIN, f64::max);
            let max_new = next.iter().cloned().fold(f64::MIN, f64::max);
            assert!(max_new <= max_old + 1e-15);
            v = next;
        }
    }

    #[test]
    fn plain_scheme_matches_the_flat_first_order_solver_bitwise() {
        let grid = Grid::new(128).unwrap();
        let params = Params::with_lambda(0.0);
        let dt = 0.9 * grid.dr();
        let config = SchemeConfig {
            order: Order::First,
            dt_mode: DtMode::Fixed(dt),
            ..SchemeConfig::default()
        };
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let mut state = State {
            v: (0..128).map(|_| rng.random_range(-1.0..1.0)).collect(),
            time: 0.0,
            iter: 0,
        };
        let mut plain = state.v.clone();
        for _ in 0..50 {
            state = godunov::step(&state, &grid, &params, &config).unwrap();
            plain = plain_burgers_step(&plain, grid.dr(), dt);
            for (a, b) in state.v.iter().zip(&plain) {
                assert_eq!(a.to_bits(), b.to_bits());
            }
        }
    }

    #[test]
    fn front_of_a_synthetic_step_profile() {
        let grid = Grid::new(100).unwrap();
        let v: Vec<f64> = (0..100).map(|j| if j < 30 { 0.8 } else { 0.2 }).collect();
        let front = front_position(&v, &grid, 0.5).unwrap();
        assert!((front - 0.305).abs() <= grid.dr(), "front at {front}");
    }

    #[test]
    fn front_of_a_constant_profile_is_not_found() {
        let grid = Grid::new(16).unwrap();
        let err = front_position(&[0.5; 16], &grid, 0.5).unwrap_err();
        assert!(matches!(err, ReferenceError::FrontNotFound { .. }));
    }

    #[test]
    fn front_of_a_monotone_ramp_matches_the_analytic_inverse() {
        let grid = Grid::new(200).unwrap();
        let v: Vec<f64> = grid.centers().collect();
        for level in [0.123, 0.5, 0.876] {
            let front = front_position(&v, &grid, level).unwrap();
            assert!((front - level).abs() <= grid.dr());
        }
    }

    #[test]
    fn front_returns_the_rightmost_crossing() {
        let grid = Grid::new(100).unwrap();
        // Two descending steps; the scan from the right must find the
        // second one.
        let v: Vec<f64> = (0..100)
            .map(|j| if j < 20 { 1.0 } else if j < 60 { 0.4 } else { 0.0 })
            .collect();
        let front = front_position(&v, &grid, 0.2).unwrap();
        assert!((front - 0.60).abs() <= grid.dr(), "front at {front}");
    }

    #[test]
    fn error_norms_definitions() {
        let grid = Grid::new(50).unwrap();
        let v: Vec<f64> = grid.centers().map(|r| r * r).collect();

        let exact = error_norms(&v, |r| r * r, &grid);
        assert_eq!(exact.l1, 0.0);
        assert_eq!(exact.linf, 0.0);

        let offset = error_norms(&v, |r| r * r + 0.25, &grid);
        assert_abs_diff_eq!(offset.l1, 0.25, epsilon = 1e-12);
        assert_abs_diff_eq!(offset.linf, 0.25, epsilon = 1e-12);
        assert!(offset.l1 <= offset.linf * 1.0 + 1e-15);
    }

    #[test]
    fn observed_order_of_a_clean_halving() {
        assert_abs_diff_eq!(observed_order(0.04, 0.01), 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(observed_order(0.04, 0.02), 1.0, epsilon = 1e-12);
    }
}
