//! The classical exact solutions used as oracles, side by side with
//! the flat-space solver: shock and rarefaction Riemann solutions and
//! the pre-shock characteristics solution for smooth data.
//!
//! ```bash
//! cargo run --example riemann_oracle
//! ```

use dsburgers::geometry::Params;
use dsburgers::godunov::{self, Grid, SchemeConfig, State};
use dsburgers::reference::{
    exact_riemann_classical, exact_smooth_classical, RiemannData, SmoothProfile,
};

fn main() {
    let grid = Grid::new(400).unwrap();
    let params = Params::with_lambda(0.0);
    let config = SchemeConfig::default();
    let t_end = 0.4;

    for (label, data) in [
        ("shock (0.8 -> 0.2)", RiemannData { vl: 0.8, vr: 0.2, r0: 0.3 }),
        ("rarefaction (0.2 -> 0.8)", RiemannData { vl: 0.2, vr: 0.8, r0: 0.3 }),
    ] {
        let initial =
            State::from_profile(&grid, |r| if r < data.r0 { data.vl } else { data.vr });
        let state = godunov::run_until(initial, &grid, &params, &config, t_end).unwrap();
        println!("{label} at t = {t_end}");
        println!("{:>8} {:>10} {:>10} {:>10}", "r", "numeric", "exact", "error");
        for r in [0.35, 0.45, 0.5, 0.55, 0.65] {
            let j = (r / grid.dr()) as usize;
            let exact = exact_riemann_classical(&data, t_end, grid.center(j));
            println!(
                "{:>8.4} {:>10.5} {:>10.5} {:>10.2e}",
                grid.center(j),
                state.v[j],
                exact,
                (state.v[j] - exact).abs()
            );
        }
        println!();
    }

    println!("smooth profile by characteristics (first shock at t = 2/π ≈ 0.6366)");
    let profile = SmoothProfile::sine();
    let t = 0.1;
    let initial = State::from_profile(&grid, |r| profile.initial(r));
    let state = godunov::run_until(initial, &grid, &params, &config, t).unwrap();
    println!("{:>8} {:>10} {:>10} {:>10}", "r", "numeric", "exact", "error");
    for r in [0.2, 0.4, 0.6, 0.8] {
        let j = (r / grid.dr()) as usize;
        let exact = exact_smooth_classical(&profile, t, grid.center(j)).unwrap();
        println!(
            "{:>8.4} {:>10.5} {:>10.5} {:>10.2e}",
            grid.center(j),
            state.v[j],
            exact,
            (state.v[j] - exact).abs()
        );
    }
    println!(
        "\npast shock formation the oracle refuses: {}",
        exact_smooth_classical(&profile, 1.0, 0.5).unwrap_err()
    );
}
