//! Anti-de Sitter runs (Λ < 0) push the speed factor 1 − Λr² above the
//! light speed inside the unit interval. The solver still runs (the
//! adaptive step shrinks to respect the faster waves) but the run is
//! flagged as superluminal in its metadata and a warning goes to
//! stderr.
//!
//! ```bash
//! cargo run --example superluminal_warning
//! ```

use dsburgers::cli::{execute_run, InitialConditionSpec, RunConfig, StopRule};
use dsburgers::geometry::Params;
use dsburgers::godunov::{compute_dt, Grid, SchemeConfig};

fn main() {
    println!("{:>5} {:>12} {:>14} {:>13}", "Λ", "max factor", "superluminal", "adaptive dt");
    for lambda in [1.0, 0.0, -1.0] {
        let config = RunConfig {
            params: Params::with_lambda(lambda),
            nx: 200,
            scheme: SchemeConfig::default(),
            ic: InitialConditionSpec::Shock,
            stop: StopRule::Iterations(50),
            schedule: vec![50],
            out_dir: format!("out/superluminal/lambda_{lambda}").into(),
            seed: 0,
        };
        let outcome = execute_run(&config).expect("run completes");
        let grid = Grid::new(200).unwrap();
        let initial = config.ic.sample(&grid, &config.params).unwrap();
        let dt = compute_dt(&initial, &grid, &config.params, &config.scheme);
        println!(
            "{lambda:>5} {:>12.3} {:>14} {dt:>13.6e}",
            outcome.metadata.max_characteristic_factor, outcome.metadata.superluminal
        );
    }
    println!("\nΛ = -1 doubles the fastest factor (2 at r = 1) and halves the stable step.");
}
