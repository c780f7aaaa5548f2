//! How well the solver holds the exact static profile on the de Sitter
//! background: initialize with v(r) = √(c² − 0.5 (1 − r²)), march to
//! t = 0.5 with the conservative source, and measure the L1 drift
//! under grid refinement for both scheme orders.
//!
//! ```bash
//! cargo run --example static_preservation
//! ```

use dsburgers::cli::{convergence_study, InitialConditionSpec, RunConfig, StopRule};
use dsburgers::geometry::Params;
use dsburgers::godunov::{Order, SchemeConfig};

fn main() {
    println!("Λ = 1 static profile, N = 0.5, positive branch, t = 0.5");
    for order in [Order::First, Order::Second] {
        let config = RunConfig {
            params: Params::with_lambda(1.0),
            nx: 100,
            scheme: SchemeConfig { order, ..SchemeConfig::default() },
            ic: InitialConditionSpec::Static { n: 0.5, sign: 1 },
            stop: StopRule::Time(0.5),
            schedule: Vec::new(),
            out_dir: format!("out/static-preservation/order{}", order.number()).into(),
            seed: 0,
        };
        let rows = convergence_study(&config, &[100, 200, 400, 800]).expect("study runs");
        println!("\norder {} scheme:", order.number());
        println!("{:>6} {:>14} {:>8}", "nx", "L1 drift", "rate");
        for row in &rows {
            match row.order {
                Some(rate) => println!("{:>6} {:>14.6e} {rate:>8.3}", row.nx, row.l1),
                None => println!("{:>6} {:>14.6e} {:>8}", row.nx, row.l1, "-"),
            }
        }
    }
}
