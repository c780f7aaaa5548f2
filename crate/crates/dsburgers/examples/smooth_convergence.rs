//! Refinement study for the flat-space problem with smooth initial
//! data 0.5 + 0.25 sin(2πr), compared against the characteristics
//! solution at t = 0.1 (well before shock formation at 2/π). The first
//! -order scheme converges at rate ~1, the MUSCL-Hancock scheme close
//! to 2.
//!
//! ```bash
//! cargo run --example smooth_convergence
//! ```

use dsburgers::cli::{convergence_study, InitialConditionSpec, RunConfig, StopRule};
use dsburgers::geometry::Params;
use dsburgers::godunov::{Order, SchemeConfig};

fn main() {
    for order in [Order::First, Order::Second] {
        let config = RunConfig {
            params: Params::with_lambda(0.0),
            nx: 100,
            scheme: SchemeConfig { order, ..SchemeConfig::default() },
            ic: InitialConditionSpec::Smooth,
            stop: StopRule::Time(0.1),
            schedule: Vec::new(),
            out_dir: format!("out/smooth-convergence/order{}", order.number()).into(),
            seed: 0,
        };
        let rows = convergence_study(&config, &[100, 200, 400, 800]).expect("study runs");
        println!("order {} scheme:", order.number());
        println!("{:>6} {:>14} {:>8}", "nx", "L1 error", "rate");
        for row in &rows {
            match row.order {
                Some(rate) => println!("{:>6} {:>14.6e} {rate:>8.3}", row.nx, row.l1),
                None => println!("{:>6} {:>14.6e} {:>8}", row.nx, row.l1, "-"),
            }
        }
        println!();
    }
}
