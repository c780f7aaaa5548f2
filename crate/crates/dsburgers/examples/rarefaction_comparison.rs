//! Rarefaction experiment: the jump 0.2 → 0.8 at r = 0.3 opens into a
//! fan; the comparison tracks the right edge of the fan for Λ = 0 and
//! Λ = 1 on a shared grid and time step, as in the shock experiment.
//!
//! Writes CSVs and the front summary under `out/rarefaction-comparison/`.
//!
//! ```bash
//! cargo run --example rarefaction_comparison
//! ```

use dsburgers::cli::{run_preset, PresetKind, PresetOptions};
use dsburgers::godunov::Limiter;
use dsburgers::model::SourceForm;

fn main() {
    let options = PresetOptions {
        nx: 2500,
        schedule: vec![100, 400, 600, 800],
        cfl: 0.9,
        source_form: SourceForm::Conservative,
        limiter: Limiter::Minmod,
        out_dir: "out/rarefaction-comparison".into(),
    };
    let summary = run_preset(PresetKind::Fig1Rarefaction, &[0.0, 1.0], &options)
        .expect("preset runs");

    println!("shared fixed dt = {:.6e}", summary.dt);
    println!("tracking level {:.2} (right edge of the fan)", PresetKind::Fig1Rarefaction.front_level());
    println!("{:>6} {:>12} {:>12} {:>10}", "iter", "edge Λ=0", "edge Λ=1", "lead");
    for iter in [0u64, 100, 400, 600, 800] {
        let flat = summary.front(0.0, iter).unwrap();
        let ds = summary.front(1.0, iter).unwrap();
        println!("{iter:>6} {flat:>12.5} {ds:>12.5} {:>10.5}", flat - ds);
    }
    println!("\nwrote {}", summary.summary_path.display());
}
