//! Shock experiment: the jump 0.8 → 0.2 at r = 0.3 marched with the
//! second-order scheme for Λ = 0 (flat) and Λ = 1 (de Sitter) on a
//! shared grid and shared fixed time step, snapshots at iterations
//! 100/400/600/800. The flat-space front leads at every checkpoint
//! because the speed factor 1 − Λr² only slows transport for Λ > 0.
//!
//! Writes CSVs and the front summary under `out/shock-comparison/`.
//!
//! ```bash
//! cargo run --example shock_comparison
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
        out_dir: "out/shock-comparison".into(),
    };
    let summary = run_preset(PresetKind::Fig2Shock, &[0.0, 1.0], &options)
        .expect("preset runs");

    println!("shared fixed dt = {:.6e}", summary.dt);
    println!("{:>6} {:>12} {:>12} {:>10}", "iter", "front Λ=0", "front Λ=1", "lead");
    for iter in [0u64, 100, 400, 600, 800] {
        let flat = summary.front(0.0, iter).unwrap();
        let ds = summary.front(1.0, iter).unwrap();
        println!("{iter:>6} {flat:>12.5} {ds:>12.5} {:>10.5}", flat - ds);
    }
    println!("\nwrote {}", summary.summary_path.display());
}
