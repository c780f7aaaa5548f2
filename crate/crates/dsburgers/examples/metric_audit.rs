//! Audit of the geometry layer: metric inverse identity, Christoffel
//! closed forms against their finite-difference reconstruction, and
//! the dust stress-energy factorization T = ρc² u ⊗ u.
//!
//! ```bash
//! cargo run --example metric_audit
//! ```

use dsburgers::geometry::{
    christoffel_closed_form, christoffel_numeric, fluid_four_velocity, metric_contravariant,
    metric_covariant, stress_energy_pressureless, Coordinates, Params,
};
use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_6};

fn main() {
    println!("metric components at (Λ = 1, r = 0.5, θ = π/2)");
    let params = Params::with_lambda(1.0);
    let coords = Coordinates::equatorial(0.5);
    let lo = metric_covariant(&params, &coords).unwrap();
    let hi = metric_contravariant(&params, &coords).unwrap();
    println!("  covariant     g00 = {:+.6}  g11 = {:+.6}  g22 = {:+.6}  g33 = {:+.6}", lo.g00, lo.g11, lo.g22, lo.g33);
    println!("  contravariant g00 = {:+.6}  g11 = {:+.6}  g22 = {:+.6}  g33 = {:+.6}", hi.g00, hi.g11, hi.g22, hi.g33);
    let worst = (0..4)
        .map(|i| (lo.diag(i) * hi.diag(i) - 1.0).abs())
        .fold(0.0, f64::max);
    println!("  inverse identity deviation: {worst:.2e}");

    println!("\nChristoffel symbols: closed form vs central differences (h = 1e-5)");
    let mut worst = 0.0f64;
    for lambda in [0.0, 0.5, 1.0, -0.5] {
        for r in [0.1, 0.3, 0.5, 0.9] {
            if lambda * r * r >= 1.0 {
                continue;
            }
            for theta in [FRAC_PI_6, FRAC_PI_3, FRAC_PI_2] {
                let params = Params::with_lambda(lambda);
                let coords = Coordinates::new(0.0, r, theta, 0.0);
                let closed = christoffel_closed_form(&params, &coords).unwrap();
                let numeric = christoffel_numeric(&params, &coords, 1e-5).unwrap();
                worst = worst.max(closed.max_abs_diff(&numeric));
            }
        }
    }
    println!("  max |closed - numeric| over the sample grid: {worst:.2e}");

    let params = Params::with_lambda(1.0);
    let coords = Coordinates::new(0.0, 0.5, FRAC_PI_3, 0.0);
    let table = christoffel_closed_form(&params, &coords).unwrap();
    println!("  sample entries at (Λ = 1, r = 0.5, θ = π/3):");
    for (label, mu, a, b) in [
        ("Γ^0_01", 0, 0, 1),
        ("Γ^1_11", 1, 1, 1),
        ("Γ^1_00", 1, 0, 0),
        ("Γ^2_12", 2, 1, 2),
        ("Γ^3_23", 3, 2, 3),
    ] {
        println!("    {label} = {:+.9}", table.get(mu, a, b));
    }

    println!("\nfour-velocity and dust stress-energy at (Λ = 1, r = 0.5, v = 0.5, ρ = 2)");
    let u = fluid_four_velocity(&params, 0.5, 0.5).unwrap();
    let t = stress_energy_pressureless(&params, 0.5, 0.5, 2.0).unwrap();
    println!("  u = ({:.6}, {:.6})", u.u0, u.u1);
    println!("  T00 = {:.6}  T01 = {:.6}  T11 = {:.6}", t.t00, t.t01, t.t11);
    let c2 = params.c * params.c;
    let factorization = [
        (t.t00, 2.0 * c2 * u.u0 * u.u0),
        (t.t01, 2.0 * c2 * u.u0 * u.u1),
        (t.t11, 2.0 * c2 * u.u1 * u.u1),
    ]
    .iter()
    .map(|(a, b)| (a - b).abs())
    .fold(0.0, f64::max);
    println!("  |T - ρc² u⊗u| componentwise: {factorization:.2e}");
}
