//! de Sitter metric, Christoffel symbols, fluid four-velocity and
//! pressureless stress-energy.
//!
//! Conventions: coordinates are ordered (t, r, θ, φ) with indices
//! 0..=3, metric signature (−,+,+,+), and the line element
//!
//! ```text
//! g = -(1 - Λr²) dt² + dr²/(1 - Λr²) + r² (dθ² + sin²θ dφ²).
//! ```
//!
//! Every closed form here is checked in the tests against
//! [`christoffel_numeric`], which rebuilds the connection from central
//! differences of the metric alone.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Physical configuration shared by all modules: cosmological constant
/// and light speed.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Params {
    /// Cosmological constant Λ. Any real; Λ = 0 is Minkowski, Λ > 0
    /// de Sitter, Λ < 0 anti-de Sitter.
    pub lambda: f64,
    /// Light speed c > 0. The experiments normalize c = 1.
    pub c: f64,
}

impl Params {
    /// Configuration with the given Λ and the normalized light speed
    /// c = 1.
    pub fn with_lambda(lambda: f64) -> Self {
        Params { lambda, c: 1.0 }
    }

    pub fn new(lambda: f64, c: f64) -> Result<Self, GeometryError> {
        if !(c > 0.0) {
            return Err(GeometryError::InvalidLightSpeed { c });
        }
        Ok(Params { lambda, c })
    }

    /// The horizon factor 1 − Λr² that scales both g00 and the wave
    /// speed.
    pub fn horizon_factor(&self, r: f64) -> f64 {
        1.0 - self.lambda * r * r
    }
}

impl Default for Params {
    fn default() -> Self {
        Params { lambda: 0.0, c: 1.0 }
    }
}

/// A spacetime point (t, r, θ, φ).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Coordinates {
    pub t: f64,
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
}

impl Coordinates {
    pub fn new(t: f64, r: f64, theta: f64, phi: f64) -> Self {
        Coordinates { t, r, theta, phi }
    }

    /// Point in the equatorial plane θ = π/2, φ = 0 at t = 0.
    pub fn equatorial(r: f64) -> Self {
        Coordinates { t: 0.0, r, theta: std::f64::consts::FRAC_PI_2, phi: 0.0 }
    }

    fn shifted(&self, axis: usize, delta: f64) -> Self {
        let mut out = *self;
        match axis {
            0 => out.t += delta,
            1 => out.r += delta,
            2 => out.theta += delta,
            _ => out.phi += delta,
        }
        out
    }
}

/// Diagonal metric components; off-diagonal entries are identically
/// zero for the de Sitter line element.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MetricComponents {
    pub g00: f64,
    pub g11: f64,
    pub g22: f64,
    pub g33: f64,
}

impl MetricComponents {
    /// Diagonal entry by index.
    pub fn diag(&self, i: usize) -> f64 {
        match i {
            0 => self.g00,
            1 => self.g11,
            2 => self.g22,
            _ => self.g33,
        }
    }
}

/// Connection coefficients Γ^μ_{αβ} at a point, indexed
/// `[mu][alpha][beta]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChristoffelTable {
    pub gamma: [[[f64; 4]; 4]; 4],
}

impl ChristoffelTable {
    fn zeros() -> Self {
        ChristoffelTable { gamma: [[[0.0; 4]; 4]; 4] }
    }

    pub fn get(&self, mu: usize, alpha: usize, beta: usize) -> f64 {
        self.gamma[mu][alpha][beta]
    }

    /// Largest absolute entry-wise difference against another table.
    pub fn max_abs_diff(&self, other: &ChristoffelTable) -> f64 {
        let mut worst = 0.0f64;
        for mu in 0..4 {
            for a in 0..4 {
                for b in 0..4 {
                    worst = worst.max((self.gamma[mu][a][b] - other.gamma[mu][a][b]).abs());
                }
            }
        }
        worst
    }
}

/// Fluid four-velocity components (u⁰, u¹); the angular components
/// vanish in the (1+1)-dimensional reduction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FourVelocity {
    pub u0: f64,
    pub u1: f64,
}

/// The (1+1) block of the pressureless stress-energy tensor. T¹⁰ = T⁰¹
/// by symmetry; the angular components vanish for dust.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StressEnergy {
    pub t00: f64,
    pub t01: f64,
    pub t11: f64,
}

#[derive(Debug, Error, PartialEq)]
pub enum GeometryError {
    #[error("light speed must be positive, got c = {c}")]
    InvalidLightSpeed { c: f64 },
    #[error("horizon singularity at r = {r}: 1 - Λr² vanishes (Λ = {lambda})")]
    HorizonSingularity { lambda: f64, r: f64 },
    #[error("angular degeneracy at (r = {r}, θ = {theta}): inverse metric undefined")]
    AngularDegeneracy { r: f64, theta: f64 },
    #[error("finite-difference stencil with step {h} crosses a metric degeneracy")]
    StencilDegeneracy { h: f64 },
    #[error("superluminal fluid velocity |v| = {} with c = {c}", v.abs())]
    Superluminal { v: f64, c: f64 },
    #[error("mass-energy density must be non-negative, got rho = {rho}")]
    NegativeDensity { rho: f64 },
}

/// Covariant metric components g_{μμ} at a point.
///
/// Defined everywhere except on the horizon Λr² = 1 where g11 blows
/// up.
pub fn metric_covariant(
    params: &Params,
    coords: &Coordinates,
) -> Result<MetricComponents, GeometryError> {
    let b = params.horizon_factor(coords.r);
    if b == 0.0 {
        return Err(GeometryError::HorizonSingularity { lambda: params.lambda, r: coords.r });
    }
    let sin_theta = coords.theta.sin();
    Ok(MetricComponents {
        g00: -b,
        g11: 1.0 / b,
        g22: coords.r * coords.r,
        g33: coords.r * coords.r * sin_theta * sin_theta,
    })
}

/// Contravariant metric components g^{μμ}; the inverse of
/// [`metric_covariant`] componentwise, so the product of the two
/// diagonals is the identity.
pub fn metric_contravariant(
    params: &Params,
    coords: &Coordinates,
) -> Result<MetricComponents, GeometryError> {
    let b = params.horizon_factor(coords.r);
    if b == 0.0 {
        return Err(GeometryError::HorizonSingularity { lambda: params.lambda, r: coords.r });
    }
    let sin_theta = coords.theta.sin();
    if coords.r == 0.0 || sin_theta == 0.0 || coords.theta <= 0.0 || coords.theta >= std::f64::consts::PI {
        return Err(GeometryError::AngularDegeneracy { r: coords.r, theta: coords.theta });
    }
    Ok(MetricComponents {
        g00: 1.0 / (params.lambda * coords.r * coords.r - 1.0),
        g11: b,
        g22: 1.0 / (coords.r * coords.r),
        g33: 1.0 / (coords.r * coords.r * sin_theta * sin_theta),
    })
}

/// Christoffel symbols of the de Sitter metric from their closed
/// forms. Lower-index symmetry Γ^μ_{αβ} = Γ^μ_{βα} holds exactly by
/// construction; every entry not produced below is zero.
pub fn christoffel_closed_form(
    params: &Params,
    coords: &Coordinates,
) -> Result<ChristoffelTable, GeometryError> {
    // Same degeneracies as the inverse metric.
    metric_contravariant(params, coords)?;

    let lambda = params.lambda;
    let r = coords.r;
    let lr2 = lambda * r * r;
    let sin_theta = coords.theta.sin();
    let cos_theta = coords.theta.cos();

    let mut table = ChristoffelTable::zeros();
    let mut set = |mu: usize, a: usize, b: usize, value: f64| {
        table.gamma[mu][a][b] = value;
        table.gamma[mu][b][a] = value;
    };

    set(0, 0, 1, lambda * r / (lr2 - 1.0));
    set(1, 1, 1, lambda * r / (1.0 - lr2));
    set(1, 0, 0, lambda * r * (lr2 - 1.0));
    set(1, 2, 2, r * (lr2 - 1.0));
    set(1, 3, 3, r * (lr2 - 1.0) * sin_theta * sin_theta);
    set(2, 1, 2, 1.0 / r);
    set(3, 1, 3, 1.0 / r);
    set(2, 3, 3, -sin_theta * cos_theta);
    set(3, 2, 3, cos_theta / sin_theta);

    Ok(table)
}

/// Christoffel symbols rebuilt from the definition
///
/// ```text
/// Γ^μ_{αβ} = ½ g^{μν} (−∂_ν g_{αβ} + ∂_β g_{αν} + ∂_α g_{βν})
/// ```
///
/// with every partial derivative replaced by a central difference of
/// [`metric_covariant`] with step `h`. This is the independent oracle
/// for [`christoffel_closed_form`]; with h = 1e-5 the two agree to
/// better than 1e-6 in max norm away from degeneracies.
pub fn christoffel_numeric(
    params: &Params,
    coords: &Coordinates,
    h: f64,
) -> Result<ChristoffelTable, GeometryError> {
    let inverse = metric_contravariant(params, coords)?;

    // The radial stencil must not touch or cross the horizon: a sign
    // change of 1 - Λr² inside [r-h, r+h] turns the difference
    // quotients of g11 into garbage rather than an error.
    let b_center = params.horizon_factor(coords.r);
    for b_side in [params.horizon_factor(coords.r - h), params.horizon_factor(coords.r + h)] {
        if b_side == 0.0 || b_side.signum() != b_center.signum() {
            return Err(GeometryError::StencilDegeneracy { h });
        }
    }

    // Central difference of the covariant component (i,j) along
    // coordinate axis k. Off-diagonal components are identically zero.
    let partial = |i: usize, j: usize, k: usize| -> Result<f64, GeometryError> {
        if i != j {
            return Ok(0.0);
        }
        let plus = metric_covariant(params, &coords.shifted(k, h))
            .map_err(|_| GeometryError::StencilDegeneracy { h })?;
        let minus = metric_covariant(params, &coords.shifted(k, -h))
            .map_err(|_| GeometryError::StencilDegeneracy { h })?;
        Ok((plus.diag(i) - minus.diag(i)) / (2.0 * h))
    };

    let mut table = ChristoffelTable::zeros();
    for mu in 0..4 {
        for alpha in 0..4 {
            for beta in alpha..4 {
                // Diagonal metric: only ν = μ contributes to the sum.
                let value = 0.5
                    * inverse.diag(mu)
                    * (-partial(alpha, beta, mu)?
                        + partial(alpha, mu, beta)?
                        + partial(beta, mu, alpha)?);
                table.gamma[mu][alpha][beta] = value;
                table.gamma[mu][beta][alpha] = value;
            }
        }
    }
    Ok(table)
}

/// Four-velocity of a fluid moving with coordinate velocity `v` at
/// radius `r`.
///
/// Root conventions: u⁰ > 0 (future-oriented) and sign(u¹) = sign(v),
/// so that v = c u¹ / ((1 − Λr²) u⁰) is recovered exactly. Satisfies
/// the unit-norm condition g00 (u⁰)² + g11 (u¹)² = −1.
pub fn fluid_four_velocity(
    params: &Params,
    r: f64,
    v: f64,
) -> Result<FourVelocity, GeometryError> {
    let b = params.horizon_factor(r);
    if b <= 0.0 {
        return Err(GeometryError::HorizonSingularity { lambda: params.lambda, r });
    }
    let c = params.c;
    if v.abs() >= c {
        return Err(GeometryError::Superluminal { v, c });
    }
    let c2v2 = c * c - v * v;
    Ok(FourVelocity {
        u0: c / (b * c2v2).sqrt(),
        u1: v * b.sqrt() / c2v2.sqrt(),
    })
}

/// Pressureless (dust) stress-energy block T^{αβ} = ρ c² u^α u^β for a
/// fluid of density `rho` moving with velocity `v` at radius `r`.
pub fn stress_energy_pressureless(
    params: &Params,
    r: f64,
    v: f64,
    rho: f64,
) -> Result<StressEnergy, GeometryError> {
    let b = params.horizon_factor(r);
    if b <= 0.0 {
        return Err(GeometryError::HorizonSingularity { lambda: params.lambda, r });
    }
    let c = params.c;
    if v.abs() >= c {
        return Err(GeometryError::Superluminal { v, c });
    }
    if rho < 0.0 {
        return Err(GeometryError::NegativeDensity { rho });
    }
    let c2v2 = c * c - v * v;
    Ok(StressEnergy {
        t00: rho * c.powi(4) / (c2v2 * b),
        t01: c * v * rho * c * c / c2v2,
        t11: c * c * b * v * v * rho / c2v2,
    })
}
