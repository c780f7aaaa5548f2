//! The continuous model: flux coefficient, conservative flux, source
//! terms, characteristic speed, and the exact static solutions.
//!
//! The equation comes in two algebraically equivalent splittings of
//! the same PDE,
//!
//! ```text
//! ∂t v + ∂r ((1-Λr²) v²/2)   = Λ r (c² - 2v²)          (conservative)
//! ∂t v + (1-Λr²) ∂r (v²/2)   = Λ r (c² - v²)           (non-conservative)
//! ```
//!
//! which differ by the divergence correction Λ r v². Both right-hand
//! sides are exposed as [`SourceForm`] variants; the finite-volume
//! scheme always differences the conservative flux, so the
//! conservative source is the default and is the one that preserves
//! the discrete static solutions.

use crate::geometry::Params;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Which algebraic splitting supplies the source term.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SourceForm {
    /// Λ r (c² − 2v²), paired with the divergence of the conservative
    /// flux (1−Λr²) v²/2. Default.
    #[default]
    Conservative,
    /// Λ r (c² − v²), the right-hand side of the normalized
    /// non-conservative equation.
    PaperNonConservative,
}

/// Sign branch of a static solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    Positive,
    Negative,
}

impl Branch {
    pub fn signum(self) -> f64 {
        match self {
            Branch::Positive => 1.0,
            Branch::Negative => -1.0,
        }
    }
}

/// A static (time-independent) solution v(r) = ± √(c² − N (1 − Λr²)),
/// parameterized by the constant N and a sign branch.
///
/// Construction checks that the radicand stays non-negative over the
/// whole grid domain [0, 1]; the radicand is monotone in r², so the
/// two endpoints suffice.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct StaticSolutionSpec {
    pub n_param: f64,
    pub sign: Branch,
}

impl StaticSolutionSpec {
    pub fn new(params: &Params, n_param: f64, sign: Branch) -> Result<Self, StaticDomainError> {
        let spec = StaticSolutionSpec { n_param, sign };
        for r in [0.0, 1.0] {
            let radicand = spec.radicand(params, r);
            if radicand < 0.0 {
                return Err(StaticDomainError { r, radicand });
            }
        }
        Ok(spec)
    }

    fn radicand(&self, params: &Params, r: f64) -> f64 {
        params.c * params.c - self.n_param * params.horizon_factor(r)
    }
}

#[derive(Debug, Error, PartialEq)]
#[error("static solution undefined: c² - N(1-Λr²) = {radicand} < 0 at r = {r}")]
pub struct StaticDomainError {
    pub r: f64,
    pub radicand: f64,
}

/// The coefficient b(r) = 1 − Λr² that multiplies the flux. It is also
/// the factor by which characteristic speeds deviate from the flat
/// case, so b > 1 anywhere (only possible for Λ < 0) signals
/// superluminal transport.
pub fn flux_coefficient(params: &Params, r: f64) -> f64 {
    params.horizon_factor(r)
}

/// Conservative flux F(r, v) = (1 − Λr²) v²/2.
pub fn conservative_flux(params: &Params, r: f64, v: f64) -> f64 {
    flux_coefficient(params, r) * v * v / 2.0
}

/// Source term of the selected splitting. Vanishes identically for
/// Λ = 0, where both forms reduce to the classical Burgers equation.
pub fn source(params: &Params, r: f64, v: f64, form: SourceForm) -> f64 {
    let c2 = params.c * params.c;
    match form {
        SourceForm::Conservative => params.lambda * r * (c2 - 2.0 * v * v),
        SourceForm::PaperNonConservative => params.lambda * r * (c2 - v * v),
    }
}

/// Characteristic speed (1 − Λr²) v of the quasi-linear form.
pub fn characteristic_speed(params: &Params, r: f64, v: f64) -> f64 {
    flux_coefficient(params, r) * v
}

/// Evaluate the static solution of `spec` at radius `r`.
pub fn static_solution(
    params: &Params,
    spec: &StaticSolutionSpec,
    r: f64,
) -> Result<f64, StaticDomainError> {
    let radicand = spec.radicand(params, r);
    if radicand < 0.0 {
        return Err(StaticDomainError { r, radicand });
    }
    Ok(spec.sign.signum() * radicand.sqrt())
}

/// Residual of the steady-state balance ∂r((1−Λr²)v²/2) − Λr(c²−2v²)
/// for an arbitrary profile `v(r)`, with the radial derivative taken
/// by a central difference of step `h`.
pub fn static_residual_of(
    params: &Params,
    profile: impl Fn(f64) -> f64,
    r: f64,
    h: f64,
) -> f64 {
    let flux = |x: f64| conservative_flux(params, x, profile(x));
    let derivative = (flux(r + h) - flux(r - h)) / (2.0 * h);
    derivative - source(params, r, profile(r), SourceForm::Conservative)
}

/// Residual of the steady-state balance evaluated on the exact static
/// solution; the independent certificate that [`static_solution`]
/// solves the time-independent equation. Smooth exact solutions give
/// residuals at the level of the O(h²) differencing error.
pub fn static_residual(
    params: &Params,
    spec: &StaticSolutionSpec,
    r: f64,
    h: f64,
) -> Result<f64, StaticDomainError> {
    // Surface the domain error rather than letting NaNs flow into the
    // difference quotient.
    for x in [r - h, r, r + h] {
        static_solution(params, spec, x)?;
    }
    Ok(static_residual_of(
        params,
        |x| spec.sign.signum() * spec.radicand(params, x).sqrt(),
        r,
        h,
    ))
}
