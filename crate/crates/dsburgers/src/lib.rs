//! Finite-volume solver for the relativistic Burgers equation on a
//! (1+1)-dimensional de Sitter background.
//!
//! The velocity field obeys
//!
//! ```text
//! ∂t v + ∂r ((1 - Λr²) v²/2) = Λ r (c² - 2v²),        r ∈ [0, 1],
//! ```
//!
//! where Λ is the cosmological constant (Λ = 0 recovers the classical
//! inviscid Burgers equation, Λ > 0 the de Sitter case, Λ < 0 anti-de
//! Sitter). The crate is organized as:
//!
//! - [`geometry`] — de Sitter metric, Christoffel symbols, fluid
//!   four-velocity and pressureless stress-energy, with a
//!   finite-difference cross-check for every closed form;
//! - [`model`] — the continuous equation: flux, source terms (both
//!   algebraic splittings), characteristic speed, and the exact static
//!   solutions;
//! - [`godunov`] — the discrete solver: first-order Godunov and
//!   second-order MUSCL-Hancock schemes with CFL-controlled time
//!   stepping and transmissive boundaries;
//! - [`reference`] — independent oracles: exact classical Riemann and
//!   characteristics solutions, an independent plain Burgers scheme,
//!   error norms and front tracking;
//! - [`cli`] — configuration parsing, experiment presets, CSV/JSON
//!   output, convergence studies (drives the `dsburgers` binary).
//!
//! See the `examples/` directory for one runnable program per major
//! capability.

pub mod cli;
pub mod geometry;
pub mod godunov;
pub mod model;
pub mod reference;

pub use geometry::{Coordinates, Params};
pub use godunov::{Grid, SchemeConfig, Snapshot, State};
pub use model::SourceForm;
