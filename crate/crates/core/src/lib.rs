//! Rotational constant mean curvature graphs in `H^2 x R` and the a-priori
//! height bounds they induce on circular annuli.
//!
//! The crate is organised bottom-up:
//!
//! - [`hyperbolic`]: Poincaré disc radius conversions, the conserved radial
//!   flux and a finite-difference evaluation of the radial mean curvature
//!   operator `Q`.
//! - [`profile`]: the rotational family `H^h_alpha`, its boundary radius, the
//!   two inverse branches and the height profile evaluated by singular
//!   quadrature.
//! - [`estimates`]: upper and lower bounding envelopes on an annulus and the
//!   non-existence verdict for Dirichlet data on the inner circle.
//! - [`radial`]: an independent radial Dirichlet solver built on the flux
//!   first integral, used to show the envelopes are attained.
//! - [`pde2d`]: a finite-difference solver for `Q(u) = 2h` on a polar grid
//!   for non-radial data.
//! - [`cli`]: command implementations behind the `cmc-annuli` binary
//!   (CSV, JSON and SVG output).
//!
//! All radii in public interfaces are hyperbolic (geodesic distance from the
//! origin of the disc). Euclidean disc radii go through
//! [`hyperbolic::euclidean_to_hyperbolic`].

pub mod banded;
pub mod cli;
pub mod error;
pub mod estimates;
pub mod hyperbolic;
pub mod pde2d;
pub mod profile;
pub mod quadrature;
pub mod radial;

pub use error::{Error, Result};
pub use estimates::{
    bounding_box, dirichlet_feasibility, lower_envelope, upper_envelope, Annulus, AprioriBounds,
    Envelope, OuterBoundaryData, Verdict,
};
pub use hyperbolic::{
    euclidean_to_hyperbolic, flux, hyperbolic_to_euclidean, mean_curvature_radial,
    EuclideanRadius, HyperbolicRadius, RadialFunction,
};
pub use pde2d::{discrete_q, solve_dirichlet_2d, Field2D, PolarGrid, SolverOptions, SolverReport};
pub use profile::{
    boundary_radius, height, hole_threshold, param_large, param_small, sample_profile, slope,
    Branch, HeightProfile, HoleThreshold, MeanCurvature, ProfileParameter, ProfileRow,
};
pub use radial::{
    extremal_drops, feasible_flux_interval, integrate_radial, solve_radial, FeasibleDropInterval,
    FluxInterval, RadialSolution,
};

/// Largest hyperbolic radius accepted anywhere; `cosh` overflows near 710.
pub const MAX_RADIUS: f64 = 100.0;

/// Default absolute tolerance for profile quadrature.
pub const DEFAULT_TOL: f64 = 1e-10;
