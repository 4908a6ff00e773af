use thiserror::Error;

use crate::pde2d::{Field2D, SolverReport};
use crate::radial::FeasibleDropInterval;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument fell outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// No small-branch profile is vertical on the inner circle: the hole is
    /// at least `artanh(2h)` wide.
    #[error("hole too large: inner radius {a} >= threshold {threshold} for h = {h}")]
    HoleTooLarge { h: f64, a: f64, threshold: f64 },

    #[error("quadrature did not reach tolerance {requested:e} (estimated error {estimated:e}) after {subdivisions} subdivisions")]
    Quadrature {
        requested: f64,
        estimated: f64,
        subdivisions: usize,
    },

    /// The flux constant violates `|2h cosh r + C| <= sinh r` somewhere on the annulus.
    #[error("flux constant {c} outside the graph interval [{lower}, {upper}]")]
    InfeasibleFlux { c: f64, lower: f64, upper: f64 },

    /// Radial Dirichlet data whose drop lies outside the achievable interval.
    #[error("no radial solution: drop {requested} outside achievable [{}, {}]", .achievable.d_min, .achievable.d_max)]
    Infeasible {
        requested: f64,
        achievable: FeasibleDropInterval,
    },

    #[error("bisection on the flux constant stalled at |drop error| = {residual:e}")]
    Bisection { residual: f64 },

    #[error("2D solver did not converge: residual {:e} after {} iterations", .report.residual, .report.iterations)]
    NonConvergence {
        report: SolverReport,
        field: Box<Field2D>,
    },
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
