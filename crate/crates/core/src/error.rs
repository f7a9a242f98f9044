//! Error types shared by every module of the crate.
//!
//! Each variant's message starts with the error's canonical name so that
//! front-ends can surface it verbatim.

use crate::newton::NewtonTrace;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("DimensionMismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("NonFinite: non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("NotSymmetric: matrix entries ({row},{col}) and ({col},{row}) differ beyond tolerance")]
    NotSymmetric { row: usize, col: usize },

    #[error("NotPositiveDefinite: factorization pivot {pivot:e} at index {index}")]
    NotPositiveDefinite { index: usize, pivot: f64 },

    #[error("CycleLimit: simplex pivot count exceeded the configured bound {limit}")]
    CycleLimit { limit: usize },

    #[error("ZeroGradient: facet {0} has a zero gradient")]
    ZeroGradient(usize),

    #[error("Unbounded: recession cone admits a direction (coordinate {coordinate} reaches {value:e})")]
    Unbounded { coordinate: usize, value: f64 },

    #[error("EmptyInterior: Chebyshev radius {radius:e} is not positive")]
    EmptyInterior { radius: f64 },

    #[error("NotInterior: slack {slack:e} at facet {facet} is below the interiority threshold")]
    NotInterior { facet: usize, slack: f64 },

    #[error("ZeroDirection: direction vector is zero")]
    ZeroDirection,

    #[error("NoBoundaryHit: no facet is hit along the direction; input is numerically degenerate")]
    NoBoundaryHit,

    #[error("NegativeRadius: radius {0} is outside the allowed range")]
    NegativeRadius(f64),

    #[error("DegenerateSegment: endpoints coincide (separation below 1e-14)")]
    DegenerateSegment,

    #[error("UnsupportedDimension: operation requires dimension 2, polytope has dimension {0}")]
    UnsupportedDimension(usize),

    #[error("TooFewPoints: at least {needed} points required, got {got}")]
    TooFewPoints { needed: usize, got: usize },

    #[error(
        "NoConvergence: Newton stopped after {} iterations with residual {:e}",
        trace.iterations,
        trace.final_residual
    )]
    NoConvergence { trace: NewtonTrace },

    #[error("DegenerateGradients: facet gradients do not span the space (least eigenvalue {0:e})")]
    DegenerateGradients(f64),

    #[error("TooManyFacets: {got} facets exceed the subset-enumeration limit {limit}")]
    TooManyFacets { got: usize, limit: usize },
}
