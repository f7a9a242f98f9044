//! Hilbert geometry on compact convex polytopes in halfspace representation.
//!
//! The crate computes exact cross-ratio distances and Finsler norms on the
//! interior of a polytope `P = {x : f_i(x) >= 0}`, evaluates the logarithmic
//! embedding `Φ(x) = Σ log f_i(x) · grad f_i` into Euclidean space together
//! with its differential and convex potential, inverts `Φ` by a damped
//! Newton method, and certifies or estimates the bilipschitz constants that
//! relate the two metrics.
//!
//! Modules follow the pipeline:
//!
//! * [`numerics`] — dense SPD solves, symmetric eigenvalues, a small simplex
//!   LP solver, Gauss-Legendre nodes.
//! * [`polytope`] — validated halfspace representations, chords, reference
//!   interior points, geometric bounds.
//! * [`hilbert`] — the Hilbert metric: distances, Finsler norms, geodesics,
//!   metric spheres, path lengths.
//! * [`embedding`] — the map `Φ`, its Jacobian and potential, and the Newton
//!   inverse.
//! * [`certify`] — certified constants and randomized distortion reports.
//!
//! ```
//! use hilbert_core::polytope::{AffineFunctional, Polytope};
//!
//! let square = Polytope::validate(
//!     vec![
//!         AffineFunctional::new(vec![1.0, 0.0], 0.0),
//!         AffineFunctional::new(vec![-1.0, 0.0], 1.0),
//!         AffineFunctional::new(vec![0.0, 1.0], 0.0),
//!         AffineFunctional::new(vec![0.0, -1.0], 1.0),
//!     ],
//!     2,
//! )
//! .unwrap();
//! let x = square.interior_point(&[0.5, 0.5]).unwrap();
//! let y = square.interior_point(&[0.75, 0.5]).unwrap();
//! let d = hilbert_core::hilbert::distance(&square, &x, &y).unwrap();
//! assert!((d - 0.5 * 3.0_f64.ln()).abs() < 1e-12);
//! ```

pub mod certify;
pub mod embedding;
pub mod error;
pub mod hilbert;
pub mod newton;
pub mod numerics;
pub mod polytope;

pub use error::{Error, Result};
pub use newton::NewtonTrace;
