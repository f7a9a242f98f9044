//! Halfspace representation of compact convex polytopes.
//!
//! A polytope is `P = {x : f_i(x) >= 0, i = 1..m}` with affine facet
//! functionals `f_i(x) = ⟨g_i, x⟩ + b_i`. Validation enforces the two
//! hypotheses everything downstream relies on: boundedness (trivial
//! recession cone, checked by LP) and a nonempty interior (positive
//! Chebyshev radius). Redundant inequalities are kept on purpose — the
//! embedding depends on the chosen facet list, not just on the point set —
//! but validation records which facets never bind so callers can report it.

use crate::error::{Error, Result};
use crate::newton::{fraction_to_boundary_step, NewtonTrace};
use crate::numerics::{
    dot, lp_solve, norm, solve_spd, LinearConstraint, LpOutcome, LpProblem, Matrix,
};

/// Slack threshold factor for strict interiority; guards the logarithms
/// evaluated downstream.
const INTERIOR_SLACK_FACTOR: f64 = 1e-12;
/// LP feasibility / validation tolerance, fixed crate-wide.
const FEASIBILITY_TOL: f64 = 1e-9;
/// Directions this close to parallel to a facet are treated as not hitting it.
const PARALLEL_TOL: f64 = 1e-14;

/// One facet inequality `f(x) = ⟨gradient, x⟩ + offset >= 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineFunctional {
    pub gradient: Vec<f64>,
    pub offset: f64,
}

impl AffineFunctional {
    pub fn new(gradient: Vec<f64>, offset: f64) -> Self {
        Self { gradient, offset }
    }

    /// Evaluates `⟨gradient, x⟩ + offset`.
    #[inline]
    pub fn eval(&self, x: &[f64]) -> f64 {
        dot(&self.gradient, x) + self.offset
    }

    fn interior_threshold(&self) -> f64 {
        INTERIOR_SLACK_FACTOR * (1.0 + self.offset.abs())
    }
}

/// Validated compact convex polytope with nonempty interior.
#[derive(Debug, Clone, PartialEq)]
pub struct Polytope {
    dim: usize,
    facets: Vec<AffineFunctional>,
    redundant: Vec<usize>,
}

/// Strictly interior point with cached facet slacks.
///
/// Construction goes through [`Polytope::interior_point`], which checks every
/// slack against the interiority threshold, so holders of a value of this
/// type may take `slacks[i] > 0` for granted.
#[derive(Debug, Clone, PartialEq)]
pub struct InteriorPoint {
    coords: Vec<f64>,
    slacks: Vec<f64>,
}

impl InteriorPoint {
    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Facet values `f_i(coords)`, all strictly positive.
    pub fn slacks(&self) -> &[f64] {
        &self.slacks
    }
}

/// Boundary-hit parameters of the line `t ↦ x + t w` through an interior
/// point: `x + t_forward · w` and `x - t_backward · w` lie on the boundary,
/// on the facets recorded alongside.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Chord {
    pub t_forward: f64,
    pub t_backward: f64,
    pub facet_forward: usize,
    pub facet_backward: usize,
}

/// Geometric quantities entering the certified constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometricBounds {
    /// `R`: largest Euclidean norm among facet gradients.
    pub max_gradient_norm: f64,
    /// `M`: largest value any facet functional attains on the polytope.
    pub max_facet_value: f64,
    /// Certified upper bound for the Euclidean diameter (bounding-box
    /// diagonal; exact diameter would need vertex enumeration).
    pub diameter_upper: f64,
}

impl Polytope {
    /// Validates a halfspace list: nonzero finite gradients, boundedness of
    /// the recession cone, and a Chebyshev radius above `1e-9`.
    pub fn validate(facets: Vec<AffineFunctional>, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                got: 0,
            });
        }
        for (i, f) in facets.iter().enumerate() {
            if f.gradient.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: f.gradient.len(),
                });
            }
            if f.gradient.iter().any(|v| !v.is_finite()) || !f.offset.is_finite() {
                return Err(Error::NonFinite("facet functional"));
            }
            if norm(&f.gradient) == 0.0 {
                return Err(Error::ZeroGradient(i));
            }
        }

        let candidate = Polytope {
            dim,
            facets,
            redundant: Vec::new(),
        };
        candidate.check_bounded()?;
        let (_, radius) = candidate.chebyshev()?;
        if radius <= FEASIBILITY_TOL {
            return Err(Error::EmptyInterior { radius });
        }
        let redundant = candidate.find_redundant()?;
        Ok(Polytope {
            redundant,
            ..candidate
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn facets(&self) -> &[AffineFunctional] {
        &self.facets
    }

    /// Indices of facets whose minimum over the polytope is strictly
    /// positive; they never bind but still shape the embedding.
    pub fn redundant_facets(&self) -> &[usize] {
        &self.redundant
    }

    /// Membership test; `strict` requires every slack above `1e-12`.
    pub fn contains(&self, x: &[f64], strict: bool) -> Result<bool> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        let ok = self.facets.iter().all(|f| {
            let v = f.eval(x);
            if strict {
                v > 1e-12
            } else {
                v >= 0.0
            }
        });
        Ok(ok)
    }

    /// Builds a strictly interior point, checking every slack against the
    /// threshold `1e-12 · (1 + |offset|)`.
    pub fn interior_point(&self, coords: &[f64]) -> Result<InteriorPoint> {
        if coords.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: coords.len(),
            });
        }
        if coords.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("point coordinates"));
        }
        let mut slacks = Vec::with_capacity(self.facets.len());
        for (i, f) in self.facets.iter().enumerate() {
            let s = f.eval(coords);
            if s <= f.interior_threshold() {
                return Err(Error::NotInterior { facet: i, slack: s });
            }
            slacks.push(s);
        }
        Ok(InteriorPoint {
            coords: coords.to_vec(),
            slacks,
        })
    }

    /// Boundary hits of the line through `x` along `w` (both orientations).
    ///
    /// `t_forward = min {-f_i(x) / ⟨g_i, w⟩ : ⟨g_i, w⟩ < 0}` and symmetrically
    /// for `t_backward`; facets nearly parallel to `w` are skipped. Ties
    /// report the lowest facet index.
    pub fn chord(&self, x: &InteriorPoint, w: &[f64]) -> Result<Chord> {
        self.check_point(x)?;
        if w.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: w.len(),
            });
        }
        if w.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("direction"));
        }
        let w_norm = norm(w);
        if w_norm == 0.0 {
            return Err(Error::ZeroDirection);
        }
        let mut forward: Option<(usize, f64)> = None;
        let mut backward: Option<(usize, f64)> = None;
        for (i, f) in self.facets.iter().enumerate() {
            let gw = dot(&f.gradient, w);
            if gw.abs() < PARALLEL_TOL * norm(&f.gradient) * w_norm {
                continue;
            }
            if gw < 0.0 {
                let t = x.slacks[i] / -gw;
                if forward.map_or(true, |(_, best)| t < best) {
                    forward = Some((i, t));
                }
            } else {
                let t = x.slacks[i] / gw;
                if backward.map_or(true, |(_, best)| t < best) {
                    backward = Some((i, t));
                }
            }
        }
        match (forward, backward) {
            (Some((fi, tf)), Some((bi, tb))) => Ok(Chord {
                t_forward: tf,
                t_backward: tb,
                facet_forward: fi,
                facet_backward: bi,
            }),
            _ => Err(Error::NoBoundaryHit),
        }
    }

    /// Center of the largest inscribed Euclidean ball (one LP).
    pub fn chebyshev_center(&self) -> Result<InteriorPoint> {
        let (center, _) = self.chebyshev()?;
        self.interior_point(&center)
    }

    /// Maximizer of `Σ log f_i`, by damped Newton ascent from the Chebyshev
    /// center; converges when the gradient norm drops below `1e-8`.
    pub fn analytic_center(&self) -> Result<InteriorPoint> {
        const GRAD_TOL: f64 = 1e-8;
        const MAX_ITER: usize = 100;

        let n = self.dim;
        let start = self.chebyshev_center()?;
        let mut coords = start.coords().to_vec();
        let mut slacks = start.slacks().to_vec();
        let log_sum = |s: &[f64]| s.iter().map(|v| v.ln()).sum::<f64>();
        let mut trace = NewtonTrace::new();
        trace.objectives.push(log_sum(&slacks));

        for _ in 0..MAX_ITER {
            let mut grad = vec![0.0; n];
            for (f, &s) in self.facets.iter().zip(&slacks) {
                for (gj, &fj) in grad.iter_mut().zip(&f.gradient) {
                    *gj += fj / s;
                }
            }
            let grad_norm = norm(&grad);
            trace.final_residual = grad_norm;
            if grad_norm <= GRAD_TOL {
                return self.interior_point(&coords);
            }

            let mut hess = Matrix::zeros(n, n);
            for (f, &s) in self.facets.iter().zip(&slacks) {
                hess.add_scaled_outer(&f.gradient, 1.0 / (s * s));
            }
            let step = solve_spd(&hess, &grad)?;
            let rates: Vec<f64> = self.facets.iter().map(|f| dot(&f.gradient, &step)).collect();
            let mut alpha = fraction_to_boundary_step(&slacks, &rates);
            let current = log_sum(&slacks);
            let mut accepted = false;
            while alpha > 1e-18 {
                let trial: Vec<f64> = coords
                    .iter()
                    .zip(&step)
                    .map(|(c, d)| c + alpha * d)
                    .collect();
                let trial_slacks: Vec<f64> = self.facets.iter().map(|f| f.eval(&trial)).collect();
                if trial_slacks.iter().all(|&s| s > 0.0) && log_sum(&trial_slacks) > current {
                    coords = trial;
                    slacks = trial_slacks;
                    trace.iterations += 1;
                    trace.step_sizes.push(alpha);
                    trace.objectives.push(log_sum(&slacks));
                    accepted = true;
                    break;
                }
                alpha *= 0.5;
            }
            if !accepted {
                return Err(Error::NoConvergence { trace });
            }
        }
        Err(Error::NoConvergence { trace })
    }

    /// `R`, `M` and the bounding-box diameter bound, all by LP.
    pub fn bounds(&self) -> Result<GeometricBounds> {
        let max_gradient_norm = self
            .facets
            .iter()
            .map(|f| norm(&f.gradient))
            .fold(0.0f64, f64::max);
        let mut max_facet_value = f64::NEG_INFINITY;
        for f in &self.facets {
            let value = self.maximize_over_self(&f.gradient)? + f.offset;
            max_facet_value = max_facet_value.max(value);
        }
        let (lower, upper) = self.bounding_box()?;
        let diameter_upper = norm(
            &upper
                .iter()
                .zip(&lower)
                .map(|(u, l)| u - l)
                .collect::<Vec<_>>(),
        );
        Ok(GeometricBounds {
            max_gradient_norm,
            max_facet_value,
            diameter_upper,
        })
    }

    /// Componentwise extent of the polytope, via `2 dim` LPs.
    pub fn bounding_box(&self) -> Result<(Vec<f64>, Vec<f64>)> {
        let n = self.dim;
        let mut lower = vec![0.0; n];
        let mut upper = vec![0.0; n];
        for j in 0..n {
            let mut e = vec![0.0; n];
            e[j] = 1.0;
            upper[j] = self.maximize_over_self(&e)?;
            e[j] = -1.0;
            lower[j] = -self.maximize_over_self(&e)?;
        }
        Ok((lower, upper))
    }

    fn check_point(&self, x: &InteriorPoint) -> Result<()> {
        if x.coords.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.coords.len(),
            });
        }
        if x.slacks.len() != self.facets.len() {
            return Err(Error::DimensionMismatch {
                expected: self.facets.len(),
                got: x.slacks.len(),
            });
        }
        Ok(())
    }

    /// Maximum of `⟨objective, x⟩` over the polytope.
    fn maximize_over_self(&self, objective: &[f64]) -> Result<f64> {
        let problem = LpProblem {
            objective: objective.to_vec(),
            constraints: self
                .facets
                .iter()
                .map(|f| LinearConstraint::new(f.gradient.clone(), f.offset))
                .collect(),
        };
        match lp_solve(&problem)? {
            LpOutcome::Optimal { value, .. } => Ok(value),
            // A validated polytope is bounded and nonempty.
            other => unreachable!("facet LP on a validated polytope returned {other:?}"),
        }
    }

    /// Boundedness check: the recession cone `{w : ⟨g_i, w⟩ >= 0}` clipped to
    /// the infinity-norm unit box must not let any coordinate move off zero.
    fn check_bounded(&self) -> Result<()> {
        let n = self.dim;
        let mut constraints: Vec<LinearConstraint> = self
            .facets
            .iter()
            .map(|f| LinearConstraint::new(f.gradient.clone(), 0.0))
            .collect();
        for j in 0..n {
            let mut pos = vec![0.0; n];
            pos[j] = 1.0;
            constraints.push(LinearConstraint::new(pos.clone(), 1.0));
            pos[j] = -1.0;
            constraints.push(LinearConstraint::new(pos, 1.0));
        }
        for j in 0..n {
            for sign in [1.0, -1.0] {
                let mut objective = vec![0.0; n];
                objective[j] = sign;
                let problem = LpProblem {
                    objective,
                    constraints: constraints.clone(),
                };
                match lp_solve(&problem)? {
                    LpOutcome::Optimal { value, .. } => {
                        if value > FEASIBILITY_TOL {
                            return Err(Error::Unbounded {
                                coordinate: j,
                                value,
                            });
                        }
                    }
                    other => unreachable!("recession LP is box-bounded and feasible: {other:?}"),
                }
            }
        }
        Ok(())
    }

    /// Chebyshev LP over `(x, r)`: maximize `r` subject to
    /// `⟨g_i, x⟩ + b_i >= r ||g_i||`.
    fn chebyshev(&self) -> Result<(Vec<f64>, f64)> {
        let n = self.dim;
        let constraints: Vec<LinearConstraint> = self
            .facets
            .iter()
            .map(|f| {
                let mut coeffs = f.gradient.clone();
                coeffs.push(-norm(&f.gradient));
                LinearConstraint::new(coeffs, f.offset)
            })
            .collect();
        let mut objective = vec![0.0; n + 1];
        objective[n] = 1.0;
        let problem = LpProblem {
            objective,
            constraints,
        };
        match lp_solve(&problem)? {
            LpOutcome::Optimal { point, value } => Ok((point[..n].to_vec(), value)),
            other => unreachable!("chebyshev LP on a bounded polytope returned {other:?}"),
        }
    }

    fn find_redundant(&self) -> Result<Vec<usize>> {
        let mut redundant = Vec::new();
        for (i, f) in self.facets.iter().enumerate() {
            let neg: Vec<f64> = f.gradient.iter().map(|v| -v).collect();
            let min_value = -self.maximize_over_self(&neg)? + f.offset;
            if min_value > FEASIBILITY_TOL {
                redundant.push(i);
            }
        }
        Ok(redundant)
    }
}
