//! Damped-Newton bookkeeping shared by the analytic-center and
//! embedding-inversion solvers.

/// Iteration record of a damped Newton run.
///
/// `objectives` holds the objective value after each accepted step (starting
/// value first), so monotone descent is checkable after the fact.
#[derive(Debug, Clone, PartialEq)]
pub struct NewtonTrace {
    pub iterations: usize,
    /// Norm of the convergence functional at exit (residual or gradient).
    pub final_residual: f64,
    /// Accepted damping factor per iteration, each in `(0, 1]`.
    pub step_sizes: Vec<f64>,
    pub objectives: Vec<f64>,
}

impl NewtonTrace {
    pub fn new() -> Self {
        Self {
            iterations: 0,
            final_residual: f64::INFINITY,
            step_sizes: Vec::new(),
            objectives: Vec::new(),
        }
    }
}

impl Default for NewtonTrace {
    fn default() -> Self {
        Self::new()
    }
}

/// Largest multiple of the step that keeps every slack strictly positive,
/// scaled by the fraction-to-boundary factor 0.99 and capped at a full step.
///
/// `slacks` are the current facet values, `slack_rates` the directional
/// derivatives `⟨grad f_i, Δ⟩` along the Newton step.
pub fn fraction_to_boundary_step(slacks: &[f64], slack_rates: &[f64]) -> f64 {
    debug_assert_eq!(slacks.len(), slack_rates.len());
    let mut alpha_max = f64::INFINITY;
    for (&s, &rate) in slacks.iter().zip(slack_rates) {
        if rate < 0.0 {
            alpha_max = alpha_max.min(-s / rate);
        }
    }
    (0.99 * alpha_max).min(1.0)
}
