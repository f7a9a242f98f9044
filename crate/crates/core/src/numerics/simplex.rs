//! Dense two-phase simplex over free variables.
//!
//! Problems arrive in the same shape the geometry modules use for facets:
//! maximize `c·x` subject to rows `⟨a_i, x⟩ + b_i >= 0` with `x` free.
//! Internally the solver splits `x = u - v` with `u, v >= 0`, adds slack,
//! surplus and artificial columns, and runs Bland's rule in both phases,
//! which rules out cycling. Problem sizes here stay below a few dozen rows,
//! so there is no pricing strategy beyond lowest index.

use crate::error::{Error, Result};

/// One inequality `⟨coeffs, x⟩ + offset >= 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearConstraint {
    pub coeffs: Vec<f64>,
    pub offset: f64,
}

impl LinearConstraint {
    pub fn new(coeffs: Vec<f64>, offset: f64) -> Self {
        Self { coeffs, offset }
    }

    /// Value of `⟨coeffs, x⟩ + offset`.
    pub fn eval(&self, x: &[f64]) -> f64 {
        super::dot(&self.coeffs, x) + self.offset
    }
}

/// Maximization problem over free variables.
#[derive(Debug, Clone, PartialEq)]
pub struct LpProblem {
    /// Objective to maximize.
    pub objective: Vec<f64>,
    /// Feasible set: every constraint evaluates nonnegative.
    pub constraints: Vec<LinearConstraint>,
}

/// Solver outcome; the optimizer is present exactly in the `Optimal` case.
#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { point: Vec<f64>, value: f64 },
    Unbounded,
    Infeasible,
}

const DEFAULT_PIVOT_LIMIT: usize = 10_000;
const REDUCED_COST_TOL: f64 = 1e-9;
const RATIO_PIVOT_TOL: f64 = 1e-9;

/// Solves with the default pivot bound.
pub fn lp_solve(problem: &LpProblem) -> Result<LpOutcome> {
    lp_solve_with_limit(problem, DEFAULT_PIVOT_LIMIT)
}

/// Solves with an explicit pivot bound; exceeding it yields
/// [`Error::CycleLimit`], the signal that the instance needs perturbation.
pub fn lp_solve_with_limit(problem: &LpProblem, pivot_limit: usize) -> Result<LpOutcome> {
    let n = problem.objective.len();
    if problem.objective.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("objective"));
    }
    for row in &problem.constraints {
        if row.coeffs.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: row.coeffs.len(),
            });
        }
        if row.coeffs.iter().any(|v| !v.is_finite()) || !row.offset.is_finite() {
            return Err(Error::NonFinite("constraint row"));
        }
    }

    let mut tableau = Tableau::build(problem, pivot_limit);
    if !tableau.phase_one()? {
        return Ok(LpOutcome::Infeasible);
    }
    tableau.phase_two(problem)
}

struct Tableau {
    /// `rows x (cols + 1)`; the last column is the right-hand side.
    rows: Vec<Vec<f64>>,
    basis: Vec<usize>,
    n_vars: usize,
    /// Total structural columns (u, v, slack/surplus); artificials follow.
    n_structural: usize,
    n_artificial: usize,
    pivots_left: usize,
    pivot_limit: usize,
    feas_scale: f64,
}

impl Tableau {
    fn build(problem: &LpProblem, pivot_limit: usize) -> Self {
        let n = problem.objective.len();
        let m = problem.constraints.len();
        let n_structural = 2 * n + m;
        // One artificial per >= row (after sign normalization).
        let needs_artificial: Vec<bool> = problem
            .constraints
            .iter()
            .map(|row| row.offset < 0.0)
            .collect();
        let n_artificial = needs_artificial.iter().filter(|&&b| b).count();
        let cols = n_structural + n_artificial + 1;

        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut next_artificial = n_structural;
        for (i, row) in problem.constraints.iter().enumerate() {
            // ⟨a, x⟩ + b >= 0  ⇔  ⟨-a, x⟩ <= b.
            let mut coeffs = vec![0.0; cols];
            let flip = if needs_artificial[i] { -1.0 } else { 1.0 };
            for (j, &aj) in row.coeffs.iter().enumerate() {
                coeffs[j] = flip * -aj;
                coeffs[n + j] = flip * aj;
            }
            coeffs[cols - 1] = flip * row.offset;
            if needs_artificial[i] {
                // Flipped to >=: surplus plus artificial.
                coeffs[2 * n + i] = -1.0;
                coeffs[next_artificial] = 1.0;
                basis.push(next_artificial);
                next_artificial += 1;
            } else {
                coeffs[2 * n + i] = 1.0;
                basis.push(2 * n + i);
            }
            rows.push(coeffs);
        }

        let feas_scale = 1.0
            + problem
                .constraints
                .iter()
                .fold(0.0f64, |a, r| a.max(r.offset.abs()));

        Self {
            rows,
            basis,
            n_vars: n,
            n_structural,
            n_artificial,
            pivots_left: pivot_limit,
            pivot_limit,
            feas_scale,
        }
    }

    fn rhs(&self, r: usize) -> f64 {
        *self.rows[r].last().unwrap()
    }

    fn reduced_costs(&self, cost: &[f64]) -> Vec<f64> {
        let cols = self.n_structural + self.n_artificial;
        let mut reduced = cost.to_vec();
        for (r, row) in self.rows.iter().enumerate() {
            let cb = cost[self.basis[r]];
            if cb == 0.0 {
                continue;
            }
            for j in 0..cols {
                reduced[j] -= cb * row[j];
            }
        }
        reduced
    }

    /// Bland's rule iteration minimizing `cost`; `allowed` bounds the column
    /// range eligible to enter. Returns false on an unbounded ray.
    fn run(&mut self, cost: &[f64], allowed: usize) -> Result<bool> {
        loop {
            let reduced = self.reduced_costs(cost);
            let entering = (0..allowed).find(|&j| reduced[j] < -REDUCED_COST_TOL);
            let Some(j) = entering else {
                return Ok(true);
            };
            let mut leave: Option<(usize, f64)> = None;
            for r in 0..self.rows.len() {
                let pivot = self.rows[r][j];
                if pivot > RATIO_PIVOT_TOL {
                    let ratio = self.rhs(r).max(0.0) / pivot;
                    let better = match leave {
                        None => true,
                        Some((lr, lratio)) => {
                            ratio < lratio - 1e-12
                                || (ratio < lratio + 1e-12 && self.basis[r] < self.basis[lr])
                        }
                    };
                    if better {
                        leave = Some((r, ratio));
                    }
                }
            }
            let Some((r, _)) = leave else {
                return Ok(false);
            };
            self.pivot(r, j)?;
        }
    }

    fn pivot(&mut self, r: usize, j: usize) -> Result<()> {
        if self.pivots_left == 0 {
            return Err(Error::CycleLimit {
                limit: self.pivot_limit,
            });
        }
        self.pivots_left -= 1;
        let piv = self.rows[r][j];
        for v in self.rows[r].iter_mut() {
            *v /= piv;
        }
        for k in 0..self.rows.len() {
            if k == r {
                continue;
            }
            let factor = self.rows[k][j];
            if factor == 0.0 {
                continue;
            }
            for c in 0..self.rows[k].len() {
                let delta = factor * self.rows[r][c];
                self.rows[k][c] -= delta;
            }
            self.rows[k][j] = 0.0;
            // Wash out rounding drift on the right-hand side.
            let last = self.rows[k].len() - 1;
            if self.rows[k][last] < 0.0 && self.rows[k][last] > -1e-12 * self.feas_scale {
                self.rows[k][last] = 0.0;
            }
        }
        self.basis[r] = j;
        Ok(())
    }

    /// Drives artificial variables to zero. Returns false when the instance
    /// is infeasible.
    fn phase_one(&mut self) -> Result<bool> {
        if self.n_artificial == 0 {
            return Ok(true);
        }
        let cols = self.n_structural + self.n_artificial;
        let mut cost = vec![0.0; cols];
        for c in cost.iter_mut().take(cols).skip(self.n_structural) {
            *c = 1.0;
        }
        // Minimizing a sum of nonnegative variables cannot be unbounded.
        let finished = self.run(&cost, cols)?;
        debug_assert!(finished);

        let infeasibility: f64 = (0..self.rows.len())
            .filter(|&r| self.basis[r] >= self.n_structural)
            .map(|r| self.rhs(r).max(0.0))
            .sum();
        if infeasibility > 1e-9 * self.feas_scale {
            return Ok(false);
        }

        // Pivot leftover artificials out of the basis; drop dependent rows.
        let mut r = 0;
        while r < self.rows.len() {
            if self.basis[r] >= self.n_structural {
                let target = (0..self.n_structural).find(|&j| self.rows[r][j].abs() > 1e-9);
                match target {
                    Some(j) => self.pivot(r, j)?,
                    None => {
                        self.rows.remove(r);
                        self.basis.remove(r);
                        continue;
                    }
                }
            }
            r += 1;
        }
        // Artificial columns are dead from here on; truncate them.
        let keep = self.n_structural;
        for row in self.rows.iter_mut() {
            let rhs = *row.last().unwrap();
            row.truncate(keep);
            row.push(rhs);
        }
        self.n_artificial = 0;
        Ok(true)
    }

    fn phase_two(&mut self, problem: &LpProblem) -> Result<LpOutcome> {
        let n = self.n_vars;
        // Maximize c·x = minimize -c·u + c·v.
        let mut cost = vec![0.0; self.n_structural];
        for (j, &cj) in problem.objective.iter().enumerate() {
            cost[j] = -cj;
            cost[n + j] = cj;
        }
        if !self.run(&cost, self.n_structural)? {
            return Ok(LpOutcome::Unbounded);
        }
        let mut z = vec![0.0; self.n_structural];
        for (r, &b) in self.basis.iter().enumerate() {
            z[b] = self.rhs(r);
        }
        let point: Vec<f64> = (0..n).map(|j| z[j] - z[n + j]).collect();
        let value = super::dot(&problem.objective, &point);
        Ok(LpOutcome::Optimal { point, value })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn unit_interval() -> Vec<LinearConstraint> {
        vec![
            LinearConstraint::new(vec![1.0], 0.0),
            LinearConstraint::new(vec![-1.0], 1.0),
        ]
    }

    #[test]
    fn interval_endpoint() {
        let p = LpProblem {
            objective: vec![1.0],
            constraints: unit_interval(),
        };
        match lp_solve(&p).unwrap() {
            LpOutcome::Optimal { point, value } => {
                assert!((value - 1.0).abs() < 1e-12);
                assert!((point[0] - 1.0).abs() < 1e-12);
            }
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn open_ray_is_unbounded() {
        let p = LpProblem {
            objective: vec![1.0],
            constraints: vec![LinearConstraint::new(vec![1.0], 0.0)],
        };
        assert_eq!(lp_solve(&p).unwrap(), LpOutcome::Unbounded);
    }

    #[test]
    fn contradictory_rows_are_infeasible() {
        // x >= 1 and -x >= 0.
        let p = LpProblem {
            objective: vec![1.0],
            constraints: vec![
                LinearConstraint::new(vec![1.0], -1.0),
                LinearConstraint::new(vec![-1.0], 0.0),
            ],
        };
        assert_eq!(lp_solve(&p).unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn chebyshev_center_of_unit_square() {
        // Variables (x, y, r): maximize r subject to slack >= r on all sides.
        let constraints = vec![
            LinearConstraint::new(vec![1.0, 0.0, -1.0], 0.0),
            LinearConstraint::new(vec![-1.0, 0.0, -1.0], 1.0),
            LinearConstraint::new(vec![0.0, 1.0, -1.0], 0.0),
            LinearConstraint::new(vec![0.0, -1.0, -1.0], 1.0),
        ];
        let p = LpProblem {
            objective: vec![0.0, 0.0, 1.0],
            constraints,
        };
        match lp_solve(&p).unwrap() {
            LpOutcome::Optimal { point, value } => {
                assert!((value - 0.5).abs() < 1e-9);
                assert!((point[0] - 0.5).abs() < 1e-9);
                assert!((point[1] - 0.5).abs() < 1e-9);
            }
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn pivot_limit_trips() {
        let p = LpProblem {
            objective: vec![1.0, 1.0],
            constraints: vec![
                LinearConstraint::new(vec![1.0, 0.0], 0.0),
                LinearConstraint::new(vec![-1.0, 0.0], 1.0),
                LinearConstraint::new(vec![0.0, 1.0], 0.0),
                LinearConstraint::new(vec![0.0, -1.0], 1.0),
            ],
        };
        match lp_solve_with_limit(&p, 0) {
            Err(Error::CycleLimit { limit: 0 }) => {}
            other => panic!("expected CycleLimit, got {other:?}"),
        }
    }

    /// Brute-force oracle: evaluate the objective on an explicit vertex list.
    fn vertex_optimum(objective: &[f64], vertices: &[Vec<f64>]) -> f64 {
        vertices
            .iter()
            .map(|v| crate::numerics::dot(objective, v))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    #[test]
    fn hypercube_and_simplex_match_vertex_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..=4usize {
            // Hypercube [0,1]^n.
            let mut cube_rows = Vec::new();
            for j in 0..n {
                let mut e = vec![0.0; n];
                e[j] = 1.0;
                cube_rows.push(LinearConstraint::new(e.clone(), 0.0));
                let mut ne = vec![0.0; n];
                ne[j] = -1.0;
                cube_rows.push(LinearConstraint::new(ne, 1.0));
            }
            let cube_vertices: Vec<Vec<f64>> = (0..(1usize << n))
                .map(|mask| (0..n).map(|j| ((mask >> j) & 1) as f64).collect())
                .collect();

            // Standard simplex.
            let mut simplex_rows = Vec::new();
            for j in 0..n {
                let mut e = vec![0.0; n];
                e[j] = 1.0;
                simplex_rows.push(LinearConstraint::new(e, 0.0));
            }
            simplex_rows.push(LinearConstraint::new(vec![-1.0; n], 1.0));
            let mut simplex_vertices: Vec<Vec<f64>> = vec![vec![0.0; n]];
            for j in 0..n {
                let mut e = vec![0.0; n];
                e[j] = 1.0;
                simplex_vertices.push(e);
            }

            for _ in 0..25 {
                let c: Vec<f64> = (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect();
                for (rows, vertices) in [
                    (&cube_rows, &cube_vertices),
                    (&simplex_rows, &simplex_vertices),
                ] {
                    let p = LpProblem {
                        objective: c.clone(),
                        constraints: rows.clone(),
                    };
                    match lp_solve(&p).unwrap() {
                        LpOutcome::Optimal { point, value } => {
                            let oracle = vertex_optimum(&c, vertices);
                            assert!(
                                (value - oracle).abs() <= 1e-9,
                                "n={n}: simplex {value} vs vertices {oracle}"
                            );
                            for row in rows.iter() {
                                assert!(row.eval(&point) >= -1e-9);
                            }
                        }
                        other => panic!("expected optimal, got {other:?}"),
                    }
                }
            }
        }
    }

    #[test]
    fn shifted_box_with_negative_offsets() {
        // Box [2, 3] x [-5, -4]; forces the artificial-variable path.
        let rows = vec![
            LinearConstraint::new(vec![1.0, 0.0], -2.0),
            LinearConstraint::new(vec![-1.0, 0.0], 3.0),
            LinearConstraint::new(vec![0.0, 1.0], 5.0),
            LinearConstraint::new(vec![0.0, -1.0], -4.0),
        ];
        let p = LpProblem {
            objective: vec![1.0, 1.0],
            constraints: rows.clone(),
        };
        match lp_solve(&p).unwrap() {
            LpOutcome::Optimal { point, value } => {
                assert!((value - (3.0 - 4.0)).abs() < 1e-9);
                assert!((point[0] - 3.0).abs() < 1e-9);
                assert!((point[1] + 4.0).abs() < 1e-9);
            }
            other => panic!("expected optimal, got {other:?}"),
        }
    }
}
