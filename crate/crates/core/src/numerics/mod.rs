//! Small dense numerical kernels used by the geometry modules: symmetric
//! positive-definite solves, symmetric eigenvalues, Gauss-Legendre nodes,
//! and a dense two-phase simplex solver (see [`simplex`]).
//!
//! Everything here targets desk-scale problems (dimension <= ~10, a few
//! dozen constraints); there is no sparsity, pivoting, or blocking.

mod simplex;

pub use simplex::{lp_solve, lp_solve_with_limit, LinearConstraint, LpOutcome, LpProblem};

use crate::error::{Error, Result};

/// Dot product of two equally long slices.
#[inline]
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Euclidean norm.
#[inline]
pub fn norm(v: &[f64]) -> f64 {
    dot(v, v).sqrt()
}

/// Dense row-major matrix of `f64` entries.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    /// Build a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("matrix entries"));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: f64) {
        self.data[r * self.cols + c] = v;
    }

    /// Adds `scale * v vᵀ` to a square matrix; used to accumulate Gram
    /// matrices and Newton Hessians.
    pub fn add_scaled_outer(&mut self, v: &[f64], scale: f64) {
        debug_assert_eq!(self.rows, self.cols);
        debug_assert_eq!(self.rows, v.len());
        for (i, vi) in v.iter().enumerate() {
            let row = &mut self.data[i * self.cols..(i + 1) * self.cols];
            for (entry, vj) in row.iter_mut().zip(v) {
                *entry += scale * vi * vj;
            }
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        norm(&self.data)
    }

    fn require_square(&self) -> Result<usize> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        Ok(self.rows)
    }

    fn require_symmetric(&self) -> Result<usize> {
        let n = self.require_square()?;
        let scale = 1.0 + self.data.iter().fold(0.0f64, |a, v| a.max(v.abs()));
        for i in 0..n {
            for j in (i + 1)..n {
                if (self.get(i, j) - self.get(j, i)).abs() > 1e-12 * scale {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(n)
    }
}

/// Solves `A x = rhs` for symmetric positive-definite `A` by an unpivoted
/// Cholesky factorization. Fails with [`Error::NotPositiveDefinite`] as soon
/// as a pivot drops to zero or below, which downstream callers use to detect
/// degenerate Hessians.
pub fn solve_spd(a: &Matrix, rhs: &[f64]) -> Result<Vec<f64>> {
    let n = a.require_symmetric()?;
    if rhs.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: rhs.len(),
        });
    }
    // Lower-triangular factor, packed row-major.
    let mut l = vec![0.0f64; n * n];
    for i in 0..n {
        for j in 0..=i {
            let mut sum = a.get(i, j);
            for k in 0..j {
                sum -= l[i * n + k] * l[j * n + k];
            }
            if i == j {
                if sum <= 0.0 {
                    return Err(Error::NotPositiveDefinite {
                        index: i,
                        pivot: sum,
                    });
                }
                l[i * n + i] = sum.sqrt();
            } else {
                l[i * n + j] = sum / l[j * n + j];
            }
        }
    }
    // Forward then backward substitution.
    let mut y = vec![0.0f64; n];
    for i in 0..n {
        let mut sum = rhs[i];
        for k in 0..i {
            sum -= l[i * n + k] * y[k];
        }
        y[i] = sum / l[i * n + i];
    }
    let mut x = vec![0.0f64; n];
    for i in (0..n).rev() {
        let mut sum = y[i];
        for k in (i + 1)..n {
            sum -= l[k * n + i] * x[k];
        }
        x[i] = sum / l[i * n + i];
    }
    Ok(x)
}

/// Least eigenvalue of a symmetric matrix via cyclic Jacobi rotations.
///
/// Iterates sweeps until the off-diagonal Frobenius norm falls below
/// `1e-12 * (1 + ||A||_F)`. Works for indefinite input; the caller checks
/// the sign.
pub fn min_eigenvalue_symmetric(a: &Matrix) -> Result<f64> {
    let eig = symmetric_eigenvalues(a)?;
    Ok(eig.into_iter().fold(f64::INFINITY, f64::min))
}

fn symmetric_eigenvalues(a: &Matrix) -> Result<Vec<f64>> {
    let n = a.require_symmetric()?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut m = a.clone();
    let tol = 1e-12 * (1.0 + a.frobenius_norm());
    for _sweep in 0..100 {
        let mut off = 0.0f64;
        for i in 0..n {
            for j in (i + 1)..n {
                off += 2.0 * m.get(i, j) * m.get(i, j);
            }
        }
        if off.sqrt() <= tol {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m.get(p, q);
                if apq.abs() <= tol / (n * n) as f64 {
                    continue;
                }
                let app = m.get(p, p);
                let aqq = m.get(q, q);
                let tau = (aqq - app) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // Rotate rows/columns p and q.
                for k in 0..n {
                    let akp = m.get(k, p);
                    let akq = m.get(k, q);
                    m.set(k, p, c * akp - s * akq);
                    m.set(k, q, s * akp + c * akq);
                }
                for k in 0..n {
                    let apk = m.get(p, k);
                    let aqk = m.get(q, k);
                    m.set(p, k, c * apk - s * aqk);
                    m.set(q, k, s * apk + c * aqk);
                }
            }
        }
    }
    Ok((0..n).map(|i| m.get(i, i)).collect())
}

/// Nodes and weights of the 16-point Gauss-Legendre rule on `[0, 1]`.
///
/// Computed by Newton iteration on the degree-16 Legendre polynomial, so the
/// values carry full double precision without tabulated constants.
pub fn gauss_legendre_16() -> [(f64, f64); 16] {
    const N: usize = 16;
    let mut out = [(0.0f64, 0.0f64); N];
    for i in 0..(N + 1) / 2 {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (N as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..64 {
            let (p, d) = legendre_16(x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        // Map from [-1, 1] to [0, 1]; nodes come in symmetric pairs.
        out[i] = (0.5 * (1.0 - x), 0.5 * w);
        out[N - 1 - i] = (0.5 * (1.0 + x), 0.5 * w);
    }
    out
}

/// Value and derivative of the Legendre polynomial P₁₆ at `x`.
fn legendre_16(x: f64) -> (f64, f64) {
    const N: usize = 16;
    let mut p0 = 1.0f64;
    let mut p1 = x;
    for k in 2..=N {
        let kf = k as f64;
        let pk = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = pk;
    }
    let d = N as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn solve_spd_identity() {
        let a = Matrix::identity(2);
        let x = solve_spd(&a, &[3.0, 4.0]).unwrap();
        assert_eq!(x, vec![3.0, 4.0]);
    }

    #[test]
    fn solve_spd_diagonal() {
        let a = Matrix::new(2, 2, vec![2.0, 0.0, 0.0, 2.0]).unwrap();
        let x = solve_spd(&a, &[2.0, 4.0]).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-14);
        assert!((x[1] - 2.0).abs() < 1e-14);
    }

    #[test]
    fn solve_spd_random_residual() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..50 {
            let n = 5;
            // B Bᵀ + 0.1 I is SPD.
            let mut a = Matrix::zeros(n, n);
            for _ in 0..n {
                let row: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
                a.add_scaled_outer(&row, 1.0);
            }
            for i in 0..n {
                a.set(i, i, a.get(i, i) + 0.1);
            }
            let rhs: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let x = solve_spd(&a, &rhs).unwrap();
            let mut residual = 0.0f64;
            for i in 0..n {
                let ax: f64 = (0..n).map(|j| a.get(i, j) * x[j]).sum();
                residual += (ax - rhs[i]).powi(2);
            }
            assert!(residual.sqrt() <= 1e-9 * (1.0 + norm(&rhs)));
        }
    }

    #[test]
    fn solve_spd_rejects_indefinite() {
        let a = Matrix::new(2, 2, vec![1.0, 2.0, 2.0, 1.0]).unwrap();
        match solve_spd(&a, &[1.0, 1.0]) {
            Err(crate::error::Error::NotPositiveDefinite { .. }) => {}
            other => panic!("expected NotPositiveDefinite, got {other:?}"),
        }
    }

    #[test]
    fn min_eigenvalue_identity() {
        let a = Matrix::identity(3);
        assert!((min_eigenvalue_symmetric(&a).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn min_eigenvalue_diagonal() {
        let a = Matrix::new(2, 2, vec![5.0, 0.0, 0.0, 2.0]).unwrap();
        assert!((min_eigenvalue_symmetric(&a).unwrap() - 2.0).abs() < 1e-12);
    }

    /// Exact 4x4 determinant by cofactor expansion; oracle for the Jacobi path.
    fn det4(a: &Matrix) -> f64 {
        fn det3(m: [[f64; 3]; 3]) -> f64 {
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        }
        let mut d = 0.0;
        for c in 0..4 {
            let mut minor = [[0.0; 3]; 3];
            for (mi, i) in (1..4).enumerate() {
                let mut mj = 0;
                for j in 0..4 {
                    if j == c {
                        continue;
                    }
                    minor[mi][mj] = a.get(i, j);
                    mj += 1;
                }
            }
            let sign = if c % 2 == 0 { 1.0 } else { -1.0 };
            d += sign * a.get(0, c) * det3(minor);
        }
        d
    }

    #[test]
    fn min_eigenvalue_matches_characteristic_root() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let n = 4;
            let mut a = Matrix::zeros(n, n);
            for i in 0..n {
                for j in 0..=i {
                    let v = rng.gen_range(-2.0..2.0);
                    a.set(i, j, v);
                    a.set(j, i, v);
                }
            }
            let lambda = min_eigenvalue_symmetric(&a).unwrap();

            // Bisection on det(A - t I): scan a fine grid from below the
            // spectrum and refine the first sign change.
            let shifted = |t: f64| {
                let mut s = a.clone();
                for i in 0..n {
                    s.set(i, i, s.get(i, i) - t);
                }
                det4(&s)
            };
            let bound = a.frobenius_norm() + 1.0;
            let steps = 200_000;
            let h = 2.0 * bound / steps as f64;
            let mut lo = -bound;
            let mut hi = bound;
            let mut flo = shifted(lo);
            for k in 1..=steps {
                let t = -bound + k as f64 * h;
                let ft = shifted(t);
                if flo > 0.0 && ft <= 0.0 {
                    hi = t;
                    lo = t - h;
                    break;
                }
                flo = ft;
            }
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if shifted(mid) > 0.0 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let oracle = 0.5 * (lo + hi);
            assert!(
                (lambda - oracle).abs() <= 1e-9 * (1.0 + a.frobenius_norm()),
                "jacobi {lambda} vs bisection {oracle}"
            );
        }
    }

    #[test]
    fn min_eigenvalue_rayleigh_upper_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let n = 5;
        let mut a = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..=i {
                let v = rng.gen_range(-1.0..1.0);
                a.set(i, j, v);
                a.set(j, i, v);
            }
        }
        let lambda = min_eigenvalue_symmetric(&a).unwrap();
        for _ in 0..100 {
            let r: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let rr = dot(&r, &r);
            if rr < 1e-12 {
                continue;
            }
            let ar: Vec<f64> = (0..n).map(|i| (0..n).map(|j| a.get(i, j) * r[j]).sum()).collect();
            let rayleigh = dot(&r, &ar) / rr;
            assert!(lambda <= rayleigh + 1e-9);
        }
    }

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        let rule = gauss_legendre_16();
        let wsum: f64 = rule.iter().map(|&(_, w)| w).sum();
        assert!((wsum - 1.0).abs() < 1e-14);
        // Exact for degree <= 31 on [0, 1]: integral of s^k is 1/(k+1).
        for k in 0..=31u32 {
            let q: f64 = rule.iter().map(|&(s, w)| w * s.powi(k as i32)).sum();
            let exact = 1.0 / (k as f64 + 1.0);
            assert!(
                (q - exact).abs() < 1e-13,
                "degree {k}: quadrature {q} vs exact {exact}"
            );
        }
    }
}
