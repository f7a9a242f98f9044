//! Fixture polytopes shared by the unit tests.

use crate::polytope::{AffineFunctional, Polytope};

/// `[0, 1]` with facets `x` and `1 - x`.
pub fn interval() -> Polytope {
    Polytope::validate(
        vec![
            AffineFunctional::new(vec![1.0], 0.0),
            AffineFunctional::new(vec![-1.0], 1.0),
        ],
        1,
    )
    .unwrap()
}

/// `[0, 1]^2` with facets `x`, `1 - x`, `y`, `1 - y` in that order.
pub fn unit_square() -> Polytope {
    Polytope::validate(
        vec![
            AffineFunctional::new(vec![1.0, 0.0], 0.0),
            AffineFunctional::new(vec![-1.0, 0.0], 1.0),
            AffineFunctional::new(vec![0.0, 1.0], 0.0),
            AffineFunctional::new(vec![0.0, -1.0], 1.0),
        ],
        2,
    )
    .unwrap()
}

/// `{x >= 0, y >= 0, 1 - x - y >= 0}`.
pub fn triangle() -> Polytope {
    Polytope::validate(
        vec![
            AffineFunctional::new(vec![1.0, 0.0], 0.0),
            AffineFunctional::new(vec![0.0, 1.0], 0.0),
            AffineFunctional::new(vec![-1.0, -1.0], 1.0),
        ],
        2,
    )
    .unwrap()
}

/// Standard simplex `{x_i >= 0, 1 - Σ x_i >= 0}` in dimension `n`.
pub fn standard_simplex(n: usize) -> Polytope {
    let mut facets = Vec::with_capacity(n + 1);
    for j in 0..n {
        let mut e = vec![0.0; n];
        e[j] = 1.0;
        facets.push(AffineFunctional::new(e, 0.0));
    }
    facets.push(AffineFunctional::new(vec![-1.0; n], 1.0));
    Polytope::validate(facets, n).unwrap()
}
