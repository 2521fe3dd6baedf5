//! Frobenius–Perron dimensions and integrality flags.
//!
//! `d_i` is the spectral radius of the fusion matrix `(N_i)_{jk} = N_{ij}^k`.
//! Each radius is found by power iteration on `N_i + I` from the all-ones
//! vector. The shift makes the dominant eigenvalue unique in modulus (fusion
//! matrices are often periodic, e.g. `N_σ` in Ising), and since the iterate
//! stays strictly positive the Collatz–Wielandt quotients
//! `min_j (Bx)_j / x_j ≤ ρ(B) ≤ max_j (Bx)_j / x_j` give a rigorous bracket
//! that is used as the stopping criterion.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rule::FusionRule;

pub const DEFAULT_TOLERANCE: f64 = 1e-6;
pub const MAX_ITERATIONS: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FpDimData {
    pub dims: Vec<f64>,
    pub global: f64,
    pub tolerance: f64,
    pub is_integral: bool,
    pub is_weakly_integral: bool,
    /// Largest `|d_i d_j − Σ_k N_{ij}^k d_k| / (1 + d_i d_j)` over all pairs.
    pub max_residual: f64,
}

fn near_positive_integer(x: f64, tolerance: f64) -> bool {
    x.round() >= 1.0 && (x - x.round()).abs() <= tolerance
}

/// Spectral radius of a non-negative integer matrix with a positive eigenvector.
///
/// Returns the midpoint of the final Collatz–Wielandt bracket.
pub fn spectral_radius(matrix: &[Vec<u32>], threshold: f64, max_iter: usize) -> Result<f64> {
    let rows: Vec<Vec<(usize, f64)>> = matrix
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, &m)| m != 0)
                .map(|(k, &m)| (k, f64::from(m)))
                .collect()
        })
        .collect();
    sparse_spectral_radius(&rows, threshold, max_iter)
}

fn sparse_spectral_radius(rows: &[Vec<(usize, f64)>], threshold: f64, max_iter: usize) -> Result<f64> {
    let n = rows.len();
    let mut x = vec![1.0f64; n];
    let mut y = vec![0.0f64; n];
    let mut width = f64::INFINITY;
    for _ in 0..max_iter {
        let mut lo = f64::INFINITY;
        let mut hi = 0.0f64;
        for (j, (row, yj)) in rows.iter().zip(y.iter_mut()).enumerate() {
            // shift by the identity
            *yj = x[j] + row.iter().map(|&(k, m)| m * x[k]).sum::<f64>();
            let q = *yj / x[j];
            lo = lo.min(q);
            hi = hi.max(q);
        }
        width = hi - lo;
        if width <= threshold {
            return Ok(0.5 * (lo + hi) - 1.0);
        }
        let scale = y.iter().cloned().fold(0.0f64, f64::max);
        for (xj, yj) in x.iter_mut().zip(&y) {
            *xj = yj / scale;
        }
    }
    Err(Error::Numerical {
        message: format!("power iteration did not converge within {max_iter} iterations"),
        residual: width,
    })
}

/// FP dimension of every label plus global dimension and integrality flags.
pub fn fp_dimensions(rule: &FusionRule, tolerance: f64) -> Result<FpDimData> {
    if tolerance.is_nan() || tolerance <= 0.0 {
        return Err(Error::Numerical {
            message: "tolerance must be positive".into(),
            residual: tolerance,
        });
    }
    let r = rule.rank();
    let threshold = tolerance * 1e-2;
    let dims = (0..r)
        .map(|i| {
            // row j of N_i: x_i x_j = Σ_k N_ij^k x_k
            let rows: Vec<Vec<(usize, f64)>> = (0..r)
                .map(|j| rule.fuse(i, j).map(|(k, m)| (k, f64::from(m))).collect())
                .collect();
            sparse_spectral_radius(&rows, threshold, MAX_ITERATIONS)
        })
        .collect::<Result<Vec<f64>>>()?;

    let mut max_residual = 0.0f64;
    for i in 0..r {
        for j in 0..r {
            let lhs = dims[i] * dims[j];
            let rhs: f64 = rule.fuse(i, j).map(|(k, m)| f64::from(m) * dims[k]).sum();
            max_residual = max_residual.max((lhs - rhs).abs() / (1.0 + lhs));
        }
    }
    if max_residual > tolerance {
        return Err(Error::Numerical {
            message: "FP dimensions are not multiplicative".into(),
            residual: max_residual,
        });
    }

    let global = dims.iter().map(|d| d * d).sum::<f64>();
    Ok(FpDimData {
        is_integral: dims.iter().all(|&d| near_positive_integer(d, tolerance)),
        is_weakly_integral: near_positive_integer(global, tolerance),
        dims,
        global,
        tolerance,
        max_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fib() -> FusionRule {
        FusionRule::new(
            vec!["1".into(), "τ".into()],
            vec![0, 1],
            vec![1, 0, 0, 1, 0, 1, 1, 1],
        )
        .unwrap()
    }

    #[test]
    fn fibonacci_golden_ratio() {
        let fp = fp_dimensions(&fib(), DEFAULT_TOLERANCE).unwrap();
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((fp.dims[0] - 1.0).abs() < 1e-8);
        assert!((fp.dims[1] - phi).abs() < 1e-8);
        assert!((fp.global - (1.0 + phi * phi)).abs() < 1e-7);
        assert!(!fp.is_weakly_integral);
        assert!(!fp.is_integral);
    }

    #[test]
    fn periodic_matrix_converges() {
        // N_σ in Ising has eigenvalues ±√2, 0.
        let m = vec![vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]];
        let rho = spectral_radius(&m, 1e-10, MAX_ITERATIONS).unwrap();
        assert!((rho - 2f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn permutation_matrix_radius_is_one() {
        let m = vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]];
        let rho = spectral_radius(&m, 1e-12, 10).unwrap();
        assert!((rho - 1.0).abs() < 1e-12);
    }

    #[test]
    fn iteration_cap_reports_residual() {
        let m = vec![vec![1, 1], vec![1, 0]];
        match spectral_radius(&m, 0.0, 3) {
            Err(Error::Numerical { residual, .. }) => assert!(residual > 0.0),
            other => panic!("expected numerical failure, got {other:?}"),
        }
    }

    #[test]
    fn rejects_non_positive_tolerance() {
        assert!(fp_dimensions(&fib(), 0.0).is_err());
    }
}
