//! Dense real linear algebra: symmetric eigenvalues, singular values, norms.

mod eigen;
mod matrix;
mod svd;

use thiserror::Error;

pub use eigen::{sym_eigen, EigenSpectrum, EIGEN_TOL, MAX_SWEEPS, SYMMETRY_TOL};
pub use matrix::{kronecker, DenseMatrix, MAX_DIM};
pub use svd::{svd, SingularSpectrum, MAX_SVD_SWEEPS};

pub(crate) use eigen::jacobi_in_place;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LinalgError {
    #[error("matrix must have at least one row and one column")]
    Empty,
    #[error("expected {expected} entries, found {found}")]
    BadLength { expected: usize, found: usize },
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("matrix is {rows}x{cols}, expected square")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric (max asymmetry {max_asymmetry:e})")]
    NonSymmetric { max_asymmetry: f64 },
    #[error("no convergence after {sweeps} sweeps (residual {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },
    #[error("k = {k} outside 1..={max}")]
    KOutOfRange { k: usize, max: usize },
    #[error("result would be {rows}x{cols}, over the {cap} per-side cap")]
    SizeOverflow {
        rows: usize,
        cols: usize,
        cap: usize,
    },
    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
}

/// Non-increasing sort; equal values keep their original order.
pub(crate) fn sort_descending(values: &mut [f64]) {
    values.sort_by(|a, b| b.total_cmp(a));
}

/// Sum of the `k` largest singular values.
pub fn ky_fan_norm(m: &DenseMatrix, k: usize) -> Result<f64, LinalgError> {
    let max = m.rows().min(m.cols());
    if k == 0 || k > max {
        return Err(LinalgError::KOutOfRange { k, max });
    }
    Ok(svd(m)?.values[..k].iter().sum())
}

/// Sum of all singular values.
pub fn trace_norm(m: &DenseMatrix) -> Result<f64, LinalgError> {
    Ok(svd(m)?.values.iter().sum())
}

/// Largest singular value.
pub fn operator_norm(m: &DenseMatrix) -> Result<f64, LinalgError> {
    ky_fan_norm(m, 1)
}

/// Trace norm of a symmetric matrix as `Σ|μᵢ|`.
pub fn symmetric_trace_norm(m: &DenseMatrix) -> Result<f64, LinalgError> {
    Ok(sym_eigen(m)?.values.iter().map(|x| x.abs()).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ky_fan_examples() {
        let k9 = DenseMatrix::zeros(9, 9).complement_loopless().unwrap();
        assert!((ky_fan_norm(&k9, 9).unwrap() - 16.0).abs() < 1e-12);

        let j = DenseMatrix::ones(3, 5);
        assert!((ky_fan_norm(&j, 1).unwrap() - 15f64.sqrt()).abs() < 1e-13);

        assert_eq!(
            ky_fan_norm(&j, 4),
            Err(LinalgError::KOutOfRange { k: 4, max: 3 })
        );
        assert!(ky_fan_norm(&j, 0).is_err());
    }

    #[test]
    fn five_cycle_trace_norm() {
        // eigenvalues 2, 2cos(2π/5) ×2, 2cos(4π/5) ×2
        let c5 = DenseMatrix::from_fn(5, 5, |i, j| {
            if (i + 1) % 5 == j || (j + 1) % 5 == i {
                1.0
            } else {
                0.0
            }
        });
        let expected = 2.0 + 2.0 * 5f64.sqrt();
        assert!((ky_fan_norm(&c5, 5).unwrap() - expected).abs() < 1e-12);
        assert!((symmetric_trace_norm(&c5).unwrap() - expected).abs() < 1e-12);
    }

    #[test]
    fn stable_tie_order() {
        let mut v = vec![1.0, 3.0, -0.0, 0.0, 3.0];
        sort_descending(&mut v);
        assert_eq!(v, vec![3.0, 3.0, 1.0, 0.0, -0.0]);
    }
}
