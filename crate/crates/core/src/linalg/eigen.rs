//! Cyclic Jacobi eigenvalues for dense symmetric matrices.
//!
//! Each sweep visits every pair `(p, q)`, `p < q`, once in row order and
//! applies the plane rotation that annihilates `A[p,q]`. Only eigenvalues are
//! accumulated; the rotations are applied to the full matrix so no triangle
//! bookkeeping is needed.

use serde::Serialize;

use super::{sort_descending, DenseMatrix, LinalgError};

/// Entrywise asymmetry accepted by [`sym_eigen`].
pub const SYMMETRY_TOL: f64 = 1e-12;
/// Convergence when `off(A) < EIGEN_TOL · (1 + ‖A‖_F)`.
pub const EIGEN_TOL: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 60;

/// Eigenvalues sorted non-increasing, with the final off-diagonal Frobenius norm.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EigenSpectrum {
    pub values: Vec<f64>,
    pub offdiag_residual: f64,
    pub sweeps: usize,
}

pub fn sym_eigen(m: &DenseMatrix) -> Result<EigenSpectrum, LinalgError> {
    m.require_square()?;
    let asym = m.max_asymmetry();
    if asym > SYMMETRY_TOL {
        return Err(LinalgError::NonSymmetric {
            max_asymmetry: asym,
        });
    }
    let n = m.rows();
    let mut work: Vec<f64> = (0..n * n)
        .map(|idx| 0.5 * (m.get(idx / n, idx % n) + m.get(idx % n, idx / n)))
        .collect();
    let mut values = Vec::with_capacity(m.rows());
    let (offdiag_residual, sweeps) = jacobi_in_place(&mut work, n, &mut values)?;
    Ok(EigenSpectrum {
        values,
        offdiag_residual,
        sweeps,
    })
}

fn offdiag_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            s += a[p * n + q] * a[p * n + q];
        }
    }
    (2.0 * s).sqrt()
}

/// Diagonalises the symmetric `n×n` row-major buffer `a` in place and writes
/// the sorted eigenvalues into `values`. Returns `(residual, sweeps)`.
///
/// The buffer is taken as already symmetric; callers are responsible for that.
pub(crate) fn jacobi_in_place(
    a: &mut [f64],
    n: usize,
    values: &mut Vec<f64>,
) -> Result<(f64, usize), LinalgError> {
    debug_assert_eq!(a.len(), n * n);
    let frob: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = EIGEN_TOL * (1.0 + frob);

    let mut sweeps = 0;
    let mut off = offdiag_norm(a, n);
    while off >= threshold {
        if sweeps == MAX_SWEEPS {
            return Err(LinalgError::NoConvergence {
                sweeps,
                residual: off,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;
                rotate(a, n, p, q, c, s);
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
        off = offdiag_norm(a, n);
    }

    values.clear();
    values.extend((0..n).map(|i| a[i * n + i]));
    sort_descending(values);
    Ok((off, sweeps))
}

/// `A ← Rᵀ A R` on rows/columns `p`, `q` excluding the 2×2 pivot block.
#[inline]
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize, c: f64, s: f64) {
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = a[r * n + p];
        let arq = a[r * n + q];
        let new_p = c * arp - s * arq;
        let new_q = s * arp + c * arq;
        a[r * n + p] = new_p;
        a[p * n + r] = new_p;
        a[r * n + q] = new_q;
        a[q * n + r] = new_q;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn approx_eq(a: &[f64], b: &[f64], tol: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() <= tol, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn complete_graph_and_identity() {
        let k3 = DenseMatrix::zeros(3, 3).complement_loopless().unwrap();
        let s = sym_eigen(&k3).unwrap();
        approx_eq(&s.values, &[2.0, -1.0, -1.0], 1e-12);

        let s = sym_eigen(&DenseMatrix::identity(5)).unwrap();
        assert_eq!(s.values, vec![1.0; 5]);
        assert_eq!(s.sweeps, 0);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            sym_eigen(&DenseMatrix::ones(2, 3)),
            Err(LinalgError::NonSquare { rows: 2, cols: 3 })
        ));
        let m = DenseMatrix::from_rows(&[[0.0, 1.0], [0.5, 0.0]]).unwrap();
        assert!(matches!(
            sym_eigen(&m),
            Err(LinalgError::NonSymmetric { .. })
        ));
    }

    #[test]
    fn trace_preserved() {
        let m = DenseMatrix::from_rows(&[[2.0, -1.0, 0.5], [-1.0, 3.0, 0.25], [0.5, 0.25, -4.0]])
            .unwrap();
        let s = sym_eigen(&m).unwrap();
        let sum: f64 = s.values.iter().sum();
        assert!((sum - m.trace()).abs() <= 1e-9 * (1.0 + m.trace().abs()));
        assert!(s.values.windows(2).all(|w| w[0] >= w[1]));
        assert!(s.offdiag_residual < EIGEN_TOL * (1.0 + m.frobenius()));
    }

    #[test]
    fn two_by_two_closed_form() {
        // eigenvalues of [[a, b], [b, d]]
        let (a, b, d) = (1.5, 2.0, -0.5);
        let m = DenseMatrix::from_rows(&[[a, b], [b, d]]).unwrap();
        let mid = (a + d) / 2.0;
        let rad = (((a - d) / 2.0).powi(2) + b * b).sqrt();
        approx_eq(
            &sym_eigen(&m).unwrap().values,
            &[mid + rad, mid - rad],
            1e-13,
        );
    }
}
