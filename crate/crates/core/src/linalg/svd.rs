//! One-sided (Hestenes) Jacobi singular values.
//!
//! The `min(m, n)` long vectors of the matrix (columns of a tall matrix, rows
//! of a wide one) are rotated pairwise until mutually orthogonal; their norms
//! are then the singular values.

use serde::Serialize;

use super::{sort_descending, DenseMatrix, LinalgError};

pub const MAX_SVD_SWEEPS: usize = 60;

/// Singular values sorted non-increasing. `residual` is the largest cosine
/// between two working vectors seen in the final sweep.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SingularSpectrum {
    pub values: Vec<f64>,
    pub residual: f64,
    pub sweeps: usize,
}

pub fn svd(m: &DenseMatrix) -> Result<SingularSpectrum, LinalgError> {
    let (count, len) = if m.rows() >= m.cols() {
        (m.cols(), m.rows())
    } else {
        (m.rows(), m.cols())
    };
    // vectors stored contiguously: vecs[v * len .. (v + 1) * len]
    let mut vecs = vec![0.0; count * len];
    if m.rows() >= m.cols() {
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                vecs[j * len + i] = m.get(i, j);
            }
        }
    } else {
        vecs.copy_from_slice(m.entries());
    }

    let tol = 4.0 * f64::EPSILON * (len as f64).sqrt().max(1.0);
    let mut sweeps = 0;
    let residual = loop {
        if sweeps == MAX_SVD_SWEEPS {
            let residual = max_cosine(&vecs, count, len);
            return Err(LinalgError::NoConvergence { sweeps, residual });
        }
        sweeps += 1;
        let mut rotated = false;
        let mut worst = 0.0f64;
        for i in 0..count {
            for j in i + 1..count {
                let (head, tail) = vecs.split_at_mut(j * len);
                let a = &mut head[i * len..(i + 1) * len];
                let b = &mut tail[..len];
                let (alpha, beta, gamma) = grams(a, b);
                let scale = (alpha * beta).sqrt();
                if scale == 0.0 || gamma == 0.0 {
                    continue;
                }
                let cosine = gamma.abs() / scale;
                worst = worst.max(cosine);
                if cosine <= tol {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + zeta.hypot(1.0));
                let c = 1.0 / t.hypot(1.0);
                let s = c * t;
                for (x, y) in a.iter_mut().zip(b.iter_mut()) {
                    let (xv, yv) = (*x, *y);
                    *x = c * xv - s * yv;
                    *y = s * xv + c * yv;
                }
            }
        }
        if !rotated {
            break worst;
        }
    };

    let mut values: Vec<f64> = vecs
        .chunks_exact(len)
        .map(|v| v.iter().map(|x| x * x).sum::<f64>().sqrt())
        .collect();
    sort_descending(&mut values);
    Ok(SingularSpectrum {
        values,
        residual,
        sweeps,
    })
}

#[inline]
fn grams(a: &[f64], b: &[f64]) -> (f64, f64, f64) {
    let mut alpha = 0.0;
    let mut beta = 0.0;
    let mut gamma = 0.0;
    for (x, y) in a.iter().zip(b) {
        alpha += x * x;
        beta += y * y;
        gamma += x * y;
    }
    (alpha, beta, gamma)
}

fn max_cosine(vecs: &[f64], count: usize, len: usize) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..count {
        for j in i + 1..count {
            let (alpha, beta, gamma) =
                grams(&vecs[i * len..(i + 1) * len], &vecs[j * len..(j + 1) * len]);
            let scale = (alpha * beta).sqrt();
            if scale > 0.0 {
                worst = worst.max(gamma.abs() / scale);
            }
        }
    }
    worst
}
