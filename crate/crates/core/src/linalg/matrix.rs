use std::fmt;

use serde::{Deserialize, Serialize};

use super::LinalgError;

/// Largest row or column count any produced matrix may have.
pub const MAX_DIM: usize = 4096;

/// Dense real matrix stored row-major.
#[derive(Clone, PartialEq, Serialize)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<f64>,
}

/// On-disk form `{"rows": m, "cols": n, "entries": [...]}`, validated on load.
#[derive(Deserialize)]
struct RawMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<f64>,
}

impl<'de> Deserialize<'de> for DenseMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let raw = RawMatrix::deserialize(de)?;
        DenseMatrix::new(raw.rows, raw.cols, raw.entries).map_err(serde::de::Error::custom)
    }
}

impl DenseMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<f64>) -> Result<Self, LinalgError> {
        if rows == 0 || cols == 0 {
            return Err(LinalgError::Empty);
        }
        if entries.len() != rows * cols {
            return Err(LinalgError::BadLength {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        if let Some(pos) = entries.iter().position(|x| !x.is_finite()) {
            return Err(LinalgError::NonFinite {
                row: pos / cols,
                col: pos % cols,
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from row slices; all rows must have the same length.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(LinalgError::BadLength {
                    expected: cols,
                    found: r.len(),
                });
            }
            entries.extend_from_slice(r);
        }
        Self::new(rows.len(), cols, entries)
    }

    /// Panics if `rows` or `cols` is zero; `f` must return finite values.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j);
                assert!(v.is_finite(), "non-finite entry at ({i}, {j})");
                entries.push(v);
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| 0.0)
    }

    /// The all-ones matrix `J_{m,n}`.
    pub fn ones(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| 1.0)
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub fn diagonal(values: &[f64]) -> Self {
        Self::from_fn(values.len(), values.len(), |i, j| {
            if i == j {
                values[i]
            } else {
                0.0
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Applies `f` entrywise.
    pub fn map(&self, mut f: impl FnMut(f64) -> f64) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| f(self.get(i, j)))
    }

    pub fn scale(&self, c: f64) -> Self {
        self.map(|x| c * x)
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinalgError> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.zip(other, |a, b| a - b)
    }

    fn zip(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Result<Self, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(Self::from_fn(self.rows, self.cols, |i, j| {
            f(self.get(i, j), other.get(i, j))
        }))
    }

    pub fn matmul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols)
                .map(|l| self.get(i, l) * other.get(l, j))
                .sum()
        }))
    }

    /// `J − A` for rectangular `A`.
    pub fn complement(&self) -> Self {
        self.map(|x| 1.0 - x)
    }

    /// `J − I − A` for square `A`.
    pub fn complement_loopless(&self) -> Result<Self, LinalgError> {
        self.require_square()?;
        Ok(Self::from_fn(self.rows, self.cols, |i, j| {
            if i == j {
                -self.get(i, j)
            } else {
                1.0 - self.get(i, j)
            }
        }))
    }

    /// `A + c·I` for square `A`.
    pub fn shift_diagonal(&self, c: f64) -> Result<Self, LinalgError> {
        self.require_square()?;
        Ok(Self::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) + if i == j { c } else { 0.0 }
        }))
    }

    pub fn frobenius_sq(&self) -> f64 {
        self.entries.iter().map(|x| x * x).sum()
    }

    pub fn frobenius(&self) -> f64 {
        self.frobenius_sq().sqrt()
    }

    pub fn trace(&self) -> f64 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// Largest `|A[i,j] − A[j,i]|`; infinite for non-square input.
    pub fn max_asymmetry(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in i + 1..self.cols {
                worst = worst.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        worst
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        self.is_square() && self.max_asymmetry() <= tol
    }

    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.rows).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<f64> {
        let mut sums = vec![0.0; self.cols];
        for i in 0..self.rows {
            for (s, x) in sums.iter_mut().zip(self.row(i)) {
                *s += x;
            }
        }
        sums
    }

    pub(crate) fn require_square(&self) -> Result<(), LinalgError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(LinalgError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DenseMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

/// Kronecker product: block `(i, k)` of the result is `A[i,k]·B`.
pub fn kronecker(a: &DenseMatrix, b: &DenseMatrix) -> Result<DenseMatrix, LinalgError> {
    let rows = a.rows.checked_mul(b.rows);
    let cols = a.cols.checked_mul(b.cols);
    match (rows, cols) {
        (Some(r), Some(c)) if r <= MAX_DIM && c <= MAX_DIM => {}
        _ => {
            return Err(LinalgError::SizeOverflow {
                rows: a.rows.saturating_mul(b.rows),
                cols: a.cols.saturating_mul(b.cols),
                cap: MAX_DIM,
            })
        }
    }
    Ok(DenseMatrix::from_fn(
        a.rows * b.rows,
        a.cols * b.cols,
        |r, c| a.get(r / b.rows, c / b.cols) * b.get(r % b.rows, c % b.cols),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            DenseMatrix::new(2, 2, vec![1.0; 3]),
            Err(LinalgError::BadLength { .. })
        ));
        assert!(matches!(
            DenseMatrix::new(1, 2, vec![1.0, f64::NAN]),
            Err(LinalgError::NonFinite { row: 0, col: 1 })
        ));
        assert!(matches!(
            DenseMatrix::new(0, 2, vec![]),
            Err(LinalgError::Empty)
        ));
    }

    #[test]
    fn kronecker_examples() {
        let h2 = DenseMatrix::from_rows(&[[1.0, 1.0], [1.0, -1.0]]).unwrap();
        let sign = DenseMatrix::from_rows(&[[1.0, -1.0], [-1.0, 1.0]]).unwrap();
        let k = kronecker(&sign, &h2).unwrap();
        let expected = DenseMatrix::from_rows(&[
            [1.0, 1.0, -1.0, -1.0],
            [1.0, -1.0, -1.0, 1.0],
            [-1.0, -1.0, 1.0, 1.0],
            [-1.0, 1.0, 1.0, -1.0],
        ])
        .unwrap();
        assert_eq!(k, expected);

        let i6 = kronecker(&DenseMatrix::identity(2), &DenseMatrix::identity(3)).unwrap();
        assert_eq!(i6, DenseMatrix::identity(6));

        let col = DenseMatrix::ones(2, 1);
        let row = DenseMatrix::ones(1, 2);
        assert_eq!(kronecker(&col, &row).unwrap(), DenseMatrix::ones(2, 2));
    }

    #[test]
    fn kronecker_size_cap() {
        let a = DenseMatrix::ones(100, 1);
        let b = DenseMatrix::ones(100, 1);
        assert!(matches!(
            kronecker(&a, &b),
            Err(LinalgError::SizeOverflow { rows: 10000, .. })
        ));
    }

    #[test]
    fn complements() {
        let a = DenseMatrix::from_rows(&[[0.0, 0.25], [1.0, 0.0]]).unwrap();
        let c = a.complement_loopless().unwrap();
        assert_eq!(c.entries(), &[0.0, 0.75, 0.0, 0.0]);
        assert_eq!(a.complement().entries(), &[1.0, 0.75, 0.0, 1.0]);
        assert_eq!(a.max_asymmetry(), 0.75);
        assert!(DenseMatrix::ones(2, 3).complement_loopless().is_err());
    }

    #[test]
    fn serde_validates() {
        let m: DenseMatrix =
            serde_json::from_str(r#"{"rows":1,"cols":2,"entries":[0.5,1]}"#).unwrap();
        assert_eq!(m.get(0, 1), 1.0);
        assert!(
            serde_json::from_str::<DenseMatrix>(r#"{"rows":2,"cols":2,"entries":[1]}"#).is_err()
        );
    }
}
