//! Closed-form upper bounds on norm sums `‖A‖ + ‖Ā‖` and verdicts for
//! concrete graphs and matrices.
//!
//! Each [`BoundKind`] pairs a norm expression (the left-hand side) with a
//! closed-form value depending only on the dimensions (the right-hand side):
//!
//! | kind            | left-hand side                     | right-hand side        |
//! |-----------------|------------------------------------|------------------------|
//! | `koolen_moulton`| `‖A‖₊`                             | `(1 + √n)·n/2`         |
//! | `main`          | `‖A‖₊ + ‖J − I − A‖₊`              | `(n − 1)(1 + √n)`      |
//! | `gutman_zhou`   | `‖A‖₊ + ‖J − I − A‖₊`              | `√2·n + (n − 1)√(n−1)` |
//! | `shifted`       | `‖A + ½I‖₊ + ‖J − A − ½I‖₊`         | `n + (n − 1)√n`        |
//! | `kyfan`         | `‖A‖₊ₖ + ‖J − A‖₊ₖ`                 | `√(mn)(1 + √(k − 1))`  |
//! | `opnorm`        | `σ₁(A) + σ₁(J − A)`                | `√(2mn)`               |
//!
//! Hypotheses are validated strictly: an entry outside `[0, 1]`, a nonzero
//! diagonal, or asymmetry where symmetry is needed is a
//! [`BoundError::DomainViolation`], never clamped.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::linalg::{ky_fan_norm, svd, sym_eigen, DenseMatrix, LinalgError, SYMMETRY_TOL};

pub const DEFAULT_HOLDS_TOL: f64 = 1e-7;
pub const DEFAULT_EQUALITY_TOL: f64 = 1e-6;

/// Entries within this distance of 0 or 1 count as integral.
const INTEGRAL_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundError {
    #[error("bound {kind} needs parameter {param}")]
    MissingParam {
        kind: BoundKind,
        param: &'static str,
    },
    #[error("k = {k} outside {min}..={max}")]
    KOutOfRange { k: usize, min: usize, max: usize },
    #[error("domain violation: {0}")]
    DomainViolation(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    KoolenMoulton,
    Main,
    GutmanZhou,
    Shifted,
    Kyfan,
    Opnorm,
}

impl BoundKind {
    pub const ALL: [BoundKind; 6] = [
        BoundKind::KoolenMoulton,
        BoundKind::Main,
        BoundKind::GutmanZhou,
        BoundKind::Shifted,
        BoundKind::Kyfan,
        BoundKind::Opnorm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundKind::KoolenMoulton => "koolen_moulton",
            BoundKind::Main => "main",
            BoundKind::GutmanZhou => "gutman_zhou",
            BoundKind::Shifted => "shifted",
            BoundKind::Kyfan => "kyfan",
            BoundKind::Opnorm => "opnorm",
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.replace('-', "_");
        BoundKind::ALL
            .into_iter()
            .find(|k| k.name() == norm)
            .ok_or_else(|| format!("unknown bound kind {s:?}"))
    }
}

/// Closed-form right-hand side. `n` is the order (square kinds) or the column
/// count (`kyfan`, `opnorm`, where `m` is the row count).
pub fn bound_value(
    kind: BoundKind,
    n: usize,
    m: Option<usize>,
    k: Option<usize>,
) -> Result<f64, BoundError> {
    let nf = n as f64;
    let need_m = || m.ok_or(BoundError::MissingParam { kind, param: "m" });
    Ok(match kind {
        BoundKind::KoolenMoulton => (1.0 + nf.sqrt()) * nf / 2.0,
        BoundKind::Main => (nf - 1.0) * (1.0 + nf.sqrt()),
        BoundKind::GutmanZhou => 2f64.sqrt() * nf + (nf - 1.0) * (nf - 1.0).max(0.0).sqrt(),
        BoundKind::Shifted => nf + (nf - 1.0) * nf.sqrt(),
        BoundKind::Kyfan => {
            let m = need_m()?;
            let k = k.ok_or(BoundError::MissingParam { kind, param: "k" })?;
            let max = m.min(n);
            if k < 2 || k > max {
                return Err(BoundError::KOutOfRange { k, min: 2, max });
            }
            ((m * n) as f64).sqrt() * (1.0 + ((k - 1) as f64).sqrt())
        }
        BoundKind::Opnorm => (2.0 * (need_m()? * n) as f64).sqrt(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    /// `holds` iff `slack ≥ −holds`.
    pub holds: f64,
    /// `equality` iff the bound holds and `|slack| ≤ equality`.
    pub equality: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            holds: DEFAULT_HOLDS_TOL,
            equality: DEFAULT_EQUALITY_TOL,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundVerdict {
    pub kind: BoundKind,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub holds: bool,
    pub equality: bool,
    pub tol: f64,
    pub equality_tol: f64,
}

impl BoundVerdict {
    pub fn new(kind: BoundKind, lhs: f64, rhs: f64, tol: Tolerance) -> Self {
        let slack = rhs - lhs;
        let holds = slack >= -tol.holds;
        Self {
            kind,
            lhs,
            rhs,
            slack,
            holds,
            equality: holds && slack.abs() <= tol.equality,
            tol: tol.holds,
            equality_tol: tol.equality,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub enum BoundInput<'a> {
    Graph(&'a Graph),
    Matrix(&'a DenseMatrix),
}

impl<'a> From<&'a Graph> for BoundInput<'a> {
    fn from(g: &'a Graph) -> Self {
        BoundInput::Graph(g)
    }
}

impl<'a> From<&'a DenseMatrix> for BoundInput<'a> {
    fn from(m: &'a DenseMatrix) -> Self {
        BoundInput::Matrix(m)
    }
}

fn check_unit_interval(a: &DenseMatrix) -> Result<(), BoundError> {
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let x = a.get(i, j);
            if !(0.0..=1.0).contains(&x) {
                return Err(BoundError::DomainViolation(format!(
                    "entry ({i}, {j}) = {x} is outside [0, 1]"
                )));
            }
        }
    }
    Ok(())
}

fn check_zero_diagonal(a: &DenseMatrix) -> Result<(), BoundError> {
    if !a.is_square() {
        return Err(BoundError::DomainViolation(format!(
            "matrix is {}x{}, expected square",
            a.rows(),
            a.cols()
        )));
    }
    if let Some(i) = (0..a.rows()).find(|&i| a.get(i, i) != 0.0) {
        return Err(BoundError::DomainViolation(format!(
            "diagonal entry ({i}, {i}) = {} is nonzero",
            a.get(i, i)
        )));
    }
    Ok(())
}

fn check_symmetric(a: &DenseMatrix) -> Result<(), BoundError> {
    let asym = a.max_asymmetry();
    if asym > SYMMETRY_TOL {
        return Err(BoundError::DomainViolation(format!(
            "matrix is not symmetric (max asymmetry {asym:e})"
        )));
    }
    Ok(())
}

/// Square nonnegative, zero diagonal, entries at most 1.
pub fn validate_square_zero_diagonal(a: &DenseMatrix) -> Result<(), BoundError> {
    check_zero_diagonal(a)?;
    check_unit_interval(a)
}

/// Symmetric nonnegative, zero diagonal, entries at most 1.
pub fn validate_graph_like(a: &DenseMatrix) -> Result<(), BoundError> {
    validate_square_zero_diagonal(a)?;
    check_symmetric(a)
}

fn sym_trace_norm(a: &DenseMatrix) -> Result<f64, BoundError> {
    Ok(sym_eigen(a)?.values.iter().map(|x| x.abs()).sum())
}

fn svd_trace_norm(a: &DenseMatrix) -> Result<f64, BoundError> {
    Ok(svd(a)?.values.iter().sum())
}

/// Evaluates one bound on `input`. `k` is required for `kyfan` only.
pub fn check_bound<'a>(
    kind: BoundKind,
    input: impl Into<BoundInput<'a>>,
    k: Option<usize>,
    tol: Tolerance,
) -> Result<BoundVerdict, BoundError> {
    let owned;
    let a = match input.into() {
        BoundInput::Graph(g) => {
            owned = g.adjacency_matrix();
            &owned
        }
        BoundInput::Matrix(m) => m,
    };
    let (n, m) = (a.cols(), a.rows());
    let lhs = match kind {
        BoundKind::KoolenMoulton => {
            validate_graph_like(a)?;
            sym_trace_norm(a)?
        }
        BoundKind::Main | BoundKind::GutmanZhou => {
            validate_graph_like(a)?;
            sym_trace_norm(a)? + sym_trace_norm(&a.complement_loopless()?)?
        }
        BoundKind::Shifted => {
            validate_square_zero_diagonal(a)?;
            let b = a.shift_diagonal(0.5)?;
            let b_bar = a.complement().shift_diagonal(-0.5)?;
            svd_trace_norm(&b)? + svd_trace_norm(&b_bar)?
        }
        BoundKind::Kyfan => {
            check_unit_interval(a)?;
            let k = k.ok_or(BoundError::MissingParam { kind, param: "k" })?;
            let max = m.min(n);
            if k < 2 || k > max {
                return Err(BoundError::KOutOfRange { k, min: 2, max });
            }
            ky_fan_norm(a, k)? + ky_fan_norm(&a.complement(), k)?
        }
        BoundKind::Opnorm => {
            check_unit_interval(a)?;
            ky_fan_norm(a, 1)? + ky_fan_norm(&a.complement(), 1)?
        }
    };
    let rhs = bound_value(kind, n, Some(m), k)?;
    Ok(BoundVerdict::new(kind, lhs, rhs, tol))
}

/// The equality conditions of the shifted bound, plus the conference spectrum test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqualityReport {
    pub is_zero_one: bool,
    /// Every row sum equals `(n − 1)/2` (so `n` is odd).
    pub row_sums_ok: bool,
    pub col_sums_ok: bool,
    /// `σᵢ(A + ½I) = √n/2` for `i = 2..n`.
    pub flat_tail_ok: bool,
    /// Symmetric `A` whose eigenvalues are the conference spectrum.
    pub conference_spectrum_ok: bool,
    pub symmetric: bool,
    /// Conjunction of the four shifted-bound equality conditions.
    pub shifted_equality_ok: bool,
    pub overall: bool,
}

/// Conference-graph spectrum `(n−1)/2, ((√n−1)/2)^[(n−1)/2], (−(√n+1)/2)^[(n−1)/2]`, descending.
pub fn conference_spectrum(n: usize) -> Option<Vec<f64>> {
    if n.is_multiple_of(2) {
        return None;
    }
    let root = (n as f64).sqrt();
    let half = (n - 1) / 2;
    let mut values = vec![(n as f64 - 1.0) / 2.0];
    values.extend(std::iter::repeat_n((root - 1.0) / 2.0, half));
    values.extend(std::iter::repeat_n(-(root + 1.0) / 2.0, half));
    Some(values)
}

pub fn equality_analysis(a: &DenseMatrix, tol: f64) -> Result<EqualityReport, BoundError> {
    validate_square_zero_diagonal(a)?;
    let n = a.rows();

    let is_zero_one = a
        .entries()
        .iter()
        .all(|&x| x.abs() <= INTEGRAL_TOL || (x - 1.0).abs() <= INTEGRAL_TOL);
    let (row_sums_ok, col_sums_ok) = if is_zero_one && n % 2 == 1 {
        let target = ((n - 1) / 2) as i64;
        let bit = |i: usize, j: usize| a.get(i, j).round() as i64;
        let rows = (0..n).all(|i| (0..n).map(|j| bit(i, j)).sum::<i64>() == target);
        let cols = (0..n).all(|j| (0..n).map(|i| bit(i, j)).sum::<i64>() == target);
        (rows, cols)
    } else {
        (false, false)
    };

    let half_root = (n as f64).sqrt() / 2.0;
    let shifted = svd(&a.shift_diagonal(0.5)?)?;
    let flat_tail_ok = shifted.values[1..]
        .iter()
        .all(|s| (s - half_root).abs() <= tol);

    let symmetric = a.max_asymmetry() <= SYMMETRY_TOL;
    let conference_spectrum_ok = symmetric
        && match conference_spectrum(n) {
            Some(expected) => {
                let found = sym_eigen(a)?.values;
                found
                    .iter()
                    .zip(&expected)
                    .all(|(x, y)| (x - y).abs() <= tol)
            }
            None => false,
        };

    let shifted_equality_ok = is_zero_one && row_sums_ok && col_sums_ok && flat_tail_ok;
    Ok(EqualityReport {
        is_zero_one,
        row_sums_ok,
        col_sums_ok,
        flat_tail_ok,
        conference_spectrum_ok,
        symmetric,
        shifted_equality_ok,
        overall: shifted_equality_ok && conference_spectrum_ok,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeylMargin {
    pub k: usize,
    /// `μₖ(A) + μₙ₋ₖ₊₂(J − I − A) + 1`; the inequality asks for `≤ 0`.
    pub margin: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeylReport {
    pub holds: bool,
    pub worst_margin: f64,
    pub margins: Vec<WeylMargin>,
}

/// Checks `μₖ(A) + μₙ₋ₖ₊₂(Ā) ≤ μ₂(Jₙ − Iₙ) = −1` for `k = 2..n`, `Ā = J − I − A`.
pub fn weyl_complement_check(a: &DenseMatrix, tol: f64) -> Result<WeylReport, BoundError> {
    validate_graph_like(a)?;
    let n = a.rows();
    let mu = sym_eigen(a)?.values;
    let mu_bar = sym_eigen(&a.complement_loopless()?)?.values;
    // 1-based: μ_k = mu[k-1], μ̄_{n-k+2} = mu_bar[n-k+1]
    let margins: Vec<WeylMargin> = (2..=n)
        .map(|k| WeylMargin {
            k,
            margin: mu[k - 1] + mu_bar[n - k + 1] + 1.0,
        })
        .collect();
    let worst_margin = margins
        .iter()
        .map(|m| m.margin)
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(WeylReport {
        holds: margins.iter().all(|m| m.margin <= tol),
        worst_margin: if margins.is_empty() {
            0.0
        } else {
            worst_margin
        },
        margins,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::kyfan_extremal_matrix;
    use crate::graph::{cycle, paley_graph, petersen};

    #[test]
    fn closed_forms() {
        assert_eq!(bound_value(BoundKind::Main, 9, None, None).unwrap(), 32.0);
        assert_eq!(
            bound_value(BoundKind::KoolenMoulton, 4, None, None).unwrap(),
            6.0
        );
        let gz = bound_value(BoundKind::GutmanZhou, 9, None, None).unwrap();
        assert!((gz - (9.0 * 2f64.sqrt() + 8.0 * 8f64.sqrt())).abs() < 1e-12);
        assert!((gz - 35.3553).abs() < 1e-4);
        assert_eq!(
            bound_value(BoundKind::Shifted, 9, None, None).unwrap(),
            33.0
        );
        assert_eq!(
            bound_value(BoundKind::Opnorm, 2, Some(4), None).unwrap(),
            4.0
        );
        assert_eq!(
            bound_value(BoundKind::Kyfan, 8, Some(8), Some(5)).unwrap(),
            24.0
        );
    }

    #[test]
    fn closed_form_errors() {
        assert_eq!(
            bound_value(BoundKind::Kyfan, 8, Some(8), None),
            Err(BoundError::MissingParam {
                kind: BoundKind::Kyfan,
                param: "k"
            })
        );
        assert!(matches!(
            bound_value(BoundKind::Kyfan, 8, Some(3), Some(4)),
            Err(BoundError::KOutOfRange { k: 4, max: 3, .. })
        ));
        assert!(bound_value(BoundKind::Kyfan, 8, Some(3), Some(1)).is_err());
        assert!(bound_value(BoundKind::Opnorm, 8, None, None).is_err());
    }

    #[test]
    fn main_on_paley_and_complete() {
        let v = check_bound(
            BoundKind::Main,
            &paley_graph(9).unwrap(),
            None,
            Tolerance::default(),
        )
        .unwrap();
        assert!((v.lhs - 32.0).abs() < 1e-10);
        assert!(v.holds && v.equality);

        let v = check_bound(
            BoundKind::Main,
            &Graph::complete(9),
            None,
            Tolerance::default(),
        )
        .unwrap();
        assert!((v.lhs - 16.0).abs() < 1e-10);
        assert_eq!(v.rhs, 32.0);
        assert!(v.holds && !v.equality);
    }

    #[test]
    fn kyfan_on_construction() {
        let a = kyfan_extremal_matrix(5, 1, 1).unwrap();
        let v = check_bound(BoundKind::Kyfan, &a, Some(5), Tolerance::default()).unwrap();
        assert!((v.lhs - 24.0).abs() < 1e-10);
        assert_eq!(v.rhs, 24.0);
        assert!(v.equality);
    }

    #[test]
    fn domain_violations() {
        let tol = Tolerance::default();
        let neg = DenseMatrix::from_rows(&[[0.0, -0.1], [-0.1, 0.0]]).unwrap();
        assert!(matches!(
            check_bound(BoundKind::Main, &neg, None, tol),
            Err(BoundError::DomainViolation(_))
        ));
        let diag = DenseMatrix::from_rows(&[[0.5, 0.1], [0.1, 0.0]]).unwrap();
        assert!(matches!(
            check_bound(BoundKind::Shifted, &diag, None, tol),
            Err(BoundError::DomainViolation(_))
        ));
        let asym = DenseMatrix::from_rows(&[[0.0, 1.0], [0.0, 0.0]]).unwrap();
        assert!(check_bound(BoundKind::Main, &asym, None, tol).is_err());
        assert!(check_bound(BoundKind::Shifted, &asym, None, tol).is_ok());
        let big = DenseMatrix::from_rows(&[[1.5, 0.0]]).unwrap();
        assert!(check_bound(BoundKind::Opnorm, &big, None, tol).is_err());
        let ok = DenseMatrix::ones(3, 4);
        assert!(matches!(
            check_bound(BoundKind::Kyfan, &ok, Some(4), tol),
            Err(BoundError::KOutOfRange { .. })
        ));
        assert!(matches!(
            check_bound(BoundKind::Kyfan, &ok, None, tol),
            Err(BoundError::MissingParam { .. })
        ));
    }

    #[test]
    fn verdict_flags() {
        let tol = Tolerance::default();
        let v = BoundVerdict::new(BoundKind::Main, 10.0, 10.0 - 5e-7, tol);
        // lhs exceeds rhs by more than the holds tolerance
        assert!(!v.holds && !v.equality);
        let v = BoundVerdict::new(BoundKind::Main, 10.0, 10.0 - 5e-8, tol);
        assert!(v.holds && v.equality);
        let v = BoundVerdict::new(BoundKind::Main, 10.0, 10.5, tol);
        assert!(v.holds && !v.equality);
        assert_eq!(v.slack, 0.5);
    }

    #[test]
    fn equality_reports() {
        for q in [9, 13] {
            let a = paley_graph(q).unwrap().adjacency_matrix();
            let r = equality_analysis(&a, DEFAULT_EQUALITY_TOL).unwrap();
            assert!(r.overall, "P{q}: {r:?}");
        }
        let r = equality_analysis(&cycle(7).adjacency_matrix(), DEFAULT_EQUALITY_TOL).unwrap();
        assert!(r.is_zero_one && !r.row_sums_ok && !r.overall);
        let r = equality_analysis(&petersen().adjacency_matrix(), DEFAULT_EQUALITY_TOL).unwrap();
        assert!(!r.overall && !r.row_sums_ok);
    }

    #[test]
    fn weyl_examples() {
        let r = weyl_complement_check(&Graph::empty(6).adjacency_matrix(), 1e-9).unwrap();
        assert!(r.holds);
        assert_eq!(r.margins.len(), 5);
        assert!(r.margins.iter().all(|m| m.margin.abs() < 1e-12));

        let r = weyl_complement_check(&paley_graph(9).unwrap().adjacency_matrix(), 1e-9).unwrap();
        assert!(r.holds);
        assert!(r.margins.iter().all(|m| m.margin.abs() < 1e-10), "{r:?}");

        let r = weyl_complement_check(&DenseMatrix::zeros(1, 1), 1e-9).unwrap();
        assert!(r.holds && r.margins.is_empty());
    }

    #[test]
    fn conference_spectrum_list() {
        assert_eq!(
            conference_spectrum(9).unwrap(),
            vec![4.0, 1.0, 1.0, 1.0, 1.0, -2.0, -2.0, -2.0, -2.0]
        );
        assert!(conference_spectrum(8).is_none());
    }
}
