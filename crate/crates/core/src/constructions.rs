//! Equality witnesses: Hadamard matrices, the Hadamard/Kronecker block
//! matrices attaining the Ky Fan bound, and half-filled rank-one matrices
//! attaining the operator-norm bound.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::field::{prime_power, FiniteField};
use crate::linalg::{kronecker, DenseMatrix, LinalgError, MAX_DIM};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConstructionError {
    #[error("no supported Hadamard construction of order {0}")]
    UnsupportedOrder(usize),
    #[error("{rows}x{cols} exceeds the {cap} per-side cap")]
    SizeOverflow {
        rows: usize,
        cols: usize,
        cap: usize,
    },
    #[error("m·n = {m}·{n} is odd")]
    OddProduct { m: usize, n: usize },
    #[error("orientation {orientation:?} needs an even {axis} count, got {count}")]
    BadOrientation {
        orientation: Orientation,
        axis: &'static str,
        count: usize,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("constructed matrix failed H·Hᵀ = {0}·I")]
    VerificationFailed(usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HadamardConstruction {
    Trivial,
    Sylvester,
    /// Jacobsthal core over `GF(q)`, `q ≡ 3 (mod 4)`.
    PaleyI {
        q: u64,
    },
}

/// A ±1 matrix with `H·Hᵀ = order·I`, verified on construction.
#[derive(Clone, Debug, PartialEq)]
pub struct HadamardMatrix {
    matrix: DenseMatrix,
    construction: HadamardConstruction,
}

impl HadamardMatrix {
    pub fn order(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> DenseMatrix {
        self.matrix
    }

    pub fn construction(&self) -> HadamardConstruction {
        self.construction
    }
}

/// Which construction, if any, supplies a Hadamard matrix of this order.
pub fn hadamard_construction(order: usize) -> Option<HadamardConstruction> {
    if order == 1 {
        return Some(HadamardConstruction::Trivial);
    }
    if order.is_power_of_two() {
        return Some(HadamardConstruction::Sylvester);
    }
    let q = order.checked_sub(1)? as u64;
    match prime_power(q) {
        Some((p, _)) if p != 2 && q % 4 == 3 => Some(HadamardConstruction::PaleyI { q }),
        _ => None,
    }
}

pub fn hadamard(order: usize) -> Result<HadamardMatrix, ConstructionError> {
    if order > MAX_DIM {
        return Err(ConstructionError::SizeOverflow {
            rows: order,
            cols: order,
            cap: MAX_DIM,
        });
    }
    let construction =
        hadamard_construction(order).ok_or(ConstructionError::UnsupportedOrder(order))?;
    let signs = match construction {
        HadamardConstruction::Trivial => vec![vec![1i8]],
        HadamardConstruction::Sylvester => sylvester(order),
        HadamardConstruction::PaleyI { q } => paley_one(q)?,
    };
    if !is_hadamard(&signs) {
        return Err(ConstructionError::VerificationFailed(order));
    }
    let matrix = DenseMatrix::from_fn(order, order, |i, j| signs[i][j] as f64);
    Ok(HadamardMatrix {
        matrix,
        construction,
    })
}

fn sylvester(order: usize) -> Vec<Vec<i8>> {
    let mut h = vec![vec![1i8]];
    while h.len() < order {
        let n = h.len();
        let mut next = vec![vec![0i8; 2 * n]; 2 * n];
        for i in 0..n {
            for j in 0..n {
                let x = h[i][j];
                next[i][j] = x;
                next[i][j + n] = x;
                next[i + n][j] = x;
                next[i + n][j + n] = -x;
            }
        }
        h = next;
    }
    h
}

/// `[[1, jᵀ], [−j, Q + I]]` with `Q[u,v] = χ(v − u)`.
fn paley_one(q: u64) -> Result<Vec<Vec<i8>>, ConstructionError> {
    let field =
        FiniteField::new(q).map_err(|_| ConstructionError::UnsupportedOrder(q as usize + 1))?;
    let chi = field.quadratic_character();
    let n = q as usize + 1;
    let mut h = vec![vec![1i8; n]; n];
    for u in 0..q as usize {
        h[u + 1][0] = -1;
        for v in 0..q as usize {
            let diff = field.sub(v as u64, u as u64) as usize;
            h[u + 1][v + 1] = if u == v { 1 } else { chi[diff] };
        }
    }
    Ok(h)
}

/// Exact `H·Hᵀ = nI` on sign rows packed as bitsets: `⟨r, s⟩ = n − 2·|r ⊕ s|`.
fn is_hadamard(signs: &[Vec<i8>]) -> bool {
    let n = signs.len();
    if signs
        .iter()
        .any(|r| r.len() != n || r.iter().any(|&x| x != 1 && x != -1))
    {
        return false;
    }
    let words = n.div_ceil(64);
    let packed: Vec<Vec<u64>> = signs
        .iter()
        .map(|r| {
            let mut w = vec![0u64; words];
            for (j, &x) in r.iter().enumerate() {
                if x < 0 {
                    w[j / 64] |= 1 << (j % 64);
                }
            }
            w
        })
        .collect();
    for i in 0..n {
        for j in i + 1..n {
            let diff: u32 = packed[i]
                .iter()
                .zip(&packed[j])
                .map(|(a, b)| (a ^ b).count_ones())
                .sum();
            if 2 * diff as usize != n {
                return false;
            }
        }
    }
    true
}

/// `½((H′ ⊗ J_{p,q}) + J_{m,n})` with `H′ = [[1,−1],[−1,1]] ⊗ H` and `H`
/// Hadamard of order `k − 1`; the result is `2p(k−1) × 2q(k−1)`.
pub fn kyfan_extremal_matrix(
    k: usize,
    p: usize,
    q: usize,
) -> Result<DenseMatrix, ConstructionError> {
    if k < 2 {
        return Err(ConstructionError::InvalidParameter(format!(
            "k = {k}, need k >= 2"
        )));
    }
    if p == 0 || q == 0 {
        return Err(ConstructionError::InvalidParameter(format!(
            "p = {p}, q = {q}, both must be positive"
        )));
    }
    let rows = 2usize.saturating_mul(p).saturating_mul(k - 1);
    let cols = 2usize.saturating_mul(q).saturating_mul(k - 1);
    if rows > MAX_DIM || cols > MAX_DIM {
        return Err(ConstructionError::SizeOverflow {
            rows,
            cols,
            cap: MAX_DIM,
        });
    }
    let h = hadamard(k - 1)?;
    let sign = DenseMatrix::from_rows(&[[1.0, -1.0], [-1.0, 1.0]])?;
    let h_prime = kronecker(&sign, h.matrix())?;
    let blocks = kronecker(&h_prime, &DenseMatrix::ones(p, q))?;
    Ok(blocks.map(|x| 0.5 * (x + 1.0)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    Rows,
    Columns,
}

impl std::str::FromStr for Orientation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rows" => Ok(Self::Rows),
            "columns" | "cols" => Ok(Self::Columns),
            other => Err(format!("unknown orientation {other:?} (rows|columns)")),
        }
    }
}

/// (0,1) matrix whose `mn/2` ones fill the first `n/2` columns or the first `m/2` rows.
pub fn opnorm_extremal_matrix(
    m: usize,
    n: usize,
    orientation: Orientation,
) -> Result<DenseMatrix, ConstructionError> {
    if m == 0 || n == 0 {
        return Err(ConstructionError::InvalidParameter(
            "m and n must be positive".into(),
        ));
    }
    if m > MAX_DIM || n > MAX_DIM {
        return Err(ConstructionError::SizeOverflow {
            rows: m,
            cols: n,
            cap: MAX_DIM,
        });
    }
    if (m * n) % 2 == 1 {
        return Err(ConstructionError::OddProduct { m, n });
    }
    let (axis, count) = match orientation {
        Orientation::Columns => ("column", n),
        Orientation::Rows => ("row", m),
    };
    if count % 2 == 1 {
        return Err(ConstructionError::BadOrientation {
            orientation,
            axis,
            count,
        });
    }
    Ok(DenseMatrix::from_fn(m, n, |i, j| {
        let inside = match orientation {
            Orientation::Columns => j < n / 2,
            Orientation::Rows => i < m / 2,
        };
        if inside {
            1.0
        } else {
            0.0
        }
    }))
}

/// A (0,1) matrix with exactly `mn/2` ones filling `n/2` whole columns or `m/2` whole rows.
pub fn is_opnorm_extremal_structure(a: &DenseMatrix) -> bool {
    let (m, n) = (a.rows(), a.cols());
    if (m * n) % 2 == 1 || a.entries().iter().any(|&x| x != 0.0 && x != 1.0) {
        return false;
    }
    if a.entries().iter().filter(|&&x| x == 1.0).count() != m * n / 2 {
        return false;
    }
    let cols_constant = (0..n).all(|j| (1..m).all(|i| a.get(i, j) == a.get(0, j)));
    let rows_constant = (0..m).all(|i| a.row(i).iter().all(|&x| x == a.get(i, 0)));
    cols_constant || rows_constant
}
