use serde::{Deserialize, Serialize};

use super::Graph;

/// Parameters `(n, k, λ, μ)` of a strongly regular graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    /// `k(k − λ − 1) = (n − k − 1)μ`.
    pub fn is_feasible(&self) -> bool {
        let (n, k, l, m) = (
            self.n as i64,
            self.k as i64,
            self.lambda as i64,
            self.mu as i64,
        );
        k * (k - l - 1) == (n - k - 1) * m
    }

    /// Conference parameters `(n, (n−1)/2, (n−5)/4, (n−1)/4)`; requires `n ≡ 1 (mod 4)`, `n ≥ 5`.
    pub fn conference(n: usize) -> Option<Self> {
        (n >= 5 && n % 4 == 1).then(|| Self {
            n,
            k: (n - 1) / 2,
            lambda: (n - 5) / 4,
            mu: (n - 1) / 4,
        })
    }
}

/// Exact strong-regularity test via common-neighbour counts.
///
/// Complete and edgeless graphs are reported as `None`, as are graphs of
/// order below 3.
pub fn srg_params(g: &Graph) -> Option<SrgParams> {
    let n = g.order();
    if n < 3 {
        return None;
    }
    let degrees = g.degrees();
    let k = degrees[0];
    if degrees.iter().any(|&d| d != k) || k == 0 || k == n - 1 {
        return None;
    }
    let rows = g.neighbour_sets();
    let common = |i: usize, j: usize| -> usize {
        rows[i]
            .iter()
            .zip(&rows[j])
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    };
    let mut lambda = None;
    let mut mu = None;
    for j in 1..n {
        for i in 0..j {
            let c = common(i, j);
            let slot = if g.has_edge(i, j) {
                &mut lambda
            } else {
                &mut mu
            };
            match *slot {
                None => *slot = Some(c),
                Some(prev) if prev != c => return None,
                _ => {}
            }
        }
    }
    Some(SrgParams {
        n,
        k,
        lambda: lambda?,
        mu: mu?,
    })
}

pub fn is_conference(g: &Graph) -> bool {
    match (srg_params(g), SrgParams::conference(g.order())) {
        (Some(found), Some(want)) => found == want,
        _ => false,
    }
}
