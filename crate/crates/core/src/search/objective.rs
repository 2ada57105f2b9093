use std::fmt;

use serde::{Deserialize, Serialize};

use super::SearchError;
use crate::graph::Graph;
use crate::linalg::jacobi_in_place;

/// Search objective over a graph `G` and its complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum Objective {
    /// `‖G‖₊ + ‖Ḡ‖₊`.
    TraceSum,
    /// `‖G‖₊ₖ + ‖Ḡ‖₊ₖ`.
    KyfanSum { k: usize },
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Objective::TraceSum => f.write_str("trace_sum"),
            Objective::KyfanSum { k } => write!(f, "kyfan_sum(k={k})"),
        }
    }
}

impl Objective {
    pub(crate) fn validate(self, n: usize) -> Result<(), SearchError> {
        match self {
            Objective::KyfanSum { k } if k == 0 || k > n.max(1) => {
                Err(SearchError::KOutOfRange { k, n })
            }
            _ => Ok(()),
        }
    }
}

/// Reusable buffers for evaluating an objective on graphs of one order.
pub(crate) struct Evaluator {
    n: usize,
    objective: Objective,
    buf: Vec<f64>,
    values: Vec<f64>,
}

impl Evaluator {
    pub fn new(n: usize, objective: Objective) -> Self {
        Self {
            n,
            objective,
            buf: vec![0.0; n * n],
            values: Vec::with_capacity(n),
        }
    }

    pub fn eval(&mut self, g: &Graph) -> Result<f64, SearchError> {
        debug_assert_eq!(g.order(), self.n);
        Ok(self.side(g, false)? + self.side(g, true)?)
    }

    fn side(&mut self, g: &Graph, complement: bool) -> Result<f64, SearchError> {
        let n = self.n;
        self.buf.iter_mut().for_each(|x| *x = 0.0);
        for j in 1..n {
            for i in 0..j {
                if g.has_edge(i, j) != complement {
                    self.buf[i * n + j] = 1.0;
                    self.buf[j * n + i] = 1.0;
                }
            }
        }
        jacobi_in_place(&mut self.buf, n, &mut self.values)?;
        Ok(match self.objective {
            Objective::TraceSum => self.values.iter().map(|x| x.abs()).sum(),
            Objective::KyfanSum { k } => {
                let mut abs: Vec<f64> = self.values.iter().map(|x| x.abs()).collect();
                abs.sort_by(|a, b| b.total_cmp(a));
                abs[..k.min(n)].iter().sum()
            }
        })
    }
}

/// Objective value of one graph.
pub fn objective_value(g: &Graph, objective: Objective) -> Result<f64, SearchError> {
    objective.validate(g.order())?;
    Evaluator::new(g.order(), objective).eval(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, paley_graph};

    #[test]
    fn known_values() {
        let v = objective_value(&paley_graph(9).unwrap(), Objective::TraceSum).unwrap();
        assert!((v - 32.0).abs() < 1e-10);
        let v = objective_value(&cycle(5), Objective::TraceSum).unwrap();
        assert!((v - 4.0 * (1.0 + 5f64.sqrt())).abs() < 1e-10);
        let v = objective_value(&Graph::empty(1), Objective::TraceSum).unwrap();
        assert_eq!(v, 0.0);
        // K3: |2| + |-1| ; complement empty
        let v = objective_value(&Graph::complete(3), Objective::KyfanSum { k: 1 }).unwrap();
        assert!((v - 2.0).abs() < 1e-12);
    }

    #[test]
    fn kyfan_k_validated() {
        assert!(objective_value(&cycle(5), Objective::KyfanSum { k: 6 }).is_err());
        assert!(objective_value(&cycle(5), Objective::KyfanSum { k: 0 }).is_err());
    }
}
