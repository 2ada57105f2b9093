//! Empirical maximisation of `‖G‖ + ‖Ḡ‖` and randomized bound sweeps.

mod exhaustive;
mod local;
mod objective;
pub mod rng;
mod sweep;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::BoundError;
use crate::graph::Graph;
use crate::linalg::LinalgError;

pub use exhaustive::{exhaustive_max, MAX_EXHAUSTIVE_ORDER, SLOW_EXHAUSTIVE_ORDER};
pub use local::{local_search_max, SearchConfig, MAX_LOCAL_ORDER};
pub use objective::{objective_value, Objective};
pub use sweep::{
    opnorm_converse_sweep, property_sweep, KindSummary, OpnormConverseReport, SweepConfig,
    SweepKind, SweepReport, Witness, WitnessData,
};

/// Graphs within this distance of the best value count as witnesses.
pub const WITNESS_TOL: f64 = 1e-9;
pub const WITNESS_CAP: usize = 1000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SearchError {
    #[error("order {n} exceeds the maximum {max}")]
    OrderTooLarge { n: usize, max: usize },
    #[error("order must be positive")]
    EmptyOrder,
    #[error("k = {k} outside 1..={n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("bad search configuration: {0}")]
    BadConfig(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Bound(#[from] BoundError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exhaustive,
    Local,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub objective: Objective,
    pub n: usize,
    pub best_value: f64,
    /// Graphs attaining `best_value` within [`WITNESS_TOL`], at most [`WITNESS_CAP`].
    pub witnesses: Vec<Graph>,
    /// Number of witnesses found before the cap was applied.
    pub witness_count: usize,
    pub truncated: bool,
    pub evaluations: u64,
    pub seed: Option<u64>,
    pub method: Method,
}

impl SearchResult {
    #[allow(clippy::too_many_arguments)]
    fn new(
        objective: Objective,
        n: usize,
        best_value: f64,
        witnesses: Vec<Graph>,
        evaluations: u64,
        seed: Option<u64>,
        method: Method,
        witness_count: usize,
    ) -> Self {
        Self {
            objective,
            n,
            best_value,
            truncated: witness_count > witnesses.len(),
            witnesses,
            witness_count,
            evaluations,
            seed,
            method,
        }
    }
}

/// Maps `f` over `0..count`, in parallel when enabled; output is in index order.
pub(crate) fn par_map<T, F>(count: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..count).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..count).map(f).collect()
    }
}
