//! Simple graphs, Paley graphs over finite fields, strong regularity.

pub mod field;
#[allow(clippy::module_inception)]
mod graph;
mod paley;
mod srg;

use thiserror::Error;

pub use graph::{cycle, pair_count, pair_from_index, pair_index, path, petersen, EdgeList, Graph};
pub use paley::{paley_graph, MAX_PALEY_ORDER};
pub use srg::{is_conference, srg_params, SrgParams};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{0} is not congruent to 1 mod 4")]
    NotOneModFour(u64),
    #[error("q = {q} exceeds the supported maximum {max}")]
    TooLarge { q: u64, max: u64 },
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid graph6: {0}")]
    Graph6(String),
    #[error("not an adjacency matrix: {0}")]
    NotAdjacency(String),
}
