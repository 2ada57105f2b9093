//! Norms of nonnegative matrices and graphs paired with their complements.
//!
//! The crate computes trace, Ky Fan and operator norms, builds the extremal
//! objects for the sums `‖A‖ + ‖Ā‖` (conference and Paley graphs,
//! Hadamard-based block matrices, half-filled rank-one matrices), evaluates
//! the closed-form upper bounds on those sums and searches graphs for
//! empirical maxima.

pub mod bounds;
pub mod constructions;
pub mod graph;
pub mod linalg;
pub mod search;
