//! Labeled enumeration of all graphs on `n ≤ 8` vertices.
//!
//! Codes `0..2^P`, `P = n(n−1)/2`, are the pair bitsets in ascending order.
//! Each code below `2^(P−1)` is evaluated once and the value is shared with its
//! complement `code ⊕ (2^P − 1)`, which the objective treats identically.

use super::objective::{Evaluator, Objective};
use super::{par_map, Method, SearchError, SearchResult, WITNESS_CAP, WITNESS_TOL};
use crate::graph::{pair_count, Graph};

pub const MAX_EXHAUSTIVE_ORDER: usize = 8;
/// Orders from here on take minutes or more.
pub const SLOW_EXHAUSTIVE_ORDER: usize = 8;

const BLOCK: u64 = 1 << 14;

pub fn exhaustive_max(n: usize, objective: Objective) -> Result<SearchResult, SearchError> {
    if n > MAX_EXHAUSTIVE_ORDER {
        return Err(SearchError::OrderTooLarge {
            n,
            max: MAX_EXHAUSTIVE_ORDER,
        });
    }
    if n == 0 {
        return Err(SearchError::EmptyOrder);
    }
    objective.validate(n)?;
    let pairs = pair_count(n);
    if pairs == 0 {
        let g = Graph::empty(n);
        let value = Evaluator::new(n, objective).eval(&g)?;
        return Ok(SearchResult::new(
            objective,
            n,
            value,
            vec![g],
            1,
            None,
            Method::Exhaustive,
            1,
        ));
    }
    let mask = if pairs == 64 {
        u64::MAX
    } else {
        (1u64 << pairs) - 1
    };
    let half = 1u64 << (pairs - 1);
    let blocks = half.div_ceil(BLOCK);

    let results: Vec<Result<Vec<(f64, u64)>, SearchError>> = par_map(blocks, |b| {
        let mut eval = Evaluator::new(n, objective);
        let mut best = f64::NEG_INFINITY;
        let mut kept: Vec<(f64, u64)> = Vec::new();
        for code in b * BLOCK..((b + 1) * BLOCK).min(half) {
            let value = eval.eval(&Graph::from_code(n, code))?;
            if value > best {
                best = value;
                kept.retain(|&(v, _)| v >= best - WITNESS_TOL);
            }
            if value >= best - WITNESS_TOL {
                kept.push((value, code));
            }
        }
        Ok(kept)
    });

    let mut best = f64::NEG_INFINITY;
    let mut candidates: Vec<(f64, u64)> = Vec::new();
    for block in results {
        let block = block?;
        for &(v, _) in &block {
            best = best.max(v);
        }
        candidates.extend(block);
    }
    let mut codes: Vec<u64> = candidates
        .into_iter()
        .filter(|&(v, _)| v >= best - WITNESS_TOL)
        .flat_map(|(_, c)| [c, c ^ mask])
        .collect();
    codes.sort_unstable();
    let total = codes.len();
    codes.truncate(WITNESS_CAP);
    let witnesses = codes.into_iter().map(|c| Graph::from_code(n, c)).collect();
    Ok(SearchResult::new(
        objective,
        n,
        best,
        witnesses,
        half,
        None,
        Method::Exhaustive,
        total,
    ))
}
