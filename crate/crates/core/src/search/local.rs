//! Seeded simulated annealing over single-edge flips.
//!
//! Restart `r` draws from `SplitMix64::new(seed + r)`: first a uniform random
//! start graph (one coin per pair in bitset order), then per step a uniform
//! pair to flip and, for downhill moves, one uniform real compared against
//! `exp(Δ/T)`. Temperature cools geometrically after every step. The best
//! graph seen is then polished by steepest ascent over all flips, ties going
//! to the lowest pair index, until no flip improves it.

use serde::{Deserialize, Serialize};

use super::objective::{Evaluator, Objective};
use super::rng::SplitMix64;
use super::{par_map, Method, SearchError, SearchResult, WITNESS_CAP, WITNESS_TOL};
use crate::graph::Graph;

pub const MAX_LOCAL_ORDER: usize = 64;

/// Improvements at or below this are treated as ties during polishing.
const POLISH_EPS: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub restarts: usize,
    pub max_steps: usize,
    pub temperature_initial: f64,
    pub cooling: f64,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            restarts: 10,
            max_steps: 20_000,
            temperature_initial: 1.0,
            cooling: 0.995,
            seed: 0,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<(), SearchError> {
        let bad = |msg: &str| Err(SearchError::BadConfig(msg.to_string()));
        if self.restarts == 0 {
            return bad("restarts must be positive");
        }
        if self.max_steps == 0 {
            return bad("max_steps must be positive");
        }
        if !(self.temperature_initial.is_finite() && self.temperature_initial >= 0.0) {
            return bad("temperature_initial must be finite and nonnegative");
        }
        if !(self.cooling > 0.0 && self.cooling < 1.0) {
            return bad("cooling must lie in (0, 1)");
        }
        Ok(())
    }
}

struct RestartOutcome {
    best: f64,
    graph: Graph,
    evaluations: u64,
}

fn anneal(
    n: usize,
    objective: Objective,
    cfg: &SearchConfig,
    restart: u64,
) -> Result<RestartOutcome, SearchError> {
    let mut rng = SplitMix64::new(cfg.seed.wrapping_add(restart));
    let mut eval = Evaluator::new(n, objective);
    let pairs = crate::graph::pair_count(n);

    let mut current = Graph::empty(n);
    for idx in 0..pairs {
        if rng.coin() {
            current.toggle_pair(idx);
        }
    }
    let mut value = eval.eval(&current)?;
    let mut evaluations = 1u64;
    let mut best = value;
    let mut best_graph = current.clone();

    if pairs > 0 {
        let mut temperature = cfg.temperature_initial;
        // values of single flips away from the current graph; cleared on every move
        let mut memo: Vec<Option<f64>> = vec![None; pairs];
        for _ in 0..cfg.max_steps {
            let idx = rng.below(pairs as u64) as usize;
            current.toggle_pair(idx);
            let candidate = match memo[idx] {
                Some(v) => v,
                None => {
                    evaluations += 1;
                    let v = eval.eval(&current)?;
                    memo[idx] = Some(v);
                    v
                }
            };
            let delta = candidate - value;
            let accept =
                delta >= 0.0 || (temperature > 0.0 && rng.next_f64() < (delta / temperature).exp());
            if accept {
                memo.iter_mut().for_each(|m| *m = None);
                // flipping back restores the previous graph
                memo[idx] = Some(value);
                value = candidate;
                if value > best {
                    best = value;
                    best_graph = current.clone();
                }
            } else {
                current.toggle_pair(idx);
            }
            temperature *= cfg.cooling;
        }

        // steepest-ascent polish
        let mut graph = best_graph;
        loop {
            let mut step: Option<(usize, f64)> = None;
            for idx in 0..pairs {
                graph.toggle_pair(idx);
                let v = eval.eval(&graph)?;
                evaluations += 1;
                graph.toggle_pair(idx);
                if v > best + POLISH_EPS && step.is_none_or(|(_, sv)| v > sv + POLISH_EPS) {
                    step = Some((idx, v));
                }
            }
            match step {
                Some((idx, v)) => {
                    graph.toggle_pair(idx);
                    best = v;
                }
                None => break,
            }
        }
        best_graph = graph;
    }

    // every reported value is a fresh evaluation of the reported graph
    let best = Evaluator::new(n, objective).eval(&best_graph)?;
    Ok(RestartOutcome {
        best,
        graph: best_graph,
        evaluations: evaluations + 1,
    })
}

pub fn local_search_max(
    n: usize,
    objective: Objective,
    cfg: &SearchConfig,
) -> Result<SearchResult, SearchError> {
    if n > MAX_LOCAL_ORDER {
        return Err(SearchError::OrderTooLarge {
            n,
            max: MAX_LOCAL_ORDER,
        });
    }
    if n == 0 {
        return Err(SearchError::EmptyOrder);
    }
    cfg.validate()?;
    objective.validate(n)?;

    let outcomes = par_map(cfg.restarts as u64, |r| anneal(n, objective, cfg, r));
    let mut runs = Vec::with_capacity(outcomes.len());
    for o in outcomes {
        runs.push(o?);
    }
    let best = runs
        .iter()
        .map(|r| r.best)
        .fold(f64::NEG_INFINITY, f64::max);
    let evaluations = runs.iter().map(|r| r.evaluations).sum();
    let mut witnesses: Vec<Graph> = Vec::new();
    for run in runs {
        if run.best >= best - WITNESS_TOL && !witnesses.contains(&run.graph) {
            witnesses.push(run.graph);
        }
    }
    let total = witnesses.len();
    witnesses.truncate(WITNESS_CAP);
    Ok(SearchResult::new(
        objective,
        n,
        best,
        witnesses,
        evaluations,
        Some(cfg.seed),
        Method::Local,
        total,
    ))
}
