//! Browser bindings. Every export returns a JSON string; failures come back as
//! `{"error": "..."}` so the page never has to catch exceptions.

use normgap_core::bounds::{check_bound, equality_analysis, BoundKind, Tolerance};
use normgap_core::constructions::kyfan_extremal_matrix;
use normgap_core::graph::{is_conference, paley_graph, Graph};
use normgap_core::linalg::{svd, sym_eigen};
use normgap_core::search::{local_search_max, Objective, SearchConfig};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest order the page will search; annealing cost grows like n⁴ per step.
pub const MAX_DEMO_SEARCH_ORDER: usize = 16;

fn respond(result: Result<Value, String>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

fn adjacency_rows(g: &Graph) -> Vec<Vec<u8>> {
    (0..g.order())
        .map(|u| (0..g.order()).map(|v| g.has_edge(u, v) as u8).collect())
        .collect()
}

/// Spectrum, graph-energy bound verdict and equality flags for the Paley graph of order `q`.
#[wasm_bindgen]
pub fn paley_report(q: u32) -> String {
    respond((|| {
        if q > 400 {
            return Err("the demo draws adjacency matrices up to q = 400".into());
        }
        let g = paley_graph(q as u64).map_err(|e| e.to_string())?;
        let a = g.adjacency_matrix();
        let eigen = sym_eigen(&a).map_err(|e| e.to_string())?;
        let verdict = check_bound(BoundKind::Main, &g, None, Tolerance::default())
            .map_err(|e| e.to_string())?;
        let eq = equality_analysis(&a, Tolerance::default().equality).map_err(|e| e.to_string())?;
        Ok(json!({
            "q": q,
            "graph6": g.to_graph6(),
            "adjacency": adjacency_rows(&g),
            "eigenvalues": eigen.values,
            "verdict": verdict,
            "equality": eq,
        }))
    })())
}

/// Ky Fan extremal (0,1) matrix for `(k, p, q)` with its singular values and verdict.
#[wasm_bindgen]
pub fn kyfan_report(k: u32, p: u32, q: u32) -> String {
    respond((|| {
        if (2 * p * k.saturating_sub(1)).max(2 * q * k.saturating_sub(1)) > 256 {
            return Err("the demo caps matrices at 256 rows and columns".into());
        }
        let a =
            kyfan_extremal_matrix(k as usize, p as usize, q as usize).map_err(|e| e.to_string())?;
        let s = svd(&a).map_err(|e| e.to_string())?;
        let verdict = check_bound(BoundKind::Kyfan, &a, Some(k as usize), Tolerance::default())
            .map_err(|e| e.to_string())?;
        let rows: Vec<Vec<u8>> = (0..a.rows())
            .map(|i| a.row(i).iter().map(|&x| x as u8).collect())
            .collect();
        Ok(json!({
            "k": k,
            "p": p,
            "q": q,
            "matrix": rows,
            "singular_values": s.values,
            "verdict": verdict,
        }))
    })())
}

/// Seeded annealing for the largest `‖G‖₊ + ‖Ḡ‖₊` on `n` vertices.
#[wasm_bindgen]
pub fn search_graphs(n: u32, restarts: u32, seed: u32) -> String {
    respond((|| {
        let n = n as usize;
        if n > MAX_DEMO_SEARCH_ORDER {
            return Err(format!(
                "the demo searches up to n = {MAX_DEMO_SEARCH_ORDER}"
            ));
        }
        let cfg = SearchConfig {
            restarts: restarts.clamp(1, 20) as usize,
            seed: seed as u64,
            ..SearchConfig::default()
        };
        let r = local_search_max(n, Objective::TraceSum, &cfg).map_err(|e| e.to_string())?;
        let best = r.witnesses.first().ok_or("no witness")?;
        let bound = normgap_core::bounds::bound_value(BoundKind::Main, n, None, None)
            .map_err(|e| e.to_string())?;
        Ok(json!({
            "n": n,
            "best_value": r.best_value,
            "bound": bound,
            "witness": best.to_graph6(),
            "adjacency": adjacency_rows(best),
            "conference": is_conference(best),
            "witness_count": r.witness_count,
            "evaluations": r.evaluations,
        }))
    })())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn paley_nine() {
        let v = parse(paley_report(9));
        assert_eq!(v["verdict"]["equality"], true);
        assert_eq!(v["equality"]["overall"], true);
        assert_eq!(v["adjacency"].as_array().unwrap().len(), 9);
        assert!((v["eigenvalues"][0].as_f64().unwrap() - 4.0).abs() < 1e-10);
    }

    #[test]
    fn paley_errors_are_json() {
        assert!(parse(paley_report(7))["error"].is_string());
        assert!(parse(paley_report(401))["error"].is_string());
    }

    #[test]
    fn kyfan_three() {
        let v = parse(kyfan_report(3, 1, 1));
        assert_eq!(v["verdict"]["equality"], true);
        assert_eq!(v["matrix"].as_array().unwrap().len(), 4);
        assert!(parse(kyfan_report(4, 1, 1))["error"].is_string());
        assert!(parse(kyfan_report(65, 3, 3))["error"].is_string());
    }

    #[test]
    fn search_five() {
        let v = parse(search_graphs(5, 4, 1));
        assert!((v["best_value"].as_f64().unwrap() - v["bound"].as_f64().unwrap()).abs() < 1e-6);
        assert_eq!(v["conference"], true);
        assert!(Graph::from_graph6(v["witness"].as_str().unwrap()).is_ok());
        assert!(parse(search_graphs(17, 1, 0))["error"].is_string());
    }
}
