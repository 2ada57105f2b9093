use normgap_core::bounds::{bound_value, BoundKind, Tolerance};
use normgap_core::graph::{is_conference, srg_params, Graph, SrgParams};
use normgap_core::linalg::{svd, DenseMatrix};
use normgap_core::search::{
    exhaustive_max, local_search_max, objective_value, opnorm_converse_sweep, property_sweep,
    Method, Objective, SearchConfig, SearchError, SweepConfig, SweepKind, WITNESS_TOL,
};
use proptest::prelude::*;

/// Trace norm of the adjacency matrix through the SVD, a different algorithm
/// from the eigen solver used inside the search.
fn energy_via_svd(g: &Graph) -> f64 {
    let a = g.adjacency_matrix();
    let c = DenseMatrix::ones(g.order(), g.order())
        .sub(&DenseMatrix::identity(g.order()))
        .unwrap()
        .sub(&a)
        .unwrap();
    svd(&a).unwrap().values.iter().sum::<f64>() + svd(&c).unwrap().values.iter().sum::<f64>()
}

/// Plain brute force over every labelled graph on `n` vertices.
fn brute_force(n: usize) -> (f64, Vec<Graph>) {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut values = Vec::new();
    for code in 0u64..(1 << pairs.len()) {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| code >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        values.push((energy_via_svd(&g), g));
    }
    let best = values.iter().map(|v| v.0).fold(f64::NEG_INFINITY, f64::max);
    let witnesses = values
        .into_iter()
        .filter(|(v, _)| best - v <= 1e-8)
        .map(|(_, g)| g)
        .collect();
    (best, witnesses)
}

#[test]
fn exhaustive_matches_brute_force() {
    for n in 1..=5 {
        let r = exhaustive_max(n, Objective::TraceSum).unwrap();
        let (best, mut witnesses) = brute_force(n);
        assert!(
            (r.best_value - best).abs() < 1e-9,
            "n={n}: {} vs {best}",
            r.best_value
        );
        let mut got = r.witnesses.clone();
        got.sort_by_key(|g| g.code());
        witnesses.sort_by_key(|g| g.code());
        assert_eq!(got, witnesses, "n={n}");
        assert_eq!(r.method, Method::Exhaustive);
        assert_eq!(r.seed, None);
    }
}

#[test]
fn five_vertex_witnesses_are_pentagons() {
    let r = exhaustive_max(5, Objective::TraceSum).unwrap();
    let bound = bound_value(BoundKind::Main, 5, None, None).unwrap();
    assert!((r.best_value - 4.0 * (1.0 + 5f64.sqrt())).abs() < 1e-9);
    assert!((r.best_value - bound).abs() < 1e-9);
    assert_eq!(r.witnesses.len(), 12);
    assert_eq!(r.witness_count, 12);
    assert!(!r.truncated);
    let c5 = SrgParams {
        n: 5,
        k: 2,
        lambda: 0,
        mu: 1,
    };
    assert!(r.witnesses.iter().all(|g| srg_params(g) == Some(c5)));
}

#[test]
fn exhaustive_stays_below_main_bound() {
    for n in 1..=6 {
        let r = exhaustive_max(n, Objective::TraceSum).unwrap();
        let bound = bound_value(BoundKind::Main, n, None, None).unwrap();
        assert!(r.best_value <= bound + 1e-9, "n={n}");
        // one evaluation per complementary pair
        assert_eq!(r.evaluations, (1u64 << (n * (n - 1) / 2)).div_ceil(2));
        for g in &r.witnesses {
            let v = objective_value(g, Objective::TraceSum).unwrap();
            assert!((v - r.best_value).abs() <= WITNESS_TOL);
        }
    }
}

#[test]
fn exhaustive_small_values() {
    let r = exhaustive_max(3, Objective::TraceSum).unwrap();
    // K₂ ∪ K₁ and its complement P₃: 2 + 2√2
    assert!((r.best_value - (2.0 + 2.0 * 2f64.sqrt())).abs() < 1e-12);
    assert_eq!(r.witnesses.len(), 6);
    let r = exhaustive_max(2, Objective::TraceSum).unwrap();
    assert_eq!(r.best_value, 2.0);
}

#[test]
fn kyfan_objective_exhaustive() {
    // k = n recovers the trace objective
    let a = exhaustive_max(4, Objective::KyfanSum { k: 4 }).unwrap();
    let b = exhaustive_max(4, Objective::TraceSum).unwrap();
    assert!((a.best_value - b.best_value).abs() < 1e-12);
    let r = exhaustive_max(4, Objective::KyfanSum { k: 1 }).unwrap();
    // σ₁(A) + σ₁(Ā) ≥ n − 1 with equality when one side is empty
    assert!(r.best_value >= 3.0);
}

#[test]
fn search_errors() {
    assert!(matches!(
        exhaustive_max(9, Objective::TraceSum),
        Err(SearchError::OrderTooLarge { n: 9, .. })
    ));
    assert!(matches!(
        exhaustive_max(0, Objective::TraceSum),
        Err(SearchError::EmptyOrder)
    ));
    assert!(matches!(
        exhaustive_max(4, Objective::KyfanSum { k: 5 }),
        Err(SearchError::KOutOfRange { .. })
    ));
    let cfg = SearchConfig::default();
    assert!(local_search_max(65, Objective::TraceSum, &cfg).is_err());
    let bad = SearchConfig {
        cooling: 1.5,
        ..SearchConfig::default()
    };
    assert!(matches!(
        local_search_max(5, Objective::TraceSum, &bad),
        Err(SearchError::BadConfig(_))
    ));
}

#[test]
fn local_finds_five_vertex_maximum() {
    for seed in [0, 1, 7, 99] {
        let cfg = SearchConfig {
            seed,
            ..SearchConfig::default()
        };
        let r = local_search_max(5, Objective::TraceSum, &cfg).unwrap();
        assert!((r.best_value - 12.94427191).abs() < 1e-6, "seed {seed}");
        assert_eq!(r.method, Method::Local);
        assert_eq!(r.seed, Some(seed));
    }
}

#[test]
fn local_never_beats_exhaustive() {
    for n in 2..=6 {
        let exact = exhaustive_max(n, Objective::TraceSum).unwrap().best_value;
        let cfg = SearchConfig {
            restarts: 3,
            max_steps: 2000,
            seed: n as u64,
            ..SearchConfig::default()
        };
        let r = local_search_max(n, Objective::TraceSum, &cfg).unwrap();
        assert!(r.best_value <= exact + 1e-9, "n={n}");
        for g in &r.witnesses {
            let v = objective_value(g, Objective::TraceSum).unwrap();
            assert!((v - r.best_value).abs() <= WITNESS_TOL);
        }
    }
}

#[test]
fn local_is_deterministic() {
    let cfg = SearchConfig {
        restarts: 4,
        max_steps: 3000,
        seed: 5,
        ..SearchConfig::default()
    };
    let a = local_search_max(8, Objective::TraceSum, &cfg).unwrap();
    let b = local_search_max(8, Objective::TraceSum, &cfg).unwrap();
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
}

#[test]
fn local_nine_reaches_conference() {
    let cfg = SearchConfig {
        restarts: 50,
        seed: 42,
        ..SearchConfig::default()
    };
    let r = local_search_max(9, Objective::TraceSum, &cfg).unwrap();
    assert!(r.best_value >= 32.0 - 1e-6);
    assert!(is_conference(&r.witnesses[0]));
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            for (idx, b) in bits.into_iter().enumerate() {
                if b {
                    g.toggle_pair(idx);
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn objective_is_complement_symmetric(g in graph(20), k in 1usize..20) {
        let n = g.order();
        let k = k.min(n);
        for obj in [Objective::TraceSum, Objective::KyfanSum { k }] {
            let a = objective_value(&g, obj).unwrap();
            let b = objective_value(&g.complement(), obj).unwrap();
            prop_assert!((a - b).abs() <= 1e-12, "{} vs {}", a, b);
        }
    }

    #[test]
    fn objective_matches_svd_oracle(g in graph(12)) {
        let v = objective_value(&g, Objective::TraceSum).unwrap();
        prop_assert!((v - energy_via_svd(&g)).abs() <= 1e-8);
    }
}

#[test]
fn sweep_examples() {
    let cfg = SweepConfig {
        trials: 1000,
        seed: 3,
        kinds: vec![SweepKind::Main],
        ..SweepConfig::default()
    };
    let r = property_sweep(&cfg).unwrap();
    assert_eq!(r.total_violations, 0);
    assert_eq!(r.kinds[0].passes, 1000);

    let cfg = SweepConfig {
        trials: 1000,
        seed: 4,
        n_min: 3,
        n_max: 10,
        kinds: vec![SweepKind::Kyfan],
        ..SweepConfig::default()
    };
    let r = property_sweep(&cfg).unwrap();
    assert_eq!(r.total_violations, 0);
    assert!(r.kinds[0].checks >= 1000);

    let cfg = SweepConfig {
        trials: 500,
        seed: 5,
        kinds: vec![SweepKind::Weyl],
        ..SweepConfig::default()
    };
    let r = property_sweep(&cfg).unwrap();
    assert_eq!(r.total_violations, 0);
}

#[test]
fn sweep_reports_violations_with_tight_tolerance() {
    // demanding slack ≥ 100 fails every graph with n ≤ 12
    let tol = Tolerance {
        holds: -100.0,
        equality: 1e-6,
    };
    let cfg = SweepConfig {
        trials: 20,
        seed: 1,
        kinds: vec![SweepKind::Main],
        tol,
        ..SweepConfig::default()
    };
    let r = property_sweep(&cfg).unwrap();
    assert_eq!(r.total_violations, 20);
    assert_eq!(r.kinds[0].violating.len(), 20);
    assert!(r.kinds[0].worst_case.is_some());
}

#[test]
fn sweep_is_deterministic() {
    let cfg = SweepConfig {
        trials: 50,
        seed: 11,
        ..SweepConfig::default()
    };
    assert_eq!(property_sweep(&cfg).unwrap(), property_sweep(&cfg).unwrap());
}

#[test]
fn converse_sweep_4x4() {
    let r = opnorm_converse_sweep(1000, 9, 4, 4, 1e-9).unwrap();
    assert_eq!(r.mismatch_count, 0);
    assert!(r.equality_count > 0);
    assert_eq!(r.equality_count, r.structured_count);
}
