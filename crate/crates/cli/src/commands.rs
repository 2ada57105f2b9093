use std::fmt::Write as _;

use anyhow::{bail, Context, Result};
use normgap_core::bounds::{
    bound_value, check_bound, equality_analysis, weyl_complement_check, BoundKind, Tolerance,
    DEFAULT_EQUALITY_TOL,
};
use normgap_core::constructions::{
    hadamard, kyfan_extremal_matrix, opnorm_extremal_matrix, Orientation,
};
use normgap_core::graph::{paley_graph, srg_params, Graph};
use normgap_core::linalg::{svd, sym_eigen, DenseMatrix, SYMMETRY_TOL};
use normgap_core::search::{
    exhaustive_max, local_search_max, opnorm_converse_sweep, property_sweep, Objective,
    SearchConfig, SearchResult, SweepConfig, SweepKind, MAX_EXHAUSTIVE_ORDER,
    SLOW_EXHAUSTIVE_ORDER,
};
use serde_json::{json, Value};

use crate::args::{
    BoundsArgs, CheckKind, Command, Construct, Global, InputArgs, ObjectiveArgs, ObjectiveName,
    SearchMode, SweepArgs,
};
use crate::input::{load, Loaded};
use crate::report::{fmt_f64, Outcome, Table};

/// Diagnostics to print before running `cmd`.
pub fn warnings(cmd: &Command) -> Vec<String> {
    match cmd {
        Command::Search {
            mode: SearchMode::Exhaustive { n, .. },
        } if *n >= SLOW_EXHAUSTIVE_ORDER && *n <= MAX_EXHAUSTIVE_ORDER => vec![format!(
            "warning: exhaustive search at n = {n} visits 2^{} graphs and may run for hours",
            n * (n - 1) / 2 - 1
        )],
        _ => Vec::new(),
    }
}

pub fn execute(cmd: &Command, global: &Global) -> Result<Outcome> {
    match cmd {
        Command::Construct { what } => construct(what),
        Command::Spectrum(input) => spectrum(input),
        Command::Norms(input) => norms(input),
        Command::Check { kind, input } => check(*kind, input, global),
        Command::Search { mode } => search(mode, global),
        Command::Sweep(args) => sweep(args, global),
        Command::Bounds(args) => bounds(args),
    }
}

fn tolerance(global: &Global) -> Result<Tolerance> {
    // a negative tolerance demands a positive margin: slack ≥ |tol|
    if !global.tol.is_finite() {
        bail!("--tol must be finite");
    }
    Ok(Tolerance {
        holds: global.tol,
        equality: DEFAULT_EQUALITY_TOL.max(global.tol),
    })
}

fn matrix_table(m: &DenseMatrix) -> Table {
    let header: Vec<String> = (0..m.cols()).map(|j| format!("c{j}")).collect();
    let mut t = Table {
        header,
        rows: Vec::new(),
    };
    for i in 0..m.rows() {
        t.push(m.row(i).iter().map(|&x| fmt_f64(x)).collect());
    }
    t
}

fn matrix_text(m: &DenseMatrix) -> String {
    let mut s = String::new();
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|x| format!("{x:>3}")).collect();
        writeln!(s, "{}", row.join(" ")).unwrap();
    }
    s
}

fn construct(what: &Construct) -> Result<Outcome> {
    match what {
        Construct::Paley { q } => {
            let g = paley_graph(*q)?;
            let g6 = g.to_graph6();
            let srg = srg_params(&g);
            let text = format!(
                "Paley graph P{q}: {} vertices, {} edges, srg {:?}\n{g6}",
                g.order(),
                g.edge_count(),
                srg.map(|p| (p.n, p.k, p.lambda, p.mu)),
            );
            Ok(Outcome::new(
                "construct paley",
                json!({"q": q}),
                json!({"graph6": g6, "order": g.order(), "edges": g.edge_count(), "srg": srg}),
                text,
            )
            .with_table(matrix_table(&g.adjacency_matrix()))
            .with_graph6(vec![g6]))
        }
        Construct::Hadamard { order } => {
            let h = hadamard(*order)?;
            Ok(Outcome::new(
                "construct hadamard",
                json!({"order": order}),
                json!({"order": h.order(), "construction": h.construction(), "matrix": h.matrix()}),
                format!(
                    "Hadamard matrix of order {order} ({:?})\n{}",
                    h.construction(),
                    matrix_text(h.matrix())
                ),
            )
            .with_table(matrix_table(h.matrix())))
        }
        Construct::KyfanExtremal { order, p, q } => {
            let m = kyfan_extremal_matrix(*order, *p, *q)?;
            Ok(Outcome::new(
                "construct kyfan-extremal",
                json!({"order": order, "p": p, "q": q}),
                json!({"rows": m.rows(), "cols": m.cols(), "matrix": m}),
                format!(
                    "{}x{} Ky Fan extremal matrix\n{}",
                    m.rows(),
                    m.cols(),
                    matrix_text(&m)
                ),
            )
            .with_table(matrix_table(&m)))
        }
        Construct::OpnormExtremal { m, n, orientation } => {
            let o: Orientation = orientation.parse().map_err(anyhow::Error::msg)?;
            let a = opnorm_extremal_matrix(*m, *n, o)?;
            Ok(Outcome::new(
                "construct opnorm-extremal",
                json!({"m": m, "n": n, "orientation": o}),
                json!({"rows": a.rows(), "cols": a.cols(), "matrix": a}),
                format!(
                    "{m}x{n} operator-norm extremal matrix ({orientation})\n{}",
                    matrix_text(&a)
                ),
            )
            .with_table(matrix_table(&a)))
        }
    }
}

fn spectrum(args: &InputArgs) -> Result<Outcome> {
    let input = load(args)?;
    let a = input.loaded.matrix();
    let singular = svd(&a)?;
    let eigen = if a.is_square() && a.max_asymmetry() <= SYMMETRY_TOL {
        Some(sym_eigen(&a)?)
    } else {
        None
    };
    let mut table = Table::new(&["index", "eigenvalue", "singular_value"]);
    let mut text = format!("{}x{} input\n", a.rows(), a.cols());
    let len = singular
        .values
        .len()
        .max(eigen.as_ref().map_or(0, |e| e.values.len()));
    for i in 0..len {
        let ev = eigen.as_ref().and_then(|e| e.values.get(i).copied());
        let sv = singular.values.get(i).copied();
        table.push(vec![
            (i + 1).to_string(),
            ev.map(fmt_f64).unwrap_or_default(),
            sv.map(fmt_f64).unwrap_or_default(),
        ]);
        let show = |v: Option<f64>| {
            v.map(|x| format!("{x:>22.15}"))
                .unwrap_or(format!("{:>22}", "-"))
        };
        writeln!(text, "{:>4} {} {}", i + 1, show(ev), show(sv)).unwrap();
    }
    Ok(Outcome::new(
        "spectrum",
        input.echo,
        json!({
            "rows": a.rows(),
            "cols": a.cols(),
            "symmetric": eigen.is_some(),
            "eigenvalues": eigen.as_ref().map(|e| &e.values),
            "singular_values": singular.values,
        }),
        text,
    )
    .with_table(table))
}

fn norm_block(m: &DenseMatrix) -> Result<Value> {
    let s = svd(m)?.values;
    let mut ky = Vec::with_capacity(s.len());
    let mut acc = 0.0;
    for v in &s {
        acc += v;
        ky.push(acc);
    }
    Ok(json!({
        "trace_norm": acc,
        "operator_norm": s.first().copied().unwrap_or(0.0),
        "frobenius": m.frobenius(),
        "ky_fan": ky,
    }))
}

fn norms(args: &InputArgs) -> Result<Outcome> {
    let input = load(args)?;
    let a = input.loaded.matrix();
    let c = input.loaded.complement();
    let own = norm_block(&a)?;
    let comp = norm_block(&c)?;
    let mut table = Table::new(&["k", "ky_fan", "ky_fan_complement", "sum"]);
    let mut text = String::new();
    let ky = |v: &Value, i: usize| v["ky_fan"][i].as_f64().unwrap_or(0.0);
    let count = own["ky_fan"].as_array().map_or(0, |a| a.len());
    if let Some(k) = args.k {
        if k == 0 || k > count {
            bail!("--k must be in 1..={count}");
        }
    }
    for i in 0..count {
        if args.k.is_some_and(|k| k != i + 1) {
            continue;
        }
        let (x, y) = (ky(&own, i), ky(&comp, i));
        table.push(vec![
            (i + 1).to_string(),
            fmt_f64(x),
            fmt_f64(y),
            fmt_f64(x + y),
        ]);
        writeln!(
            text,
            "k={:<3} {x:>20.12} {y:>20.12} {:>20.12}",
            i + 1,
            x + y
        )
        .unwrap();
    }
    let f = |v: &Value, key: &str| v[key].as_f64().unwrap_or(0.0);
    writeln!(
        text,
        "trace {:.12} + {:.12}; operator {:.12} + {:.12}",
        f(&own, "trace_norm"),
        f(&comp, "trace_norm"),
        f(&own, "operator_norm"),
        f(&comp, "operator_norm")
    )
    .unwrap();
    Ok(Outcome::new(
        "norms",
        input.echo,
        json!({"rows": a.rows(), "cols": a.cols(), "input": own, "complement": comp}),
        text,
    )
    .with_table(table))
}

fn bound_kind(kind: CheckKind) -> Option<BoundKind> {
    Some(match kind {
        CheckKind::Main => BoundKind::Main,
        CheckKind::Shifted => BoundKind::Shifted,
        CheckKind::Kyfan => BoundKind::Kyfan,
        CheckKind::Opnorm => BoundKind::Opnorm,
        CheckKind::KoolenMoulton => BoundKind::KoolenMoulton,
        CheckKind::GutmanZhou => BoundKind::GutmanZhou,
        CheckKind::Weyl | CheckKind::Equality => return None,
    })
}

fn check(kind: CheckKind, args: &InputArgs, global: &Global) -> Result<Outcome> {
    let tol = tolerance(global)?;
    let input = load(args)?;
    let mut echo = input.echo.clone();
    echo["tol"] = json!(tol.holds);
    if let Some(bk) = bound_kind(kind) {
        let k = match bk {
            BoundKind::Kyfan => args.k.or(args.order),
            _ => None,
        };
        if bk == BoundKind::Kyfan {
            echo["k"] = json!(k);
        }
        let verdict = match &input.loaded {
            Loaded::Graph(g) => check_bound(bk, g, k, tol)?,
            Loaded::Matrix(m) => check_bound(bk, m, k, tol)?,
        };
        let mut table = Table::new(&["kind", "lhs", "rhs", "slack", "holds", "equality"]);
        table.push(vec![
            bk.name().to_string(),
            fmt_f64(verdict.lhs),
            fmt_f64(verdict.rhs),
            fmt_f64(verdict.slack),
            verdict.holds.to_string(),
            verdict.equality.to_string(),
        ]);
        let text = format!(
            "{}: lhs = {:.12}, rhs = {:.12}, slack = {:.3e} -> {}{}",
            bk.name(),
            verdict.lhs,
            verdict.rhs,
            verdict.slack,
            if verdict.holds { "holds" } else { "VIOLATED" },
            if verdict.equality { ", equality" } else { "" },
        );
        return Ok(Outcome::new(
            format!("check {}", bk.name()),
            echo,
            serde_json::to_value(&verdict)?,
            text,
        )
        .with_table(table)
        .violated(!verdict.holds));
    }
    let a = input.loaded.matrix();
    match kind {
        CheckKind::Weyl => {
            let r = weyl_complement_check(&a, tol.holds)?;
            let mut table = Table::new(&["k", "margin"]);
            let mut text = format!(
                "weyl: worst margin {:.3e} -> {}\n",
                r.worst_margin,
                if r.holds { "holds" } else { "VIOLATED" }
            );
            for m in &r.margins {
                table.push(vec![m.k.to_string(), fmt_f64(m.margin)]);
                writeln!(text, "k={:<3} {:.12}", m.k, m.margin).unwrap();
            }
            Ok(
                Outcome::new("check weyl", echo, serde_json::to_value(&r)?, text)
                    .with_table(table)
                    .violated(!r.holds),
            )
        }
        CheckKind::Equality => {
            let r = equality_analysis(&a, tol.equality)?;
            let value = serde_json::to_value(r)?;
            let mut table = Table::new(&["flag", "value"]);
            let mut text = String::new();
            if let Value::Object(map) = &value {
                for (flag, v) in map {
                    table.push(vec![flag.clone(), v.to_string()]);
                    writeln!(text, "{flag:<24} {v}").unwrap();
                }
            }
            Ok(Outcome::new("check equality", echo, value, text).with_table(table))
        }
        _ => unreachable!("bound kinds handled above"),
    }
}

fn objective(args: &ObjectiveArgs) -> Result<Objective> {
    Ok(match args.objective {
        ObjectiveName::TraceSum => {
            if args.k.is_some() {
                bail!("--k only applies to --objective kyfan-sum");
            }
            Objective::TraceSum
        }
        ObjectiveName::KyfanSum => Objective::KyfanSum {
            k: args.k.context("--objective kyfan-sum needs --k")?,
        },
    })
}

fn search_outcome(command: &str, inputs: Value, r: SearchResult) -> Result<Outcome> {
    let mut table = Table::new(&["rank", "graph6", "value"]);
    for (i, g) in r.witnesses.iter().enumerate() {
        table.push(vec![
            (i + 1).to_string(),
            g.to_graph6(),
            fmt_f64(r.best_value),
        ]);
    }
    let mut text = format!(
        "n = {}, {}: best {:.12} ({} witnesses{}, {} evaluations)\n",
        r.n,
        r.objective,
        r.best_value,
        r.witness_count,
        if r.truncated { ", truncated" } else { "" },
        r.evaluations
    );
    for g in r.witnesses.iter().take(10) {
        writeln!(text, "  {}", g.to_graph6()).unwrap();
    }
    if r.witnesses.len() > 10 {
        writeln!(text, "  ... {} more", r.witnesses.len() - 10).unwrap();
    }
    let graphs: Vec<String> = r.witnesses.iter().map(Graph::to_graph6).collect();
    Ok(
        Outcome::new(command, inputs, serde_json::to_value(&r)?, text)
            .with_table(table)
            .with_graph6(graphs),
    )
}

fn search(mode: &SearchMode, global: &Global) -> Result<Outcome> {
    match mode {
        SearchMode::Exhaustive { n, objective: o } => {
            let obj = objective(o)?;
            let r = exhaustive_max(*n, obj)?;
            search_outcome("search exhaustive", json!({"n": n, "objective": obj}), r)
        }
        SearchMode::Local {
            n,
            objective: o,
            restarts,
            max_steps,
            temperature,
            cooling,
        } => {
            let obj = objective(o)?;
            let cfg = SearchConfig {
                restarts: *restarts,
                max_steps: *max_steps,
                temperature_initial: *temperature,
                cooling: *cooling,
                seed: global.seed,
            };
            let r = local_search_max(*n, obj, &cfg)?;
            search_outcome(
                "search local",
                json!({"n": n, "objective": obj, "config": cfg}),
                r,
            )
        }
    }
}

fn sweep(args: &SweepArgs, global: &Global) -> Result<Outcome> {
    let tol = tolerance(global)?;
    if args.converse {
        let r = opnorm_converse_sweep(args.trials, global.seed, args.m, args.n, tol.holds)?;
        let mut table = Table::new(&["trials", "m", "n", "equality", "structured", "mismatches"]);
        table.push(vec![
            r.trials.to_string(),
            r.m.to_string(),
            r.n.to_string(),
            r.equality_count.to_string(),
            r.structured_count.to_string(),
            r.mismatch_count.to_string(),
        ]);
        let text = format!(
            "opnorm converse, {} random {}x{} (0,1) matrices: {} equality, {} structured, {} mismatches",
            r.trials, r.m, r.n, r.equality_count, r.structured_count, r.mismatch_count
        );
        let violated = r.mismatch_count > 0;
        return Ok(Outcome::new(
            "sweep converse",
            json!({"trials": args.trials, "seed": global.seed, "m": args.m, "n": args.n, "tol": tol.holds}),
            serde_json::to_value(&r)?,
            text,
        )
        .with_table(table)
        .violated(violated));
    }
    let kinds = match &args.kinds {
        None => SweepKind::ALL.to_vec(),
        Some(names) => names
            .iter()
            .map(|s| s.parse::<SweepKind>().map_err(anyhow::Error::msg))
            .collect::<Result<_>>()?,
    };
    let cfg = SweepConfig {
        trials: args.trials,
        seed: global.seed,
        n_min: args.n_min,
        n_max: args.n_max,
        kinds,
        ks: args.ks.clone(),
        tol,
    };
    let r = property_sweep(&cfg)?;
    let mut table = Table::new(&[
        "kind",
        "trials",
        "checks",
        "passes",
        "violations",
        "worst_slack",
    ]);
    let mut text = String::new();
    for s in &r.kinds {
        table.push(vec![
            s.kind.name().to_string(),
            s.trials.to_string(),
            s.checks.to_string(),
            s.passes.to_string(),
            s.violations.to_string(),
            fmt_f64(s.worst_slack),
        ]);
        writeln!(
            text,
            "{:<12} {:>6} checks {:>6} passes {:>4} violations  worst slack {:.6e}",
            s.kind.name(),
            s.checks,
            s.passes,
            s.violations,
            s.worst_slack
        )
        .unwrap();
    }
    let violated = r.total_violations > 0;
    Ok(Outcome::new(
        "sweep",
        serde_json::to_value(&cfg)?,
        serde_json::to_value(&r)?,
        text,
    )
    .with_table(table)
    .violated(violated))
}

fn bounds(args: &BoundsArgs) -> Result<Outcome> {
    if args.n_min == 0 || args.n_min > args.n_max {
        bail!("need 1 ≤ --n-min ≤ --n-max");
    }
    let mut header = vec![
        "n",
        "koolen_moulton",
        "main",
        "gutman_zhou",
        "shifted",
        "opnorm",
    ];
    if args.k.is_some() {
        header.push("kyfan");
    }
    let mut table = Table::new(&header);
    let mut rows = Vec::new();
    let mut text = header
        .iter()
        .map(|h| format!("{h:>16}"))
        .collect::<String>()
        + "\n";
    for n in args.n_min..=args.n_max {
        let m = args.m.unwrap_or(n);
        let mut values = vec![
            bound_value(BoundKind::KoolenMoulton, n, None, None)?,
            bound_value(BoundKind::Main, n, None, None)?,
            bound_value(BoundKind::GutmanZhou, n, None, None)?,
            bound_value(BoundKind::Shifted, n, None, None)?,
            bound_value(BoundKind::Opnorm, n, Some(m), None)?,
        ];
        if let Some(k) = args.k {
            values.push(bound_value(BoundKind::Kyfan, n, Some(m), Some(k))?);
        }
        let mut row = vec![n.to_string()];
        row.extend(values.iter().map(|&v| fmt_f64(v)));
        table.push(row);
        text += &format!("{n:>16}");
        for v in &values {
            text += &format!("{v:>16.6}");
        }
        text.push('\n');
        let mut obj = serde_json::Map::new();
        obj.insert("n".into(), json!(n));
        for (name, v) in header[1..].iter().zip(&values) {
            obj.insert(name.to_string(), json!(v));
        }
        rows.push(Value::Object(obj));
    }
    Ok(Outcome::new(
        "bounds",
        json!({"n_min": args.n_min, "n_max": args.n_max, "m": args.m, "k": args.k}),
        json!({"rows": rows}),
        text,
    )
    .with_table(table))
}
