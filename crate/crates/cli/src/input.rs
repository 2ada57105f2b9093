use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use normgap_core::constructions::kyfan_extremal_matrix;
use normgap_core::graph::{paley_graph, EdgeList, Graph};
use normgap_core::linalg::DenseMatrix;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::args::InputArgs;

pub enum Loaded {
    Graph(Graph),
    Matrix(DenseMatrix),
}

impl Loaded {
    pub fn matrix(&self) -> DenseMatrix {
        match self {
            Loaded::Graph(g) => g.adjacency_matrix(),
            Loaded::Matrix(m) => m.clone(),
        }
    }

    /// `J − I − A` for graphs, `J − A` for matrices.
    pub fn complement(&self) -> DenseMatrix {
        match self {
            Loaded::Graph(g) => g.complement().adjacency_matrix(),
            Loaded::Matrix(m) => m.complement(),
        }
    }
}

pub struct Input {
    pub loaded: Loaded,
    pub echo: Value,
}

pub fn load(args: &InputArgs) -> Result<Input> {
    let given = [
        args.paley.is_some(),
        args.graph6.is_some(),
        args.edges.is_some(),
        args.matrix.is_some(),
        args.order.is_some(),
    ]
    .iter()
    .filter(|&&b| b)
    .count();
    if given != 1 {
        bail!("exactly one of --paley, --graph6, --edges, --matrix, --order is required");
    }
    if let Some(q) = args.paley {
        let g = paley_graph(q)?;
        return Ok(Input {
            loaded: Loaded::Graph(g),
            echo: json!({"source": "paley", "q": q}),
        });
    }
    if let Some(text) = &args.graph6 {
        let g = Graph::from_graph6(text)?;
        return Ok(Input {
            loaded: Loaded::Graph(g),
            echo: json!({"source": "graph6", "graph6": text}),
        });
    }
    if let Some(path) = &args.edges {
        let raw = read(path)?;
        let list: EdgeList = serde_json::from_str(&raw)
            .with_context(|| format!("{}: not a JSON edge list", path.display()))?;
        let g = Graph::from_edge_list(&list)?;
        return Ok(Input {
            loaded: Loaded::Graph(g),
            echo: json!({"source": "edges", "path": path.display().to_string()}),
        });
    }
    if let Some(path) = &args.matrix {
        let m = read_matrix(path)?;
        return Ok(Input {
            loaded: Loaded::Matrix(m),
            echo: json!({"source": "matrix", "path": path.display().to_string()}),
        });
    }
    let order = args.order.expect("counted above");
    let m = kyfan_extremal_matrix(order, args.p, args.q)?;
    Ok(Input {
        loaded: Loaded::Matrix(m),
        echo: json!({"source": "kyfan_extremal", "order": order, "p": args.p, "q": args.q}),
    })
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum MatrixJson {
    Dense(DenseMatrix),
    Rows(Vec<Vec<f64>>),
}

/// JSON `{"rows","cols","entries"}` (or a nested array), else CSV rows.
pub fn read_matrix(path: &Path) -> Result<DenseMatrix> {
    let raw = read(path)?;
    let trimmed = raw.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        let parsed: MatrixJson = serde_json::from_str(&raw)
            .with_context(|| format!("{}: not a matrix JSON document", path.display()))?;
        return Ok(match parsed {
            MatrixJson::Dense(m) => m,
            MatrixJson::Rows(rows) => DenseMatrix::from_rows(&rows)?,
        });
    }
    parse_csv(&raw).with_context(|| format!("{}: bad CSV matrix", path.display()))
}

pub fn parse_csv(raw: &str) -> Result<DenseMatrix> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(raw.as_bytes());
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record?;
        let row = record
            .iter()
            .map(|field| {
                field
                    .parse::<f64>()
                    .with_context(|| format!("row {}: {field:?} is not a number", i + 1))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Ok(DenseMatrix::from_rows(&rows)?)
}
