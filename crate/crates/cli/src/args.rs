use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "normgap",
    version,
    about = "Norm bounds for graphs and nonnegative matrices paired with their complements"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Global {
    /// Tolerance for `holds` verdicts (slack ≥ −tol); negative values demand a margin.
    #[arg(
        long,
        global = true,
        default_value_t = 1e-7,
        allow_negative_numbers = true
    )]
    pub tol: f64,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads: a positive integer or `auto`.
    #[arg(long, global = true, default_value = "auto")]
    pub threads: Threads,
    #[arg(long, global = true, value_enum, conflicts_with_all = ["json", "csv"])]
    pub format: Option<Format>,
    /// Shorthand for `--format json`.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Shorthand for `--format csv`.
    #[arg(long, global = true)]
    pub csv: bool,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

impl Global {
    pub fn format(&self) -> Format {
        match (self.format, self.json, self.csv) {
            (Some(f), _, _) => f,
            (None, true, _) => Format::Json,
            (None, _, true) => Format::Csv,
            _ => Format::Text,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Graph6,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Threads {
    Auto,
    Count(usize),
}

impl FromStr for Threads {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "auto" {
            return Ok(Threads::Auto);
        }
        match s.parse::<usize>() {
            Ok(n) if n > 0 => Ok(Threads::Count(n)),
            _ => Err(format!("expected a positive integer or `auto`, got {s:?}")),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a Paley graph, Hadamard matrix or extremal matrix.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Eigenvalues (symmetric input) and singular values.
    Spectrum(InputArgs),
    /// Trace, operator, Frobenius and Ky Fan norms of the input and its complement.
    Norms(InputArgs),
    /// Evaluate a bound, the equality analysis or the Weyl property.
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Maximise an objective over graphs of a given order.
    Search {
        #[command(subcommand)]
        mode: SearchMode,
    },
    /// Seeded random property sweeps.
    Sweep(SweepArgs),
    /// Table of closed-form bound values.
    Bounds(BoundsArgs),
}

#[derive(Subcommand, Debug)]
pub enum Construct {
    /// Paley graph of prime-power order q ≡ 1 (mod 4).
    Paley { q: u64 },
    /// Hadamard matrix (Sylvester or Paley-I orders).
    Hadamard { order: usize },
    /// Ky Fan extremal (0,1) matrix of size 2p(K−1) × 2q(K−1).
    KyfanExtremal {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 1)]
        p: usize,
        #[arg(long, default_value_t = 1)]
        q: usize,
    },
    /// Half-filled (0,1) matrix attaining the operator-norm bound.
    OpnormExtremal {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// `columns` or `rows`.
        #[arg(long, default_value = "columns")]
        orientation: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Main,
    Shifted,
    Kyfan,
    Opnorm,
    Weyl,
    Equality,
    KoolenMoulton,
    GutmanZhou,
}

/// Exactly one input source.
#[derive(Args, Debug, Default)]
pub struct InputArgs {
    /// Paley graph of order q.
    #[arg(long)]
    pub paley: Option<u64>,
    /// Graph in graph6 format.
    #[arg(long)]
    pub graph6: Option<String>,
    /// JSON edge list file: {"n": .., "edges": [[i, j], ..]}.
    #[arg(long)]
    pub edges: Option<PathBuf>,
    /// Matrix file: JSON {"rows","cols","entries"} or CSV rows.
    #[arg(long)]
    pub matrix: Option<PathBuf>,
    /// Ky Fan extremal construction with this K (uses --p, --q).
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub p: usize,
    #[arg(long, default_value_t = 1)]
    pub q: usize,
    /// Ky Fan index (defaults to K with --order).
    #[arg(long)]
    pub k: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum SearchMode {
    /// Enumerate every labelled graph (n ≤ 8).
    Exhaustive {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        objective: ObjectiveArgs,
    },
    /// Simulated annealing over single edge flips.
    Local {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        objective: ObjectiveArgs,
        #[arg(long, default_value_t = 10)]
        restarts: usize,
        #[arg(long, default_value_t = 20_000)]
        max_steps: usize,
        #[arg(long, default_value_t = 1.0)]
        temperature: f64,
        #[arg(long, default_value_t = 0.995)]
        cooling: f64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ObjectiveName {
    TraceSum,
    KyfanSum,
}

#[derive(Args, Debug)]
pub struct ObjectiveArgs {
    #[arg(long, value_enum, default_value = "trace-sum")]
    pub objective: ObjectiveName,
    /// Ky Fan index for `kyfan-sum`.
    #[arg(long)]
    pub k: Option<usize>,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 4)]
    pub n_min: usize,
    #[arg(long, default_value_t = 12)]
    pub n_max: usize,
    /// Comma-separated: main, main_matrix, shifted, kyfan, opnorm, weyl.
    #[arg(long, value_delimiter = ',')]
    pub kinds: Option<Vec<String>>,
    #[arg(long, value_delimiter = ',', default_value = "2,3")]
    pub ks: Vec<usize>,
    /// Run the operator-norm converse sweep on random m×n (0,1) matrices instead.
    #[arg(long)]
    pub converse: bool,
    #[arg(long, default_value_t = 4)]
    pub m: usize,
    #[arg(long, default_value_t = 4)]
    pub n: usize,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[arg(long, default_value_t = 1)]
    pub n_min: usize,
    #[arg(long, default_value_t = 20)]
    pub n_max: usize,
    /// Row count for the rectangular bounds (square when omitted).
    #[arg(long)]
    pub m: Option<usize>,
    /// Ky Fan index for the `kyfan` column.
    #[arg(long)]
    pub k: Option<usize>,
}
