//! Randomized sweeps of the bounds over seeded random graphs and matrices.
//!
//! Trial `t` of kind `K` draws all its randomness from
//! `SplitMix64::new(seed + (K.id << 32 | t))`, so reports are independent of
//! trial scheduling.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::par_map;
use super::rng::SplitMix64;
use super::SearchError;
use crate::bounds::{check_bound, weyl_complement_check, BoundKind, Tolerance};
use crate::constructions::is_opnorm_extremal_structure;
use crate::graph::Graph;
use crate::linalg::{ky_fan_norm, DenseMatrix};

pub const VIOLATION_CAP: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepKind {
    /// Random graphs against the main bound.
    Main,
    /// Random symmetric zero-diagonal matrices against the main bound.
    MainMatrix,
    /// Random symmetric zero-diagonal matrices against the shifted bound.
    Shifted,
    /// Random rectangular matrices against the Ky Fan bound for each `k`.
    Kyfan,
    /// Random rectangular matrices against the operator-norm bound.
    Opnorm,
    /// Random graphs against the complementary Weyl inequalities.
    Weyl,
}

impl SweepKind {
    pub const ALL: [SweepKind; 6] = [
        SweepKind::Main,
        SweepKind::MainMatrix,
        SweepKind::Shifted,
        SweepKind::Kyfan,
        SweepKind::Opnorm,
        SweepKind::Weyl,
    ];

    fn id(self) -> u64 {
        SweepKind::ALL.iter().position(|&k| k == self).unwrap() as u64
    }

    pub fn name(self) -> &'static str {
        match self {
            SweepKind::Main => "main",
            SweepKind::MainMatrix => "main_matrix",
            SweepKind::Shifted => "shifted",
            SweepKind::Kyfan => "kyfan",
            SweepKind::Opnorm => "opnorm",
            SweepKind::Weyl => "weyl",
        }
    }
}

impl FromStr for SweepKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.replace('-', "_");
        SweepKind::ALL
            .into_iter()
            .find(|k| k.name() == norm)
            .ok_or_else(|| format!("unknown sweep kind {s:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub trials: usize,
    pub seed: u64,
    /// Inclusive order range; for rectangular kinds `m` and `n` are drawn independently from it.
    pub n_min: usize,
    pub n_max: usize,
    pub kinds: Vec<SweepKind>,
    /// Ky Fan indices tried on each `kyfan` sample (those above `min(m, n)` are skipped).
    pub ks: Vec<usize>,
    pub tol: Tolerance,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            trials: 1000,
            seed: 0,
            n_min: 4,
            n_max: 12,
            kinds: SweepKind::ALL.to_vec(),
            ks: vec![2, 3],
            tol: Tolerance::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WitnessData {
    Graph { graph6: String },
    Matrix { matrix: DenseMatrix },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub trial: usize,
    pub k: Option<usize>,
    pub slack: f64,
    #[serde(flatten)]
    pub data: WitnessData,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KindSummary {
    pub kind: SweepKind,
    pub trials: usize,
    /// Individual checks (one per trial, or one per valid `k` for `kyfan`).
    pub checks: usize,
    pub passes: usize,
    pub violations: usize,
    /// Smallest `rhs − lhs` seen; for `weyl`, minus the largest margin.
    pub worst_slack: f64,
    pub worst_case: Option<Witness>,
    pub violating: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub kinds: Vec<KindSummary>,
    pub total_violations: usize,
}

fn random_graph(rng: &mut SplitMix64, n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for idx in 0..g.pair_count() {
        if rng.coin() {
            g.toggle_pair(idx);
        }
    }
    g
}

fn random_symmetric(rng: &mut SplitMix64, n: usize) -> DenseMatrix {
    let mut entries = vec![0.0; n * n];
    for j in 1..n {
        for i in 0..j {
            let x = rng.next_f64();
            entries[i * n + j] = x;
            entries[j * n + i] = x;
        }
    }
    DenseMatrix::new(n, n, entries).expect("positive order")
}

fn random_rect(rng: &mut SplitMix64, m: usize, n: usize) -> DenseMatrix {
    let entries = (0..m * n).map(|_| rng.next_f64()).collect();
    DenseMatrix::new(m, n, entries).expect("positive dims")
}

struct Check {
    k: Option<usize>,
    slack: f64,
    pass: bool,
}

fn run_trial(
    kind: SweepKind,
    cfg: &SweepConfig,
    trial: usize,
) -> Result<(Vec<Check>, WitnessData), SearchError> {
    let mut rng = SplitMix64::new(cfg.seed.wrapping_add(kind.id() << 32 | trial as u64));
    let order = |rng: &mut SplitMix64| rng.range_inclusive(cfg.n_min, cfg.n_max);
    let verdict_check = |v: crate::bounds::BoundVerdict, k| Check {
        k,
        slack: v.slack,
        pass: v.holds,
    };
    Ok(match kind {
        SweepKind::Main | SweepKind::Weyl => {
            let n = order(&mut rng);
            let g = random_graph(&mut rng, n);
            let check = if kind == SweepKind::Main {
                verdict_check(check_bound(BoundKind::Main, &g, None, cfg.tol)?, None)
            } else {
                let r = weyl_complement_check(&g.adjacency_matrix(), cfg.tol.holds)?;
                Check {
                    k: None,
                    slack: -r.worst_margin,
                    pass: r.holds,
                }
            };
            (
                vec![check],
                WitnessData::Graph {
                    graph6: g.to_graph6(),
                },
            )
        }
        SweepKind::MainMatrix | SweepKind::Shifted => {
            let n = order(&mut rng);
            let a = random_symmetric(&mut rng, n);
            let bound = if kind == SweepKind::Shifted {
                BoundKind::Shifted
            } else {
                BoundKind::Main
            };
            let check = verdict_check(check_bound(bound, &a, None, cfg.tol)?, None);
            (vec![check], WitnessData::Matrix { matrix: a })
        }
        SweepKind::Kyfan | SweepKind::Opnorm => {
            let m = order(&mut rng);
            let n = order(&mut rng);
            let a = random_rect(&mut rng, m, n);
            let checks = if kind == SweepKind::Opnorm {
                vec![verdict_check(
                    check_bound(BoundKind::Opnorm, &a, None, cfg.tol)?,
                    None,
                )]
            } else {
                let mut out = Vec::new();
                for &k in cfg.ks.iter().filter(|&&k| k >= 2 && k <= m.min(n)) {
                    out.push(verdict_check(
                        check_bound(BoundKind::Kyfan, &a, Some(k), cfg.tol)?,
                        Some(k),
                    ));
                }
                out
            };
            (checks, WitnessData::Matrix { matrix: a })
        }
    })
}

pub fn property_sweep(cfg: &SweepConfig) -> Result<SweepReport, SearchError> {
    if cfg.trials == 0 {
        return Err(SearchError::BadConfig("trials must be positive".into()));
    }
    if cfg.n_min == 0 || cfg.n_min > cfg.n_max {
        return Err(SearchError::BadConfig(format!(
            "bad order range {}..={}",
            cfg.n_min, cfg.n_max
        )));
    }
    let mut kinds = Vec::new();
    for &kind in &cfg.kinds {
        let outcomes = par_map(cfg.trials as u64, |t| run_trial(kind, cfg, t as usize));
        let mut summary = KindSummary {
            kind,
            trials: cfg.trials,
            checks: 0,
            passes: 0,
            violations: 0,
            worst_slack: f64::INFINITY,
            worst_case: None,
            violating: Vec::new(),
        };
        for (trial, outcome) in outcomes.into_iter().enumerate() {
            let (checks, data) = outcome?;
            for c in checks {
                summary.checks += 1;
                let witness = || Witness {
                    trial,
                    k: c.k,
                    slack: c.slack,
                    data: data.clone(),
                };
                if c.pass {
                    summary.passes += 1;
                } else {
                    summary.violations += 1;
                    if summary.violating.len() < VIOLATION_CAP {
                        summary.violating.push(witness());
                    }
                }
                if c.slack < summary.worst_slack {
                    summary.worst_slack = c.slack;
                    summary.worst_case = Some(witness());
                }
            }
        }
        kinds.push(summary);
    }
    let total_violations = kinds.iter().map(|k| k.violations).sum();
    Ok(SweepReport {
        config: cfg.clone(),
        kinds,
        total_violations,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OpnormConverseReport {
    pub trials: usize,
    pub m: usize,
    pub n: usize,
    /// Samples with `σ₁(A) + σ₁(J − A)` within tolerance of `√(2mn)`.
    pub equality_count: usize,
    /// Samples with the half-rows / half-columns structure.
    pub structured_count: usize,
    pub mismatch_count: usize,
    /// Samples where equality and structure disagree, at most [`VIOLATION_CAP`].
    pub mismatches: Vec<DenseMatrix>,
}

/// Samples random (0,1) `m×n` matrices and checks that operator-norm equality
/// occurs exactly on the half-filled rank-one structure.
///
/// Half of the trials start from a structured matrix (a random choice of `n/2`
/// columns or `m/2` rows, whichever the parity allows) with 0–2 random entries
/// flipped, so both equality cases and near misses are exercised; the other
/// half are uniform coin-flip matrices.
pub fn opnorm_converse_sweep(
    trials: usize,
    seed: u64,
    m: usize,
    n: usize,
    tol: f64,
) -> Result<OpnormConverseReport, SearchError> {
    if m == 0 || n == 0 {
        return Err(SearchError::BadConfig("m and n must be positive".into()));
    }
    let target = (2.0 * (m * n) as f64).sqrt();
    let samples = par_map(trials as u64, |t| -> Result<_, SearchError> {
        let mut rng = SplitMix64::new(seed.wrapping_add(t));
        let mut bits = vec![false; m * n];
        let structured_start = rng.coin() && (m.is_multiple_of(2) || n.is_multiple_of(2));
        if structured_start {
            let by_cols = n.is_multiple_of(2) && (m % 2 == 1 || rng.coin());
            let (count, pick) = if by_cols { (n, n / 2) } else { (m, m / 2) };
            // random subset of size `pick` via partial Fisher–Yates
            let mut idx: Vec<usize> = (0..count).collect();
            for i in 0..pick {
                let j = i + rng.below((count - i) as u64) as usize;
                idx.swap(i, j);
            }
            for &line in &idx[..pick] {
                if by_cols {
                    (0..m).for_each(|i| bits[i * n + line] = true);
                } else {
                    (0..n).for_each(|j| bits[line * n + j] = true);
                }
            }
            for _ in 0..rng.below(3) {
                let cell = rng.below((m * n) as u64) as usize;
                bits[cell] = !bits[cell];
            }
        } else {
            bits.iter_mut().for_each(|b| *b = rng.coin());
        }
        let a = DenseMatrix::new(m, n, bits.iter().map(|&b| b as u8 as f64).collect())
            .expect("positive dims");
        let sum = ky_fan_norm(&a, 1)? + ky_fan_norm(&a.complement(), 1)?;
        let equal = (sum - target).abs() <= tol;
        Ok((a, equal))
    });
    let mut report = OpnormConverseReport {
        trials,
        m,
        n,
        equality_count: 0,
        structured_count: 0,
        mismatch_count: 0,
        mismatches: Vec::new(),
    };
    for s in samples {
        let (a, equal) = s?;
        let structured = is_opnorm_extremal_structure(&a);
        report.equality_count += equal as usize;
        report.structured_count += structured as usize;
        if equal != structured {
            report.mismatch_count += 1;
            if report.mismatches.len() < VIOLATION_CAP {
                report.mismatches.push(a);
            }
        }
    }
    Ok(report)
}
