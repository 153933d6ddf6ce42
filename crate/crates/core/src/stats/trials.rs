use std::fmt::Write as _;

use log::{info, warn};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::StatsError;
use crate::corpus::{PoetId, ProcessedCorpus};
use crate::distance::bottleneck;
use crate::embedding::{embed_poet, SkipGram, SkipGramConfig, Vocabulary};
use crate::scalar::Scalar;
use crate::tda::{rips_diagrams, DistanceMatrix, Metric, PersistenceDiagram};

/// Bottleneck distances, one row per trial and one column per poet pair.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialResults<T> {
    conditions: Vec<String>,
    seeds: Vec<u64>,
    rows: Vec<Vec<T>>,
}

impl<T: Scalar> TrialResults<T> {
    pub fn new(conditions: Vec<String>, seeds: Vec<u64>, rows: Vec<Vec<T>>) -> Result<Self, StatsError> {
        if conditions.is_empty() {
            return Err(StatsError::TooFewConditions { needed: 1, got: 0 });
        }
        if seeds.len() != rows.len() {
            return Err(StatsError::Domain(format!(
                "{} seeds for {} rows",
                seeds.len(),
                rows.len()
            )));
        }
        let k = conditions.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != k {
                return Err(StatsError::Ragged {
                    row: i,
                    expected: k,
                    found: row.len(),
                });
            }
            if let Some(j) = row.iter().position(|x| !(x.is_finite() && *x >= T::zero())) {
                return Err(StatsError::InvalidValue {
                    row: i,
                    column: j,
                    value: row[j].to_f64_lossy(),
                });
            }
        }
        Ok(TrialResults { conditions, seeds, rows })
    }

    /// Rows without recorded seeds; seeds are numbered from 0.
    pub fn from_rows(conditions: Vec<String>, rows: Vec<Vec<T>>) -> Result<Self, StatsError> {
        let seeds = (0..rows.len() as u64).collect();
        Self::new(conditions, seeds, rows)
    }

    pub fn conditions(&self) -> &[String] {
        &self.conditions
    }

    pub fn seeds(&self) -> &[u64] {
        &self.seeds
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn trials(&self) -> usize {
        self.rows.len()
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    pub fn column_mean(&self, j: usize) -> T {
        self.rows.iter().map(|r| r[j]).sum::<T>() / T::of_usize(self.rows.len())
    }

    /// `trial,seed,d_<pair>...`, values in shortest round-trip form.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("trial,seed");
        for c in &self.conditions {
            out.push_str(",d_");
            out.push_str(c);
        }
        out.push('\n');
        for (t, (seed, row)) in self.seeds.iter().zip(&self.rows).enumerate() {
            write!(out, "{t},{seed}").unwrap();
            for x in row {
                write!(out, ",{x}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self, StatsError> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or(StatsError::Parse {
            line: 1,
            msg: "empty file".into(),
        })?;
        let cols: Vec<&str> = header.split(',').map(str::trim).collect();
        if cols.len() < 3 || cols[0] != "trial" || cols[1] != "seed" {
            return Err(StatsError::Parse {
                line: 1,
                msg: "expected header trial,seed,d_...".into(),
            });
        }
        let conditions = cols[2..]
            .iter()
            .map(|c| c.strip_prefix("d_").unwrap_or(c).to_string())
            .collect::<Vec<_>>();
        let mut seeds = Vec::new();
        let mut rows = Vec::new();
        for (i, line) in lines {
            let err = |msg: String| StatsError::Parse { line: i + 1, msg };
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if fields.len() != cols.len() {
                return Err(err(format!("{} fields, expected {}", fields.len(), cols.len())));
            }
            seeds.push(fields[1].parse::<u64>().map_err(|e| err(format!("seed: {e}")))?);
            let row = fields[2..]
                .iter()
                .map(|f| {
                    f.parse::<f64>()
                        .map(T::of)
                        .map_err(|e| err(format!("{f:?}: {e}")))
                })
                .collect::<Result<Vec<T>, _>>()?;
            rows.push(row);
        }
        Self::new(conditions, seeds, rows)
    }
}

/// Condition name for the pair of poets `a`, `b`.
pub fn pair_label(a: &PoetId, b: &PoetId) -> String {
    format!("{a}_{b}")
}

/// `<0.001` below that threshold, four decimals otherwise.
pub fn format_p<T: Scalar>(p: T) -> String {
    if p < T::of(0.001) {
        "<0.001".to_string()
    } else {
        format!("{:.4}", p.to_f64_lossy())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialConfig {
    pub poets: Vec<PoetId>,
    /// The seed field is replaced per trial.
    pub embedding: SkipGramConfig,
    pub metric: Metric,
    pub homology_dim: usize,
    pub trials: usize,
    pub base_seed: u64,
}

impl Default for TrialConfig {
    fn default() -> Self {
        TrialConfig {
            poets: ["quevedo", "lope", "gongora"].map(PoetId::from).to_vec(),
            embedding: SkipGramConfig::default(),
            metric: Metric::Cosine,
            homology_dim: 0,
            trials: 100,
            base_seed: 0,
        }
    }
}

impl TrialConfig {
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.poets.len();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
    }

    pub fn conditions(&self) -> Vec<String> {
        self.pairs()
            .into_iter()
            .map(|(i, j)| pair_label(&self.poets[i], &self.poets[j]))
            .collect()
    }
}

fn diagram_for<T: Scalar>(dm: &DistanceMatrix<T>, dim: usize) -> Result<PersistenceDiagram<T>, String> {
    let max_value = if dim == 0 { T::infinity() } else { dm.max_distance() };
    let mut diagrams = rips_diagrams(dm, dim, max_value).map_err(|e| e.to_string())?;
    Ok(diagrams.swap_remove(dim))
}

fn one_trial<T: Scalar>(
    corpus: &ProcessedCorpus,
    vocab: &Vocabulary,
    cfg: &TrialConfig,
    seed: u64,
) -> Result<Vec<T>, String> {
    let sg = SkipGram::new(SkipGramConfig { seed, ..cfg.embedding });
    let matrix = sg
        .train_with::<T>(corpus, vocab, |_, _| {})
        .map_err(|e| format!("embedding: {e}"))?;
    let diagrams = cfg
        .poets
        .iter()
        .map(|p| {
            let cloud = embed_poet(corpus, p, vocab, &matrix).map_err(|e| format!("{p}: {e}"))?;
            let dm = DistanceMatrix::from_cloud(&cloud, cfg.metric).map_err(|e| format!("{p}: {e}"))?;
            diagram_for(&dm, cfg.homology_dim).map_err(|e| format!("{p}: {e}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    cfg.pairs()
        .into_iter()
        .map(|(i, j)| bottleneck(&diagrams[i], &diagrams[j]).map_err(|e| format!("bottleneck: {e}")))
        .collect()
}

/// Runs `cfg.trials` independent trials in parallel, trial `t` seeded with
/// `base_seed + t`. Rows come back in trial order whatever the scheduling.
pub fn run_trials<T: Scalar>(corpus: &ProcessedCorpus, cfg: &TrialConfig) -> Result<TrialResults<T>, StatsError> {
    if cfg.poets.len() < 2 {
        return Err(StatsError::TooFewConditions {
            needed: 2,
            got: cfg.poets.len(),
        });
    }
    let vocab = Vocabulary::build(corpus).map_err(|e| StatsError::TrialsFailed {
        requested: cfg.trials,
        failed: cfg.trials,
        seed: cfg.base_seed,
        message: e.to_string(),
    })?;
    let seeds: Vec<u64> = (0..cfg.trials as u64)
        .map(|t| cfg.base_seed.wrapping_add(t))
        .collect();
    let outcomes: Vec<Result<Vec<T>, String>> = seeds
        .par_iter()
        .map(|&seed| {
            let r = one_trial(corpus, &vocab, cfg, seed);
            match &r {
                Ok(_) => info!("trial seed {seed} done"),
                Err(e) => warn!("trial seed {seed} failed: {e}"),
            }
            r
        })
        .collect();

    let failures: Vec<(u64, &String)> = seeds
        .iter()
        .zip(&outcomes)
        .filter_map(|(&s, r)| r.as_ref().err().map(|e| (s, e)))
        .collect();
    if let Some(&(seed, message)) = failures.first() {
        return Err(StatsError::TrialsFailed {
            requested: cfg.trials,
            failed: failures.len(),
            seed,
            message: message.clone(),
        });
    }
    let rows = outcomes.into_iter().map(Result::unwrap).collect();
    TrialResults::new(cfg.conditions(), seeds, rows)
}
