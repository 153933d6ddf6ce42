//! Experiment configuration: flag, then `PHILOTOPE_SEED`, then config
//! file, then the defaults of the published experiment.

use std::path::{Path, PathBuf};

use clap::Args;
use philotope::corpus::PoetId;
use philotope::embedding::{LearningRate, SkipGramConfig};
use philotope::stats::TrialConfig;
use philotope::tda::Metric;
use serde::{Deserialize, Serialize};

use crate::error::{read_text, CliError};

pub const SEED_ENV: &str = "PHILOTOPE_SEED";

/// Keys of the TOML config file; each mirrors a `--kebab-case` flag.
#[derive(Debug, Default, Clone, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct ConfigFile {
    pub corpus_root: Option<PathBuf>,
    pub poets: Option<Vec<String>>,
    pub sonnets_per_poet: Option<usize>,
    pub dim: Option<usize>,
    pub epochs: Option<usize>,
    pub window: Option<usize>,
    pub negatives: Option<usize>,
    pub lr_start: Option<f64>,
    pub lr_end: Option<f64>,
    pub metric: Option<Metric>,
    pub homology_dim: Option<usize>,
    pub trials: Option<usize>,
    #[serde(alias = "base-seed")]
    pub seed: Option<u64>,
    pub output_dir: Option<PathBuf>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = read_text(path)?;
        toml::from_str(&text).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
    }
}

#[derive(Debug, Default, Clone, Args)]
pub struct ExperimentArgs {
    /// Directory holding one subdirectory of `.txt` sonnets per poet.
    #[arg(long)]
    pub corpus_root: Option<PathBuf>,
    /// Comma-separated poet directory names.
    #[arg(long, value_delimiter = ',')]
    pub poets: Option<Vec<String>>,
    #[arg(long)]
    pub sonnets_per_poet: Option<usize>,
    #[arg(long)]
    pub dim: Option<usize>,
    #[arg(long)]
    pub epochs: Option<usize>,
    #[arg(long)]
    pub window: Option<usize>,
    #[arg(long)]
    pub negatives: Option<usize>,
    #[arg(long)]
    pub lr_start: Option<f64>,
    #[arg(long)]
    pub lr_end: Option<f64>,
    #[arg(long)]
    pub metric: Option<Metric>,
    #[arg(long)]
    pub homology_dim: Option<usize>,
    #[arg(long)]
    pub trials: Option<usize>,
    /// Base seed; trial `t` uses `seed + t`.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub output_dir: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentConfig {
    pub corpus_root: PathBuf,
    pub poets: Vec<PoetId>,
    pub sonnets_per_poet: usize,
    pub embedding: SkipGramConfig,
    pub metric: Metric,
    pub homology_dim: usize,
    pub trials: usize,
    pub base_seed: u64,
    pub output_dir: PathBuf,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        let t = TrialConfig::default();
        ExperimentConfig {
            corpus_root: PathBuf::from("corpus"),
            poets: t.poets,
            sonnets_per_poet: 115,
            embedding: t.embedding,
            metric: t.metric,
            homology_dim: t.homology_dim,
            trials: t.trials,
            base_seed: t.base_seed,
            output_dir: PathBuf::from("out"),
        }
    }
}

fn env_seed() -> Result<Option<u64>, CliError> {
    match std::env::var(SEED_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::Usage(format!("{SEED_ENV}={s:?} is not an unsigned integer"))),
        Err(_) => Ok(None),
    }
}

impl ExperimentConfig {
    pub fn resolve(args: &ExperimentArgs, file: &ConfigFile) -> Result<Self, CliError> {
        let d = ExperimentConfig::default();
        let seed = args.seed.or(env_seed()?).or(file.seed).unwrap_or(d.base_seed);
        let poets = args
            .poets
            .clone()
            .or_else(|| file.poets.clone())
            .map(|ps| ps.into_iter().map(PoetId::new).collect())
            .unwrap_or(d.poets);
        let embedding = SkipGramConfig {
            dim: args.dim.or(file.dim).unwrap_or(d.embedding.dim),
            epochs: args.epochs.or(file.epochs).unwrap_or(d.embedding.epochs),
            window: args.window.or(file.window).unwrap_or(d.embedding.window),
            negatives: args.negatives.or(file.negatives).unwrap_or(d.embedding.negatives),
            learning_rate: LearningRate {
                start: args.lr_start.or(file.lr_start).unwrap_or(d.embedding.learning_rate.start),
                end: args.lr_end.or(file.lr_end).unwrap_or(d.embedding.learning_rate.end),
            },
            seed,
        };
        let cfg = ExperimentConfig {
            corpus_root: args.corpus_root.clone().or_else(|| file.corpus_root.clone()).unwrap_or(d.corpus_root),
            poets,
            sonnets_per_poet: args.sonnets_per_poet.or(file.sonnets_per_poet).unwrap_or(d.sonnets_per_poet),
            embedding,
            metric: args.metric.or(file.metric).unwrap_or(d.metric),
            homology_dim: args.homology_dim.or(file.homology_dim).unwrap_or(d.homology_dim),
            trials: args.trials.or(file.trials).unwrap_or(d.trials),
            base_seed: seed,
            output_dir: args.output_dir.clone().or_else(|| file.output_dir.clone()).unwrap_or(d.output_dir),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), CliError> {
        let e = &self.embedding;
        for (name, v) in [
            ("sonnets-per-poet", self.sonnets_per_poet),
            ("dim", e.dim),
            ("epochs", e.epochs),
            ("window", e.window),
            ("trials", self.trials),
        ] {
            if v == 0 {
                return Err(CliError::Usage(format!("{name} must be positive")));
            }
        }
        if self.poets.len() < 2 {
            return Err(CliError::Usage("at least two poets are needed".into()));
        }
        for (i, p) in self.poets.iter().enumerate() {
            if self.poets[..i].contains(p) {
                return Err(CliError::Usage(format!("poet {p} listed twice")));
            }
        }
        let lr = e.learning_rate;
        if !(lr.start > 0.0 && lr.end > 0.0 && lr.start.is_finite() && lr.end.is_finite()) {
            return Err(CliError::Usage("learning rates must be positive".into()));
        }
        Ok(())
    }

    pub fn trial_config(&self) -> TrialConfig {
        TrialConfig {
            poets: self.poets.clone(),
            embedding: self.embedding,
            metric: self.metric,
            homology_dim: self.homology_dim,
            trials: self.trials,
            base_seed: self.base_seed,
        }
    }
}
