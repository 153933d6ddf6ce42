//! Repeated trials of the comparison and their within-subjects analysis.
//!
//! Each trial (subject) trains one embedding and measures every poet pair
//! (condition) on it. [`rm_anova`] tests whether the pair means differ,
//! with Greenhouse-Geisser and Huynh-Feldt corrections from
//! [`sphericity_epsilon`]; [`pairwise_bonferroni`] locates the difference.

mod anova;
mod boxplot;
mod pairwise;
mod plot;
mod special;
mod trials;

use thiserror::Error;

pub use anova::{rm_anova, sphericity_epsilon, AnovaReport, AnovaTest, Correction, Sphericity};
pub use boxplot::{boxplot_summary, quantile_type7, BoxPlotSummary};
pub use pairwise::{pairwise_bonferroni, PairwiseComparison, FAMILY_ALPHA};
pub use plot::boxplot_svg;
pub use special::{
    f_upper_tail, ln_beta, ln_gamma, regularized_incomplete_beta, t_cdf, t_quantile, t_two_sided,
};
pub use trials::{format_p, pair_label, run_trials, TrialConfig, TrialResults};

#[derive(Debug, Error)]
pub enum StatsError {
    #[error("non-finite {0}")]
    NonFinite(&'static str),
    #[error("argument out of range: {0}")]
    Domain(String),
    #[error("need at least {needed} trials, got {got}")]
    TooFewTrials { needed: usize, got: usize },
    #[error("need at least {needed} conditions, got {got}")]
    TooFewConditions { needed: usize, got: usize },
    #[error("row {row} has {found} values, expected {expected}")]
    Ragged { row: usize, expected: usize, found: usize },
    #[error("invalid value {value} at row {row}, column {column}")]
    InvalidValue { row: usize, column: usize, value: f64 },
    #[error("{failed} of {requested} trials failed (first: seed {seed}: {message})")]
    TrialsFailed {
        requested: usize,
        failed: usize,
        seed: u64,
        message: String,
    },
    #[error("trials file line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
