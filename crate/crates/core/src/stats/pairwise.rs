use serde::Serialize;

use super::special::{t_quantile, t_two_sided};
use super::{StatsError, TrialResults};
use crate::scalar::Scalar;

/// Family-wise significance level the Bonferroni intervals are built for.
pub const FAMILY_ALPHA: f64 = 0.05;

/// Paired comparison of condition `first` against `second` (`first - second`).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairwiseComparison<T> {
    pub first: String,
    pub second: String,
    pub mean_difference: T,
    pub standard_error: T,
    pub t: T,
    pub df: usize,
    /// Two-sided p-value times the number of pairs, clamped to 1.
    pub p_bonferroni: T,
    pub ci_low: T,
    pub ci_high: T,
    /// The differences have zero variance but nonzero mean; `p` is 0.
    pub degenerate: bool,
}

/// Paired t-tests for every ordered pair of distinct conditions, in the
/// order `(0,1), (0,2), …, (1,0), (1,2), …`, so each comparison appears
/// with its mirror. The correction counts unordered pairs.
pub fn pairwise_bonferroni<T: Scalar>(
    r: &TrialResults<T>,
) -> Result<Vec<PairwiseComparison<T>>, StatsError> {
    let (n, k) = (r.trials(), r.conditions().len());
    if n < 2 {
        return Err(StatsError::TooFewTrials { needed: 2, got: n });
    }
    if k < 2 {
        return Err(StatsError::TooFewConditions { needed: 2, got: k });
    }
    let pairs = k * (k - 1) / 2;
    let m = T::of_usize(pairs);
    let nn = T::of_usize(n);
    let df = n - 1;
    let dff = T::of_usize(df);
    let level = T::one() - T::of(FAMILY_ALPHA) / (T::of(2.0) * m);
    let q = t_quantile(level, dff)?;

    let mut out = Vec::with_capacity(k * (k - 1));
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let diffs: Vec<T> = r.rows().iter().map(|row| row[i] - row[j]).collect();
            let mean = diffs.iter().copied().sum::<T>() / nn;
            let var = diffs.iter().map(|&d| (d - mean) * (d - mean)).sum::<T>() / dff;
            let se = (var / nn).sqrt();
            let (t, p, degenerate) = if se == T::zero() {
                if mean == T::zero() {
                    (T::zero(), T::one(), false)
                } else {
                    (T::infinity() * mean.signum(), T::zero(), true)
                }
            } else {
                let t = mean / se;
                (t, t_two_sided(t, dff), false)
            };
            out.push(PairwiseComparison {
                first: r.conditions()[i].clone(),
                second: r.conditions()[j].clone(),
                mean_difference: mean,
                standard_error: se,
                t,
                df,
                p_bonferroni: (p * m).min(T::one()),
                ci_low: mean - q * se,
                ci_high: mean + q * se,
                degenerate,
            });
        }
    }
    Ok(out)
}
