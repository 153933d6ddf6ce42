use log::warn;
use serde::Serialize;

use super::special::f_upper_tail;
use super::{StatsError, TrialResults};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Correction {
    SphericityAssumed,
    GreenhouseGeisser,
    HuynhFeldt,
}

impl Correction {
    pub fn name(self) -> &'static str {
        match self {
            Correction::SphericityAssumed => "Sphericity Assumed",
            Correction::GreenhouseGeisser => "Greenhouse-Geisser",
            Correction::HuynhFeldt => "Huynh-Feldt",
        }
    }
}

/// One row of the within-subjects test: the factor term with its
/// degrees of freedom scaled by `epsilon`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AnovaTest<T> {
    pub correction: Correction,
    pub epsilon: T,
    pub df_factor: T,
    pub df_residual: T,
    pub ms_factor: T,
    pub ms_residual: T,
    pub f: T,
    pub p: T,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Sphericity<T> {
    pub epsilon_gg: T,
    pub epsilon_hf: T,
    /// The condition covariance gave no usable estimate; both epsilons
    /// fell back to the lower bound `1/(k-1)`.
    pub singular: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnovaReport<T> {
    pub trials: usize,
    pub conditions: usize,
    pub ss_factor: T,
    pub ss_subjects: T,
    pub ss_residual: T,
    pub ss_total: T,
    pub f: T,
    pub epsilon_gg: T,
    pub epsilon_hf: T,
    /// Sphericity assumed, Greenhouse-Geisser, Huynh-Feldt.
    pub tests: Vec<AnovaTest<T>>,
    /// Residual sum of squares is zero while the factor is not: F is
    /// reported as infinite with `p = 0`.
    pub degenerate: bool,
    pub sphericity_singular: bool,
}

impl<T: Scalar> AnovaReport<T> {
    pub fn test(&self, c: Correction) -> &AnovaTest<T> {
        self.tests
            .iter()
            .find(|t| t.correction == c)
            .expect("all corrections reported")
    }
}

fn check_shape<T: Scalar>(r: &TrialResults<T>, min_k: usize) -> Result<(usize, usize), StatsError> {
    let (n, k) = (r.trials(), r.conditions().len());
    if n < 2 {
        return Err(StatsError::TooFewTrials { needed: 2, got: n });
    }
    if k < min_k {
        return Err(StatsError::TooFewConditions { needed: min_k, got: k });
    }
    Ok((n, k))
}

/// Sample covariance matrix of the conditions (divisor `n - 1`).
fn covariance<T: Scalar>(r: &TrialResults<T>) -> Vec<Vec<T>> {
    let (n, k) = (r.trials(), r.conditions().len());
    let means: Vec<T> = (0..k).map(|j| r.column_mean(j)).collect();
    let denom = T::of_usize(n - 1);
    let mut s = vec![vec![T::zero(); k]; k];
    for a in 0..k {
        for b in a..k {
            let c = r
                .rows()
                .iter()
                .map(|row| (row[a] - means[a]) * (row[b] - means[b]))
                .sum::<T>()
                / denom;
            s[a][b] = c;
            s[b][a] = c;
        }
    }
    s
}

/// Greenhouse-Geisser epsilon by Box's formula and the Huynh-Feldt
/// epsilon derived from it, both clamped to `[1/(k-1), 1]` with
/// `gg <= hf`.
pub fn sphericity_epsilon<T: Scalar>(r: &TrialResults<T>) -> Result<Sphericity<T>, StatsError> {
    let (n, k) = check_shape(r, 2)?;
    let one = T::one();
    let km1 = T::of_usize(k - 1);
    let lower = one / km1;
    let kk = T::of_usize(k);
    let s = covariance(r);

    let diag_mean = (0..k).map(|i| s[i][i]).sum::<T>() / kk;
    let grand = s.iter().flatten().copied().sum::<T>() / (kk * kk);
    let row_means: Vec<T> = s.iter().map(|row| row.iter().copied().sum::<T>() / kk).collect();
    let sum_sq = s.iter().flatten().map(|&x| x * x).sum::<T>();
    let row_sq = row_means.iter().map(|&m| m * m).sum::<T>();

    let num = kk * kk * (diag_mean - grand) * (diag_mean - grand);
    let den = km1 * (sum_sq - T::of(2.0) * kk * row_sq + kk * kk * grand * grand);
    let gg = num / den;
    if !(gg.is_finite() && den > T::zero()) {
        warn!("singular condition covariance; using lower-bound epsilon 1/(k-1)");
        return Ok(Sphericity {
            epsilon_gg: lower,
            epsilon_hf: lower,
            singular: true,
        });
    }
    let gg = gg.max(lower).min(one);

    let nn = T::of_usize(n);
    let hf_den = km1 * (nn - one - km1 * gg);
    let hf = if hf_den > T::zero() {
        (nn * km1 * gg - T::of(2.0)) / hf_den
    } else {
        one
    };
    let hf = hf.max(gg).min(one);
    Ok(Sphericity {
        epsilon_gg: gg,
        epsilon_hf: hf,
        singular: false,
    })
}

/// One-way repeated-measures ANOVA with trials as subjects.
pub fn rm_anova<T: Scalar>(r: &TrialResults<T>) -> Result<AnovaReport<T>, StatsError> {
    let (n, k) = check_shape(r, 2)?;
    let (nn, kk) = (T::of_usize(n), T::of_usize(k));
    let grand = r.rows().iter().flatten().copied().sum::<T>() / (nn * kk);

    let ss_factor = nn
        * (0..k)
            .map(|j| {
                let d = r.column_mean(j) - grand;
                d * d
            })
            .sum::<T>();
    let ss_subjects = kk
        * r.rows()
            .iter()
            .map(|row| {
                let d = row.iter().copied().sum::<T>() / kk - grand;
                d * d
            })
            .sum::<T>();
    let ss_total = r
        .rows()
        .iter()
        .flatten()
        .map(|&x| (x - grand) * (x - grand))
        .sum::<T>();
    // Subject-by-condition interaction, summed directly rather than as
    // SS_total - SS_subjects - SS_factor to avoid cancellation.
    let col_means: Vec<T> = (0..k).map(|j| r.column_mean(j)).collect();
    let ss_residual = r
        .rows()
        .iter()
        .flat_map(|row| {
            let row_mean = row.iter().copied().sum::<T>() / kk;
            row.iter()
                .zip(&col_means)
                .map(move |(&x, &m)| x - row_mean - m + grand)
        })
        .map(|e| e * e)
        .sum::<T>();

    // Centering leaves rounding noise of order (nk eps)^2 sum x^2 in each
    // sum of squares; anything below that is an exact zero.
    let raw_sq = r.rows().iter().flatten().map(|&x| x * x).sum::<T>();
    let noise = raw_sq * (T::of(8.0) * nn * kk * T::epsilon()).powi(2);
    let snap = |ss: T| if ss <= noise { T::zero() } else { ss };
    let (ss_factor, ss_residual) = (snap(ss_factor), snap(ss_residual));

    let df1 = T::of_usize(k - 1);
    let df2 = T::of_usize((k - 1) * (n - 1));
    let (f, degenerate) = if ss_factor == T::zero() {
        (T::zero(), false)
    } else if ss_residual == T::zero() {
        (T::infinity(), true)
    } else {
        ((ss_factor / df1) / (ss_residual / df2), false)
    };

    let sph = if k >= 3 {
        sphericity_epsilon(r)?
    } else {
        // Two conditions: a single difference, sphericity holds trivially.
        Sphericity {
            epsilon_gg: T::one(),
            epsilon_hf: T::one(),
            singular: false,
        }
    };

    let mut tests = Vec::with_capacity(3);
    for (correction, eps) in [
        (Correction::SphericityAssumed, T::one()),
        (Correction::GreenhouseGeisser, sph.epsilon_gg),
        (Correction::HuynhFeldt, sph.epsilon_hf),
    ] {
        let (d1, d2) = (df1 * eps, df2 * eps);
        let p = if degenerate {
            T::zero()
        } else {
            f_upper_tail(f, d1, d2)?
        };
        tests.push(AnovaTest {
            correction,
            epsilon: eps,
            df_factor: d1,
            df_residual: d2,
            ms_factor: ss_factor / d1,
            ms_residual: ss_residual / d2,
            f,
            p,
        });
    }

    Ok(AnovaReport {
        trials: n,
        conditions: k,
        ss_factor,
        ss_subjects,
        ss_residual,
        ss_total,
        f,
        epsilon_gg: sph.epsilon_gg,
        epsilon_hf: sph.epsilon_hf,
        tests,
        degenerate,
        sphericity_singular: sph.singular,
    })
}
