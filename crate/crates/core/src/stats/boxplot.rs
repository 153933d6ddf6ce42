use std::cmp::Ordering;

use serde::Serialize;

use crate::scalar::Scalar;

/// Five-number summary with Tukey whiskers: `min` and `max` are the most
/// extreme values within 1.5 IQR of the box.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoxPlotSummary<T> {
    pub min: T,
    pub q1: T,
    pub median: T,
    pub q3: T,
    pub max: T,
    pub outliers: Vec<T>,
}

/// Quantile of sorted data by linear interpolation between order
/// statistics (`h = (n-1) p`).
pub fn quantile_type7<T: Scalar>(sorted: &[T], p: T) -> T {
    let h = T::of_usize(sorted.len() - 1) * p;
    let lo = h.floor();
    let i = lo.to_usize().unwrap_or(0).min(sorted.len() - 1);
    if i + 1 >= sorted.len() {
        return sorted[i];
    }
    sorted[i] + (h - lo) * (sorted[i + 1] - sorted[i])
}

/// Panics on an empty sample.
pub fn boxplot_summary<T: Scalar>(sample: &[T]) -> BoxPlotSummary<T> {
    assert!(!sample.is_empty(), "box plot of an empty sample");
    let mut v = sample.to_vec();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
    let q1 = quantile_type7(&v, T::of(0.25));
    let median = quantile_type7(&v, T::of(0.5));
    let q3 = quantile_type7(&v, T::of(0.75));
    let reach = T::of(1.5) * (q3 - q1);
    let (lo_fence, hi_fence) = (q1 - reach, q3 + reach);
    let inside = |x: &T| *x >= lo_fence && *x <= hi_fence;
    let min = v.iter().copied().find(inside).unwrap_or(q1).min(q1);
    let max = v.iter().rev().copied().find(inside).unwrap_or(q3).max(q3);
    let outliers = v.iter().copied().filter(|x| !inside(x)).collect();
    BoxPlotSummary {
        min,
        q1,
        median,
        q3,
        max,
        outliers,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let b = boxplot_summary(&[1.0f64, 2.0, 3.0, 4.0, 5.0]);
        assert_eq!((b.min, b.q1, b.median, b.q3, b.max), (1.0, 2.0, 3.0, 4.0, 5.0));
        assert!(b.outliers.is_empty());

        let b = boxplot_summary(&[2.5f64; 7]);
        assert_eq!((b.min, b.q1, b.median, b.q3, b.max), (2.5, 2.5, 2.5, 2.5, 2.5));
        assert!(b.outliers.is_empty());

        let b = boxplot_summary(&[1.0f64, 5.0, 2.0, 100.0, 3.0, 4.0, 2.0]);
        assert_eq!(b.outliers, vec![100.0]);
        assert_eq!(b.max, 5.0);
    }

    #[test]
    fn single_value_and_interpolation() {
        let b = boxplot_summary(&[7.0f32]);
        assert_eq!((b.min, b.median, b.max), (7.0, 7.0, 7.0));
        assert_eq!(quantile_type7(&[0.0f64, 10.0], 0.25), 2.5);
    }
}
