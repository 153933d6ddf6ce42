use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::TdaError;
use crate::embedding::{cosine_distance, euclidean_distance, PointCloud};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    #[default]
    Cosine,
    Euclidean,
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Metric::Cosine => "cosine",
            Metric::Euclidean => "euclidean",
        })
    }
}

impl FromStr for Metric {
    type Err = TdaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "cosine" => Ok(Metric::Cosine),
            "euclidean" => Ok(Metric::Euclidean),
            other => Err(TdaError::UnknownMetric(other.to_string())),
        }
    }
}

/// Dense symmetric matrix of pairwise distances with a zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Scalar> DistanceMatrix<T> {
    /// Validates a row-major `n × n` matrix.
    pub fn new(n: usize, data: Vec<T>) -> Result<Self, TdaError> {
        if data.len() != n * n {
            return Err(TdaError::InvalidDistanceMatrix(format!(
                "{} entries for {n}x{n}",
                data.len()
            )));
        }
        for i in 0..n {
            if data[i * n + i] != T::zero() {
                return Err(TdaError::InvalidDistanceMatrix(format!("nonzero diagonal at {i}")));
            }
            for j in 0..i {
                let (a, b) = (data[i * n + j], data[j * n + i]);
                if !(a.is_finite() && a >= T::zero()) {
                    return Err(TdaError::InvalidDistanceMatrix(format!(
                        "entry ({i},{j}) = {a} is not a finite non-negative distance"
                    )));
                }
                if a != b {
                    return Err(TdaError::InvalidDistanceMatrix(format!("asymmetric at ({i},{j})")));
                }
            }
        }
        Ok(DistanceMatrix { n, data })
    }

    /// Builds a matrix from a distance function evaluated on `i < j`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Result<Self, TdaError> {
        let mut data = vec![T::zero(); n * n];
        for i in 0..n {
            for j in i + 1..n {
                let d = f(i, j);
                data[i * n + j] = d;
                data[j * n + i] = d;
            }
        }
        Self::new(n, data)
    }

    pub fn from_cloud(cloud: &PointCloud<T>, metric: Metric) -> Result<Self, TdaError> {
        let pts = cloud.points();
        if metric == Metric::Cosine {
            if let Some(i) = pts.iter().position(|p| p.iter().all(|x| *x == T::zero())) {
                return Err(TdaError::ZeroVector(cloud.labels()[i].clone()));
            }
        }
        Self::from_fn(pts.len(), |i, j| match metric {
            Metric::Cosine => cosine_distance(&pts[i], &pts[j]).expect("nonzero vectors"),
            Metric::Euclidean => euclidean_distance(&pts[i], &pts[j]),
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.n + j]
    }

    pub fn max_distance(&self) -> T {
        self.data.iter().copied().fold(T::zero(), T::max)
    }

    /// The same points reindexed so that new point `k` is old point `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.n;
        let mut data = vec![T::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                data[i * n + j] = self.get(perm[i], perm[j]);
            }
        }
        DistanceMatrix { n, data }
    }
}
