//! Dominant loops of the sampled shapes, shared with the acceptance suite.

use philotope::synthetic::{sample, Shape};
use philotope::tda::{rips_diagrams, DistanceMatrix, Metric};

pub const POINTS: usize = 100;
pub const THRESHOLD: f64 = 2.0;

/// H1 persistences of `shape`, largest first.
pub fn h1_persistences(shape: Shape, seed: u64) -> Vec<f64> {
    let cloud = sample::<f64>(shape, POINTS, shape.default_noise(), seed);
    let dm = DistanceMatrix::from_cloud(&cloud, Metric::Euclidean).expect("finite cloud");
    let d = rips_diagrams(&dm, 1, THRESHOLD).expect("finite threshold");
    d[1].persistences_desc()
}

/// Number of H1 points above `fraction` of the largest persistence.
pub fn dominant(pers: &[f64], fraction: f64) -> usize {
    pers.first().map_or(0, |&top| pers.iter().filter(|&&p| p > fraction * top).count())
}
