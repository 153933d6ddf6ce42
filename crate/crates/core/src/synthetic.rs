//! Sampled planar shapes with known loops, for checking the homology pipeline.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::embedding::PointCloud;
use crate::scalar::Scalar;

/// Noise used for [`Shape::NoisyCircle`] when none is given.
pub const DEFAULT_NOISE: f64 = 0.1;

/// Distance between the two centres of [`Shape::TwoCircles`], in radii.
pub const CIRCLE_OFFSET: f64 = 3.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Shape {
    Circle,
    NoisyCircle,
    TwoCircles,
}

impl Shape {
    pub const ALL: [Shape; 3] = [Shape::Circle, Shape::NoisyCircle, Shape::TwoCircles];

    pub fn default_noise(self) -> f64 {
        match self {
            Shape::NoisyCircle => DEFAULT_NOISE,
            _ => 0.0,
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::Circle => "circle",
            Shape::NoisyCircle => "noisy-circle",
            Shape::TwoCircles => "two-circles",
        })
    }
}

impl FromStr for Shape {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Shape::ALL
            .into_iter()
            .find(|shape| shape.to_string() == s)
            .ok_or_else(|| format!("unknown shape {s:?} (expected circle, noisy-circle or two-circles)"))
    }
}

/// `n` points on unit circles at uniformly random angles, each coordinate
/// perturbed by gaussian noise of standard deviation `noise`. Two circles
/// split the points, the first circle getting the odd one.
pub fn sample<T: Scalar>(shape: Shape, n: usize, noise: f64, seed: u64) -> PointCloud<T> {
    assert!(n > 0, "sample needs at least one point");
    assert!(noise >= 0.0 && noise.is_finite(), "noise must be finite and non-negative");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gauss = Normal::new(0.0, noise).expect("valid standard deviation");
    let centres: &[f64] = match shape {
        Shape::TwoCircles => &[0.0, CIRCLE_OFFSET],
        _ => &[0.0],
    };
    let per = n.div_ceil(centres.len());
    let points = (0..n)
        .map(|i| {
            let cx = centres[i / per];
            let theta = rng.random_range(0.0..std::f64::consts::TAU);
            let mut x = cx + theta.cos();
            let mut y = theta.sin();
            if noise > 0.0 {
                x += gauss.sample(&mut rng);
                y += gauss.sample(&mut rng);
            }
            vec![T::of(x), T::of(y)]
        })
        .collect();
    PointCloud::unlabelled(points).expect("non-empty cloud of equal dimensions")
}
