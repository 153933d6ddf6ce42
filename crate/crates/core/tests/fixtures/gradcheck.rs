//! Finite-difference check of the pair gradient, shared with the acceptance suite.

use philotope::embedding::{pair_gradient, pair_loss, PairGradient};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `|a - b| / (|a| + |b|)` over whole vectors; zero when both vanish.
fn relative_error(a: &[f64], b: &[f64]) -> f64 {
    let norm = |v: &mut dyn Iterator<Item = f64>| v.map(|x| x * x).sum::<f64>().sqrt();
    let diff = norm(&mut a.iter().zip(b).map(|(x, y)| x - y));
    let scale = norm(&mut a.iter().copied()) + norm(&mut b.iter().copied());
    if scale == 0.0 {
        0.0
    } else {
        diff / scale
    }
}

/// Worst relative error between analytic and central-difference gradients
/// over `points` random (center, context, negatives) triples.
pub fn worst_gradient_error(seed: u64, points: usize) -> f64 {
    const H: f64 = 1e-5;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..points {
        let dim = rng.random_range(2..=16);
        let k = rng.random_range(0..=5);
        let scale = rng.random_range(0.1..2.0);
        let vec = |rng: &mut ChaCha8Rng| -> Vec<f64> { (0..dim).map(|_| rng.random_range(-scale..scale)).collect() };
        // Parameters as one list of blocks: center, context, negatives.
        let mut blocks: Vec<Vec<f64>> = (0..k + 2).map(|_| vec(&mut rng)).collect();
        let loss = |b: &[Vec<f64>]| {
            let negs: Vec<&[f64]> = b[2..].iter().map(Vec::as_slice).collect();
            pair_loss(&b[0], &b[1], &negs)
        };
        let mut g = PairGradient::zeros(dim, k);
        {
            let negs: Vec<&[f64]> = blocks[2..].iter().map(Vec::as_slice).collect();
            let l = pair_gradient(&blocks[0], &blocks[1], &negs, &mut g);
            assert!((l - loss(&blocks)).abs() <= 1e-12 * l.abs().max(1.0));
        }
        let analytic: Vec<&Vec<f64>> = [&g.center, &g.context].into_iter().chain(&g.negatives).collect();
        for (bi, want) in analytic.into_iter().enumerate() {
            let numeric: Vec<f64> = (0..dim)
                .map(|j| {
                    let x = blocks[bi][j];
                    blocks[bi][j] = x + H;
                    let up = loss(&blocks);
                    blocks[bi][j] = x - H;
                    let down = loss(&blocks);
                    blocks[bi][j] = x;
                    (up - down) / (2.0 * H)
                })
                .collect();
            worst = worst.max(relative_error(want, &numeric));
        }
    }
    worst
}
