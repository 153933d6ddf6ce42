//! Skipgram with negative sampling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::vocab::{pair_count, training_pairs, Vocabulary};
use super::{EmbeddingError, EmbeddingMatrix};
use crate::corpus::ProcessedCorpus;
use crate::scalar::Scalar;

/// Linear learning-rate decay from `start` to `end` over all training pairs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LearningRate {
    pub start: f64,
    pub end: f64,
}

impl Default for LearningRate {
    fn default() -> Self {
        LearningRate {
            start: 0.025,
            end: 0.0001,
        }
    }
}

impl LearningRate {
    pub fn at(&self, done: u64, total: u64) -> f64 {
        if total == 0 {
            return self.start;
        }
        let frac = (done as f64 / total as f64).min(1.0);
        self.start - (self.start - self.end) * frac
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SkipGramConfig {
    pub dim: usize,
    pub epochs: usize,
    pub window: usize,
    pub negatives: usize,
    pub learning_rate: LearningRate,
    pub seed: u64,
}

impl Default for SkipGramConfig {
    fn default() -> Self {
        SkipGramConfig {
            dim: 150,
            epochs: 250,
            window: 10,
            negatives: 5,
            learning_rate: LearningRate::default(),
            seed: 0,
        }
    }
}

fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (&x, &y)| acc + x * y)
}

fn sigmoid<T: Scalar>(x: T) -> T {
    if x >= T::zero() {
        T::one() / (T::one() + (-x).exp())
    } else {
        let e = x.exp();
        e / (T::one() + e)
    }
}

/// `ln σ(x)` without overflow for large `|x|`.
fn log_sigmoid<T: Scalar>(x: T) -> T {
    let softplus_neg = (-x).max(T::zero()) + (-x.abs()).exp().ln_1p();
    -softplus_neg
}

/// Negative log-likelihood of one (center, context) pair with the given
/// negative context vectors:
/// `-ln σ(u_c · v) - Σ_n ln σ(-u_n · v)`.
pub fn pair_loss<T: Scalar>(center: &[T], context: &[T], negatives: &[&[T]]) -> T {
    let mut loss = -log_sigmoid(dot(context, center));
    for neg in negatives {
        loss = loss - log_sigmoid(-dot(neg, center));
    }
    loss
}

/// Gradient of [`pair_loss`] with respect to each of its arguments.
#[derive(Debug, Clone, PartialEq)]
pub struct PairGradient<T> {
    pub center: Vec<T>,
    pub context: Vec<T>,
    pub negatives: Vec<Vec<T>>,
}

impl<T: Scalar> PairGradient<T> {
    pub fn zeros(dim: usize, negatives: usize) -> Self {
        PairGradient {
            center: vec![T::zero(); dim],
            context: vec![T::zero(); dim],
            negatives: vec![vec![T::zero(); dim]; negatives],
        }
    }
}

/// Writes the gradient of [`pair_loss`] into `out` and returns the loss.
pub fn pair_gradient<T: Scalar>(
    center: &[T],
    context: &[T],
    negatives: &[&[T]],
    out: &mut PairGradient<T>,
) -> T {
    let dim = center.len();
    out.center.clear();
    out.center.resize(dim, T::zero());
    out.negatives.resize_with(negatives.len(), Vec::new);

    let score = dot(context, center);
    let mut loss = -log_sigmoid(score);
    // d/dx [-ln σ(x)] = σ(x) - 1
    let g = sigmoid(score) - T::one();
    out.context.clear();
    out.context.extend(center.iter().map(|&v| g * v));
    for (c, &u) in out.center.iter_mut().zip(context) {
        *c = *c + g * u;
    }
    for (neg, grad) in negatives.iter().zip(out.negatives.iter_mut()) {
        let score = dot(neg, center);
        loss = loss - log_sigmoid(-score);
        // d/dx [-ln σ(-x)] = σ(x)
        let g = sigmoid(score);
        grad.clear();
        grad.extend(center.iter().map(|&v| g * v));
        for (c, &u) in out.center.iter_mut().zip(neg.iter()) {
            *c = *c + g * u;
        }
    }
    loss
}

/// Draws word ids with probability proportional to `count^0.75`.
#[derive(Debug, Clone)]
pub struct NegativeSampler {
    cumulative: Vec<f64>,
}

impl NegativeSampler {
    pub fn new(vocab: &Vocabulary) -> Self {
        let mut acc = 0.0;
        let mut cumulative: Vec<f64> = vocab
            .counts()
            .iter()
            .map(|&c| {
                acc += (c as f64).powf(0.75);
                acc
            })
            .collect();
        for c in &mut cumulative {
            *c /= acc;
        }
        NegativeSampler { cumulative }
    }

    pub fn sample<R: Rng>(&self, rng: &mut R) -> usize {
        let u: f64 = rng.random();
        self.cumulative
            .partition_point(|&c| c <= u)
            .min(self.cumulative.len() - 1)
    }

    pub fn probability(&self, id: usize) -> f64 {
        let prev = if id == 0 { 0.0 } else { self.cumulative[id - 1] };
        self.cumulative[id] - prev
    }
}

/// Trains input (word) and output (context) vectors over a processed corpus.
#[derive(Debug, Clone)]
pub struct SkipGram {
    config: SkipGramConfig,
}

impl SkipGram {
    pub fn new(config: SkipGramConfig) -> Self {
        SkipGram { config }
    }

    pub fn config(&self) -> &SkipGramConfig {
        &self.config
    }

    pub fn train<T: Scalar>(
        &self,
        corpus: &ProcessedCorpus,
    ) -> Result<(Vocabulary, EmbeddingMatrix<T>), EmbeddingError> {
        let vocab = Vocabulary::build(corpus)?;
        let matrix = self.train_with(corpus, &vocab, |_, _| {})?;
        Ok((vocab, matrix))
    }

    /// Trains, calling `on_epoch(e, &matrix)` before the first epoch (`e = 0`)
    /// and after every epoch `e = 1..=epochs`.
    pub fn train_with<T: Scalar>(
        &self,
        corpus: &ProcessedCorpus,
        vocab: &Vocabulary,
        mut on_epoch: impl FnMut(usize, &EmbeddingMatrix<T>),
    ) -> Result<EmbeddingMatrix<T>, EmbeddingError> {
        let cfg = &self.config;
        if vocab.len() < 2 {
            return Err(EmbeddingError::VocabularyTooSmall(vocab.len()));
        }
        if cfg.dim == 0 {
            return Err(EmbeddingError::ZeroDimension);
        }
        if cfg.window == 0 {
            return Err(EmbeddingError::ZeroWindow);
        }
        let sonnets = vocab.encode(corpus)?;
        let sampler = NegativeSampler::new(vocab);
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let mut m = EmbeddingMatrix::<T>::initialize(vocab.len(), cfg.dim, &mut rng);
        on_epoch(0, &m);

        let per_epoch = pair_count(&sonnets, cfg.window);
        let total = per_epoch * cfg.epochs as u64;
        let dim = cfg.dim;
        let mut grad = PairGradient::zeros(dim, cfg.negatives);
        let mut neg_ids = Vec::with_capacity(cfg.negatives);
        let mut step: u64 = 0;

        for epoch in 1..=cfg.epochs {
            for (center, context) in training_pairs(&sonnets, cfg.window) {
                neg_ids.clear();
                for _ in 0..cfg.negatives {
                    let n = sampler.sample(&mut rng);
                    if n != context {
                        neg_ids.push(n);
                    }
                }
                let lr = T::of(cfg.learning_rate.at(step, total));

                let loss = {
                    let negs: Vec<&[T]> = neg_ids.iter().map(|&n| m.output_row(n)).collect();
                    pair_gradient(m.input_row(center), m.output_row(context), &negs, &mut grad)
                };
                if !loss.is_finite() {
                    return Err(EmbeddingError::NonFinite { epoch, step });
                }

                axpy(m.output_row_mut(context), -lr, &grad.context);
                for (&n, g) in neg_ids.iter().zip(&grad.negatives) {
                    axpy(m.output_row_mut(n), -lr, g);
                }
                axpy(m.input_row_mut(center), -lr, &grad.center);
                step += 1;
            }
            if m.input.iter().any(|x| !x.is_finite()) {
                return Err(EmbeddingError::NonFinite { epoch, step });
            }
            on_epoch(epoch, &m);
        }
        Ok(m)
    }
}

fn axpy<T: Scalar>(y: &mut [T], a: T, x: &[T]) {
    for (yi, &xi) in y.iter_mut().zip(x) {
        *yi = *yi + a * xi;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_sigmoid_is_stable() {
        assert!((log_sigmoid(0.0f64) - 0.5f64.ln()).abs() < 1e-15);
        assert!(log_sigmoid(-800.0f64).is_finite());
        assert_eq!(log_sigmoid(800.0f64), 0.0);
        assert!((sigmoid(-800.0f64)) >= 0.0);
    }

    #[test]
    fn learning_rate_decays_linearly() {
        let lr = LearningRate::default();
        assert_eq!(lr.at(0, 100), 0.025);
        assert!((lr.at(100, 100) - 0.0001).abs() < 1e-15);
        assert!((lr.at(50, 100) - 0.01255).abs() < 1e-12);
    }

    #[test]
    fn sampler_follows_three_quarter_power() {
        let v = Vocabulary::from_tokens(
            ["a", "a", "a", "a", "a", "a", "a", "a", "a", "a", "a", "a", "a", "a", "a", "a", "b"]
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .iter(),
        )
        .unwrap();
        let s = NegativeSampler::new(&v);
        // 16^0.75 = 8, 1^0.75 = 1
        assert!((s.probability(0) - 8.0 / 9.0).abs() < 1e-12);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let hits = (0..90_000).filter(|_| s.sample(&mut rng) == 1).count();
        assert!((hits as f64 / 90_000.0 - 1.0 / 9.0).abs() < 0.01);
    }

    #[test]
    fn defaults() {
        let c = SkipGramConfig::default();
        assert_eq!((c.dim, c.epochs, c.window, c.negatives), (150, 250, 10, 5));
    }
}
