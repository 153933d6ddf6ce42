use std::collections::HashSet;

use super::{EmbeddingError, EmbeddingMatrix, Vocabulary};
use crate::corpus::{PoetId, ProcessedCorpus};
use crate::scalar::Scalar;

/// Labelled points in `R^d`, one per distinct word.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud<T> {
    points: Vec<Vec<T>>,
    labels: Vec<String>,
}

impl<T: Scalar> PointCloud<T> {
    pub fn new(points: Vec<Vec<T>>, labels: Vec<String>) -> Result<Self, EmbeddingError> {
        if points.is_empty() {
            return Err(EmbeddingError::EmptyCloud);
        }
        if points.len() != labels.len() {
            return Err(EmbeddingError::LabelMismatch {
                points: points.len(),
                labels: labels.len(),
            });
        }
        let dim = points[0].len();
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(EmbeddingError::DimensionMismatch {
                expected: dim,
                found: p.len(),
            });
        }
        let mut seen = HashSet::new();
        if let Some(dup) = labels.iter().find(|l| !seen.insert(l.as_str())) {
            return Err(EmbeddingError::DuplicateLabel(dup.clone()));
        }
        Ok(PointCloud { points, labels })
    }

    /// Unlabelled points get their index as label.
    pub fn unlabelled(points: Vec<Vec<T>>) -> Result<Self, EmbeddingError> {
        let labels = (0..points.len()).map(|i| i.to_string()).collect();
        Self::new(points, labels)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.points[0].len()
    }

    pub fn points(&self) -> &[Vec<T>] {
        &self.points
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn point(&self, i: usize) -> &[T] {
        &self.points[i]
    }
}

impl<T: Scalar> PointCloud<T> {
    fn has_index_labels(&self) -> bool {
        self.labels.iter().enumerate().all(|(i, l)| *l == i.to_string())
    }

    /// One point per line as whitespace-separated coordinates, preceded by
    /// its label unless the labels are just the point indices.
    pub fn to_text(&self, header: &[String]) -> String {
        let mut out = String::new();
        for h in header {
            out.push_str("# ");
            out.push_str(h);
            out.push('\n');
        }
        let labelled = !self.has_index_labels();
        for (label, p) in self.labels.iter().zip(&self.points) {
            let mut fields: Vec<String> = Vec::with_capacity(p.len() + 1);
            if labelled {
                fields.push(label.clone());
            }
            fields.extend(p.iter().map(|x| x.to_string()));
            out.push_str(&fields.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses [`PointCloud::to_text`] output. A first field that is not a
    /// number is the point's label; `#` starts a comment.
    pub fn from_text(text: &str) -> Result<Self, EmbeddingError> {
        let mut points = Vec::new();
        let mut labels = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| EmbeddingError::Parse { line: i + 1, msg };
            let mut fields = line.split_whitespace().peekable();
            let first = *fields.peek().expect("non-empty line");
            let label = if first.parse::<f64>().is_err() {
                fields.next();
                Some(first.to_string())
            } else {
                None
            };
            let coords = fields
                .map(|f| {
                    f.parse::<f64>()
                        .ok()
                        .filter(|x| x.is_finite())
                        .map(T::of)
                        .ok_or_else(|| err(format!("bad coordinate {f:?}")))
                })
                .collect::<Result<Vec<T>, _>>()?;
            if coords.is_empty() {
                return Err(err("no coordinates".into()));
            }
            if let Some(d) = points.first().map(Vec::len) {
                if d != coords.len() {
                    return Err(err(format!("{} coordinates, expected {d}", coords.len())));
                }
            }
            labels.push(label.unwrap_or_else(|| points.len().to_string()));
            points.push(coords);
        }
        Self::new(points, labels)
    }
}

/// The cloud of embedded words a poet uses: one point per distinct token,
/// in order of first use.
pub fn embed_poet<T: Scalar>(
    corpus: &ProcessedCorpus,
    poet: &PoetId,
    vocab: &Vocabulary,
    matrix: &EmbeddingMatrix<T>,
) -> Result<PointCloud<T>, EmbeddingError> {
    let works = corpus
        .poet(poet)
        .ok_or_else(|| EmbeddingError::UnknownPoet(poet.to_string()))?;
    let mut seen = HashSet::new();
    let mut points = Vec::new();
    let mut labels = Vec::new();
    for token in works.sonnets.iter().flat_map(|s| s.verses.iter().flatten()) {
        if !seen.insert(token.as_str()) {
            continue;
        }
        let id = vocab
            .id(token)
            .ok_or_else(|| EmbeddingError::MissingToken(token.clone()))?;
        points.push(matrix.input_row(id).to_vec());
        labels.push(token.clone());
    }
    PointCloud::new(points, labels)
}

/// `1 - u·v / (|u| |v|)`, clamped to `[0, 2]`.
pub fn cosine_distance<T: Scalar>(u: &[T], v: &[T]) -> Result<T, EmbeddingError> {
    if u.len() != v.len() {
        return Err(EmbeddingError::DimensionMismatch {
            expected: u.len(),
            found: v.len(),
        });
    }
    let (mut uv, mut uu, mut vv) = (T::zero(), T::zero(), T::zero());
    for (&a, &b) in u.iter().zip(v) {
        uv = uv + a * b;
        uu = uu + a * a;
        vv = vv + b * b;
    }
    if uu == T::zero() || vv == T::zero() {
        return Err(EmbeddingError::ZeroVector);
    }
    let d = T::one() - uv / (uu * vv).sqrt();
    Ok(d.max(T::zero()).min(T::of(2.0)))
}

pub fn euclidean_distance<T: Scalar>(u: &[T], v: &[T]) -> T {
    u.iter()
        .zip(v)
        .map(|(&a, &b)| (a - b) * (a - b))
        .sum::<T>()
        .sqrt()
}
