//! Word embeddings: vocabulary, skipgram training with negative sampling,
//! per-poet point clouds and checkpoints.

mod cloud;
mod sgns;
mod vocab;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use rand::Rng;
use thiserror::Error;

use crate::scalar::Scalar;

pub use cloud::{cosine_distance, embed_poet, euclidean_distance, PointCloud};
pub use sgns::{
    pair_gradient, pair_loss, LearningRate, NegativeSampler, PairGradient, SkipGram,
    SkipGramConfig,
};
pub use vocab::{pair_count, training_pairs, Vocabulary};

#[derive(Debug, Error)]
pub enum EmbeddingError {
    #[error("corpus contains no tokens")]
    EmptyCorpus,
    #[error("vocabulary has {0} words; training needs at least 2")]
    VocabularyTooSmall(usize),
    #[error("embedding dimension must be positive")]
    ZeroDimension,
    #[error("context window must be positive")]
    ZeroWindow,
    #[error("non-finite value during training at epoch {epoch}, step {step}")]
    NonFinite { epoch: usize, step: u64 },
    #[error("token {0:?} is not in the vocabulary")]
    MissingToken(String),
    #[error("poet {0:?} is not in the corpus")]
    UnknownPoet(String),
    #[error("point cloud is empty")]
    EmptyCloud,
    #[error("{points} points but {labels} labels")]
    LabelMismatch { points: usize, labels: usize },
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("cosine distance undefined for a zero vector")]
    ZeroVector,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("bad embedding checkpoint: {0}")]
    Checkpoint(String),
    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

/// Word (input) and context (output) vectors, `rows × dim`, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddingMatrix<T> {
    rows: usize,
    dim: usize,
    input: Vec<T>,
    output: Vec<T>,
}

impl<T: Scalar> EmbeddingMatrix<T> {
    /// word2vec initialization: input uniform in `(-0.5/d, 0.5/d)`, output zero.
    pub fn initialize<R: Rng>(rows: usize, dim: usize, rng: &mut R) -> Self {
        let scale = 1.0 / dim as f64;
        let input = (0..rows * dim)
            .map(|_| T::of((rng.random::<f64>() - 0.5) * scale))
            .collect();
        EmbeddingMatrix {
            rows,
            dim,
            input,
            output: vec![T::zero(); rows * dim],
        }
    }

    pub fn from_parts(rows: usize, dim: usize, input: Vec<T>, output: Vec<T>) -> Result<Self, EmbeddingError> {
        if input.len() != rows * dim || output.len() != rows * dim {
            return Err(EmbeddingError::Checkpoint(format!(
                "expected {} entries per block for {rows}x{dim}",
                rows * dim
            )));
        }
        Ok(EmbeddingMatrix { rows, dim, input, output })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn input_row(&self, i: usize) -> &[T] {
        &self.input[i * self.dim..(i + 1) * self.dim]
    }

    pub fn output_row(&self, i: usize) -> &[T] {
        &self.output[i * self.dim..(i + 1) * self.dim]
    }

    pub(crate) fn input_row_mut(&mut self, i: usize) -> &mut [T] {
        &mut self.input[i * self.dim..(i + 1) * self.dim]
    }

    pub(crate) fn output_row_mut(&mut self, i: usize) -> &mut [T] {
        &mut self.output[i * self.dim..(i + 1) * self.dim]
    }

    pub fn input(&self) -> &[T] {
        &self.input
    }

    pub fn output(&self) -> &[T] {
        &self.output
    }

    pub fn is_finite(&self) -> bool {
        self.input.iter().chain(&self.output).all(|x| x.is_finite())
    }
}

const MAGIC: &[u8; 8] = b"PHTPEMB\0";
const VERSION: u32 = 1;

/// Embedding checkpoint: a little-endian binary header followed by the
/// input block then the output block, both as row-major `f64`.
///
/// Header layout: magic (8 bytes), version `u32`, rows `u64`, dim `u64`,
/// seed `u64`, epochs `u64`, window `u64`, negatives `u64`,
/// lr start `f64`, lr end `f64`.
#[derive(Debug, Clone, PartialEq)]
pub struct Checkpoint<T> {
    pub config: SkipGramConfig,
    pub vocabulary: Vocabulary,
    pub matrix: EmbeddingMatrix<T>,
}

impl<T: Scalar> Checkpoint<T> {
    pub fn write_binary<W: Write>(&self, mut w: W) -> io::Result<()> {
        let c = &self.config;
        w.write_all(MAGIC)?;
        w.write_all(&VERSION.to_le_bytes())?;
        for v in [
            self.matrix.rows as u64,
            self.matrix.dim as u64,
            c.seed,
            c.epochs as u64,
            c.window as u64,
            c.negatives as u64,
        ] {
            w.write_all(&v.to_le_bytes())?;
        }
        w.write_all(&c.learning_rate.start.to_le_bytes())?;
        w.write_all(&c.learning_rate.end.to_le_bytes())?;
        for x in self.matrix.input.iter().chain(&self.matrix.output) {
            w.write_all(&x.to_f64_lossy().to_le_bytes())?;
        }
        Ok(())
    }

    /// Reads the binary part; the vocabulary comes from the sidecar.
    pub fn read_binary<R: Read>(mut r: R, vocabulary: Vocabulary) -> Result<Self, EmbeddingError> {
        let bad = |e: io::Error| EmbeddingError::Checkpoint(e.to_string());
        let mut magic = [0u8; 8];
        r.read_exact(&mut magic).map_err(bad)?;
        if &magic != MAGIC {
            return Err(EmbeddingError::Checkpoint("bad magic".into()));
        }
        let mut b4 = [0u8; 4];
        r.read_exact(&mut b4).map_err(bad)?;
        let version = u32::from_le_bytes(b4);
        if version != VERSION {
            return Err(EmbeddingError::Checkpoint(format!("unsupported version {version}")));
        }
        let mut b8 = [0u8; 8];
        let mut next_u64 = |r: &mut R| -> Result<u64, EmbeddingError> {
            r.read_exact(&mut b8).map_err(bad)?;
            Ok(u64::from_le_bytes(b8))
        };
        let rows = next_u64(&mut r)? as usize;
        let dim = next_u64(&mut r)? as usize;
        let seed = next_u64(&mut r)?;
        let epochs = next_u64(&mut r)? as usize;
        let window = next_u64(&mut r)? as usize;
        let negatives = next_u64(&mut r)? as usize;
        let lr_start = f64::from_bits(next_u64(&mut r)?);
        let lr_end = f64::from_bits(next_u64(&mut r)?);
        if rows != vocabulary.len() {
            return Err(EmbeddingError::Checkpoint(format!(
                "{rows} rows but vocabulary has {} words",
                vocabulary.len()
            )));
        }
        let mut block = || -> Result<Vec<T>, EmbeddingError> {
            (0..rows * dim)
                .map(|_| next_u64(&mut r).map(|bits| T::of(f64::from_bits(bits))))
                .collect()
        };
        let input = block()?;
        let output = block()?;
        let mut rest = Vec::new();
        r.read_to_end(&mut rest).map_err(bad)?;
        if !rest.is_empty() {
            return Err(EmbeddingError::Checkpoint("trailing bytes".into()));
        }
        Ok(Checkpoint {
            config: SkipGramConfig {
                dim,
                epochs,
                window,
                negatives,
                learning_rate: LearningRate { start: lr_start, end: lr_end },
                seed,
            },
            vocabulary,
            matrix: EmbeddingMatrix::from_parts(rows, dim, input, output)?,
        })
    }

    /// Sidecar path holding the word/id map: `<path>.vocab.json`.
    pub fn vocabulary_path(path: &Path) -> PathBuf {
        let mut s = path.as_os_str().to_owned();
        s.push(".vocab.json");
        PathBuf::from(s)
    }

    pub fn save(&self, path: &Path) -> Result<(), EmbeddingError> {
        let io_err = |p: &Path| {
            let path = p.to_path_buf();
            move |source| EmbeddingError::Io { path, source }
        };
        let file = fs::File::create(path).map_err(io_err(path))?;
        let mut w = io::BufWriter::new(file);
        self.write_binary(&mut w).map_err(io_err(path))?;
        w.flush().map_err(io_err(path))?;
        let vpath = Self::vocabulary_path(path);
        fs::write(&vpath, self.vocabulary.to_json()).map_err(io_err(&vpath))
    }

    pub fn load(path: &Path) -> Result<Self, EmbeddingError> {
        let vpath = Self::vocabulary_path(path);
        let vtext = fs::read_to_string(&vpath).map_err(|source| EmbeddingError::Io {
            path: vpath.clone(),
            source,
        })?;
        let vocabulary = Vocabulary::from_json(&vtext)?;
        let file = fs::File::open(path).map_err(|source| EmbeddingError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::read_binary(io::BufReader::new(file), vocabulary)
    }
}
