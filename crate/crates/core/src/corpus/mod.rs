//! Sonnet corpora: loading, balancing and preprocessing into stemmed,
//! stop-word-free token streams.

mod stem;
mod text;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use stem::{snowball, stem};
pub use text::{remove_stopwords, spanish_stopwords_source, tokenize, StopWords};

pub type Token = String;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("poet directory for {poet:?} not found at {path}")]
    MissingPoet { poet: String, path: PathBuf },
    #[error("corpus root {0} is not a directory")]
    MissingRoot(PathBuf),
    #[error("{path} is not valid UTF-8")]
    NotUtf8 { path: PathBuf },
    #[error("poet {0:?} has no non-empty sonnets")]
    NoSonnets(String),
    #[error("poet {poet:?} has {count} sonnets, {requested} requested")]
    TooFewSonnets {
        poet: String,
        count: usize,
        requested: usize,
    },
    #[error("cannot balance to zero sonnets")]
    ZeroBalance,
    #[error("duplicate poet {0:?}")]
    DuplicatePoet(String),
    #[error("unknown poet {0:?}")]
    UnknownPoet(String),
    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed corpus checkpoint: {0}")]
    Checkpoint(#[from] serde_json::Error),
}

/// Poet identifier; the name of the poet's directory in the corpus layout.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PoetId(pub String);

impl PoetId {
    pub fn new(id: impl Into<String>) -> Self {
        PoetId(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for PoetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for PoetId {
    fn from(s: &str) -> Self {
        PoetId(s.to_string())
    }
}

/// A sonnet is an ordered list of verses of type `V`: raw lines before
/// preprocessing, token lists after.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sonnet<V> {
    pub name: String,
    pub verses: Vec<V>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoetWorks<V> {
    pub poet: PoetId,
    pub sonnets: Vec<Sonnet<V>>,
}

/// Poets in a fixed order, each with its sonnets in corpus order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Works<V> {
    pub poets: Vec<PoetWorks<V>>,
}

/// Raw text: one `String` per verse.
pub type Corpus = Works<String>;

/// Preprocessed text: one token list per verse.
pub type ProcessedCorpus = Works<Vec<Token>>;

impl<V> Works<V> {
    /// Builds a corpus, rejecting duplicate poets and poets without sonnets.
    pub fn new(poets: Vec<PoetWorks<V>>) -> Result<Self, CorpusError> {
        for (i, p) in poets.iter().enumerate() {
            if poets[..i].iter().any(|q| q.poet == p.poet) {
                return Err(CorpusError::DuplicatePoet(p.poet.0.clone()));
            }
            if p.sonnets.is_empty() {
                return Err(CorpusError::NoSonnets(p.poet.0.clone()));
            }
        }
        Ok(Works { poets })
    }

    pub fn poet_ids(&self) -> impl Iterator<Item = &PoetId> {
        self.poets.iter().map(|p| &p.poet)
    }

    pub fn poet(&self, id: &PoetId) -> Option<&PoetWorks<V>> {
        self.poets.iter().find(|p| &p.poet == id)
    }

    pub fn sonnet_count(&self) -> usize {
        self.poets.iter().map(|p| p.sonnets.len()).sum()
    }

    pub fn sonnets(&self) -> impl Iterator<Item = &Sonnet<V>> {
        self.poets.iter().flat_map(|p| p.sonnets.iter())
    }
}

impl<V: Clone> Works<V> {
    /// Keeps the first `n` sonnets of every poet.
    pub fn balance(&self, n: usize) -> Result<Self, CorpusError> {
        if n == 0 {
            return Err(CorpusError::ZeroBalance);
        }
        let poets = self
            .poets
            .iter()
            .map(|p| {
                if p.sonnets.len() < n {
                    return Err(CorpusError::TooFewSonnets {
                        poet: p.poet.0.clone(),
                        count: p.sonnets.len(),
                        requested: n,
                    });
                }
                Ok(PoetWorks {
                    poet: p.poet.clone(),
                    sonnets: p.sonnets[..n].to_vec(),
                })
            })
            .collect::<Result<_, _>>()?;
        Ok(Works { poets })
    }
}

/// Reads `<root>/<poet>/*.txt`, one sonnet per file and one verse per line,
/// in lexicographic filename order. Blank lines are dropped; files with no
/// verses are skipped with a warning.
pub fn load_corpus(root: &Path, poets: &[PoetId]) -> Result<Corpus, CorpusError> {
    if !root.is_dir() {
        return Err(CorpusError::MissingRoot(root.to_path_buf()));
    }
    let works = poets
        .iter()
        .map(|poet| load_poet(root, poet))
        .collect::<Result<Vec<_>, _>>()?;
    Works::new(works)
}

fn load_poet(root: &Path, poet: &PoetId) -> Result<PoetWorks<String>, CorpusError> {
    let dir = root.join(poet.as_str());
    if !dir.is_dir() {
        return Err(CorpusError::MissingPoet {
            poet: poet.0.clone(),
            path: dir,
        });
    }
    let io_err = |path: &Path| {
        let path = path.to_path_buf();
        move |source| CorpusError::Io { path, source }
    };
    let mut files: Vec<PathBuf> = fs::read_dir(&dir)
        .map_err(io_err(&dir))?
        .map(|e| e.map(|e| e.path()).map_err(io_err(&dir)))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .filter(|p| p.is_file() && p.extension().is_some_and(|e| e == "txt"))
        .collect();
    files.sort();

    let mut sonnets = Vec::with_capacity(files.len());
    for path in files {
        let bytes = fs::read(&path).map_err(io_err(&path))?;
        let text = String::from_utf8(bytes).map_err(|_| CorpusError::NotUtf8 { path: path.clone() })?;
        let verses: Vec<String> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(str::to_string)
            .collect();
        if verses.is_empty() {
            log::warn!("skipping empty sonnet file {}", path.display());
            continue;
        }
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        sonnets.push(Sonnet { name, verses });
    }
    if sonnets.is_empty() {
        return Err(CorpusError::NoSonnets(poet.0.clone()));
    }
    Ok(PoetWorks {
        poet: poet.clone(),
        sonnets,
    })
}

/// Tokenizes, drops stop words, then stems every verse. Sonnet and poet
/// boundaries are preserved; verses may become empty.
pub fn preprocess(corpus: &Corpus, stopwords: &StopWords) -> ProcessedCorpus {
    let poets = corpus
        .poets
        .iter()
        .map(|p| PoetWorks {
            poet: p.poet.clone(),
            sonnets: p
                .sonnets
                .iter()
                .map(|s| Sonnet {
                    name: s.name.clone(),
                    verses: s.verses.iter().map(|v| preprocess_verse(v, stopwords)).collect(),
                })
                .collect(),
        })
        .collect();
    Works { poets }
}

/// Stems that collide with a stop word (`losa` -> `los`) are dropped as well,
/// so no processed token is ever a stop word.
pub fn preprocess_verse(verse: &str, stopwords: &StopWords) -> Vec<Token> {
    remove_stopwords(tokenize(verse), stopwords)
        .iter()
        .map(|t| stem(t))
        .filter(|t| !stopwords.contains(t))
        .collect()
}

impl ProcessedCorpus {
    /// Tokens of a sonnet with its verses concatenated.
    pub fn sonnet_tokens(sonnet: &Sonnet<Vec<Token>>) -> impl Iterator<Item = &Token> {
        sonnet.verses.iter().flatten()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("corpus serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, CorpusError> {
        let works: Self = serde_json::from_str(s)?;
        Works::new(works.poets)
    }

    pub fn save(&self, path: &Path) -> Result<(), CorpusError> {
        fs::write(path, self.to_json()).map_err(|source| CorpusError::Io {
            path: path.to_path_buf(),
            source,
        })
    }

    pub fn load(path: &Path) -> Result<Self, CorpusError> {
        let text = fs::read_to_string(path).map_err(|source| CorpusError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_json(&text)
    }
}
