use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::EmbeddingError;
use crate::corpus::{ProcessedCorpus, Token};

/// Distinct tokens of a corpus with their counts. Ids are assigned by
/// descending count, ties broken lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vocabulary {
    words: Vec<Token>,
    counts: Vec<u64>,
    index: HashMap<Token, usize>,
}

#[derive(Serialize, Deserialize)]
struct VocabularyFile {
    words: Vec<Token>,
    counts: Vec<u64>,
}

impl Vocabulary {
    pub fn build(corpus: &ProcessedCorpus) -> Result<Self, EmbeddingError> {
        Self::from_tokens(
            corpus
                .sonnets()
                .flat_map(|s| s.verses.iter().flatten()),
        )
    }

    pub fn from_tokens<'a>(tokens: impl IntoIterator<Item = &'a Token>) -> Result<Self, EmbeddingError> {
        let mut counts: HashMap<&str, u64> = HashMap::new();
        for t in tokens {
            *counts.entry(t.as_str()).or_default() += 1;
        }
        if counts.is_empty() {
            return Err(EmbeddingError::EmptyCorpus);
        }
        let mut entries: Vec<(&str, u64)> = counts.into_iter().collect();
        entries.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
        let words: Vec<Token> = entries.iter().map(|(w, _)| w.to_string()).collect();
        let counts = entries.iter().map(|&(_, c)| c).collect();
        Ok(Self::from_parts(words, counts))
    }

    fn from_parts(words: Vec<Token>, counts: Vec<u64>) -> Self {
        let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        Vocabulary { words, counts, index }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn id(&self, word: &str) -> Option<usize> {
        self.index.get(word).copied()
    }

    pub fn word(&self, id: usize) -> &str {
        &self.words[id]
    }

    pub fn count(&self, id: usize) -> u64 {
        self.counts[id]
    }

    pub fn words(&self) -> &[Token] {
        &self.words
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&VocabularyFile {
            words: self.words.clone(),
            counts: self.counts.clone(),
        })
        .expect("vocabulary serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, EmbeddingError> {
        let file: VocabularyFile =
            serde_json::from_str(text).map_err(|e| EmbeddingError::Checkpoint(e.to_string()))?;
        if file.words.len() != file.counts.len() {
            return Err(EmbeddingError::Checkpoint(
                "vocabulary words and counts differ in length".into(),
            ));
        }
        if file.counts.contains(&0) {
            return Err(EmbeddingError::Checkpoint("zero word count".into()));
        }
        let vocab = Self::from_parts(file.words, file.counts);
        if vocab.index.len() != vocab.words.len() {
            return Err(EmbeddingError::Checkpoint("duplicate vocabulary word".into()));
        }
        Ok(vocab)
    }

    /// Maps every sonnet to its token ids, verses concatenated.
    pub fn encode(&self, corpus: &ProcessedCorpus) -> Result<Vec<Vec<usize>>, EmbeddingError> {
        corpus
            .sonnets()
            .map(|s| {
                s.verses
                    .iter()
                    .flatten()
                    .map(|t| self.id(t).ok_or_else(|| EmbeddingError::MissingToken(t.clone())))
                    .collect()
            })
            .collect()
    }
}

/// `(center, context)` id pairs for every token and every offset within
/// `window` positions, staying inside each sonnet.
pub fn training_pairs(sonnets: &[Vec<usize>], window: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
    sonnets.iter().flat_map(move |ids| {
        let len = ids.len();
        (0..len).flat_map(move |t| {
            let lo = t.saturating_sub(window);
            let hi = (t + window).min(len.saturating_sub(1));
            (lo..=hi).filter(move |&c| c != t).map(move |c| (ids[t], ids[c]))
        })
    })
}

/// Number of pairs `training_pairs` yields, without enumerating them.
pub fn pair_count(sonnets: &[Vec<usize>], window: usize) -> u64 {
    sonnets
        .iter()
        .map(|ids| {
            let len = ids.len();
            (0..len)
                .map(|t| {
                    let lo = t.saturating_sub(window);
                    let hi = (t + window).min(len - 1);
                    (hi - lo) as u64
                })
                .sum::<u64>()
        })
        .sum()
}
