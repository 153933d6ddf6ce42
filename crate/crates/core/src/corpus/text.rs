use std::collections::HashSet;

use super::Token;

/// Lowercases and splits a verse on whitespace, trimming punctuation at both
/// ends of every word. Accented letters are kept as they are.
pub fn tokenize(verse: &str) -> Vec<Token> {
    verse
        .split_whitespace()
        .map(|w| w.trim_matches(|c: char| !c.is_alphanumeric()))
        .filter(|w| !w.is_empty())
        .map(str::to_lowercase)
        .collect()
}

/// A set of surface forms to drop before stemming.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StopWords {
    words: HashSet<String>,
}

const SPANISH: &str = include_str!("../../data/stopwords_es.txt");

impl StopWords {
    pub fn empty() -> Self {
        Self::default()
    }

    /// The bundled Spanish list (`data/stopwords_es.txt`).
    pub fn spanish() -> Self {
        Self::parse(SPANISH)
    }

    /// Parses one word per line; blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Self {
        let words = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::to_lowercase)
            .collect();
        StopWords { words }
    }

    pub fn contains(&self, token: &str) -> bool {
        self.words.contains(token)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

impl<S: Into<String>> FromIterator<S> for StopWords {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        StopWords {
            words: iter.into_iter().map(Into::into).collect(),
        }
    }
}

/// Order-preserving filter.
pub fn remove_stopwords(tokens: Vec<Token>, stopwords: &StopWords) -> Vec<Token> {
    tokens
        .into_iter()
        .filter(|t| !stopwords.contains(t))
        .collect()
}

/// The bundled stop-word file verbatim, for checksumming and export.
pub fn spanish_stopwords_source() -> &'static str {
    SPANISH
}
