//! Snowball Spanish stemmer.
//!
//! A direct port of the Snowball Spanish algorithm: attached pronoun removal,
//! standard suffix removal, verb suffix removal (y-initial first, then the
//! general table), residual suffix removal and finally accent folding.
//! Regions (RV, R1, R2) are character offsets into the original word.

const VOWELS: &[char] = &['a', 'e', 'i', 'o', 'u', 'á', 'é', 'í', 'ó', 'ú', 'ü'];

fn is_vowel(c: char) -> bool {
    VOWELS.contains(&c)
}

const PRONOUNS: &[&str] = &[
    "me", "se", "sela", "selo", "selas", "selos", "la", "le", "lo", "las", "les", "los", "nos",
];

const PRONOUN_HOSTS: &[&str] = &[
    "iéndo", "ándo", "ár", "ér", "ír", "ando", "iendo", "ar", "er", "ir", "yendo",
];

const STANDARD_SUFFIXES: &[&str] = &[
    "anza", "anzas", "ico", "ica", "icos", "icas", "ismo", "ismos", "able", "ables", "ible",
    "ibles", "ista", "istas", "oso", "osa", "osos", "osas", "amiento", "amientos", "imiento",
    "imientos", "adora", "ador", "ación", "adoras", "adores", "aciones", "ante", "antes", "ancia",
    "ancias", "logía", "logías", "ución", "uciones", "encia", "encias", "amente", "mente", "idad",
    "idades", "iva", "ivo", "ivas", "ivos",
];

const Y_VERB_SUFFIXES: &[&str] = &[
    "ya", "ye", "yan", "yen", "yeron", "yendo", "yo", "yó", "yas", "yes", "yais", "yamos",
];

const VERB_SUFFIXES_GU: &[&str] = &["en", "es", "éis", "emos"];

const VERB_SUFFIXES: &[&str] = &[
    "en", "es", "éis", "emos", "arían", "arías", "arán", "arás", "aríais", "aría", "aréis",
    "aríamos", "aremos", "ará", "aré", "erían", "erías", "erán", "erás", "eríais", "ería",
    "eréis", "eríamos", "eremos", "erá", "eré", "irían", "irías", "irán", "irás", "iríais",
    "iría", "iréis", "iríamos", "iremos", "irá", "iré", "aba", "ada", "ida", "ía", "ara", "iera",
    "ad", "ed", "id", "ase", "iese", "aste", "iste", "an", "aban", "ían", "aran", "ieran", "asen",
    "iesen", "aron", "ieron", "ado", "ido", "ando", "iendo", "ió", "ar", "er", "ir", "as", "abas",
    "adas", "idas", "ías", "aras", "ieras", "ases", "ieses", "ís", "áis", "abais", "íais",
    "arais", "ierais", "aseis", "ieseis", "asteis", "isteis", "ados", "idos", "amos", "ábamos",
    "íamos", "imos", "áramos", "iéramos", "iésemos", "ásemos",
];

const RESIDUAL_SUFFIXES: &[&str] = &["os", "a", "o", "á", "í", "ó", "e", "é"];

struct Word {
    chars: Vec<char>,
    rv: usize,
    r1: usize,
    r2: usize,
}

impl Word {
    fn new(word: &str) -> Self {
        let chars: Vec<char> = word.chars().collect();
        let rv = mark_rv(&chars);
        let r1 = region_after(&chars, 0);
        let r2 = region_after(&chars, r1);
        Word { chars, rv, r1, r2 }
    }

    fn len(&self) -> usize {
        self.chars.len()
    }

    fn ends_with(&self, suffix: &str) -> bool {
        ends_with(&self.chars, suffix)
    }

    /// Longest suffix from `table` whose start is at or after `limit`.
    fn longest_suffix<'a>(&self, table: &[&'a str], limit: usize) -> Option<(&'a str, usize)> {
        table
            .iter()
            .filter(|s| self.ends_with(s))
            .map(|s| (*s, self.len() - s.chars().count()))
            .filter(|&(_, start)| start >= limit)
            .max_by_key(|&(s, _)| s.chars().count())
    }

    fn truncate(&mut self, at: usize) {
        self.chars.truncate(at);
    }

    fn replace_from(&mut self, at: usize, with: &str) {
        self.chars.truncate(at);
        self.chars.extend(with.chars());
    }

    /// Deletes `suffix` if the word ends with it and it starts at or after `limit`.
    fn delete_if_in(&mut self, suffix: &str, limit: usize) -> bool {
        if self.ends_with(suffix) {
            let start = self.len() - suffix.chars().count();
            if start >= limit {
                self.truncate(start);
                return true;
            }
        }
        false
    }

    fn char_before(&self, at: usize) -> Option<char> {
        at.checked_sub(1).map(|i| self.chars[i])
    }
}

fn ends_with(chars: &[char], suffix: &str) -> bool {
    let n = suffix.chars().count();
    n <= chars.len() && chars[chars.len() - n..].iter().copied().eq(suffix.chars())
}

fn mark_rv(w: &[char]) -> usize {
    let n = w.len();
    if n < 2 {
        return n;
    }
    let find_from = |start: usize, want_vowel: bool| {
        (start..n)
            .find(|&i| is_vowel(w[i]) == want_vowel)
            .map(|i| i + 1)
    };
    let found = match (is_vowel(w[0]), is_vowel(w[1])) {
        (true, false) => find_from(2, true),
        (true, true) => find_from(2, false),
        (false, false) => find_from(2, true),
        (false, true) => (n >= 3).then_some(3),
    };
    found.unwrap_or(n)
}

/// Region after the first non-vowel following a vowel, searching from `from`.
fn region_after(w: &[char], from: usize) -> usize {
    let n = w.len();
    let Some(v) = (from..n).find(|&i| is_vowel(w[i])) else {
        return n;
    };
    (v + 1..n)
        .find(|&i| !is_vowel(w[i]))
        .map_or(n, |i| i + 1)
}

fn attached_pronoun(w: &mut Word) {
    let Some((_, pron_start)) = w.longest_suffix(PRONOUNS, 0) else {
        return;
    };
    let host = &w.chars[..pron_start];
    let Some(ending) = PRONOUN_HOSTS
        .iter()
        .filter(|s| ends_with(host, s))
        .max_by_key(|s| s.chars().count())
    else {
        return;
    };
    let start = pron_start - ending.chars().count();
    if start < w.rv {
        return;
    }
    match *ending {
        "iéndo" => w.replace_from(start, "iendo"),
        "ándo" => w.replace_from(start, "ando"),
        "ár" => w.replace_from(start, "ar"),
        "ér" => w.replace_from(start, "er"),
        "ír" => w.replace_from(start, "ir"),
        "yendo" => {
            if w.char_before(start) == Some('u') {
                w.truncate(pron_start);
            }
        }
        _ => w.truncate(pron_start),
    }
}

fn standard_suffix(w: &mut Word) -> bool {
    let Some((suffix, start)) = w.longest_suffix(STANDARD_SUFFIXES, 0) else {
        return false;
    };
    let (r1, r2) = (w.r1, w.r2);
    match suffix {
        "adora" | "ador" | "ación" | "adoras" | "adores" | "aciones" | "ante" | "antes"
        | "ancia" | "ancias" => {
            if start < r2 {
                return false;
            }
            w.truncate(start);
            w.delete_if_in("ic", r2);
        }
        "logía" | "logías" => {
            if start < r2 {
                return false;
            }
            w.replace_from(start, "log");
        }
        "ución" | "uciones" => {
            if start < r2 {
                return false;
            }
            w.replace_from(start, "u");
        }
        "encia" | "encias" => {
            if start < r2 {
                return false;
            }
            w.replace_from(start, "ente");
        }
        "amente" => {
            if start < r1 {
                return false;
            }
            w.truncate(start);
            if let Some((pre, pre_start)) = w.longest_suffix(&["iv", "os", "ic", "ad"], 0) {
                if pre_start >= r2 {
                    w.truncate(pre_start);
                    if pre == "iv" {
                        w.delete_if_in("at", r2);
                    }
                }
            }
        }
        "mente" => {
            if start < r2 {
                return false;
            }
            w.truncate(start);
            if let Some((_, pre_start)) = w.longest_suffix(&["ante", "able", "ible"], 0) {
                if pre_start >= r2 {
                    w.truncate(pre_start);
                }
            }
        }
        "idad" | "idades" => {
            if start < r2 {
                return false;
            }
            w.truncate(start);
            if let Some((_, pre_start)) = w.longest_suffix(&["abil", "ic", "iv"], 0) {
                if pre_start >= r2 {
                    w.truncate(pre_start);
                }
            }
        }
        "iva" | "ivo" | "ivas" | "ivos" => {
            if start < r2 {
                return false;
            }
            w.truncate(start);
            w.delete_if_in("at", r2);
        }
        _ => {
            if start < r2 {
                return false;
            }
            w.truncate(start);
        }
    }
    true
}

fn y_verb_suffix(w: &mut Word) -> bool {
    let Some((_, start)) = w.longest_suffix(Y_VERB_SUFFIXES, w.rv) else {
        return false;
    };
    if w.char_before(start) != Some('u') {
        return false;
    }
    w.truncate(start);
    true
}

fn verb_suffix(w: &mut Word) -> bool {
    let Some((suffix, start)) = w.longest_suffix(VERB_SUFFIXES, w.rv) else {
        return false;
    };
    let mut cut = start;
    if VERB_SUFFIXES_GU.contains(&suffix)
        && w.char_before(start) == Some('u')
        && w.char_before(start - 1) == Some('g')
    {
        cut -= 1;
    }
    w.truncate(cut);
    true
}

fn residual_suffix(w: &mut Word) {
    let Some((suffix, start)) = w.longest_suffix(RESIDUAL_SUFFIXES, 0) else {
        return;
    };
    if start < w.rv {
        return;
    }
    w.truncate(start);
    if matches!(suffix, "e" | "é") {
        let n = w.len();
        if w.ends_with("gu") && n - 1 >= w.rv {
            w.truncate(n - 1);
        }
    }
}

fn fold_accent(c: char) -> char {
    match c {
        'á' => 'a',
        'é' => 'e',
        'í' => 'i',
        'ó' => 'o',
        'ú' => 'u',
        other => other,
    }
}

/// One pass of the Snowball Spanish algorithm over a lowercase word.
pub fn snowball(word: &str) -> String {
    let mut w = Word::new(word);
    attached_pronoun(&mut w);
    let _ = standard_suffix(&mut w) || y_verb_suffix(&mut w) || verb_suffix(&mut w);
    residual_suffix(&mut w);
    w.chars.into_iter().map(fold_accent).collect()
}

/// Stems a lowercase Spanish word.
///
/// A single Snowball pass is not idempotent (`abucheare` -> `abuchear` ->
/// `abuch`), so passes are repeated until the word stops changing. No pass
/// lengthens a word and accent folding only removes accents, so this
/// terminates after a handful of passes.
pub fn stem(word: &str) -> String {
    let mut current = snowball(word);
    loop {
        let next = snowball(&current);
        if next == current {
            return current;
        }
        current = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regions_follow_snowball_definitions() {
        // "macho": consonant-vowel start, RV after the third letter.
        assert_eq!(mark_rv(&"macho".chars().collect::<Vec<_>>()), 3);
        // "oliva": vowel-consonant start, RV after the next vowel.
        assert_eq!(mark_rv(&"oliva".chars().collect::<Vec<_>>()), 3);
        // "trabajo": consonant-consonant start, RV after the first vowel.
        assert_eq!(mark_rv(&"trabajo".chars().collect::<Vec<_>>()), 3);
        // "áureo": vowel-vowel start, RV after the next consonant.
        assert_eq!(mark_rv(&"áureo".chars().collect::<Vec<_>>()), 3);
        let w: Vec<char> = "beautiful".chars().collect();
        let r1 = region_after(&w, 0);
        assert_eq!(r1, 5);
        assert_eq!(region_after(&w, r1), 7);
    }

    #[test]
    fn single_letters_are_unchanged() {
        for t in ["a", "y", "o", "e", "b"] {
            assert_eq!(stem(t), t);
        }
    }

    #[test]
    fn verb_tenses_share_a_stem() {
        assert_eq!(stem("cantaba"), stem("cantando"));
        assert_eq!(stem("cantaba"), "cant");
    }

    #[test]
    fn attached_pronouns_are_removed() {
        assert_eq!(stem("haciéndola"), "hac");
        assert_eq!(stem("decirle"), "dec");
    }

    #[test]
    fn stem_is_a_fixed_point_of_snowball() {
        assert_eq!(snowball("abucheare"), "abuchear");
        assert_eq!(stem("abucheare"), "abuch");
        assert_eq!(stem("abuch"), "abuch");
    }

    #[test]
    fn empty_word() {
        assert_eq!(stem(""), "");
    }
}
