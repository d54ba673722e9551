use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A finite binary word. The empty word names the whole Cantor set; a word
/// `w` names the ball of all sequences starting with `w`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Word(String);

impl Word {
    pub fn empty() -> Self {
        Word(String::new())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True when `self` is a (not necessarily proper) prefix of `other`.
    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn comparable(&self, other: &Word) -> bool {
        self.is_prefix_of(other) || other.is_prefix_of(self)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut s = String::with_capacity(self.len() + other.len());
        s.push_str(&self.0);
        s.push_str(&other.0);
        Word(s)
    }

    pub fn child(&self, bit: u8) -> Word {
        let mut s = self.0.clone();
        s.push(if bit == 0 { '0' } else { '1' });
        Word(s)
    }

    pub fn prepend(&self, bit: u8) -> Word {
        let mut s = String::with_capacity(self.len() + 1);
        s.push(if bit == 0 { '0' } else { '1' });
        s.push_str(&self.0);
        Word(s)
    }

    pub fn strip_prefix(&self, prefix: &Word) -> Option<Word> {
        self.0.strip_prefix(prefix.as_str()).map(|s| Word(s.to_owned()))
    }

    /// Splits off the last letter.
    pub fn split_last(&self) -> Option<(Word, u8)> {
        let bit = match self.0.as_bytes().last()? {
            b'0' => 0,
            _ => 1,
        };
        Some((Word(self.0[..self.len() - 1].to_owned()), bit))
    }

    pub fn first(&self) -> Option<u8> {
        self.0.as_bytes().first().map(|b| b - b'0')
    }
}

impl TryFrom<String> for Word {
    type Error = Error;

    fn try_from(s: String) -> Result<Self, Error> {
        if s.bytes().all(|b| b == b'0' || b == b'1') {
            Ok(Word(s))
        } else {
            Err(Error::Parse(format!("not a binary word: {s:?}")))
        }
    }
}

impl From<Word> for String {
    fn from(w: Word) -> String {
        w.0
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `ε` or `e` for the empty word.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        match s {
            "ε" | "e" => Ok(Word::empty()),
            _ => Word::try_from(s.to_owned()),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("ε")
        } else {
            f.write_str(&self.0)
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}", self)
    }
}

/// True iff the words are the leaves of a finite full binary tree, i.e.
/// their balls partition the Cantor set.
pub fn is_complete_code(words: &[Word]) -> bool {
    let strs: Vec<&str> = words.iter().map(|w| w.as_str()).collect();
    complete_below(&strs)
}

fn complete_below(words: &[&str]) -> bool {
    if words.len() == 1 && words[0].is_empty() {
        return true;
    }
    if words.is_empty() || words.iter().any(|w| w.is_empty()) {
        return false;
    }
    let zeros: Vec<&str> = words.iter().filter(|w| w.starts_with('0')).map(|w| &w[1..]).collect();
    let ones: Vec<&str> = words.iter().filter(|w| w.starts_with('1')).map(|w| &w[1..]).collect();
    complete_below(&zeros) && complete_below(&ones)
}

/// True iff no word is a prefix of another (duplicates count as comparable).
pub fn is_antichain(words: &[Word]) -> bool {
    let mut sorted: Vec<&Word> = words.iter().collect();
    sorted.sort();
    // In lexicographic order every extension of `w` directly follows `w`.
    sorted.windows(2).all(|p| !p[0].is_prefix_of(p[1]))
}

/// A clopen subset of the Cantor set, stored as its maximal balls.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BallSet(Vec<Word>);

impl BallSet {
    /// Normalizes an arbitrary finite union of balls.
    pub fn from_words<'a>(words: impl IntoIterator<Item = &'a Word>) -> Self {
        let strs: Vec<&str> = words.into_iter().map(|w| w.as_str()).collect();
        let mut out = Vec::new();
        normalize_into(&strs, &mut String::new(), &mut out);
        BallSet(out)
    }

    pub fn whole() -> Self {
        BallSet(vec![Word::empty()])
    }

    pub fn words(&self) -> &[Word] {
        &self.0
    }

    pub fn is_whole(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_empty()
    }

    pub fn is_disjoint(&self, other: &BallSet) -> bool {
        self.0.iter().all(|a| other.0.iter().all(|b| !a.comparable(b)))
    }

    pub fn contains(&self, inner: &BallSet) -> bool {
        inner.0.iter().all(|w| self.0.iter().any(|o| o.is_prefix_of(w)))
    }

    pub fn union(sets: &[BallSet]) -> BallSet {
        BallSet::from_words(sets.iter().flat_map(|s| s.0.iter()))
    }
}

fn normalize_into(words: &[&str], prefix: &mut String, out: &mut Vec<Word>) {
    if words.is_empty() {
        return;
    }
    if words.iter().any(|w| w.is_empty()) || covers_all(words) {
        out.push(Word(prefix.clone()));
        return;
    }
    for (bit, c) in [(0u8, '0'), (1u8, '1')] {
        let sub: Vec<&str> = words.iter().filter(|w| w.as_bytes()[0] == b'0' + bit).map(|w| &w[1..]).collect();
        prefix.push(c);
        normalize_into(&sub, prefix, out);
        prefix.pop();
    }
}

fn covers_all(words: &[&str]) -> bool {
    if words.iter().any(|w| w.is_empty()) {
        return true;
    }
    if words.is_empty() {
        return false;
    }
    let zeros: Vec<&str> = words.iter().filter(|w| w.starts_with('0')).map(|w| &w[1..]).collect();
    let ones: Vec<&str> = words.iter().filter(|w| w.starts_with('1')).map(|w| &w[1..]).collect();
    covers_all(&zeros) && covers_all(&ones)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn ws(list: &[&str]) -> Vec<Word> {
        list.iter().map(|s| w(s)).collect()
    }

    #[test]
    fn complete_codes() {
        assert!(is_complete_code(&ws(&["e"])));
        assert!(is_complete_code(&ws(&["0", "10", "11"])));
        assert!(!is_complete_code(&ws(&["0", "10"])));
        assert!(!is_complete_code(&ws(&["0", "0", "1"])));
        assert!(!is_complete_code(&ws(&["0", "00", "1"])));
        assert!(!is_complete_code(&[]));
    }

    #[test]
    fn antichains() {
        assert!(is_antichain(&ws(&["0", "10"])));
        assert!(!is_antichain(&ws(&["1", "10"])));
        assert!(!is_antichain(&ws(&["01", "01"])));
        assert!(!is_antichain(&ws(&["e", "0"])));
    }

    #[test]
    fn ball_set_merges_siblings() {
        assert_eq!(BallSet::from_words(&ws(&["10", "11"])).words(), &ws(&["1"])[..]);
        assert!(BallSet::from_words(&ws(&["0", "10", "11"])).is_whole());
        assert_eq!(BallSet::from_words(&ws(&["0", "01", "110"])).words(), &ws(&["0", "110"])[..]);
        let s = BallSet::from_words(&ws(&["00", "011", "010", "1"]));
        assert!(s.is_whole());
    }

    #[test]
    fn ball_set_relations() {
        let a = BallSet::from_words(&ws(&["0"]));
        let b = BallSet::from_words(&ws(&["1"]));
        let c = BallSet::from_words(&ws(&["01"]));
        assert!(a.is_disjoint(&b));
        assert!(!a.is_disjoint(&c));
        assert!(a.contains(&c));
        assert!(!c.contains(&a));
    }

    #[test]
    fn word_parsing() {
        assert!("012".parse::<Word>().is_err());
        assert_eq!(w("ε"), Word::empty());
        assert_eq!(w("").to_string(), "ε");
        assert_eq!(w("01").split_last(), Some((w("0"), 1)));
    }
}
