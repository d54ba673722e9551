//! Finite unions of prefix substitutions and their reduced forms.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::word::{is_antichain, is_complete_code, BallSet, Word};
use crate::error::{Error, Result};

/// A finite union of prefix substitutions `δ -> γ` (replace prefix δ by γ).
///
/// No structural invariant is enforced; this is the input form for
/// canonicalization and the output form of composition.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PrefixMap {
    pub entries: Vec<(Word, Word)>,
}

impl PrefixMap {
    pub fn new(entries: Vec<(Word, Word)>) -> Self {
        PrefixMap { entries }
    }

    /// `σ_from^to`.
    pub fn substitution(from: Word, to: Word) -> Self {
        PrefixMap { entries: vec![(from, to)] }
    }

    pub fn domains(&self) -> Vec<Word> {
        self.entries.iter().map(|(d, _)| d.clone()).collect()
    }

    pub fn images(&self) -> Vec<Word> {
        self.entries.iter().map(|(_, g)| g.clone()).collect()
    }

    /// Swaps domain and image of every entry.
    pub fn inverse(&self) -> PrefixMap {
        PrefixMap { entries: self.entries.iter().map(|(d, g)| (g.clone(), d.clone())).collect() }
    }

    /// `self ∘ inner`, defined on the points of `inner`'s domain that land in
    /// `self`'s domain.
    pub fn compose(&self, inner: &PrefixMap) -> PrefixMap {
        let mut entries = Vec::new();
        for (delta, gamma) in &inner.entries {
            for (alpha, beta) in &self.entries {
                if let Some(rest) = gamma.strip_prefix(alpha) {
                    entries.push((delta.clone(), beta.concat(&rest)));
                } else if let Some(rest) = alpha.strip_prefix(gamma) {
                    entries.push((delta.concat(&rest), beta.clone()));
                }
            }
        }
        PrefixMap { entries }
    }

    /// Image of the ball `B_w`, when `B_w` lies inside a single domain ball.
    pub fn apply_prefix(&self, w: &Word) -> Option<Word> {
        self.entries
            .iter()
            .find_map(|(d, g)| w.strip_prefix(d).map(|rest| g.concat(&rest)))
    }
}

impl FromStr for PrefixMap {
    type Err = Error;

    /// Parses `"00->1, 01->01, 1->00"`. `ε`, `e` or nothing stands for the
    /// empty word.
    fn from_str(s: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (d, g) = part
                .split_once("->")
                .ok_or_else(|| Error::Parse(format!("expected `domain->image`, got {part:?}")))?;
            entries.push((d.parse()?, g.parse()?));
        }
        Ok(PrefixMap { entries })
    }
}

/// Canonical representative of a class `[f, X]`: a reduced table whose
/// domains form a complete prefix code and whose images are pairwise
/// incomparable. Entries are sorted by domain.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<(Word, Word)>", into = "Vec<(Word, Word)>")]
pub struct PrefixMapTable {
    entries: Vec<(Word, Word)>,
}

impl PrefixMapTable {
    /// `[id, B_w]`, written `{(ε -> w)}`.
    pub fn ball(w: Word) -> Self {
        PrefixMapTable { entries: vec![(Word::empty(), w)] }
    }

    pub fn identity() -> Self {
        Self::ball(Word::empty())
    }

    pub fn entries(&self) -> &[(Word, Word)] {
        &self.entries
    }

    /// The image word when this element is `[id, B_w]`.
    pub fn as_ball(&self) -> Option<&Word> {
        match self.entries.as_slice() {
            [(d, g)] if d.is_empty() => Some(g),
            _ => None,
        }
    }

    pub fn to_map(&self) -> PrefixMap {
        PrefixMap { entries: self.entries.clone() }
    }

    pub fn support(&self) -> BallSet {
        BallSet::from_words(self.entries.iter().map(|(_, g)| g))
    }

    /// The canonical restriction to `B_bit`, transported back to X.
    pub fn half(&self, bit: u8) -> PrefixMapTable {
        let mut entries = Vec::new();
        for (d, g) in &self.entries {
            match d.first() {
                None => entries.push((Word::empty(), g.child(bit))),
                Some(b) if b == bit => entries.push((d.strip_prefix(&Word::empty().child(bit)).unwrap(), g.clone())),
                Some(_) => {}
            }
        }
        // A subtree of a reduced table is reduced.
        PrefixMapTable { entries }
    }

    /// The table sending `B_0` through `left` and `B_1` through `right`.
    /// Supports are not checked.
    pub(crate) fn glue_unchecked(left: &PrefixMapTable, right: &PrefixMapTable) -> PrefixMapTable {
        let mut entries: Vec<(Word, Word)> = left.entries.iter().map(|(d, g)| (d.prepend(0), g.clone())).collect();
        entries.extend(right.entries.iter().map(|(d, g)| (d.prepend(1), g.clone())));
        PrefixMapTable { entries: merge_siblings(entries) }
    }
}

/// Validates and reduces a raw table whose domain is all of X.
pub fn reduce_table(raw: &PrefixMap) -> Result<PrefixMapTable> {
    if !is_complete_code(&raw.domains()) {
        return Err(Error::IncompleteDomainCode);
    }
    if !is_antichain(&raw.images()) {
        return Err(Error::OverlappingImages);
    }
    let mut entries = raw.entries.clone();
    entries.sort();
    Ok(PrefixMapTable { entries: merge_siblings(entries) })
}

/// Merges `(δ0 -> γ0), (δ1 -> γ1)` into `(δ -> γ)` until no such pair is left.
/// Input must be sorted by domain (so it lists the leaves of the domain tree
/// left to right).
fn merge_siblings(sorted: Vec<(Word, Word)>) -> Vec<(Word, Word)> {
    let mut stack: Vec<(Word, Word)> = Vec::with_capacity(sorted.len());
    for entry in sorted {
        stack.push(entry);
        while stack.len() >= 2 {
            let n = stack.len();
            let (d1, g1) = &stack[n - 1];
            let (d0, g0) = &stack[n - 2];
            let merged = match (d0.split_last(), d1.split_last(), g0.split_last(), g1.split_last()) {
                (Some((dp0, 0)), Some((dp1, 1)), Some((gp0, 0)), Some((gp1, 1))) if dp0 == dp1 && gp0 == gp1 => {
                    Some((dp0, gp0))
                }
                _ => None,
            };
            match merged {
                Some(e) => {
                    stack.truncate(n - 2);
                    stack.push(e);
                }
                None => break,
            }
        }
    }
    stack
}

impl TryFrom<Vec<(Word, Word)>> for PrefixMapTable {
    type Error = Error;

    fn try_from(entries: Vec<(Word, Word)>) -> Result<Self> {
        reduce_table(&PrefixMap { entries })
    }
}

impl From<PrefixMapTable> for Vec<(Word, Word)> {
    fn from(t: PrefixMapTable) -> Self {
        t.entries
    }
}

impl FromStr for PrefixMapTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        reduce_table(&s.parse()?)
    }
}

impl fmt::Display for PrefixMapTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (d, g)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{d}->{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PrefixMapTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// Canonical form of `(f, B_ω)`: precompose with `σ_ε^ω` and reduce.
pub fn canonicalize(f: &PrefixMap, domain: &Word) -> Result<PrefixMapTable> {
    let mut entries = Vec::with_capacity(f.entries.len());
    for (d, g) in &f.entries {
        let rest = d
            .strip_prefix(domain)
            .ok_or_else(|| Error::DomainMismatch(format!("{d} lies outside B_{domain}")))?;
        entries.push((rest, g.clone()));
    }
    reduce_table(&PrefixMap { entries }).map_err(|e| match e {
        Error::IncompleteDomainCode => Error::DomainMismatch(format!("domain pieces do not partition B_{domain}")),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> PrefixMapTable {
        s.parse().unwrap()
    }

    fn m(s: &str) -> PrefixMap {
        s.parse().unwrap()
    }

    #[test]
    fn identity_reduces() {
        assert_eq!(t("0->0, 1->1"), PrefixMapTable::identity());
        assert_eq!(t("00->00, 01->01, 10->10, 11->11"), PrefixMapTable::identity());
    }

    #[test]
    fn transposition_is_already_reduced() {
        assert_eq!(t("0->1, 1->0").entries().len(), 2);
    }

    // Every entry in either table covers all length-3 words below it, so
    // comparing images of all length-3 words compares the functions.
    #[test]
    fn reduction_preserves_function() {
        let raw = m("00->10, 01->11, 1->0");
        let reduced = reduce_table(&raw).unwrap();
        assert_eq!(reduced, t("0->1, 1->0"));
        for bits in 0..8u8 {
            let w: Word = format!("{:03b}", bits).parse().unwrap();
            assert_eq!(raw.apply_prefix(&w), reduced.to_map().apply_prefix(&w));
        }
    }

    #[test]
    fn reduction_errors() {
        assert!(matches!(reduce_table(&m("0->0")), Err(Error::IncompleteDomainCode)));
        assert!(matches!(reduce_table(&m("0->1, 1->10")), Err(Error::OverlappingImages)));
    }

    #[test]
    fn canonicalize_transports_domain() {
        // σ_1^0 on B_1
        assert_eq!(canonicalize(&m("1->0"), &"1".parse().unwrap()).unwrap(), t("->0"));
        let omega: Word = "0110".parse().unwrap();
        assert_eq!(
            canonicalize(&PrefixMap::substitution(omega.clone(), omega.clone()), &omega).unwrap(),
            PrefixMapTable::ball(omega)
        );
        assert!(matches!(canonicalize(&m("1->0"), &"0".parse().unwrap()), Err(Error::DomainMismatch(_))));
        assert!(matches!(canonicalize(&m("10->0"), &"1".parse().unwrap()), Err(Error::DomainMismatch(_))));
    }

    #[test]
    fn support_merges_sibling_images() {
        assert_eq!(t("0->10, 1->11"), PrefixMapTable::ball("1".parse().unwrap()));
        assert_eq!(t("0->11, 1->10").support().words(), &["1".parse::<Word>().unwrap()][..]);
        assert!(t("0->1, 1->0").support().is_whole());
    }

    #[test]
    fn halves_and_glue() {
        let a = t("0->1, 1->0");
        assert_eq!(a.half(0), t("->1"));
        assert_eq!(a.half(1), t("->0"));
        assert_eq!(PrefixMapTable::glue_unchecked(&a.half(0), &a.half(1)), a);
        let id = PrefixMapTable::identity();
        assert_eq!(id.half(0), t("->0"));
        let b = t("->0110");
        assert_eq!(b.half(1), t("->01101"));
    }

    #[test]
    fn compose_on_overlaps() {
        let a = m("0->1, 1->0");
        let f = m("->0");
        assert_eq!(reduce_table(&a.compose(&f)).unwrap(), t("->1"));
        // partial: σ_0^1 after σ_1^00 is empty
        assert!(m("0->1").compose(&m("1->1")).entries.is_empty());
        let g = m("00->1, 01->00, 1->01");
        let inv = g.inverse();
        assert_eq!(reduce_table(&g.compose(&inv)).unwrap(), PrefixMapTable::identity());
    }

    #[test]
    fn json_literal_roundtrip() {
        let a = t("00->1, 01->01, 1->00");
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"[["00","1"],["01","01"],["1","00"]]"#);
        let back: PrefixMapTable = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
        let reduced: PrefixMapTable = serde_json::from_str(r#"[["0","0"],["1","1"]]"#).unwrap();
        assert_eq!(reduced, PrefixMapTable::identity());
        assert!(serde_json::from_str::<PrefixMapTable>(r#"[["0","0"]]"#).is_err());
    }
}
