use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::element::{HoughtonElement, HoughtonPointClass, HoughtonRayClass};
use super::point::Point;
use crate::error::{Error, Result};

/// An element of `H_n`: a bijection of X that is a translation by
/// `offsets[i - 1]` on every far enough point of `ℕ_i`.
///
/// Canonical: `exceptions` lists exactly the points whose image differs from
/// the translate (including points the translate would push off the branch).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Deserialize)]
#[serde(try_from = "HoughtonMapLiteral")]
pub struct HoughtonMap {
    n: u32,
    offsets: Vec<i64>,
    exceptions: BTreeMap<Point, Point>,
}

#[derive(Deserialize)]
struct HoughtonMapLiteral {
    n: u32,
    offsets: Vec<i64>,
    #[serde(default)]
    exceptions: Vec<(Point, Point)>,
}

impl TryFrom<HoughtonMapLiteral> for HoughtonMap {
    type Error = Error;

    fn try_from(lit: HoughtonMapLiteral) -> Result<Self> {
        let mut exceptions = BTreeMap::new();
        for (x, y) in lit.exceptions {
            if exceptions.insert(x, y).is_some() {
                return Err(Error::NotABijection(format!("{x:?} listed twice")));
            }
        }
        HoughtonMap::from_parts(lit.n, lit.offsets, exceptions)
    }
}

// Serialize exceptions as a list of pairs; JSON maps need string keys.
impl Serialize for HoughtonMapSer<'_> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("HoughtonMap", 3)?;
        st.serialize_field("n", &self.0.n)?;
        st.serialize_field("offsets", &self.0.offsets)?;
        let pairs: Vec<(Point, Point)> = self.0.exceptions.iter().map(|(a, b)| (*a, *b)).collect();
        st.serialize_field("exceptions", &pairs)?;
        st.end()
    }
}

struct HoughtonMapSer<'a>(&'a HoughtonMap);

/// Per-branch translation piece `[from, ∞) -> [to, ∞)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct TailPiece {
    from: u64,
    to: u64,
}

impl HoughtonMap {
    pub fn identity(n: u32) -> Self {
        HoughtonMap { n, offsets: vec![0; n as usize], exceptions: BTreeMap::new() }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn offsets(&self) -> &[i64] {
        &self.offsets
    }

    pub fn exceptions(&self) -> &BTreeMap<Point, Point> {
        &self.exceptions
    }

    /// Builds from translation offsets plus finitely many overrides.
    pub fn from_parts(n: u32, offsets: Vec<i64>, exceptions: BTreeMap<Point, Point>) -> Result<Self> {
        if n == 0 || offsets.len() != n as usize {
            return Err(Error::NotABijection(format!("expected {n} offsets, got {}", offsets.len())));
        }
        if let Some(p) = exceptions.keys().chain(exceptions.values()).find(|p| p.branch > n) {
            return Err(Error::NotABijection(format!("{p:?} is outside X")));
        }
        let mut head = BTreeMap::new();
        let mut tails = Vec::with_capacity(n as usize);
        for b in 1..=n {
            let t = offsets[b as usize - 1];
            let last_exception = exceptions.range(Point { branch: b, pos: 1 }..=Point { branch: b, pos: u64::MAX }).next_back();
            let bound = (1i64).max(1 - t).max(last_exception.map_or(1, |(p, _)| p.pos as i64 + 1)) as u64;
            for pos in 1..bound {
                let x = Point { branch: b, pos };
                let y = match exceptions.get(&x) {
                    Some(y) => *y,
                    None => x.shifted(t).ok_or_else(|| Error::NotABijection(format!("{x:?} has no image")))?,
                };
                head.insert(x, y);
            }
            tails.push(TailPiece { from: bound, to: (bound as i64 + t) as u64 });
        }
        Self::from_pieces(n, head, &tails)
    }

    /// `head` must map exactly the points below each tail piece.
    fn from_pieces(n: u32, head: BTreeMap<Point, Point>, tails: &[TailPiece]) -> Result<Self> {
        let mut images = BTreeSet::new();
        for (x, y) in &head {
            let tail = tails[x.branch as usize - 1];
            if x.pos >= tail.from {
                return Err(Error::NotABijection(format!("{x:?} is covered twice")));
            }
            if y.branch == 0 || y.branch > n || y.pos >= tails[y.branch as usize - 1].to {
                return Err(Error::NotABijection(format!("{y:?} is hit twice or lies outside X")));
            }
            if !images.insert(*y) {
                return Err(Error::NotABijection(format!("{y:?} is hit twice")));
            }
        }
        let domain_size: u64 = tails.iter().map(|t| t.from - 1).sum();
        let image_size: u64 = tails.iter().map(|t| t.to - 1).sum();
        if head.len() as u64 != domain_size {
            return Err(Error::NotABijection("some points have no image".into()));
        }
        if images.len() as u64 != image_size {
            return Err(Error::NotABijection("some points are not hit".into()));
        }
        let offsets: Vec<i64> = tails.iter().map(|t| t.to as i64 - t.from as i64).collect();
        let exceptions = head
            .into_iter()
            .filter(|(x, y)| x.shifted(offsets[x.branch as usize - 1]) != Some(*y))
            .collect();
        Ok(HoughtonMap { n, offsets, exceptions })
    }

    fn offset(&self, branch: u32) -> i64 {
        self.offsets[branch as usize - 1]
    }

    /// Smallest position from which `branch` is purely translated.
    fn bound(&self, branch: u32) -> u64 {
        let t = self.offset(branch);
        let last = self
            .exceptions
            .range(Point { branch, pos: 1 }..=Point { branch, pos: u64::MAX })
            .next_back()
            .map_or(1, |(p, _)| p.pos + 1);
        ((1 - t).max(1) as u64).max(last)
    }

    pub fn eval(&self, x: &Point) -> Point {
        match self.exceptions.get(x) {
            Some(y) => *y,
            None => x.shifted(self.offset(x.branch)).expect("canonical maps translate inside the branch"),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &HoughtonMap) -> HoughtonMap {
        assert_eq!(self.n, other.n, "composing maps of different H_n");
        let mut head = BTreeMap::new();
        let mut tails = Vec::new();
        for b in 1..=self.n {
            let th = other.offset(b);
            let k = (other.bound(b) as i64).max(self.bound(b) as i64 - th).max(1) as u64;
            for pos in 1..k {
                let x = Point { branch: b, pos };
                head.insert(x, self.eval(&other.eval(&x)));
            }
            tails.push(TailPiece { from: k, to: (k as i64 + th + self.offset(b)) as u64 });
        }
        Self::from_pieces(self.n, head, &tails).expect("composition of bijections is a bijection")
    }

    pub fn inverse(&self) -> HoughtonMap {
        let mut head = BTreeMap::new();
        let mut tails = Vec::new();
        for b in 1..=self.n {
            let m = self.bound(b);
            for pos in 1..m {
                let x = Point { branch: b, pos };
                head.insert(self.eval(&x), x);
            }
            tails.push(TailPiece { from: (m as i64 + self.offset(b)) as u64, to: m });
        }
        Self::from_pieces(self.n, head, &tails).expect("inverse of a bijection is a bijection")
    }

    /// `[g ∘ f, D]`.
    pub fn act(&self, b: &HoughtonElement) -> HoughtonElement {
        match b {
            HoughtonElement::Point(p) => HoughtonElement::Point(HoughtonPointClass { image: self.eval(&p.image) }),
            HoughtonElement::Ray(r) => {
                let m = r.exceptions().len() as u64 + 1;
                let need = self.bound(r.branch());
                // positions j ≥ len + 1 must land at or beyond `need`
                let len = (m - 1).max((m as i64 - 1 + need as i64 - r.tail() as i64).max(0) as u64);
                HoughtonElement::Ray(HoughtonRayClass::from_eval(r.branch(), len, |j| self.eval(&r.image(j))))
            }
        }
    }
}

/// A piece of a group element carrying one support onto another.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HoughtonPiece {
    pub points: Vec<(Point, Point)>,
    /// `(branch, from, to)`: `[from, ∞) -> [to, ∞)` inside `ℕ_branch`.
    pub tail: Option<(u32, u64, u64)>,
}

/// Transfer from `b` to `target`: exists between two point classes, and
/// between two ray classes with the same domain branch.
pub fn transfer_h(b: &HoughtonElement, target: &HoughtonElement) -> Option<HoughtonPiece> {
    match (b, target) {
        (HoughtonElement::Point(p), HoughtonElement::Point(q)) => {
            Some(HoughtonPiece { points: vec![(p.image, q.image)], tail: None })
        }
        (HoughtonElement::Ray(r), HoughtonElement::Ray(s)) if r.branch() == s.branch() => {
            let len = r.exceptions().len().max(s.exceptions().len()) as u64;
            let points = (1..=len).map(|j| (r.image(j), s.image(j))).collect();
            let (from, to) = (r.image(len + 1), s.image(len + 1));
            Some(HoughtonPiece { points, tail: Some((r.branch(), from.pos, to.pos)) })
        }
        _ => None,
    }
}

/// Glues pieces whose domains and images partition X.
pub fn assemble_h(n: u32, pieces: &[HoughtonPiece]) -> Result<HoughtonMap> {
    let mut head = BTreeMap::new();
    let mut tails: Vec<Option<TailPiece>> = vec![None; n as usize];
    for piece in pieces {
        for (x, y) in &piece.points {
            if x.branch > n || head.insert(*x, *y).is_some() {
                return Err(Error::NotABijection(format!("{x:?} is covered twice or lies outside X")));
            }
        }
        if let Some((b, from, to)) = piece.tail {
            let slot = tails
                .get_mut(b as usize - 1)
                .ok_or_else(|| Error::NotABijection(format!("branch {b} is outside X")))?;
            if slot.replace(TailPiece { from, to }).is_some() {
                return Err(Error::NotABijection(format!("branch {b} has two tail pieces")));
            }
        }
    }
    let tails = tails
        .into_iter()
        .enumerate()
        .map(|(i, t)| t.ok_or_else(|| Error::NotABijection(format!("branch {} has no tail piece", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    HoughtonMap::from_pieces(n, head, &tails)
}

impl Serialize for HoughtonMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HoughtonMapSer(self).serialize(s)
    }
}
