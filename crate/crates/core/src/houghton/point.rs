use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A point `m ∈ ℕ_i` of `X = ℕ_1 ⊔ … ⊔ ℕ_n`, serialized as `[i, m]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "(u32, u64)", into = "(u32, u64)")]
pub struct Point {
    pub branch: u32,
    pub pos: u64,
}

impl Point {
    pub fn new(branch: u32, pos: u64) -> Self {
        assert!(branch >= 1 && pos >= 1, "points are 1-indexed");
        Point { branch, pos }
    }

    /// `self` moved by `delta` along its branch, if it stays in the branch.
    pub fn shifted(&self, delta: i64) -> Option<Point> {
        let pos = self.pos as i64 + delta;
        (pos >= 1).then_some(Point { branch: self.branch, pos: pos as u64 })
    }
}

impl TryFrom<(u32, u64)> for Point {
    type Error = Error;

    fn try_from((branch, pos): (u32, u64)) -> Result<Self, Error> {
        if branch == 0 || pos == 0 {
            return Err(Error::InvalidElement(format!("point [{branch}, {pos}] is not 1-indexed")));
        }
        Ok(Point { branch, pos })
    }
}

impl From<Point> for (u32, u64) {
    fn from(p: Point) -> Self {
        (p.branch, p.pos)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.branch, self.pos)
    }
}

/// The ray `[start, ∞) ⊆ ℕ_branch`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tail {
    pub branch: u32,
    pub start: u64,
}

impl Tail {
    pub fn new(branch: u32, start: u64) -> Self {
        assert!(branch >= 1 && start >= 1, "tails are 1-indexed");
        Tail { branch, start }
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.branch == self.branch && p.pos >= self.start
    }
}

/// A subset of X made of finitely many points and at most one tail per
/// branch. Normalized: no point lies in or directly below a tail.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HRegion {
    points: BTreeSet<Point>,
    tails: BTreeMap<u32, u64>,
}

impl HRegion {
    pub fn new(points: impl IntoIterator<Item = Point>, tails: impl IntoIterator<Item = Tail>) -> Self {
        let mut region = HRegion::default();
        for t in tails {
            let start = region.tails.entry(t.branch).or_insert(t.start);
            *start = (*start).min(t.start);
        }
        region.points = points.into_iter().collect();
        region.normalize();
        region
    }

    fn normalize(&mut self) {
        let tails = &mut self.tails;
        self.points.retain(|p| tails.get(&p.branch).is_none_or(|&s| p.pos < s));
        for (&branch, start) in tails.iter_mut() {
            while *start > 1 && self.points.remove(&Point { branch, pos: *start - 1 }) {
                *start -= 1;
            }
        }
    }

    pub fn points(&self) -> &BTreeSet<Point> {
        &self.points
    }

    pub fn tails(&self) -> impl Iterator<Item = Tail> + '_ {
        self.tails.iter().map(|(&branch, &start)| Tail { branch, start })
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        self.points.contains(p) || self.tails.get(&p.branch).is_some_and(|&s| p.pos >= s)
    }

    pub fn is_disjoint(&self, other: &HRegion) -> bool {
        self.points.iter().all(|p| !other.contains_point(p))
            && other.points.iter().all(|p| !self.contains_point(p))
            && self.tails.keys().all(|b| !other.tails.contains_key(b))
    }

    pub fn contains(&self, inner: &HRegion) -> bool {
        inner.points.iter().all(|p| self.contains_point(p))
            && inner.tails.iter().all(|(b, s)| self.tails.get(b).is_some_and(|o| o <= s))
    }

    pub fn union(regions: &[HRegion]) -> HRegion {
        HRegion::new(
            regions.iter().flat_map(|r| r.points.iter().copied()),
            regions.iter().flat_map(|r| r.tails()),
        )
    }

    /// True iff this is all of `ℕ_1 ⊔ … ⊔ ℕ_n`.
    pub fn is_whole(&self, n: u32) -> bool {
        self.points.is_empty() && self.tails.len() == n as usize && (1..=n).all(|b| self.tails.get(&b) == Some(&1))
    }
}
