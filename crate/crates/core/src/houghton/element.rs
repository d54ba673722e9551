//! Canonical classes `[f, D]` for Houghton's groups.
//!
//! A class with singleton domain is determined by the image point alone. A
//! class with a ray domain keeps its domain branch `i` (rays are only related
//! by translations inside a branch), is transported to `[1, ∞) ⊆ ℕ_i`, and is
//! recorded as the images of its first few positions plus the start of the
//! image tail.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::point::{HRegion, Point, Tail};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HoughtonPointClass {
    pub image: Point,
}

/// `[f, [1, ∞) ⊆ ℕ_branch]` with `f(j) = exceptions[j - 1]` for
/// `j ≤ exceptions.len()`, and the remaining positions translated onto
/// `[tail, ∞) ⊆ ℕ_branch`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RayLiteral")]
pub struct HoughtonRayClass {
    branch: u32,
    exceptions: Vec<Point>,
    tail: u64,
}

#[derive(Deserialize)]
struct RayLiteral {
    branch: u32,
    #[serde(default)]
    exceptions: Vec<Point>,
    tail: u64,
}

impl TryFrom<RayLiteral> for HoughtonRayClass {
    type Error = Error;

    fn try_from(r: RayLiteral) -> Result<Self> {
        HoughtonRayClass::new(r.branch, r.exceptions, r.tail)
    }
}

impl HoughtonRayClass {
    /// Validates and reduces.
    pub fn new(branch: u32, exceptions: Vec<Point>, tail: u64) -> Result<Self> {
        if branch == 0 || tail == 0 {
            return Err(Error::InvalidElement("branch and tail are 1-indexed".into()));
        }
        let image_tail = Tail::new(branch, tail);
        let mut seen = BTreeSet::new();
        for p in &exceptions {
            if !seen.insert(*p) || image_tail.contains(p) {
                return Err(Error::OverlappingImages);
            }
        }
        let mut ray = HoughtonRayClass { branch, exceptions, tail };
        ray.reduce();
        Ok(ray)
    }

    /// Identity-like ray `[id, [tail, ∞)]` in `ℕ_branch`.
    pub fn straight(branch: u32, tail: u64) -> Self {
        HoughtonRayClass { branch, exceptions: Vec::new(), tail }
    }

    fn reduce(&mut self) {
        while self.tail > 1 && self.exceptions.last() == Some(&Point { branch: self.branch, pos: self.tail - 1 }) {
            self.exceptions.pop();
            self.tail -= 1;
        }
    }

    pub fn branch(&self) -> u32 {
        self.branch
    }

    pub fn exceptions(&self) -> &[Point] {
        &self.exceptions
    }

    pub fn tail(&self) -> u64 {
        self.tail
    }

    /// Image of position `j ≥ 1`.
    pub fn image(&self, j: u64) -> Point {
        let m = self.exceptions.len() as u64 + 1;
        if j < m {
            self.exceptions[(j - 1) as usize]
        } else {
            Point { branch: self.branch, pos: self.tail + (j - m) }
        }
    }

    pub fn support(&self) -> HRegion {
        HRegion::new(self.exceptions.iter().copied(), [Tail::new(self.branch, self.tail)])
    }

    /// Peels off the first position: `(point f(1), ray f|[2,∞))`.
    pub fn split_first(&self) -> (HoughtonPointClass, HoughtonRayClass) {
        let point = HoughtonPointClass { image: self.image(1) };
        let rest = if self.exceptions.is_empty() {
            HoughtonRayClass::straight(self.branch, self.tail + 1)
        } else {
            HoughtonRayClass { branch: self.branch, exceptions: self.exceptions[1..].to_vec(), tail: self.tail }
        };
        (point, rest)
    }

    /// The ray whose first position maps to `p` and the rest through `self`;
    /// `None` if `p` collides with the image of `self`.
    pub fn prepend(&self, p: Point) -> Option<HoughtonRayClass> {
        if self.support().contains_point(&p) {
            return None;
        }
        let mut exceptions = Vec::with_capacity(self.exceptions.len() + 1);
        exceptions.push(p);
        exceptions.extend_from_slice(&self.exceptions);
        HoughtonRayClass::new(self.branch, exceptions, self.tail).ok()
    }

    /// Builds the class of `j ↦ eval(j)` given that positions `j > len`
    /// already sit on the translation `j ↦ eval(len + 1) + (j - len - 1)`.
    pub(crate) fn from_eval(branch: u32, len: u64, eval: impl Fn(u64) -> Point) -> HoughtonRayClass {
        let exceptions: Vec<Point> = (1..=len).map(&eval).collect();
        let tail_start = eval(len + 1);
        debug_assert_eq!(tail_start.branch, branch);
        let mut ray = HoughtonRayClass { branch, exceptions, tail: tail_start.pos };
        ray.reduce();
        ray
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HoughtonElement {
    Point(HoughtonPointClass),
    Ray(HoughtonRayClass),
}

impl HoughtonElement {
    pub fn point(branch: u32, pos: u64) -> Self {
        HoughtonElement::Point(HoughtonPointClass { image: Point::new(branch, pos) })
    }

    pub fn ray(branch: u32, exceptions: Vec<Point>, tail: u64) -> Result<Self> {
        HoughtonRayClass::new(branch, exceptions, tail).map(HoughtonElement::Ray)
    }

    pub fn straight_ray(branch: u32, tail: u64) -> Self {
        HoughtonElement::Ray(HoughtonRayClass::straight(branch, tail))
    }

    pub fn support(&self) -> HRegion {
        match self {
            HoughtonElement::Point(p) => HRegion::new([p.image], []),
            HoughtonElement::Ray(r) => r.support(),
        }
    }

    pub fn as_ray(&self) -> Option<&HoughtonRayClass> {
        match self {
            HoughtonElement::Ray(r) => Some(r),
            HoughtonElement::Point(_) => None,
        }
    }

    /// Every branch index this element mentions.
    pub(crate) fn branches(&self) -> Vec<u32> {
        match self {
            HoughtonElement::Point(p) => vec![p.image.branch],
            HoughtonElement::Ray(r) => std::iter::once(r.branch).chain(r.exceptions.iter().map(|p| p.branch)).collect(),
        }
    }
}

/// Children of a ray class: the first point and the remaining ray.
pub fn expand_h(b: &HoughtonElement) -> Result<(HoughtonElement, HoughtonElement)> {
    match b {
        HoughtonElement::Point(_) => Err(Error::NoExpansion),
        HoughtonElement::Ray(r) => {
            let (p, rest) = r.split_first();
            Ok((HoughtonElement::Point(p), HoughtonElement::Ray(rest)))
        }
    }
}

/// The (at most one) element whose basin is `set`.
pub fn coexpansions_h(set: &[HoughtonElement]) -> Vec<HoughtonElement> {
    let pair = match set {
        [HoughtonElement::Point(p), HoughtonElement::Ray(r)] | [HoughtonElement::Ray(r), HoughtonElement::Point(p)] => {
            Some((p, r))
        }
        _ => None,
    };
    pair.and_then(|(p, r)| r.prepend(p.image)).map(HoughtonElement::Ray).into_iter().collect()
}

/// Domain of a raw pair `(f, D)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Domain {
    Point(Point),
    Tail(Tail),
}

/// A finite union of point maps `σ_x^y` and in-branch translations
/// `τ^i_{k,ℓ}`. No invariant is enforced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoughtonRawMap {
    #[serde(default)]
    pub points: Vec<(Point, Point)>,
    #[serde(default)]
    pub tails: Vec<(Tail, Tail)>,
}

impl HoughtonRawMap {
    pub fn eval(&self, x: &Point) -> Option<Point> {
        if let Some((_, y)) = self.points.iter().find(|(from, _)| from == x) {
            return Some(*y);
        }
        self.tails
            .iter()
            .find(|(from, _)| from.contains(x))
            .map(|(from, to)| Point { branch: to.branch, pos: to.start + (x.pos - from.start) })
    }

    /// A raw map representing `b` on the given domain (which must be a
    /// singleton for point classes or a tail for ray classes).
    pub fn from_element(b: &HoughtonElement, domain: Domain) -> Result<Self> {
        match (b, domain) {
            (HoughtonElement::Point(p), Domain::Point(x)) => Ok(HoughtonRawMap { points: vec![(x, p.image)], tails: vec![] }),
            (HoughtonElement::Ray(r), Domain::Tail(d)) if d.branch == r.branch => {
                let m = r.exceptions.len() as u64;
                let points = (1..=m).map(|j| (Point { branch: d.branch, pos: d.start + j - 1 }, r.image(j))).collect();
                let tails = vec![(Tail::new(d.branch, d.start + m), Tail::new(r.branch, r.tail))];
                Ok(HoughtonRawMap { points, tails })
            }
            _ => Err(Error::DomainMismatch("element kind does not match the domain".into())),
        }
    }

    /// `self ∘ inner`, defined where `inner` lands in the domain of `self`.
    pub fn compose(&self, inner: &HoughtonRawMap) -> HoughtonRawMap {
        let mut out = HoughtonRawMap::default();
        for (x, y) in &inner.points {
            if let Some(z) = self.eval(y) {
                out.points.push((*x, z));
            }
        }
        for (from, to) in &inner.tails {
            let back = |p: u64| Point { branch: from.branch, pos: p - to.start + from.start };
            for (a, z) in &self.points {
                if to.contains(a) {
                    out.points.push((back(a.pos), *z));
                }
            }
            for (a, b) in &self.tails {
                if a.branch == to.branch {
                    let s = a.start.max(to.start);
                    out.tails.push((Tail::new(from.branch, back(s).pos), Tail::new(b.branch, b.start + (s - a.start))));
                }
            }
        }
        out
    }
}

/// Canonical form of the pair `(f, D)`.
pub fn canonicalize_h(f: &HoughtonRawMap, domain: Domain) -> Result<HoughtonElement> {
    for (from, to) in &f.tails {
        if from.branch != to.branch {
            return Err(Error::CrossBranchTail { from: from.branch, to: to.branch });
        }
    }
    match domain {
        Domain::Point(x) => match (f.points.as_slice(), f.tails.is_empty()) {
            ([(from, to)], true) if *from == x => Ok(HoughtonElement::Point(HoughtonPointClass { image: *to })),
            _ => Err(Error::DomainMismatch(format!("map is not defined on exactly {{{x:?}}}"))),
        },
        Domain::Tail(d) => {
            let (from, to) = match f.tails.as_slice() {
                [(from, to)] if from.branch == d.branch && from.start >= d.start => (from, to),
                _ => return Err(Error::DomainMismatch("a ray domain needs exactly one tail piece inside it".into())),
            };
            let head: BTreeSet<Point> = f.points.iter().map(|(x, _)| *x).collect();
            let expected: BTreeSet<Point> = (d.start..from.start).map(|pos| Point { branch: d.branch, pos }).collect();
            if head != expected || f.points.len() != expected.len() {
                return Err(Error::DomainMismatch("point pieces do not fill the ray below its tail piece".into()));
            }
            let exceptions = (d.start..from.start).map(|pos| f.eval(&Point { branch: d.branch, pos }).unwrap()).collect();
            HoughtonRayClass::new(d.branch, exceptions, to.start).map(HoughtonElement::Ray)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(b: u32, m: u64) -> Point {
        Point::new(b, m)
    }

    #[test]
    fn ray_reduction_merges_last_exception() {
        let r = HoughtonRayClass::new(1, vec![p(2, 4), p(1, 6)], 7).unwrap();
        assert_eq!(r.exceptions(), &[p(2, 4)]);
        assert_eq!(r.tail(), 6);
        let straight = HoughtonRayClass::new(1, vec![p(1, 1), p(1, 2)], 3).unwrap();
        assert_eq!(straight, HoughtonRayClass::straight(1, 1));
    }

    #[test]
    fn ray_rejects_collisions() {
        assert!(HoughtonRayClass::new(1, vec![p(1, 9)], 3).is_err());
        assert!(HoughtonRayClass::new(1, vec![p(2, 1), p(2, 1)], 3).is_err());
    }

    #[test]
    fn expand_identity_ray() {
        let (pt, rest) = expand_h(&HoughtonElement::straight_ray(1, 1)).unwrap();
        assert_eq!(pt, HoughtonElement::point(1, 1));
        assert_eq!(rest, HoughtonElement::straight_ray(1, 2));
    }

    #[test]
    fn expand_consumes_exception() {
        let b = HoughtonElement::ray(1, vec![p(2, 4)], 1).unwrap();
        let (pt, rest) = expand_h(&b).unwrap();
        assert_eq!(pt, HoughtonElement::point(2, 4));
        assert_eq!(rest, HoughtonElement::straight_ray(1, 1));
        assert_eq!(coexpansions_h(&[pt, rest]), vec![b]);
        assert!(matches!(expand_h(&HoughtonElement::point(1, 1)), Err(Error::NoExpansion)));
    }

    #[test]
    fn coexpansion_cases() {
        let got = coexpansions_h(&[HoughtonElement::point(1, 1), HoughtonElement::straight_ray(1, 2)]);
        assert_eq!(got, vec![HoughtonElement::straight_ray(1, 1)]);
        assert!(coexpansions_h(&[HoughtonElement::point(1, 1), HoughtonElement::point(1, 2)]).is_empty());
        assert!(coexpansions_h(&[HoughtonElement::point(1, 5), HoughtonElement::straight_ray(1, 2)]).is_empty());
        // a point from another branch goes in front of the tail
        let got = coexpansions_h(&[HoughtonElement::straight_ray(2, 1), HoughtonElement::point(1, 3)]);
        assert_eq!(got, vec![HoughtonElement::ray(2, vec![p(1, 3)], 1).unwrap()]);
    }

    #[test]
    fn canonicalize_translation() {
        let f = HoughtonRawMap { points: vec![], tails: vec![(Tail::new(1, 3), Tail::new(1, 7))] };
        let b = canonicalize_h(&f, Domain::Tail(Tail::new(1, 3))).unwrap();
        assert_eq!(b, HoughtonElement::straight_ray(1, 7));
        for pos in 3..=10 {
            let x = p(1, pos);
            let s = Point::new(1, pos - 2);
            assert_eq!(f.eval(&x), Some(b.as_ray().unwrap().image(s.pos)));
        }
    }

    #[test]
    fn canonicalize_point_and_errors() {
        let f = HoughtonRawMap { points: vec![(p(2, 5), p(2, 5))], tails: vec![] };
        assert_eq!(canonicalize_h(&f, Domain::Point(p(2, 5))).unwrap(), HoughtonElement::point(2, 5));
        assert!(canonicalize_h(&f, Domain::Point(p(2, 6))).is_err());
        let cross = HoughtonRawMap { points: vec![], tails: vec![(Tail::new(1, 1), Tail::new(2, 1))] };
        assert!(matches!(canonicalize_h(&cross, Domain::Tail(Tail::new(1, 1))), Err(Error::CrossBranchTail { .. })));
        let gap = HoughtonRawMap { points: vec![], tails: vec![(Tail::new(1, 2), Tail::new(1, 1))] };
        assert!(matches!(canonicalize_h(&gap, Domain::Tail(Tail::new(1, 1))), Err(Error::DomainMismatch(_))));
    }

    #[test]
    fn raw_roundtrip_through_canonical() {
        let b = HoughtonElement::ray(2, vec![p(1, 2), p(2, 2)], 4).unwrap();
        let raw = HoughtonRawMap::from_element(&b, Domain::Tail(Tail::new(2, 5))).unwrap();
        assert_eq!(canonicalize_h(&raw, Domain::Tail(Tail::new(2, 5))).unwrap(), b);
    }

    #[test]
    fn json_literals() {
        let b = HoughtonElement::ray(1, vec![p(2, 4)], 1).unwrap();
        let s = serde_json::to_string(&b).unwrap();
        assert_eq!(s, r#"{"branch":1,"exceptions":[[2,4]],"tail":1}"#);
        assert_eq!(serde_json::from_str::<HoughtonElement>(&s).unwrap(), b);
        assert_eq!(serde_json::to_string(&HoughtonElement::point(2, 3)).unwrap(), "[2,3]");
        assert_eq!(serde_json::from_str::<HoughtonElement>("[2,3]").unwrap(), HoughtonElement::point(2, 3));
        // non-reduced literal reduces
        let r: HoughtonElement = serde_json::from_str(r#"{"branch":1,"exceptions":[[1,1]],"tail":2}"#).unwrap();
        assert_eq!(r, HoughtonElement::straight_ray(1, 1));
        assert!(serde_json::from_str::<HoughtonElement>(r#"{"branch":1,"exceptions":[[1,5]],"tail":2}"#).is_err());
    }
}
