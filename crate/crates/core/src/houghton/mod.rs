//! Houghton's group `H_n` acting on point and ray classes over
//! `X = ℕ_1 ⊔ … ⊔ ℕ_n`.
//!
//! A ray class expands by peeling off its first point; point classes do not
//! expand. A (point, ray) pair is the basin of at most one element.

mod element;
mod group;
mod point;

pub use element::{
    canonicalize_h, coexpansions_h, expand_h, Domain, HoughtonElement, HoughtonPointClass, HoughtonRayClass,
    HoughtonRawMap,
};
pub use group::{assemble_h, transfer_h, HoughtonMap, HoughtonPiece};
pub use point::{HRegion, Point, Tail};

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::expansion::{push_expansion, AscendingPath, ExpansionInstance, Vertex};

/// The `H_n` instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Houghton {
    n: u32,
}

impl Default for Houghton {
    fn default() -> Self {
        Houghton { n: 2 }
    }
}

impl Houghton {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parse("Houghton groups need n >= 1".into()));
        }
        Ok(Houghton { n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The standard vertex with a straight ray starting at `starts[i - 1]`
    /// on each branch `i` and every point below it.
    pub fn standard_vertex(&self, starts: &[u64]) -> Vertex<HoughtonElement> {
        assert_eq!(starts.len(), self.n as usize);
        let mut els = Vec::new();
        for (i, &start) in starts.iter().enumerate() {
            let b = i as u32 + 1;
            els.extend((1..start).map(|pos| HoughtonElement::point(b, pos)));
            els.push(HoughtonElement::straight_ray(b, start));
        }
        Vertex::from_disjoint(els)
    }

    /// Tail start of every branch in a standard vertex.
    fn tail_starts(&self, s: &Vertex<HoughtonElement>) -> BTreeMap<u32, u64> {
        s.elements()
            .iter()
            .filter_map(HoughtonElement::as_ray)
            .map(|r| {
                assert!(r.exceptions().is_empty(), "join_standard needs standard vertices");
                (r.branch(), r.tail())
            })
            .collect()
    }

    fn extend_tails(&self, s: &Vertex<HoughtonElement>, target: &BTreeMap<u32, u64>) -> AscendingPath<HoughtonElement> {
        let mut path = AscendingPath::trivial(s.clone());
        loop {
            let next = path
                .end()
                .elements()
                .iter()
                .find(|b| b.as_ray().is_some_and(|r| r.tail() < target[&r.branch()]))
                .cloned();
            match next {
                Some(b) => push_expansion(self, &mut path, &b),
                None => return path,
            }
        }
    }
}

impl ExpansionInstance for Houghton {
    type Element = HoughtonElement;
    type Region = HRegion;
    type Group = HoughtonMap;
    type Piece = HoughtonPiece;

    fn tag(&self) -> &'static str {
        "houghton"
    }

    fn check_element(&self, b: &HoughtonElement) -> Result<()> {
        match b.branches().into_iter().find(|&i| i > self.n) {
            Some(i) => Err(Error::InvalidElement(format!("branch {i} does not exist in H_{}", self.n))),
            None => Ok(()),
        }
    }

    fn check_group(&self, g: &HoughtonMap) -> Result<()> {
        if g.n() != self.n {
            return Err(Error::InvalidElement(format!("group element of H_{} used with H_{}", g.n(), self.n)));
        }
        Ok(())
    }

    fn support(&self, b: &HoughtonElement) -> HRegion {
        b.support()
    }

    fn regions_disjoint(&self, a: &HRegion, b: &HRegion) -> bool {
        a.is_disjoint(b)
    }

    fn region_contains(&self, outer: &HRegion, inner: &HRegion) -> bool {
        outer.contains(inner)
    }

    fn covers_space(&self, regions: &[HRegion]) -> bool {
        HRegion::union(regions).is_whole(self.n)
    }

    fn children(&self, b: &HoughtonElement) -> Option<Vec<HoughtonElement>> {
        expand_h(b).ok().map(|(p, r)| vec![p, r])
    }

    fn coexpansions(&self, set: &[HoughtonElement]) -> Vec<HoughtonElement> {
        coexpansions_h(set)
    }

    fn base_vertex(&self) -> Vertex<HoughtonElement> {
        self.standard_vertex(&vec![1; self.n as usize])
    }

    /// Peels exceptional points off every ray until all rays are straight.
    fn standardize(&self, v: &Vertex<HoughtonElement>) -> AscendingPath<HoughtonElement> {
        let mut path = AscendingPath::trivial(v.clone());
        loop {
            let next = path
                .end()
                .elements()
                .iter()
                .find(|b| b.as_ray().is_some_and(|r| !r.exceptions().is_empty()))
                .cloned();
            match next {
                Some(b) => push_expansion(self, &mut path, &b),
                None => return path,
            }
        }
    }

    /// Per branch the later tail start wins; everything below it is points.
    fn join_standard(
        &self,
        s1: &Vertex<HoughtonElement>,
        s2: &Vertex<HoughtonElement>,
    ) -> (AscendingPath<HoughtonElement>, AscendingPath<HoughtonElement>) {
        let (t1, t2) = (self.tail_starts(s1), self.tail_starts(s2));
        let target: BTreeMap<u32, u64> = t1.iter().map(|(b, s)| (*b, (*s).max(t2[b]))).collect();
        (self.extend_tails(s1, &target), self.extend_tails(s2, &target))
    }

    fn identity(&self) -> HoughtonMap {
        HoughtonMap::identity(self.n)
    }

    fn compose(&self, g: &HoughtonMap, h: &HoughtonMap) -> HoughtonMap {
        g.compose(h)
    }

    fn invert(&self, g: &HoughtonMap) -> HoughtonMap {
        g.inverse()
    }

    fn act(&self, g: &HoughtonMap, b: &HoughtonElement) -> HoughtonElement {
        g.act(b)
    }

    fn transfer(&self, b: &HoughtonElement, target: &HoughtonElement) -> Option<HoughtonPiece> {
        transfer_h(b, target)
    }

    fn assemble(&self, pieces: &[HoughtonPiece]) -> Result<HoughtonMap> {
        assemble_h(self.n, pieces)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansion::{is_full_support, validate_vertex};

    #[test]
    fn base_vertex_has_full_support() {
        for n in 1..=3 {
            let h = Houghton::new(n).unwrap();
            assert!(is_full_support(&h, &h.base_vertex()));
            assert_eq!(h.base_vertex().height(), n as usize);
        }
        assert!(Houghton::new(0).is_err());
    }

    #[test]
    fn join_takes_later_tails() {
        let h = Houghton::new(2).unwrap();
        let s1 = h.standard_vertex(&[3, 3]);
        let s2 = h.standard_vertex(&[5, 5]);
        let (p1, p2) = h.join_standard(&s1, &s2);
        assert_eq!(p1.end(), &s2);
        assert_eq!(p2.end(), &s2);
        assert_eq!(p1.len(), 4);
        p1.verify(&h).unwrap();
        let (q1, q2) = h.join_standard(&s1, &s1);
        assert!(q1.is_empty() && q2.is_empty());
        let mixed = h.join_standard(&h.standard_vertex(&[1, 4]), &h.standard_vertex(&[2, 2]));
        assert_eq!(mixed.0.end(), &h.standard_vertex(&[2, 4]));
    }

    #[test]
    fn standardize_peels_exceptions() {
        let h = Houghton::new(2).unwrap();
        let v = validate_vertex(
            &h,
            vec![
                HoughtonElement::ray(1, vec![Point::new(2, 1)], 1).unwrap(),
                HoughtonElement::straight_ray(2, 2),
            ],
        )
        .unwrap();
        assert!(is_full_support(&h, &v));
        let path = h.standardize(&v);
        path.verify(&h).unwrap();
        assert_eq!(path.len(), 1);
        assert_eq!(path.end(), &validate_vertex(&h, vec![HoughtonElement::point(2, 1), HoughtonElement::straight_ray(1, 1), HoughtonElement::straight_ray(2, 2)]).unwrap());
    }

    #[test]
    fn branch_bound_checked() {
        let h = Houghton::new(2).unwrap();
        assert!(validate_vertex(&h, vec![HoughtonElement::point(3, 1)]).is_err());
    }
}
