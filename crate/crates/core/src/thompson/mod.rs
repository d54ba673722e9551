//! Thompson's group V acting on classes `[f, X]` of prefix-substitution maps.
//!
//! Every class `[f, B_ω]` is transported to domain X (precompose with
//! `σ_ε^ω`), so a class is just its reduced table and class equality is
//! table equality. Supports are image balls; the proper expansion of every
//! element is its restriction to the two halves `B_0`, `B_1`.

mod group;
mod table;
mod word;

use std::collections::BTreeSet;

pub use group::VGroupElement;
pub use table::{canonicalize, reduce_table, PrefixMap, PrefixMapTable};
pub use word::{is_antichain, is_complete_code, BallSet, Word};

use crate::error::{Error, Result};
use crate::expansion::{canonical_key, push_expansion, AscendingPath, ExpansionInstance, Vertex};

/// The V instance. Stateless.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ThompsonV;

/// Children of `b`: its restrictions to `B_0` and `B_1`, in that order.
pub fn expand(b: &PrefixMapTable) -> (PrefixMapTable, PrefixMapTable) {
    (b.half(0), b.half(1))
}

/// The element whose left half is `left` and right half is `right`.
pub fn glue(left: &PrefixMapTable, right: &PrefixMapTable) -> Result<PrefixMapTable> {
    if !left.support().is_disjoint(&right.support()) {
        return Err(Error::OverlappingSupports(0, 1));
    }
    Ok(PrefixMapTable::glue_unchecked(left, right))
}

/// Vertex whose elements are `[id, B_w]` for the given words.
pub fn ball_vertex<'a>(words: impl IntoIterator<Item = &'a str>) -> Result<Vertex<PrefixMapTable>> {
    let els = words
        .into_iter()
        .map(|w| w.parse().map(PrefixMapTable::ball))
        .collect::<Result<Vec<_>>>()?;
    crate::expansion::validate_vertex(&ThompsonV, els)
}

impl ThompsonV {
    /// Ascending path from a standard vertex to the standard vertex of a
    /// finer ball partition.
    fn refine_to(&self, start: &Vertex<PrefixMapTable>, target: &BTreeSet<Word>) -> AscendingPath<PrefixMapTable> {
        let mut path = AscendingPath::trivial(start.clone());
        loop {
            let next = path
                .end()
                .elements()
                .iter()
                .find(|b| b.as_ball().is_some_and(|w| !target.contains(w)))
                .cloned();
            match next {
                Some(b) => push_expansion(self, &mut path, &b),
                None => return path,
            }
        }
    }
}

impl ExpansionInstance for ThompsonV {
    type Element = PrefixMapTable;
    type Region = BallSet;
    type Group = VGroupElement;
    type Piece = PrefixMap;

    fn tag(&self) -> &'static str {
        "v"
    }

    fn support(&self, b: &PrefixMapTable) -> BallSet {
        b.support()
    }

    fn regions_disjoint(&self, a: &BallSet, b: &BallSet) -> bool {
        a.is_disjoint(b)
    }

    fn region_contains(&self, outer: &BallSet, inner: &BallSet) -> bool {
        outer.contains(inner)
    }

    fn covers_space(&self, regions: &[BallSet]) -> bool {
        BallSet::union(regions).is_whole()
    }

    fn children(&self, b: &PrefixMapTable) -> Option<Vec<PrefixMapTable>> {
        let (l, r) = expand(b);
        Some(vec![l, r])
    }

    fn coexpansions(&self, set: &[PrefixMapTable]) -> Vec<PrefixMapTable> {
        match set {
            [b1, b2] if b1.support().is_disjoint(&b2.support()) => {
                let mut out = vec![
                    PrefixMapTable::glue_unchecked(b1, b2),
                    PrefixMapTable::glue_unchecked(b2, b1),
                ];
                out.sort_by_cached_key(canonical_key);
                out
            }
            _ => Vec::new(),
        }
    }

    fn base_vertex(&self) -> Vertex<PrefixMapTable> {
        Vertex::from_disjoint(vec![PrefixMapTable::identity()])
    }

    /// Expands every element with more than one table entry until only
    /// `[id, B_w]` elements remain.
    fn standardize(&self, v: &Vertex<PrefixMapTable>) -> AscendingPath<PrefixMapTable> {
        let mut path = AscendingPath::trivial(v.clone());
        loop {
            let next = path.end().elements().iter().find(|b| b.as_ball().is_none()).cloned();
            match next {
                Some(b) => push_expansion(self, &mut path, &b),
                None => return path,
            }
        }
    }

    /// Coarsest common refinement of two ball partitions: of every pair of
    /// nested balls keep the smaller one.
    fn join_standard(
        &self,
        s1: &Vertex<PrefixMapTable>,
        s2: &Vertex<PrefixMapTable>,
    ) -> (AscendingPath<PrefixMapTable>, AscendingPath<PrefixMapTable>) {
        let balls = |s: &Vertex<PrefixMapTable>| -> Vec<Word> {
            s.elements()
                .iter()
                .map(|b| b.as_ball().expect("join_standard needs standard vertices").clone())
                .collect()
        };
        let (w1, w2) = (balls(s1), balls(s2));
        let mut target = BTreeSet::new();
        for a in &w1 {
            for b in &w2 {
                if a.is_prefix_of(b) {
                    target.insert(b.clone());
                } else if b.is_prefix_of(a) {
                    target.insert(a.clone());
                }
            }
        }
        (self.refine_to(s1, &target), self.refine_to(s2, &target))
    }

    fn identity(&self) -> VGroupElement {
        VGroupElement::identity()
    }

    fn compose(&self, g: &VGroupElement, h: &VGroupElement) -> VGroupElement {
        g.compose(h)
    }

    fn invert(&self, g: &VGroupElement) -> VGroupElement {
        g.inverse()
    }

    fn act(&self, g: &VGroupElement, b: &PrefixMapTable) -> PrefixMapTable {
        g.act(b)
    }

    /// `f' ∘ f⁻¹`, carrying `supp(b)` onto `supp(target)`. Always exists.
    fn transfer(&self, b: &PrefixMapTable, target: &PrefixMapTable) -> Option<PrefixMap> {
        Some(target.to_map().compose(&b.to_map().inverse()))
    }

    fn assemble(&self, pieces: &[PrefixMap]) -> Result<VGroupElement> {
        let entries = pieces.iter().flat_map(|p| p.entries.iter().cloned()).collect();
        VGroupElement::from_map(&PrefixMap::new(entries))
    }
}
