//! The instance contract for simple expansion sets, plus the vertex and move
//! machinery that only depends on that contract.
//!
//! An instance supplies elements (canonical class representatives), their
//! supports, and their unique proper expansion when one exists. Everything
//! else here (vertices, moves, restrictions) is generic.

use std::fmt::Debug;
use std::hash::Hash;

use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::error::{Error, Result};

/// Canonical byte key used to order elements and vertices.
pub fn canonical_key<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("canonical values always serialize")
}

/// A simple expansion set together with the group acting on it.
///
/// Elements are canonical: two elements compare equal exactly when they
/// represent the same class. `children` returns the contraction basin, i.e.
/// the unique proper expansion; `None` means the element only has the trivial
/// expansion.
pub trait ExpansionInstance: Sync {
    type Element: Clone + Eq + Hash + Debug + Serialize + DeserializeOwned + Send + Sync;
    type Region: Clone + Eq + Debug;
    type Group: Clone + Eq + Hash + Debug + Serialize + DeserializeOwned + Send + Sync;
    /// A partial bijection carrying one support onto another.
    type Piece: Clone + Debug;

    /// Tag used in vertex files.
    fn tag(&self) -> &'static str;

    /// Instance-specific checks that cannot live in the element type itself
    /// (for example a branch index bounded by the instance parameter).
    fn check_element(&self, _b: &Self::Element) -> Result<()> {
        Ok(())
    }

    /// Instance-specific checks on group elements read from input.
    fn check_group(&self, _g: &Self::Group) -> Result<()> {
        Ok(())
    }

    fn support(&self, b: &Self::Element) -> Self::Region;
    fn regions_disjoint(&self, a: &Self::Region, b: &Self::Region) -> bool;
    fn region_contains(&self, outer: &Self::Region, inner: &Self::Region) -> bool;
    /// True iff the union of the regions is all of X.
    fn covers_space(&self, regions: &[Self::Region]) -> bool;

    fn children(&self, b: &Self::Element) -> Option<Vec<Self::Element>>;
    /// All elements whose contraction basin is exactly `set` (as a set).
    fn coexpansions(&self, set: &[Self::Element]) -> Vec<Self::Element>;

    /// Subsets of `v` that might be contraction basins.
    fn contraction_candidates(&self, v: &Vertex<Self::Element>) -> Vec<Vec<Self::Element>> {
        let els = v.elements();
        let mut out = Vec::new();
        for i in 0..els.len() {
            for j in i + 1..els.len() {
                out.push(vec![els[i].clone(), els[j].clone()]);
            }
        }
        out
    }

    /// The smallest full-support vertex, `{[id, X]}` or its analogue.
    fn base_vertex(&self) -> Vertex<Self::Element>;

    /// Ascending path from `v` to a standard vertex (one that corresponds to
    /// a plain partition of X).
    fn standardize(&self, v: &Vertex<Self::Element>) -> AscendingPath<Self::Element>;

    /// Common upper bound of two standard vertices, with ascending paths from
    /// each.
    fn join_standard(
        &self,
        s1: &Vertex<Self::Element>,
        s2: &Vertex<Self::Element>,
    ) -> (AscendingPath<Self::Element>, AscendingPath<Self::Element>);

    fn identity(&self) -> Self::Group;
    /// `g ∘ h`: apply `h` first.
    fn compose(&self, g: &Self::Group, h: &Self::Group) -> Self::Group;
    fn invert(&self, g: &Self::Group) -> Self::Group;
    fn act(&self, g: &Self::Group, b: &Self::Element) -> Self::Element;

    /// The piece of a group element carrying `b` to `target`, if any.
    fn transfer(&self, b: &Self::Element, target: &Self::Element) -> Option<Self::Piece>;
    /// Glue pieces whose domains and images both partition X.
    fn assemble(&self, pieces: &[Self::Piece]) -> Result<Self::Group>;
}

/// A finite set of elements with pairwise disjoint supports, stored sorted by
/// canonical key.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Vertex<E> {
    elements: Vec<E>,
}

impl<E: Serialize> Vertex<E> {
    /// Builds a vertex without checking supports. Callers must already know
    /// the elements are pairwise disjoint and distinct.
    pub fn from_disjoint(mut elements: Vec<E>) -> Self {
        elements.sort_by_cached_key(|e| canonical_key(e));
        Vertex { elements }
    }

    pub fn key(&self) -> String {
        canonical_key(&self.elements)
    }
}

impl<E> Vertex<E> {
    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn height(&self) -> usize {
        self.elements.len()
    }

    pub fn into_elements(self) -> Vec<E> {
        self.elements
    }
}

impl<E: PartialEq> Vertex<E> {
    pub fn contains(&self, b: &E) -> bool {
        self.elements.contains(b)
    }

    pub fn contains_all(&self, set: &[E]) -> bool {
        set.iter().all(|b| self.contains(b))
    }
}

/// Checks supports and builds the sorted vertex.
pub fn validate_vertex<I: ExpansionInstance>(
    inst: &I,
    elements: Vec<I::Element>,
) -> Result<Vertex<I::Element>> {
    for b in &elements {
        inst.check_element(b)?;
    }
    for i in 0..elements.len() {
        for j in i + 1..elements.len() {
            if elements[i] == elements[j] {
                return Err(Error::DuplicateElement(i, j));
            }
        }
    }
    let supports: Vec<_> = elements.iter().map(|b| inst.support(b)).collect();
    for i in 0..supports.len() {
        for j in i + 1..supports.len() {
            if !inst.regions_disjoint(&supports[i], &supports[j]) {
                return Err(Error::OverlappingSupports(i, j));
            }
        }
    }
    Ok(Vertex::from_disjoint(elements))
}

pub fn induced_partition<I: ExpansionInstance>(inst: &I, v: &Vertex<I::Element>) -> Vec<I::Region> {
    v.elements().iter().map(|b| inst.support(b)).collect()
}

pub fn is_full_support<I: ExpansionInstance>(inst: &I, v: &Vertex<I::Element>) -> bool {
    inst.covers_space(&induced_partition(inst, v))
}

/// Members of `v` whose support lies inside `supp(b)`.
pub fn restrict<I: ExpansionInstance>(
    inst: &I,
    v: &Vertex<I::Element>,
    b: &I::Element,
) -> Vec<I::Element> {
    let outer = inst.support(b);
    v.elements()
        .iter()
        .filter(|e| inst.region_contains(&outer, &inst.support(e)))
        .cloned()
        .collect()
}

/// An edge of the complex leaving a vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Move<E> {
    Expand(E),
    Contract { target: E, basin: Vec<E> },
}

impl<E: Clone> Move<E> {
    /// The subset of the current vertex this move consumes.
    pub fn basin(&self) -> Vec<E> {
        match self {
            Move::Expand(b) => vec![b.clone()],
            Move::Contract { basin, .. } => basin.clone(),
        }
    }

    pub fn is_expansion(&self) -> bool {
        matches!(self, Move::Expand(_))
    }
}

impl<E: Serialize> Move<E> {
    pub fn key(&self) -> String {
        match self {
            Move::Expand(b) => format!("E{}", canonical_key(b)),
            Move::Contract { target, basin } => {
                format!("C{}{}", canonical_key(target), canonical_key(basin))
            }
        }
    }
}

/// Applies a move, checking that it is legal at `v`.
pub fn apply_move<I: ExpansionInstance>(
    inst: &I,
    v: &Vertex<I::Element>,
    m: &Move<I::Element>,
) -> Result<Vertex<I::Element>> {
    match m {
        Move::Expand(b) => {
            if !v.contains(b) {
                return Err(Error::MoveNotApplicable("expanded element not in vertex".into()));
            }
            let kids = inst
                .children(b)
                .ok_or_else(|| Error::MoveNotApplicable("element has no proper expansion".into()))?;
            let mut els: Vec<_> = v.elements().iter().filter(|e| *e != b).cloned().collect();
            els.extend(kids);
            Ok(Vertex::from_disjoint(els))
        }
        Move::Contract { target, basin } => {
            if !v.contains_all(basin) {
                return Err(Error::MoveNotApplicable("basin not contained in vertex".into()));
            }
            let kids = inst
                .children(target)
                .ok_or_else(|| Error::MoveNotApplicable("target has no proper expansion".into()))?;
            if kids.len() != basin.len() || !kids.iter().all(|k| basin.contains(k)) {
                return Err(Error::MoveNotApplicable("basin is not the target's basin".into()));
            }
            let mut els: Vec<_> = v.elements().iter().filter(|e| !basin.contains(e)).cloned().collect();
            els.push(target.clone());
            Ok(Vertex::from_disjoint(els))
        }
    }
}

/// An edge path along which height strictly increases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AscendingPath<E> {
    pub start: Vertex<E>,
    pub steps: Vec<(Move<E>, Vertex<E>)>,
}

impl<E: Clone + Serialize> AscendingPath<E> {
    pub fn trivial(start: Vertex<E>) -> Self {
        AscendingPath { start, steps: Vec::new() }
    }

    pub fn end(&self) -> &Vertex<E> {
        self.steps.last().map(|(_, v)| v).unwrap_or(&self.start)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn push(&mut self, m: Move<E>, v: Vertex<E>) {
        self.steps.push((m, v));
    }

    pub fn concat(mut self, other: AscendingPath<E>) -> Self {
        self.steps.extend(other.steps);
        self
    }

    pub fn vertices(&self) -> Vec<&Vertex<E>> {
        std::iter::once(&self.start).chain(self.steps.iter().map(|(_, v)| v)).collect()
    }
}

impl<E: Clone + Eq + Serialize> AscendingPath<E> {
    /// Replays every move and checks that height strictly increases.
    pub fn verify<I: ExpansionInstance<Element = E>>(&self, inst: &I) -> Result<()> {
        let mut cur = self.start.clone();
        for (i, (m, next)) in self.steps.iter().enumerate() {
            let got = apply_move(inst, &cur, m)?;
            if &got != next {
                return Err(Error::MoveNotApplicable(format!("step {i} does not reach its recorded vertex")));
            }
            if next.height() <= cur.height() {
                return Err(Error::MoveNotApplicable(format!("step {i} does not ascend")));
            }
            cur = got;
        }
        Ok(())
    }
}

/// Expands `b` inside `v` and records the step on `path`.
pub(crate) fn push_expansion<I: ExpansionInstance>(
    inst: &I,
    path: &mut AscendingPath<I::Element>,
    b: &I::Element,
) {
    let next = apply_move(inst, path.end(), &Move::Expand(b.clone()))
        .expect("expansion of a member with children is always applicable");
    path.push(Move::Expand(b.clone()), next);
}
