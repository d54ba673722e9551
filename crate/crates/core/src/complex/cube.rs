//! Cubes `C(v₁, v₂)`: the vertices reachable from `v₁` by independently
//! expanding ("on") or keeping ("off") each active element of `v₂ ⊆ v₁`.

use std::collections::HashSet;

use serde::Serialize;

use super::link::{cliques_up_to, link_graph};
use crate::error::{Error, Result};
use crate::expansion::{canonical_key, ExpansionInstance, Move, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Cube<E> {
    base: Vertex<E>,
    active: Vec<E>,
}

impl<E> Cube<E> {
    pub fn base(&self) -> &Vertex<E> {
        &self.base
    }

    pub fn active(&self) -> &[E] {
        &self.active
    }

    pub fn dim(&self) -> usize {
        self.active.len()
    }
}

impl<E: Clone + Eq + Serialize> Cube<E> {
    /// Checks `active ⊆ base` and that every active element expands.
    pub fn new<I: ExpansionInstance<Element = E>>(inst: &I, base: Vertex<E>, mut active: Vec<E>) -> Result<Self> {
        active.sort_by_cached_key(|b| canonical_key(b));
        for (i, b) in active.iter().enumerate() {
            if !base.contains(b) {
                return Err(Error::InvalidCube("active element missing from the base vertex".into()));
            }
            if active[..i].contains(b) {
                return Err(Error::InvalidCube("active element listed twice".into()));
            }
            if inst.children(b).is_none() {
                return Err(Error::InvalidCube("active element has no proper expansion".into()));
            }
        }
        Ok(Cube { base, active })
    }

    /// Membership without listing the cube: every active element must be
    /// either present or fully expanded in `w`, and the result must be `w`.
    pub fn contains<I: ExpansionInstance<Element = E>>(&self, inst: &I, w: &Vertex<E>) -> bool {
        if w.height() < self.base.height() {
            return false;
        }
        let mut on = Vec::new();
        for b in &self.active {
            if w.contains(b) {
                continue;
            }
            let kids = inst.children(b).expect("active elements expand");
            if !w.contains_all(&kids) {
                return false;
            }
            on.push(b.clone());
        }
        &self.corner(inst, &on) == w
    }

    /// The vertex with exactly the elements of `on` expanded.
    pub fn corner<I: ExpansionInstance<Element = E>>(&self, inst: &I, on: &[E]) -> Vertex<E> {
        let mut els: Vec<E> = self.base.elements().iter().filter(|b| !on.contains(b)).cloned().collect();
        for b in on {
            els.extend(inst.children(b).expect("active elements expand"));
        }
        Vertex::from_disjoint(els)
    }
}

/// All `2^dim` vertices of the cube, sorted by canonical key.
pub fn cube_vertices<I: ExpansionInstance>(inst: &I, c: &Cube<I::Element>) -> Result<Vec<Vertex<I::Element>>> {
    let d = c.dim();
    let mut out = Vec::with_capacity(1 << d);
    for mask in 0u64..(1u64 << d) {
        let on: Vec<I::Element> = (0..d).filter(|i| mask >> i & 1 == 1).map(|i| c.active[i].clone()).collect();
        out.push(c.corner(inst, &on));
    }
    out.sort_by_cached_key(|v| v.key());
    let distinct = out.iter().collect::<HashSet<_>>().len();
    if distinct != out.len() {
        return Err(Error::InvalidCube(format!("only {distinct} distinct corners")));
    }
    Ok(out)
}

/// The cube spanned at `v` by a set of moves with pairwise disjoint basins:
/// contractions are applied to get the bottom corner, and the expanded or
/// contracted-to elements become active.
pub fn cube_from_moves<I: ExpansionInstance>(
    inst: &I,
    v: &Vertex<I::Element>,
    moves: &[Move<I::Element>],
) -> Result<Cube<I::Element>> {
    let mut els: Vec<I::Element> = v.elements().to_vec();
    let mut active = Vec::with_capacity(moves.len());
    for m in moves {
        match m {
            Move::Expand(b) => active.push(b.clone()),
            Move::Contract { target, basin } => {
                if !basin.iter().all(|b| els.contains(b)) {
                    return Err(Error::InvalidCube("basins overlap".into()));
                }
                els.retain(|b| !basin.contains(b));
                els.push(target.clone());
                active.push(target.clone());
            }
        }
    }
    let base = crate::expansion::validate_vertex(inst, els)?;
    Cube::new(inst, base, active)
}

/// One cube per set of at most `max_dim` moves with pairwise disjoint
/// basins, including the 0-cube `{v}`.
pub fn cubes_at<I: ExpansionInstance>(inst: &I, v: &Vertex<I::Element>, max_dim: usize) -> Vec<Cube<I::Element>> {
    let link = link_graph(inst, v);
    cliques_up_to(&link, max_dim)
        .into_iter()
        .map(|clique| {
            let moves: Vec<_> = clique.iter().map(|&i| link.moves[i].clone()).collect();
            cube_from_moves(inst, v, &moves).expect("disjoint basins always span a cube")
        })
        .collect()
}

/// The cube in which every expandable member of `v` is active; its vertices
/// are exactly the ascending star of `v`.
pub fn ascending_star<I: ExpansionInstance>(inst: &I, v: &Vertex<I::Element>) -> Cube<I::Element> {
    let active = v.elements().iter().filter(|b| inst.children(b).is_some()).cloned().collect();
    Cube::new(inst, v.clone(), active).expect("expandable members form a valid cube")
}

/// `C ∩ C'` as a cube `C(v̂, (v₂ − ṽ₂) ∩ (v₂' − ṽ₂'))`, where `v̂` is the
/// lowest common vertex and `ṽ₂`, `ṽ₂'` are the active elements expanded in
/// it. `None` when the cubes share no vertex.
pub fn cube_intersection<I: ExpansionInstance>(
    inst: &I,
    c: &Cube<I::Element>,
    other: &Cube<I::Element>,
) -> Result<Option<Cube<I::Element>>> {
    let bottom = cube_vertices(inst, c)?
        .into_iter()
        .filter(|w| other.contains(inst, w))
        .min_by_key(|w| (w.height(), w.key()));
    let bottom = match bottom {
        Some(b) => b,
        None => return Ok(None),
    };
    let still_off = |cube: &Cube<I::Element>| -> Vec<I::Element> {
        cube.active.iter().filter(|b| bottom.contains(b)).cloned().collect()
    };
    let mine = still_off(c);
    let theirs = still_off(other);
    let active = mine.into_iter().filter(|b| theirs.contains(b)).collect();
    Cube::new(inst, bottom, active).map(Some)
}

#[derive(Clone, Debug, Default)]
pub struct LemmaReport {
    /// Number of `(b, b')` pairs meeting the lemma's hypothesis.
    pub hypotheses: usize,
    pub shared_vertices: usize,
    pub violations: Vec<String>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For every `b ∈ v₁` lying in `Bas(b')` for some active `b'` of the other
/// cube, checks that `b` survives in every shared vertex.
pub fn intersection_lemma_check<I: ExpansionInstance>(
    inst: &I,
    c: &Cube<I::Element>,
    other: &Cube<I::Element>,
) -> Result<LemmaReport> {
    let shared: Vec<_> = cube_vertices(inst, c)?.into_iter().filter(|w| other.contains(inst, w)).collect();
    let mut report = LemmaReport { shared_vertices: shared.len(), ..Default::default() };
    for b in c.base.elements() {
        for b2 in &other.active {
            let basin = inst.children(b2).expect("active elements expand");
            if !basin.contains(b) {
                continue;
            }
            report.hypotheses += 1;
            for w in &shared {
                if !w.contains(b) {
                    report
                        .violations
                        .push(format!("{} missing from shared vertex {}", canonical_key(b), w.key()));
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::thompson::{ball_vertex, PrefixMapTable, ThompsonV};

    fn ball(w: &str) -> PrefixMapTable {
        PrefixMapTable::ball(w.parse().unwrap())
    }

    fn three_ball_square() -> Cube<PrefixMapTable> {
        let base = ball_vertex(["0", "10", "11"]).unwrap();
        Cube::new(&ThompsonV, base, vec![ball("0"), ball("10")]).unwrap()
    }

    #[test]
    fn three_ball_square_corners() {
        let got = cube_vertices(&ThompsonV, &three_ball_square()).unwrap();
        let mut want = vec![
            ball_vertex(["0", "10", "11"]).unwrap(),
            ball_vertex(["00", "01", "10", "11"]).unwrap(),
            ball_vertex(["0", "100", "101", "11"]).unwrap(),
            ball_vertex(["00", "01", "100", "101", "11"]).unwrap(),
        ];
        want.sort_by_cached_key(|v| v.key());
        assert_eq!(got, want);
    }

    #[test]
    fn small_cubes() {
        let v = ball_vertex(["0", "1"]).unwrap();
        let point = Cube::new(&ThompsonV, v.clone(), vec![]).unwrap();
        assert_eq!(cube_vertices(&ThompsonV, &point).unwrap(), vec![v.clone()]);
        let edge = Cube::new(&ThompsonV, v.clone(), vec![ball("1")]).unwrap();
        let corners = cube_vertices(&ThompsonV, &edge).unwrap();
        assert_eq!(corners.len(), 2);
        assert!(corners.contains(&ball_vertex(["0", "10", "11"]).unwrap()));
        assert!(Cube::new(&ThompsonV, v, vec![ball("01")]).is_err());
    }

    #[test]
    fn three_ball_square_is_listed() {
        let v = ball_vertex(["0", "10", "11"]).unwrap();
        let cubes = cubes_at(&ThompsonV, &v, 2);
        assert!(cubes.contains(&three_ball_square()));
        assert!(cubes.iter().any(|c| c.dim() == 0));
        let star = ascending_star(&ThompsonV, &v);
        assert_eq!(star.dim(), 3);
        assert_eq!(cube_vertices(&ThompsonV, &star).unwrap().len(), 8);
    }

    #[test]
    fn self_intersection() {
        let c = three_ball_square();
        assert_eq!(cube_intersection(&ThompsonV, &c, &c).unwrap(), Some(c.clone()));
        assert!(intersection_lemma_check(&ThompsonV, &c, &c).unwrap().passed());
    }

    #[test]
    fn squares_sharing_an_edge() {
        // the top edge of the square: B_0 stays expanded, B_10 toggles
        let c = three_ball_square();
        let top = ball_vertex(["00", "01", "10", "11"]).unwrap();
        let other = Cube::new(&ThompsonV, top, vec![ball("10"), ball("01")]).unwrap();
        let meet = cube_intersection(&ThompsonV, &c, &other).unwrap().unwrap();
        assert_eq!(meet.dim(), 1);
        assert_eq!(meet.base(), &ball_vertex(["00", "01", "10", "11"]).unwrap());
        assert_eq!(meet.active(), &[ball("10")]);
        let report = intersection_lemma_check(&ThompsonV, &c, &other).unwrap();
        assert!(report.passed());
        assert_eq!(report.shared_vertices, 2);
    }

    #[test]
    fn disjoint_cubes() {
        let c = Cube::new(&ThompsonV, ball_vertex(["0", "1"]).unwrap(), vec![]).unwrap();
        let d = Cube::new(&ThompsonV, ThompsonV.base_vertex(), vec![]).unwrap();
        assert_eq!(cube_intersection(&ThompsonV, &c, &d).unwrap(), None);
    }
}
