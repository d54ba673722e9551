//! Seeded generators and brute-force checkers.
//!
//! The checkers only use the instance primitives (`children`, `coexpansions`,
//! `transfer`, `assemble`, `act`) and rebuild everything else locally, so they
//! can be compared against the main code paths in `complex`.

use std::collections::{BTreeMap, HashSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::complex::{cube_from_moves, cube_vertices, link_graph, Cube};
use crate::expansion::{canonical_key, ExpansionInstance, Move, Vertex};
use crate::houghton::{Domain, Houghton, HoughtonElement, HoughtonMap, HoughtonRawMap, Point, Tail};
use crate::thompson::{reduce_table, PrefixMap, PrefixMapTable, ThompsonV, VGroupElement, Word};

/// A 64-bit seed. The same seed yields the same stream on every platform.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Seed(pub u64);

impl Seed {
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }

    /// An independent seed for sub-stream `k`.
    pub fn derive(self, k: u64) -> Seed {
        Seed(self.0.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(k.wrapping_mul(0xD1B5_4A32_D192_ED03)) ^ k)
    }
}

/// Instances that can draw random group elements.
pub trait Sample: ExpansionInstance {
    /// `size` bounds the tree depth (V) or the head length and offsets (H_n).
    fn random_group_element(&self, rng: &mut ChaCha8Rng, size: usize) -> Self::Group;
}

impl Sample for ThompsonV {
    fn random_group_element(&self, rng: &mut ChaCha8Rng, size: usize) -> VGroupElement {
        random_v_group(rng, size)
    }
}

impl Sample for Houghton {
    fn random_group_element(&self, rng: &mut ChaCha8Rng, size: usize) -> HoughtonMap {
        random_h_group(rng, self.n(), size as u64)
    }
}

/// A random complete prefix code with words of length at most `depth`.
pub fn random_complete_code(rng: &mut ChaCha8Rng, depth: usize) -> Vec<Word> {
    fn grow(rng: &mut ChaCha8Rng, w: Word, depth: usize, out: &mut Vec<Word>) {
        if w.len() < depth && rng.gen_bool(0.5) {
            grow(rng, w.child(0), depth, out);
            grow(rng, w.child(1), depth, out);
        } else {
            out.push(w);
        }
    }
    let mut out = Vec::new();
    grow(rng, Word::empty(), depth, &mut out);
    out
}

/// A random complete prefix code with exactly `k ≥ 1` words.
pub fn random_code_of_size(rng: &mut ChaCha8Rng, k: usize) -> Vec<Word> {
    let mut code = vec![Word::empty()];
    while code.len() < k {
        let i = rng.gen_range(0..code.len());
        let w = code.swap_remove(i);
        code.push(w.child(0));
        code.push(w.child(1));
    }
    code
}

/// A random element of the V instance: a random complete domain code of
/// depth at most `depth` mapped onto randomly chosen disjoint balls.
pub fn random_v_element(rng: &mut ChaCha8Rng, depth: usize) -> PrefixMapTable {
    let domain = random_complete_code(rng, depth);
    let extra = rng.gen_range(0..=2);
    let mut images = random_code_of_size(rng, domain.len() + extra);
    images.shuffle(rng);
    let entries = domain.into_iter().zip(images).collect();
    reduce_table(&PrefixMap::new(entries)).expect("complete domain, antichain images")
}

pub fn random_v_group(rng: &mut ChaCha8Rng, depth: usize) -> VGroupElement {
    let domain = random_complete_code(rng, depth);
    let mut images = random_code_of_size(rng, domain.len());
    images.shuffle(rng);
    VGroupElement::from_map(&PrefixMap::new(domain.into_iter().zip(images).collect()))
        .expect("complete codes on both sides")
}

/// Random element of `H_n` with offsets and head lengths at most `spread`.
pub fn random_h_group(rng: &mut ChaCha8Rng, n: u32, spread: u64) -> HoughtonMap {
    let s = spread as i64;
    let mut offsets: Vec<i64> = (1..n).map(|_| rng.gen_range(-s..=s)).collect();
    offsets.push(-offsets.iter().sum::<i64>());
    let mut domain = Vec::new();
    let mut image = Vec::new();
    for (i, &t) in offsets.iter().enumerate() {
        let b = i as u32 + 1;
        let from = (1 - t).max(1) as u64 + rng.gen_range(0..=spread);
        let to = (from as i64 + t) as u64;
        domain.extend((1..from).map(|pos| Point::new(b, pos)));
        image.extend((1..to).map(|pos| Point::new(b, pos)));
    }
    image.shuffle(rng);
    let head: BTreeMap<Point, Point> = domain.into_iter().zip(image).collect();
    HoughtonMap::from_parts(n, offsets, head).expect("head sizes balance because offsets sum to zero")
}

/// A random vertex of height `k`: expand random members of the base vertex
/// until the height is reached, then translate by a random group element.
/// Heights below the base height are clamped to it.
pub fn random_vertex_of_height<I: Sample>(inst: &I, rng: &mut ChaCha8Rng, k: usize) -> Vertex<I::Element> {
    let mut v = inst.base_vertex();
    while v.height() < k {
        let expandable: Vec<_> = v.elements().iter().filter(|b| inst.children(b).is_some()).cloned().collect();
        let b = expandable.choose(rng).expect("full-support vertices can always expand").clone();
        let mut els: Vec<_> = v.elements().iter().filter(|e| **e != b).cloned().collect();
        els.extend(inst.children(&b).unwrap());
        v = Vertex::from_disjoint(els);
    }
    let g = inst.random_group_element(rng, 3);
    Vertex::from_disjoint(v.elements().iter().map(|b| inst.act(&g, b)).collect())
}

/// A random full-support vertex of height at most `height_bound`.
pub fn random_vertex<I: Sample>(inst: &I, rng: &mut ChaCha8Rng, height_bound: usize) -> Vertex<I::Element> {
    let lo = inst.base_vertex().height();
    let k = rng.gen_range(lo..=height_bound.max(lo));
    random_vertex_of_height(inst, rng, k)
}

/// A random cube containing `v`: a greedy random clique of at most
/// `max_dim` moves in the link of `v`.
pub fn random_cube_at<I: ExpansionInstance>(
    inst: &I,
    rng: &mut ChaCha8Rng,
    v: &Vertex<I::Element>,
    max_dim: usize,
) -> Cube<I::Element> {
    let link = link_graph(inst, v);
    let target = rng.gen_range(0..=max_dim);
    let mut order: Vec<usize> = (0..link.len()).collect();
    order.shuffle(rng);
    let mut chosen: Vec<usize> = Vec::new();
    for i in order {
        if chosen.len() == target {
            break;
        }
        if chosen.iter().all(|&j| link.adjacency[i][j]) {
            chosen.push(i);
        }
    }
    let moves: Vec<_> = chosen.iter().map(|&i| link.moves[i].clone()).collect();
    cube_from_moves(inst, v, &moves).expect("cliques span cubes")
}

/// Two random cubes sharing at least one vertex.
pub fn random_cube_pair<I: Sample>(
    inst: &I,
    rng: &mut ChaCha8Rng,
    height_bound: usize,
    max_dim: usize,
) -> (Cube<I::Element>, Cube<I::Element>) {
    let v = random_vertex(inst, rng, height_bound);
    let c = random_cube_at(inst, rng, &v, max_dim);
    let corners = cube_vertices(inst, &c).expect("valid cube");
    let w = corners.choose(rng).unwrap().clone();
    let other = random_cube_at(inst, rng, &w, max_dim);
    (c, other)
}

/// A random representative of the class of `t`: the same table
/// transported to a random ball `B_ω`, with entries randomly subdivided and
/// shuffled.
pub fn random_v_witness(rng: &mut ChaCha8Rng, t: &PrefixMapTable, depth: usize) -> (PrefixMap, Word) {
    let mut omega = Word::empty();
    for _ in 0..rng.gen_range(0..=depth) {
        omega = omega.child(rng.gen_range(0..=1));
    }
    let mut entries = Vec::new();
    let mut stack: Vec<(Word, Word, usize)> = t.entries().iter().map(|(d, g)| (d.clone(), g.clone(), 0)).collect();
    while let Some((d, g, level)) = stack.pop() {
        if level < 2 && rng.gen_bool(0.3) {
            for bit in 0..=1 {
                stack.push((d.child(bit), g.child(bit), level + 1));
            }
        } else {
            entries.push((omega.concat(&d), g));
        }
    }
    entries.shuffle(rng);
    (PrefixMap::new(entries), omega)
}

/// A random representative of the class of `b` on a random domain of the
/// same kind, with tail pieces randomly shortened.
pub fn random_h_witness(rng: &mut ChaCha8Rng, b: &HoughtonElement, spread: u64) -> (HoughtonRawMap, Domain) {
    match b {
        HoughtonElement::Point(p) => {
            let x = Point::new(rng.gen_range(1..=3), rng.gen_range(1..=spread + 1));
            (HoughtonRawMap { points: vec![(x, p.image)], tails: vec![] }, Domain::Point(x))
        }
        HoughtonElement::Ray(r) => {
            let domain = Domain::Tail(Tail::new(r.branch(), rng.gen_range(1..=spread + 1)));
            let mut raw = HoughtonRawMap::from_element(b, domain).expect("same kind of domain");
            let (from, to) = raw.tails[0];
            let peel = rng.gen_range(0..=spread);
            for i in 0..peel {
                raw.points.push((Point::new(from.branch, from.start + i), Point::new(to.branch, to.start + i)));
            }
            raw.tails[0] = (Tail::new(from.branch, from.start + peel), Tail::new(to.branch, to.start + peel));
            raw.points.shuffle(rng);
            (raw, domain)
        }
    }
}

fn sorted<E: Serialize + Clone>(mut els: Vec<E>) -> Vec<E> {
    els.sort_by_cached_key(|e| canonical_key(e));
    els
}

/// Every vertex one move away from `v`, found by trying every subset of
/// size at least two as a basin and every expandable member.
pub fn brute_neighbors<I: ExpansionInstance>(inst: &I, v: &Vertex<I::Element>) -> Vec<Vec<I::Element>> {
    let els = v.elements();
    let k = els.len();
    assert!(k <= 20, "brute-force neighbor enumeration is capped at height 20");
    let mut found: HashSet<Vec<I::Element>> = HashSet::new();
    for b in els {
        if let Some(kids) = inst.children(b) {
            let mut next: Vec<_> = els.iter().filter(|e| *e != b).cloned().collect();
            next.extend(kids);
            found.insert(sorted(next));
        }
    }
    for mask in 0u32..(1 << k) {
        if mask.count_ones() < 2 {
            continue;
        }
        let subset: Vec<_> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| els[i].clone()).collect();
        for t in inst.coexpansions(&subset) {
            let kids = inst.children(&t).unwrap_or_default();
            if kids.len() != subset.len() || !kids.iter().all(|c| subset.contains(c)) {
                continue;
            }
            let mut next: Vec<_> = els.iter().filter(|e| !subset.contains(e)).cloned().collect();
            next.push(t);
            found.insert(sorted(next));
        }
    }
    let mut out: Vec<_> = found.into_iter().collect();
    out.sort_by_cached_key(canonical_key);
    out
}

pub fn brute_neighbor_count<I: ExpansionInstance>(inst: &I, v: &Vertex<I::Element>) -> usize {
    brute_neighbors(inst, v).len()
}

fn brute_apply<I: ExpansionInstance>(inst: &I, v: &[I::Element], m: &Move<I::Element>) -> Vec<I::Element> {
    match m {
        Move::Expand(b) => {
            let mut next: Vec<_> = v.iter().filter(|e| *e != b).cloned().collect();
            next.extend(inst.children(b).expect("expansion move"));
            sorted(next)
        }
        Move::Contract { target, basin } => {
            let mut next: Vec<_> = v.iter().filter(|e| !basin.contains(e)).cloned().collect();
            next.push(target.clone());
            sorted(next)
        }
    }
}

/// Whether some 2-cube contains `v`, `m1·v` and `m2·v`: searches the common
/// neighbors `x` of `m1·v` and `m2·v` and tests whether the four vertices are
/// the corners of a square grown from the lowest of them.
pub fn brute_square_test<I: ExpansionInstance>(
    inst: &I,
    v: &Vertex<I::Element>,
    m1: &Move<I::Element>,
    m2: &Move<I::Element>,
) -> bool {
    let v0 = v.elements().to_vec();
    let a = brute_apply(inst, &v0, m1);
    let b = brute_apply(inst, &v0, m2);
    if a == b {
        return false;
    }
    let from_a: HashSet<_> = brute_neighbors(inst, &Vertex::from_disjoint(a.clone())).into_iter().collect();
    let from_b = brute_neighbors(inst, &Vertex::from_disjoint(b.clone()));
    for x in from_b.into_iter().filter(|x| *x != v0 && from_a.contains(x)) {
        let four = [v0.clone(), a.clone(), b.clone(), x];
        let low = four.iter().min_by_key(|w| (w.len(), canonical_key(w))).unwrap();
        let want: HashSet<&Vec<I::Element>> = four.iter().collect();
        let expandable: Vec<_> = low.iter().filter(|e| inst.children(e).is_some()).collect();
        for (i, e1) in expandable.iter().enumerate() {
            for e2 in &expandable[i + 1..] {
                let one = brute_apply(inst, low, &Move::Expand((*e1).clone()));
                let two = brute_apply(inst, low, &Move::Expand((*e2).clone()));
                let both = brute_apply(inst, &one, &Move::Expand((*e2).clone()));
                let got: Vec<Vec<I::Element>> = vec![low.clone(), one, two, both];
                if got.len() == want.len() && got.iter().all(|w| want.contains(w)) {
                    return true;
                }
            }
        }
    }
    false
}

/// The corners of a cube by literal on/off enumeration.
pub fn brute_cube_corners<I: ExpansionInstance>(inst: &I, c: &Cube<I::Element>) -> Vec<Vec<I::Element>> {
    let d = c.dim();
    assert!(d <= 6, "brute-force cube enumeration is capped at dimension 6");
    let mut out = Vec::new();
    for mask in 0u32..(1 << d) {
        let mut els: Vec<I::Element> = c.base().elements().to_vec();
        for (i, b) in c.active().iter().enumerate() {
            if mask >> i & 1 == 1 {
                els.retain(|e| e != b);
                els.extend(inst.children(b).expect("active elements expand"));
            }
        }
        out.push(sorted(els));
    }
    out
}

/// `vertices(c) ∩ vertices(c')` as a literal set intersection, sorted.
pub fn brute_cube_intersection<I: ExpansionInstance>(
    inst: &I,
    c: &Cube<I::Element>,
    other: &Cube<I::Element>,
) -> Vec<Vertex<I::Element>> {
    let theirs: HashSet<_> = brute_cube_corners(inst, other).into_iter().collect();
    let mut out: Vec<_> = brute_cube_corners(inst, c)
        .into_iter()
        .filter(|w| theirs.contains(w))
        .map(Vertex::from_disjoint)
        .collect();
    out.sort_by_cached_key(|w| w.key());
    out.dedup();
    out
}

/// Number of distinct stabilizing elements obtained by trying all `k!`
/// permutations of `v` without pruning.
pub fn brute_stabilizer_order<I: ExpansionInstance>(inst: &I, v: &Vertex<I::Element>) -> usize {
    let els = v.elements();
    let k = els.len();
    assert!(k <= 8, "brute-force stabilizer enumeration is capped at height 8");
    let target: HashSet<&I::Element> = els.iter().collect();
    let mut perm: Vec<usize> = (0..k).collect();
    let mut found = HashSet::new();
    loop {
        let pieces: Option<Vec<_>> = (0..k).map(|i| inst.transfer(&els[i], &els[perm[i]])).collect();
        if let Some(g) = pieces.and_then(|p| inst.assemble(&p).ok()) {
            let image: Vec<_> = els.iter().map(|b| inst.act(&g, b)).collect();
            if image.len() == target.len() && image.iter().all(|b| target.contains(b)) {
                found.insert(canonical_key(&g));
            }
        }
        if !next_permutation(&mut perm) {
            return found.len();
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::thompson::ball_vertex;

    #[test]
    fn seeds_are_reproducible() {
        let a = random_v_element(&mut Seed(42).rng(), 4);
        let b = random_v_element(&mut Seed(42).rng(), 4);
        assert_eq!(a, b);
        assert_ne!(Seed(1).derive(0), Seed(1).derive(1));
    }

    #[test]
    fn depth_zero_is_a_transport() {
        for s in 0..20 {
            let t = random_v_element(&mut Seed(s).rng(), 0);
            assert_eq!(t.entries().len(), 1);
            assert!(t.entries()[0].0.is_empty());
        }
    }

    #[test]
    fn brute_counts() {
        assert_eq!(brute_neighbor_count(&ThompsonV, &ThompsonV.base_vertex()), 1);
        assert_eq!(brute_neighbor_count(&ThompsonV, &ball_vertex(["0", "10", "11"]).unwrap()), 9);
    }

    #[test]
    fn permutations_enumerated() {
        let mut p = vec![0, 1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut p) {
            count += 1;
        }
        assert_eq!(count, 24);
    }

    #[test]
    fn stabilizer_orders() {
        let v = ball_vertex(["0", "10", "11"]).unwrap();
        assert_eq!(brute_stabilizer_order(&ThompsonV, &v), 6);
        let h = Houghton::new(2).unwrap();
        assert_eq!(brute_stabilizer_order(&h, &h.standard_vertex(&[2, 3])), 6);
    }
}
