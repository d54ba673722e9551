use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::expansion::{canonical_key, is_full_support, ExpansionInstance, Move, Vertex};

pub fn act_vertex<I: ExpansionInstance>(inst: &I, g: &I::Group, v: &Vertex<I::Element>) -> Vertex<I::Element> {
    Vertex::from_disjoint(v.elements().iter().map(|b| inst.act(g, b)).collect())
}

pub fn act_move<I: ExpansionInstance>(inst: &I, g: &I::Group, m: &Move<I::Element>) -> Move<I::Element> {
    match m {
        Move::Expand(b) => Move::Expand(inst.act(g, b)),
        Move::Contract { target, basin } => {
            let mut basin: Vec<_> = basin.iter().map(|b| inst.act(g, b)).collect();
            basin.sort_by_cached_key(canonical_key);
            Move::Contract { target: inst.act(g, target), basin }
        }
    }
}

/// All `g` with `g·v = v`: one candidate per permutation of `v` along which
/// every element transfers, kept when it fixes `v`. Sorted by canonical key.
pub fn stabilizer<I: ExpansionInstance>(inst: &I, v: &Vertex<I::Element>) -> Result<Vec<I::Group>> {
    if !is_full_support(inst, v) {
        return Err(Error::NotFullSupport);
    }
    let els = v.elements();
    let k = els.len();
    let mut used = vec![false; k];
    let mut pieces = Vec::with_capacity(k);
    let mut found = Vec::new();
    search(inst, v, els, &mut used, &mut pieces, &mut found)?;
    found.sort_by_cached_key(canonical_key);
    found.dedup();
    Ok(found)
}

fn search<I: ExpansionInstance>(
    inst: &I,
    v: &Vertex<I::Element>,
    els: &[I::Element],
    used: &mut [bool],
    pieces: &mut Vec<I::Piece>,
    found: &mut Vec<I::Group>,
) -> Result<()> {
    let i = pieces.len();
    if i == els.len() {
        let g = inst.assemble(pieces)?;
        if &act_vertex(inst, &g, v) == v {
            found.push(g);
        }
        return Ok(());
    }
    for j in 0..els.len() {
        if used[j] {
            continue;
        }
        if let Some(p) = inst.transfer(&els[i], &els[j]) {
            used[j] = true;
            pieces.push(p);
            search(inst, v, els, used, pieces, found)?;
            pieces.pop();
            used[j] = false;
        }
    }
    Ok(())
}

/// Checks that a finite set of group elements contains the identity and is
/// closed under composition and inversion.
pub fn is_subgroup<I: ExpansionInstance>(inst: &I, elements: &[I::Group]) -> bool {
    let set: HashSet<&I::Group> = elements.iter().collect();
    if !set.contains(&inst.identity()) {
        return false;
    }
    elements.iter().all(|g| {
        set.contains(&inst.invert(g)) && elements.iter().all(|h| set.contains(&inst.compose(g, h)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::houghton::Houghton;
    use crate::thompson::{ball_vertex, ThompsonV, VGroupElement};

    #[test]
    fn v_small_stabilizers() {
        let root = stabilizer(&ThompsonV, &ThompsonV.base_vertex()).unwrap();
        assert_eq!(root, vec![VGroupElement::identity()]);
        let halves = stabilizer(&ThompsonV, &ball_vertex(["0", "1"]).unwrap()).unwrap();
        assert_eq!(halves.len(), 2);
        assert!(halves.contains(&VGroupElement::swap_halves()));
        assert!(is_subgroup(&ThompsonV, &halves));
    }

    #[test]
    fn v_factorial_orders() {
        let v = ball_vertex(["00", "01", "10", "11"]).unwrap();
        let stab = stabilizer(&ThompsonV, &v).unwrap();
        assert_eq!(stab.len(), 24);
        assert!(is_subgroup(&ThompsonV, &stab));
    }

    #[test]
    fn houghton_points_permute() {
        let h = Houghton::new(2).unwrap();
        let stab = stabilizer(&h, &h.standard_vertex(&[3, 2])).unwrap();
        assert_eq!(stab.len(), 6);
        assert!(is_subgroup(&h, &stab));
    }
}
