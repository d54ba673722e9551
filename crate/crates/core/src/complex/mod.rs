//! The cubical complex of full-support vertices, for any instance.

mod bfs;
mod cube;
mod join;
mod link;
mod stabilizer;

pub use bfs::{bfs, BfsCaps, ExplorationGraph};
pub use cube::{
    ascending_star, cube_from_moves, cube_intersection, cube_vertices, cubes_at, intersection_lemma_check, Cube,
    LemmaReport,
};
pub use join::{join, JoinWitness};
pub use link::{check_flag, cliques_up_to, link_graph, FlagReport, LinkGraph};
pub use stabilizer::{act_move, act_vertex, is_subgroup, stabilizer};

use std::collections::HashSet;

use crate::expansion::{apply_move, canonical_key, ExpansionInstance, Move, Vertex};

/// Every edge leaving `v`: one expansion per expandable member, and one
/// contraction per (candidate basin, coexpansion) pair.
pub fn moves_at<I: ExpansionInstance>(inst: &I, v: &Vertex<I::Element>) -> Vec<Move<I::Element>> {
    let mut moves: Vec<Move<I::Element>> = v
        .elements()
        .iter()
        .filter(|b| inst.children(b).is_some())
        .map(|b| Move::Expand(b.clone()))
        .collect();
    let mut seen = HashSet::new();
    for mut basin in inst.contraction_candidates(v) {
        basin.sort_by_cached_key(canonical_key);
        for target in inst.coexpansions(&basin) {
            let m = Move::Contract { target, basin: basin.clone() };
            if seen.insert(m.key()) {
                moves.push(m);
            }
        }
    }
    moves
}

pub fn neighbors<I: ExpansionInstance>(inst: &I, v: &Vertex<I::Element>) -> Vec<Vertex<I::Element>> {
    moves_at(inst, v)
        .iter()
        .map(|m| apply_move(inst, v, m).expect("moves_at only yields applicable moves"))
        .collect()
}

/// Number of distinct neighbors.
pub fn degree<I: ExpansionInstance>(inst: &I, v: &Vertex<I::Element>) -> usize {
    neighbors(inst, v).into_iter().collect::<HashSet<_>>().len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::houghton::{Houghton, HoughtonElement};
    use crate::thompson::{ball_vertex, PrefixMapTable, ThompsonV};

    #[test]
    fn moves_at_root() {
        let v = ThompsonV.base_vertex();
        let moves = moves_at(&ThompsonV, &v);
        assert_eq!(moves, vec![Move::Expand(PrefixMapTable::identity())]);
    }

    #[test]
    fn moves_at_halves() {
        let v = ball_vertex(["0", "1"]).unwrap();
        let moves = moves_at(&ThompsonV, &v);
        assert_eq!(moves.len(), 4);
        assert_eq!(moves.iter().filter(|m| m.is_expansion()).count(), 2);
        let targets: Vec<_> = moves
            .iter()
            .filter_map(|m| match m {
                Move::Contract { target, .. } => Some(target.to_string()),
                _ => None,
            })
            .collect();
        assert_eq!(targets, vec!["ε->ε".to_string(), "0->1, 1->0".to_string()]);
        assert_eq!(degree(&ThompsonV, &v), 4);
    }

    #[test]
    fn v_degree_is_height_squared() {
        for words in [vec!["0", "10", "11"], vec!["00", "01", "10", "110", "111"]] {
            let v = ball_vertex(words.iter().copied()).unwrap();
            let k = v.height();
            assert_eq!(moves_at(&ThompsonV, &v).len(), k * k);
            assert_eq!(degree(&ThompsonV, &v), k * k);
        }
    }

    #[test]
    fn houghton_degree_law() {
        let h = Houghton::new(2).unwrap();
        let v = h.standard_vertex(&[3, 2]);
        // p = 3 points, r = 2 rays
        assert_eq!(moves_at(&h, &v).len(), 2 + 3 * 2);
        let up = moves_at(&h, &h.base_vertex());
        assert_eq!(up.len(), 2);
        assert!(up.iter().all(|m| matches!(m, Move::Expand(HoughtonElement::Ray(_)))));
    }

    #[test]
    fn neighbors_differ_in_height() {
        let v = ball_vertex(["0", "10", "11"]).unwrap();
        for w in neighbors(&ThompsonV, &v) {
            assert_ne!(w.height(), v.height());
            assert!(neighbors(&ThompsonV, &w).contains(&v));
        }
    }
}
