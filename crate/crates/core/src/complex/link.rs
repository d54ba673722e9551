//! Links of vertices and the flag (Gromov) condition.

use std::collections::HashSet;

use super::cube::{cube_from_moves, cube_vertices};
use super::moves_at;
use crate::expansion::{apply_move, canonical_key, ExpansionInstance, Move, Vertex};
use crate::oracle::brute_square_test;

/// Nodes are the moves at a vertex; two moves are adjacent when their basins
/// are disjoint.
#[derive(Clone, Debug)]
pub struct LinkGraph<E> {
    pub moves: Vec<Move<E>>,
    pub neighbors: Vec<Vertex<E>>,
    pub adjacency: Vec<Vec<bool>>,
}

impl<E> LinkGraph<E> {
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.moves.len();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| self.adjacency[i][j]).collect()
    }
}

fn basins_disjoint<E: Clone + PartialEq>(a: &Move<E>, b: &Move<E>) -> bool {
    let bb = b.basin();
    a.basin().iter().all(|x| !bb.contains(x))
}

pub fn link_graph<I: ExpansionInstance>(inst: &I, v: &Vertex<I::Element>) -> LinkGraph<I::Element> {
    let moves = moves_at(inst, v);
    let neighbors = moves.iter().map(|m| apply_move(inst, v, m).expect("applicable")).collect();
    let n = moves.len();
    let mut adjacency = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let adj = basins_disjoint(&moves[i], &moves[j]);
            adjacency[i][j] = adj;
            adjacency[j][i] = adj;
        }
    }
    LinkGraph { moves, neighbors, adjacency }
}

/// All cliques with at most `max` nodes (the empty clique included), each
/// listed once with increasing node indices.
pub fn cliques_up_to<E>(g: &LinkGraph<E>, max: usize) -> Vec<Vec<usize>> {
    fn extend<E>(g: &LinkGraph<E>, max: usize, cur: &mut Vec<usize>, cands: &[usize], out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        if cur.len() == max {
            return;
        }
        for (k, &i) in cands.iter().enumerate() {
            let next: Vec<usize> = cands[k + 1..].iter().copied().filter(|&j| g.adjacency[i][j]).collect();
            cur.push(i);
            extend(g, max, cur, &next, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let all: Vec<usize> = (0..g.len()).collect();
    extend(g, max, &mut Vec::new(), &all, &mut out);
    out
}

#[derive(Clone, Debug, Default)]
pub struct FlagReport {
    pub nodes: usize,
    pub edges: usize,
    pub cliques_checked: usize,
    pub largest_clique: usize,
    pub failures: Vec<String>,
}

impl FlagReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that every clique of at most `max_clique` moves spans a cube of the
/// same dimension containing `v` and all the clique's neighbors, that
/// adjacency agrees with an independent square search, and that distinct
/// moves reach distinct neighbors.
pub fn check_flag<I: ExpansionInstance>(inst: &I, v: &Vertex<I::Element>, max_clique: usize) -> FlagReport {
    let link = link_graph(inst, v);
    let mut report = FlagReport { nodes: link.len(), edges: link.edges().len(), ..Default::default() };

    let distinct: HashSet<_> = link.neighbors.iter().collect();
    if distinct.len() != link.neighbors.len() {
        report.failures.push("two moves reach the same neighbor".into());
    }

    for clique in cliques_up_to(&link, max_clique) {
        if clique.is_empty() {
            continue;
        }
        report.cliques_checked += 1;
        report.largest_clique = report.largest_clique.max(clique.len());
        let moves: Vec<_> = clique.iter().map(|&i| link.moves[i].clone()).collect();
        let label = || moves.iter().map(Move::key).collect::<Vec<_>>().join(" | ");
        let cube = match cube_from_moves(inst, v, &moves) {
            Ok(c) => c,
            Err(e) => {
                report.failures.push(format!("clique [{}] spans no cube: {e}", label()));
                continue;
            }
        };
        if cube.dim() != clique.len() {
            report.failures.push(format!("clique [{}] spans a cube of dimension {}", label(), cube.dim()));
            continue;
        }
        let corners = match cube_vertices(inst, &cube) {
            Ok(c) => c,
            Err(e) => {
                report.failures.push(format!("clique [{}]: {e}", label()));
                continue;
            }
        };
        if !corners.contains(v) || !clique.iter().all(|&i| corners.contains(&link.neighbors[i])) {
            report.failures.push(format!("cube of clique [{}] misses v or a neighbor", label()));
        }
    }

    for i in 0..link.len() {
        for j in i + 1..link.len() {
            let square = brute_square_test(inst, v, &link.moves[i], &link.moves[j]);
            if square != link.adjacency[i][j] {
                report.failures.push(format!(
                    "adjacency {} but square test {} for {} / {}",
                    link.adjacency[i][j],
                    square,
                    canonical_key(&link.moves[i].basin()),
                    canonical_key(&link.moves[j].basin())
                ));
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::thompson::{ball_vertex, ThompsonV};

    #[test]
    fn halves_link_has_one_edge() {
        let v = ball_vertex(["0", "1"]).unwrap();
        let link = link_graph(&ThompsonV, &v);
        assert_eq!(link.len(), 4);
        assert_eq!(link.edges().len(), 1);
        let (i, j) = link.edges()[0];
        assert!(link.moves[i].is_expansion() && link.moves[j].is_expansion());
        let report = check_flag(&ThompsonV, &v, 4);
        assert!(report.passed(), "{:?}", report.failures);
        assert_eq!(report.cliques_checked, 5);
    }

    #[test]
    fn flag_holds_at_three_balls() {
        let v = ball_vertex(["0", "10", "11"]).unwrap();
        let report = check_flag(&ThompsonV, &v, 6);
        assert!(report.passed(), "{:?}", report.failures);
        assert_eq!(report.nodes, 9);
        assert_eq!(report.largest_clique, 3);
    }

    #[test]
    fn clique_enumeration_counts() {
        let v = ball_vertex(["0", "10", "11"]).unwrap();
        let link = link_graph(&ThompsonV, &v);
        // 3 pairwise-disjoint expansions give 2^3 cliques among themselves;
        // each of the 6 contractions pairs with the one expansion outside
        // its basin.
        let all = cliques_up_to(&link, 10);
        assert_eq!(all.len(), 8 + 6 * 2);
        assert_eq!(cliques_up_to(&link, 1).len(), 1 + 9);
    }
}
