//! Breadth-first exploration of the 1-skeleton.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use super::neighbors;
use crate::expansion::{ExpansionInstance, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BfsCaps {
    pub max_vertices: usize,
}

impl Default for BfsCaps {
    fn default() -> Self {
        BfsCaps { max_vertices: 100_000 }
    }
}

/// Vertices in discovery order (level by level, each level sorted by
/// canonical key), edges between discovered vertices with `i < j`, and the
/// height and full degree of every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplorationGraph<E> {
    pub vertices: Vec<Vertex<E>>,
    pub edges: Vec<(usize, usize)>,
    pub heights: Vec<usize>,
    pub degrees: Vec<usize>,
    pub distances: Vec<usize>,
    /// Set when the vertex cap cut the exploration short.
    pub partial: bool,
}

#[derive(Serialize)]
struct JsonExport<'a, E> {
    vertices: &'a [Vertex<E>],
    edges: &'a [(usize, usize)],
    heights: &'a [usize],
}

impl<E: Serialize> ExplorationGraph<E> {
    pub fn to_json(&self) -> String {
        let export = JsonExport { vertices: &self.vertices, edges: &self.edges, heights: &self.heights };
        serde_json::to_string(&export).expect("vertices always serialize")
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph complex {\n");
        for (i, h) in self.heights.iter().enumerate() {
            writeln!(out, "  v{i} [label=\"{h}\"];").unwrap();
        }
        for (i, j) in &self.edges {
            writeln!(out, "  v{i} -- v{j};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// Explores every vertex within `radius` edges of `start`. Neighbor lists of
/// a frontier are computed in parallel; merging is sequential and sorted, so
/// the output does not depend on scheduling.
pub fn bfs<I: ExpansionInstance>(
    inst: &I,
    start: &Vertex<I::Element>,
    radius: usize,
    caps: BfsCaps,
) -> ExplorationGraph<I::Element> {
    let mut index: HashMap<Vertex<I::Element>, usize> = HashMap::new();
    let mut vertices = vec![start.clone()];
    let mut distances = vec![0];
    index.insert(start.clone(), 0);
    let mut partial = caps.max_vertices == 0;
    let mut frontier = if partial { Vec::new() } else { vec![0usize] };
    if partial {
        vertices.clear();
        distances.clear();
    }

    for level in 1..=radius {
        if frontier.is_empty() || partial {
            break;
        }
        let found: Vec<Vec<Vertex<I::Element>>> =
            frontier.par_iter().map(|&i| neighbors(inst, &vertices[i])).collect();
        let mut fresh: Vec<Vertex<I::Element>> =
            found.into_iter().flatten().filter(|w| !index.contains_key(w)).collect();
        fresh.sort_by_cached_key(|w| w.key());
        fresh.dedup();
        if vertices.len() + fresh.len() > caps.max_vertices {
            fresh.truncate(caps.max_vertices - vertices.len());
            partial = true;
        }
        frontier.clear();
        for w in fresh {
            index.insert(w.clone(), vertices.len());
            frontier.push(vertices.len());
            vertices.push(w);
            distances.push(level);
        }
    }

    let all: Vec<Vec<Vertex<I::Element>>> = vertices.par_iter().map(|v| neighbors(inst, v)).collect();
    let mut edges = Vec::new();
    let mut degrees = Vec::with_capacity(vertices.len());
    for (i, ns) in all.iter().enumerate() {
        degrees.push(ns.len());
        for w in ns {
            if let Some(&j) = index.get(w) {
                if i < j {
                    edges.push((i, j));
                }
            }
        }
    }
    edges.sort_unstable();
    let heights = vertices.iter().map(Vertex::height).collect();
    ExplorationGraph { vertices, edges, heights, degrees, distances, partial }
}
