//! Simple-path enumeration and the rainbow `P_k` checker.

use serde::{Deserialize, Serialize};

use crate::coloring::EdgeColoring;
use crate::graph::Graph;

/// A simple path stored with its first vertex smaller than its last.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SimplePath {
    vertices: Vec<usize>,
    edges: Vec<usize>,
}

impl SimplePath {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Edge indices in traversal order.
    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Validates a vertex sequence against `g` and orients it canonically.
    pub fn from_vertices(g: &Graph, mut vertices: Vec<usize>) -> Option<Self> {
        if vertices.len() < 2 || vertices.iter().any(|&v| v >= g.vertex_count()) {
            return None;
        }
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != vertices.len() {
            return None;
        }
        if vertices[0] > vertices[vertices.len() - 1] {
            vertices.reverse();
        }
        let edges = vertices
            .windows(2)
            .map(|w| g.edge_between(w[0], w[1]))
            .collect::<Option<Vec<_>>>()?;
        Some(SimplePath { vertices, edges })
    }

    /// True when every edge of the path has a different color.
    pub fn is_rainbow(&self, c: &EdgeColoring) -> bool {
        let mut seen = Vec::with_capacity(self.edges.len());
        for &e in &self.edges {
            let color = c.get(e);
            if seen.contains(&color) {
                return false;
            }
            seen.push(color);
        }
        true
    }
}

/// Every simple path with exactly `k` edges, once each, in lexicographic
/// order of vertex sequence.
pub fn enumerate_paths(g: &Graph, k: usize) -> Vec<SimplePath> {
    let mut out = Vec::new();
    if k == 0 || k >= g.vertex_count() {
        return out;
    }
    let mut on_path = vec![false; g.vertex_count()];
    let mut vertices = Vec::with_capacity(k + 1);
    let mut edges = Vec::with_capacity(k);
    for start in 0..g.vertex_count() {
        vertices.push(start);
        on_path[start] = true;
        extend(g, k, &mut on_path, &mut vertices, &mut edges, &mut out);
        on_path[start] = false;
        vertices.pop();
    }
    out
}

fn extend(
    g: &Graph,
    k: usize,
    on_path: &mut [bool],
    vertices: &mut Vec<usize>,
    edges: &mut Vec<usize>,
    out: &mut Vec<SimplePath>,
) {
    if edges.len() == k {
        if vertices[0] < vertices[k] {
            out.push(SimplePath {
                vertices: vertices.clone(),
                edges: edges.clone(),
            });
        }
        return;
    }
    let tail = *vertices.last().expect("path has a start vertex");
    for &(next, e) in g.incident(tail) {
        if on_path[next] {
            continue;
        }
        on_path[next] = true;
        vertices.push(next);
        edges.push(e);
        extend(g, k, on_path, vertices, edges, out);
        edges.pop();
        vertices.pop();
        on_path[next] = false;
    }
}

/// Searches for a rainbow path of length `k` given dense color ids per edge.
///
/// The search only extends prefixes that are themselves rainbow, so it is
/// far cheaper than filtering [`enumerate_paths`] on well-colored inputs.
pub fn find_rainbow_path_by_ids(g: &Graph, ids: &[u32], k: usize) -> Option<SimplePath> {
    assert_eq!(ids.len(), g.edge_count(), "coloring must cover every edge");
    if k == 0 || k >= g.vertex_count() || g.edge_count() < k {
        return None;
    }
    let mut state = RainbowSearch {
        g,
        ids,
        k,
        on_path: vec![false; g.vertex_count()],
        vertices: Vec::with_capacity(k + 1),
        edges: Vec::with_capacity(k),
        used: Vec::with_capacity(k),
        found: None,
    };
    for start in 0..g.vertex_count() {
        if g.degree(start) == 0 {
            continue;
        }
        state.vertices.push(start);
        state.on_path[start] = true;
        if state.dfs() {
            let vertices = state.found.take().expect("set on success");
            return SimplePath::from_vertices(g, vertices);
        }
        state.on_path[start] = false;
        state.vertices.pop();
    }
    None
}

struct RainbowSearch<'a> {
    g: &'a Graph,
    ids: &'a [u32],
    k: usize,
    on_path: Vec<bool>,
    vertices: Vec<usize>,
    edges: Vec<usize>,
    used: Vec<u32>,
    found: Option<Vec<usize>>,
}

impl RainbowSearch<'_> {
    fn dfs(&mut self) -> bool {
        if self.edges.len() == self.k {
            self.found = Some(self.vertices.clone());
            return true;
        }
        let tail = *self.vertices.last().expect("non-empty");
        for &(next, e) in self.g.incident(tail) {
            if self.on_path[next] || self.used.contains(&self.ids[e]) {
                continue;
            }
            self.on_path[next] = true;
            self.vertices.push(next);
            self.edges.push(e);
            self.used.push(self.ids[e]);
            if self.dfs() {
                return true;
            }
            self.used.pop();
            self.edges.pop();
            self.vertices.pop();
            self.on_path[next] = false;
        }
        false
    }
}

/// A rainbow path of length `k` under `c`, if one exists.
pub fn find_rainbow_path(g: &Graph, c: &EdgeColoring, k: usize) -> Option<SimplePath> {
    find_rainbow_path_by_ids(g, &c.dense_ids(), k)
}

/// True iff no simple path with `k` edges has `k` pairwise distinct colors.
pub fn is_pk_free(g: &Graph, c: &EdgeColoring, k: usize) -> bool {
    find_rainbow_path(g, c, k).is_none()
}
