//! Simple undirected graphs with stable edge indices.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors raised while building a [`Graph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("edge {{{0}, {1}}} has an endpoint outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
}

/// An immutable simple undirected graph.
///
/// Edge `i` is the `i`-th pair passed to [`Graph::new`]; endpoints are stored
/// with the smaller id first. Adjacency lists are sorted by neighbour id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<(usize, usize)>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = GraphError;

    fn try_from(repr: GraphRepr) -> Result<Self, Self::Error> {
        Graph::new(repr.vertex_count, repr.edges)
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            vertex_count: g.vertex_count,
            edges: g.edges,
        }
    }
}

impl Graph {
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut seen = HashSet::new();
        let mut stored = Vec::new();
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(GraphError::VertexOutOfRange(u, v, vertex_count));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let pair = (u.min(v), u.max(v));
            if !seen.insert(pair) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            let index = stored.len();
            stored.push(pair);
            adjacency[u].push((v, index));
            adjacency[v].push((u, index));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            vertex_count,
            edges: stored,
            adjacency,
        })
    }

    /// A graph with `vertex_count` vertices and no edges.
    pub fn empty(vertex_count: usize) -> Self {
        Graph {
            vertex_count,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); vertex_count],
        }
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Endpoints of edge `e`, smaller id first.
    #[inline]
    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// `(neighbour, edge index)` pairs of `v`, sorted by neighbour.
    #[inline]
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().map(|&(u, _)| u)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        let list = self.adjacency.get(u)?;
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut label = vec![usize::MAX; self.vertex_count];
        let mut out = Vec::new();
        for start in 0..self.vertex_count {
            if label[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            label[start] = id;
            let mut head = 0;
            while head < members.len() {
                let v = members[head];
                head += 1;
                for &(u, _) in &self.adjacency[v] {
                    if label[u] == usize::MAX {
                        label[u] = id;
                        members.push(u);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// True when the graph has no cycle.
    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.components().len() == self.vertex_count
    }

    /// Subgraph on `vertices` (relabelled `0..vertices.len()` in the given
    /// order) together with the original index of every kept edge.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut local = vec![usize::MAX; self.vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        let mut origin = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if local[u] != usize::MAX && local[v] != usize::MAX {
                edges.push((local[u], local[v]));
                origin.push(e);
            }
        }
        let g = Graph::new(vertices.len(), edges).expect("induced subgraph of a simple graph");
        (g, origin)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(1, 0))
        );
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange(0, 2, 2))
        ));
    }

    #[test]
    fn stable_indices_and_lookup() {
        let g = Graph::new(4, [(2, 1), (0, 1), (3, 2)]).unwrap();
        assert_eq!(g.edge(0), (1, 2));
        assert_eq!(g.edge_between(1, 0), Some(1));
        assert_eq!(g.edge_between(0, 3), None);
        assert_eq!(g.incident(1), &[(0, 1), (2, 0)]);
        assert_eq!(g.max_degree(), 2);
    }

    #[test]
    fn components_and_forests() {
        let g = Graph::new(6, [(0, 1), (1, 2), (4, 5)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3], vec![4, 5]]);
        assert!(g.is_forest());
        let c = Graph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!c.is_forest());
        assert!(c.is_connected());
    }

    #[test]
    fn serde_validates() {
        let g: Graph = serde_json::from_str(r#"{"vertex_count":2,"edges":[[0,1]]}"#).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(serde_json::from_str::<Graph>(r#"{"vertex_count":2,"edges":[[0,0]]}"#).is_err());
    }
}
