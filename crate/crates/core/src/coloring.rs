//! Edge colorings, color classes and vertex roles.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// An opaque color token. Integers are carried as their decimal string.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Color(String);

impl Color {
    pub fn new(token: impl Into<String>) -> Self {
        Color(token.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Color {
    fn from(s: &str) -> Self {
        Color(s.to_owned())
    }
}

impl From<String> for Color {
    fn from(s: String) -> Self {
        Color(s)
    }
}

impl From<usize> for Color {
    fn from(n: usize) -> Self {
        Color(n.to_string())
    }
}

/// A color for every edge, indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeColoring {
    colors: Vec<Color>,
}

impl EdgeColoring {
    pub fn new(colors: Vec<Color>) -> Self {
        EdgeColoring { colors }
    }

    /// Builds a coloring from anything convertible into tokens.
    pub fn from_tokens<T: Into<Color>>(tokens: impl IntoIterator<Item = T>) -> Self {
        EdgeColoring {
            colors: tokens.into_iter().map(Into::into).collect(),
        }
    }

    /// Every edge of `g` colored with `token`.
    pub fn constant(g: &Graph, token: impl Into<Color>) -> Self {
        EdgeColoring {
            colors: vec![token.into(); g.edge_count()],
        }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, e: usize) -> &Color {
        &self.colors[e]
    }

    pub fn set(&mut self, e: usize, c: Color) {
        self.colors[e] = c;
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn is_total_on(&self, g: &Graph) -> bool {
        self.colors.len() == g.edge_count()
    }

    pub fn distinct_count(&self) -> usize {
        self.token_set().len()
    }

    pub fn token_set(&self) -> BTreeSet<&Color> {
        self.colors.iter().collect()
    }

    /// Dense integer ids for the tokens, assigned in order of first use.
    pub fn dense_ids(&self) -> Vec<u32> {
        dense_ids(self.colors.iter())
    }
}

impl From<EdgeColoring> for PartialColoring {
    fn from(c: EdgeColoring) -> Self {
        PartialColoring {
            colors: c.colors.into_iter().map(Some).collect(),
        }
    }
}

/// A color for some edges; `None` marks a free edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PartialColoring {
    colors: Vec<Option<Color>>,
}

impl PartialColoring {
    pub fn new(colors: Vec<Option<Color>>) -> Self {
        PartialColoring { colors }
    }

    /// All `edge_count` edges free.
    pub fn uncolored(edge_count: usize) -> Self {
        PartialColoring {
            colors: vec![None; edge_count],
        }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, e: usize) -> Option<&Color> {
        self.colors[e].as_ref()
    }

    pub fn set(&mut self, e: usize, c: Option<Color>) {
        self.colors[e] = c;
    }

    pub fn colors(&self) -> &[Option<Color>] {
        &self.colors
    }

    pub fn colored_edges(&self) -> impl Iterator<Item = (usize, &Color)> + '_ {
        self.colors
            .iter()
            .enumerate()
            .filter_map(|(e, c)| c.as_ref().map(|c| (e, c)))
    }

    pub fn uncolored_edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.colors
            .iter()
            .enumerate()
            .filter_map(|(e, c)| c.is_none().then_some(e))
    }

    pub fn uncolored_count(&self) -> usize {
        self.colors.iter().filter(|c| c.is_none()).count()
    }

    pub fn distinct_count(&self) -> usize {
        self.token_set().len()
    }

    pub fn token_set(&self) -> BTreeSet<&Color> {
        self.colors.iter().flatten().collect()
    }

    /// The total coloring, if no edge is free.
    pub fn to_total(&self) -> Option<EdgeColoring> {
        self.colors
            .iter()
            .cloned()
            .collect::<Option<Vec<_>>>()
            .map(EdgeColoring::new)
    }

    /// True when `total` agrees with every fixed edge.
    pub fn is_extended_by(&self, total: &EdgeColoring) -> bool {
        self.colors.len() == total.len()
            && self
                .colored_edges()
                .all(|(e, c)| total.get(e) == c)
    }
}

pub(crate) fn dense_ids<'a>(tokens: impl Iterator<Item = &'a Color>) -> Vec<u32> {
    let mut ids: HashMap<&Color, u32> = HashMap::new();
    tokens
        .map(|c| {
            let next = ids.len() as u32;
            *ids.entry(c).or_insert(next)
        })
        .collect()
}

/// Number of distinct tokens in a total coloring.
pub fn distinct_color_count(c: &EdgeColoring) -> usize {
    c.distinct_count()
}

/// True iff the edges of every color form a connected subgraph.
pub fn color_classes_connected(g: &Graph, c: &EdgeColoring) -> bool {
    let ids = c.dense_ids();
    let classes = ids.iter().copied().max().map_or(0, |m| m as usize + 1);
    let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    // One class at a time; only the vertices a class touches are reset.
    let mut by_class: Vec<Vec<usize>> = vec![Vec::new(); classes];
    for (e, &id) in ids.iter().enumerate() {
        by_class[id as usize].push(e);
    }
    for edges in by_class {
        for &e in &edges {
            let (u, v) = g.edge(e);
            parent[u] = u;
            parent[v] = v;
        }
        for &e in &edges {
            let (u, v) = g.edge(e);
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a] = b;
            }
        }
        let mut root = None;
        for &e in &edges {
            let r = find(&mut parent, g.edge(e).0);
            match root {
                None => root = Some(r),
                Some(x) if x != r => return false,
                _ => {}
            }
        }
    }
    true
}

/// How the edges around a vertex are colored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexRole {
    /// All incident edges share one color. Degree-1 vertices land here.
    Monochrome,
    /// All incident edges have pairwise distinct colors.
    Rainbow,
    Mixed,
    Isolated,
}

pub fn vertex_role(g: &Graph, c: &EdgeColoring, v: usize) -> VertexRole {
    let incident = g.incident(v);
    if incident.is_empty() {
        return VertexRole::Isolated;
    }
    let seen: BTreeSet<&Color> = incident.iter().map(|&(_, e)| c.get(e)).collect();
    if seen.len() == 1 {
        VertexRole::Monochrome
    } else if seen.len() == incident.len() {
        VertexRole::Rainbow
    } else {
        VertexRole::Mixed
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n + 1, (0..n).map(|i| (i, i + 1))).unwrap()
    }

    #[test]
    fn distinct_counts() {
        assert_eq!(EdgeColoring::from_tokens([1usize, 1, 2, 2]).distinct_count(), 2);
        assert_eq!(PartialColoring::uncolored(0).distinct_count(), 0);
        assert_eq!(EdgeColoring::from_tokens(["T", "F", "T", "7"]).distinct_count(), 3);
        let p = PartialColoring::new(vec![Some("T".into()), None, Some("T".into())]);
        assert_eq!(p.distinct_count(), 1);
        assert_eq!(p.uncolored_count(), 1);
    }

    #[test]
    fn connected_classes() {
        let g = path(3);
        assert!(!color_classes_connected(&g, &EdgeColoring::from_tokens([1usize, 2, 1])));
        assert!(color_classes_connected(&g, &EdgeColoring::from_tokens([1usize, 1, 2])));
        let e = path(1);
        assert!(color_classes_connected(&e, &EdgeColoring::from_tokens([1usize])));
    }

    #[test]
    fn roles() {
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let c = EdgeColoring::from_tokens([1usize, 2, 3]);
        assert_eq!(vertex_role(&star, &c, 0), VertexRole::Rainbow);
        assert_eq!(vertex_role(&star, &c, 1), VertexRole::Monochrome);
        let mono = EdgeColoring::from_tokens([1usize, 1, 1]);
        assert_eq!(vertex_role(&star, &mono, 0), VertexRole::Monochrome);
        let mixed = EdgeColoring::from_tokens([1usize, 1, 2]);
        assert_eq!(vertex_role(&star, &mixed, 0), VertexRole::Mixed);
        assert_eq!(vertex_role(&Graph::empty(1), &EdgeColoring::new(vec![]), 0), VertexRole::Isolated);
    }
}
