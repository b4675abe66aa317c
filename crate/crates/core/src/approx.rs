//! Polynomial-time approximations of `ar(G, P_3)`.
//!
//! * [`greedy_bounded_degree`] mints one new color per round and paints the
//!   neighbourhood of the chosen edge with a shared filler color; it uses at
//!   least `ceil(m / (2 Δ²))` colors.
//! * [`bipartite_star`] gives every vertex of the larger side of each
//!   component its own color on all incident edges, which is within a factor
//!   two of optimal on bipartite graphs.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{Color, EdgeColoring};
use crate::graph::Graph;
use crate::solve::{SolveResult, SolveStatus};

/// Filler token shared by every edge near a greedy pick.
pub const FILLER: &str = "c0";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ApproxError {
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("edge {{{0}, {1}}} does not cross the bipartition")]
    NotBipartite(usize, usize),
    #[error("bipartition covers {got} vertices but the graph has {expected}")]
    SizeMismatch { expected: usize, got: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    A,
    B,
}

/// A two-sided vertex split with every edge crossing between the sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    sides: Vec<Side>,
}

impl Bipartition {
    /// Checks that every edge of `g` crosses `sides`.
    pub fn new(g: &Graph, sides: Vec<Side>) -> Result<Self, ApproxError> {
        if sides.len() != g.vertex_count() {
            return Err(ApproxError::SizeMismatch {
                expected: g.vertex_count(),
                got: sides.len(),
            });
        }
        if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| sides[u] == sides[v]) {
            return Err(ApproxError::NotBipartite(u, v));
        }
        Ok(Bipartition { sides })
    }

    /// BFS 2-coloring; the smallest vertex of each component goes to side A.
    pub fn of(g: &Graph) -> Result<Self, ApproxError> {
        let mut sides: Vec<Option<Side>> = vec![None; g.vertex_count()];
        for start in 0..g.vertex_count() {
            if sides[start].is_some() {
                continue;
            }
            sides[start] = Some(Side::A);
            let mut queue = vec![start];
            let mut head = 0;
            while head < queue.len() {
                let v = queue[head];
                head += 1;
                let other = match sides[v] {
                    Some(Side::A) => Side::B,
                    _ => Side::A,
                };
                for u in g.neighbors(v) {
                    match sides[u] {
                        None => {
                            sides[u] = Some(other);
                            queue.push(u);
                        }
                        Some(s) if s != other => {
                            return Err(ApproxError::NotBipartite(v.min(u), v.max(u)));
                        }
                        _ => {}
                    }
                }
            }
        }
        Ok(Bipartition {
            sides: sides.into_iter().map(|s| s.expect("visited")).collect(),
        })
    }

    pub fn side(&self, v: usize) -> Side {
        self.sides[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    /// Per component, the side holding more vertices (side A on ties).
    pub fn larger_sides(&self, g: &Graph) -> Vec<(Vec<usize>, Side)> {
        g.components()
            .into_iter()
            .map(|members| {
                let a = members.iter().filter(|&&v| self.sides[v] == Side::A).count();
                let side = if a * 2 >= members.len() { Side::A } else { Side::B };
                (members, side)
            })
            .collect()
    }
}

/// Greedy rounds over edges in `(min endpoint, max endpoint)` order.
pub fn greedy_bounded_degree(g: &Graph) -> Result<SolveResult, ApproxError> {
    if g.edge_count() == 0 {
        return Err(ApproxError::EmptyGraph);
    }
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.sort_by_key(|&e| g.edge(e));
    let mut colors: Vec<Option<Color>> = vec![None; g.edge_count()];
    let mut round = 0;
    for e in order {
        if colors[e].is_some() {
            continue;
        }
        round += 1;
        colors[e] = Some(Color::new(format!("g{round}")));
        let (u, v) = g.edge(e);
        // closed neighbourhood N[u] ∪ N[v]
        let mut marked = vec![u, v];
        marked.extend(g.neighbors(u));
        marked.extend(g.neighbors(v));
        for &w in &marked {
            for &(_, f) in g.incident(w) {
                if colors[f].is_none() {
                    colors[f] = Some(Color::from(FILLER));
                }
            }
        }
    }
    let witness = EdgeColoring::new(colors.into_iter().map(|c| c.expect("all edges colored")).collect());
    Ok(SolveResult::constructed(witness, SolveStatus::Approximate))
}

/// One color per non-isolated vertex on the larger side of each component;
/// that vertex's color goes on all of its edges.
pub fn bipartite_star(g: &Graph, bp: &Bipartition) -> Result<SolveResult, ApproxError> {
    let bp = Bipartition::new(g, bp.sides.clone())?;
    let mut colors: Vec<Option<Color>> = vec![None; g.edge_count()];
    for (members, side) in bp.larger_sides(g) {
        for v in members {
            if bp.side(v) != side {
                continue;
            }
            for &(_, e) in g.incident(v) {
                colors[e] = Some(Color::new(format!("a{v}")));
            }
        }
    }
    let witness = EdgeColoring::new(colors.into_iter().map(|c| c.expect("every edge crosses")).collect());
    Ok(SolveResult::constructed(witness, SolveStatus::Approximate))
}
