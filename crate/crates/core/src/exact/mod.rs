//! Exact anti-Ramsey numbers for paths by exhaustive partition search.
//!
//! Colorings are enumerated as set partitions of the free edges, one
//! connected component at a time. Colors never need to be shared between
//! components, so the optimum is the sum of per-component optima (plus the
//! precolored tokens, which are counted once globally).

mod search;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::approx::greedy_bounded_degree;
use crate::coloring::{Color, EdgeColoring, PartialColoring};
use crate::graph::Graph;
use crate::reductions::ReductionParams;
use crate::solve::{SearchStats, SolveResult, SolveStatus};

use search::{solve_component, ComponentProblem, Found, Shared};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("path length must be at least 2, got {0}")]
    InvalidPathLength(usize),
    #[error("{uncolored} free edges exceed the limit of {limit}")]
    InstanceTooLarge { uncolored: usize, limit: usize },
    #[error("node budget exhausted before any valid coloring was found")]
    BudgetExhausted,
    #[error("no extension of the precoloring avoids a rainbow path")]
    Infeasible,
    #[error("precoloring covers {got} edges but the graph has {expected}")]
    ColoringLength { expected: usize, got: usize },
}

/// Knobs for the exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchLimits {
    pub max_uncolored_edges: usize,
    pub node_budget: Option<u64>,
    pub parallel: bool,
    /// Worker count when `parallel` is set; `None` uses the available cores.
    pub workers: Option<usize>,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_uncolored_edges: 16,
            node_budget: None,
            parallel: false,
            workers: None,
        }
    }
}

impl SearchLimits {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.parallel = workers > 1;
        self.workers = Some(workers);
        self
    }

    fn worker_count(&self) -> usize {
        if !self.parallel {
            return 1;
        }
        self.workers
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
            .max(1)
    }
}

/// A graph whose edges are partly precolored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrecoloredInstance {
    graph: Graph,
    coloring: PartialColoring,
}

impl PrecoloredInstance {
    pub fn new(graph: Graph, coloring: PartialColoring) -> Result<Self, SolveError> {
        if coloring.len() != graph.edge_count() {
            return Err(SolveError::ColoringLength {
                expected: graph.edge_count(),
                got: coloring.len(),
            });
        }
        Ok(PrecoloredInstance { graph, coloring })
    }

    /// No edge precolored.
    pub fn free(graph: Graph) -> Self {
        let coloring = PartialColoring::uncolored(graph.edge_count());
        PrecoloredInstance { graph, coloring }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn coloring(&self) -> &PartialColoring {
        &self.coloring
    }
}

/// `|V|` for `k = 3`; `c_k |V|` otherwise. Never below the exact value.
pub fn upper_bound(g: &Graph, k: usize) -> usize {
    if k == 3 {
        g.vertex_count()
    } else {
        ReductionParams::c_k_for(k) * g.vertex_count()
    }
}

/// `ar(g, P_k)`: the most colors an edge coloring of `g` can use without a
/// rainbow path of length `k`.
pub fn ar_exact(g: &Graph, k: usize, limits: &SearchLimits) -> Result<SolveResult, SolveError> {
    let inst = PrecoloredInstance::free(g.clone());
    solve(&inst, k, limits, true)
}

/// Precolored variant: free edges may reuse a precolored token or take new
/// ones. The objective counts every distinct token, precolored ones included.
pub fn ar_precolored(
    inst: &PrecoloredInstance,
    k: usize,
    limits: &SearchLimits,
) -> Result<SolveResult, SolveError> {
    solve(inst, k, limits, false)
}

fn solve(
    inst: &PrecoloredInstance,
    k: usize,
    limits: &SearchLimits,
    unconstrained: bool,
) -> Result<SolveResult, SolveError> {
    if k < 2 {
        return Err(SolveError::InvalidPathLength(k));
    }
    let g = &inst.graph;
    let uncolored = inst.coloring.uncolored_count();
    if uncolored > limits.max_uncolored_edges {
        return Err(SolveError::InstanceTooLarge {
            uncolored,
            limit: limits.max_uncolored_edges,
        });
    }
    let fixed_tokens: BTreeSet<&Color> = inst.coloring.token_set();
    let mut fresh = FreshTokens::new(&fixed_tokens);
    let mut witness: Vec<Option<Color>> = inst.coloring.colors().to_vec();
    let mut stats = SearchStats::default();
    let mut exhausted = false;
    let mut new_blocks = 0;
    let shared_budget = limits.node_budget;
    let workers = limits.worker_count();
    let mut shared_nodes = 0u64;

    for members in g.components() {
        let (local, origin) = g.induced(&members);
        if local.edge_count() == 0 {
            continue;
        }
        // token classes present in this component, numbered by first edge
        let mut class_of: BTreeMap<&Color, u16> = BTreeMap::new();
        let mut class_tokens: Vec<&Color> = Vec::new();
        let preset: Vec<Option<u16>> = origin
            .iter()
            .map(|&e| {
                inst.coloring.get(e).map(|c| {
                    *class_of.entry(c).or_insert_with(|| {
                        class_tokens.push(c);
                        (class_tokens.len() - 1) as u16
                    })
                })
            })
            .collect();
        let problem = ComponentProblem::new(
            &local,
            k,
            &preset,
            class_tokens.len(),
            upper_bound(&local, k),
        );
        let heuristic = if unconstrained && k >= 3 {
            Some(greedy_floor(&local))
        } else {
            None
        };
        let remaining_budget = shared_budget.map(|b| b.saturating_sub(shared_nodes));
        let shared = Shared::new(heuristic.as_ref().map(|h| h.blocks), remaining_budget);
        let (found, s) = solve_component(&problem, &shared, workers);
        stats.absorb(s);
        shared_nodes += shared.nodes.load(std::sync::atomic::Ordering::Relaxed);
        if shared.exhausted.load(std::sync::atomic::Ordering::Relaxed) {
            exhausted = true;
        }
        let found = match (found, heuristic) {
            (Some(f), Some(h)) if exhausted && h.blocks > f.blocks => h,
            (Some(f), _) => f,
            (None, Some(h)) if exhausted => h,
            (None, _) if exhausted => return Err(SolveError::BudgetExhausted),
            (None, _) => return Err(SolveError::Infeasible),
        };
        new_blocks += found.blocks;
        let block_tokens: Vec<Color> = (0..found.blocks).map(|_| fresh.next()).collect();
        for (local_edge, &global_edge) in origin.iter().enumerate() {
            if witness[global_edge].is_some() {
                continue;
            }
            let value = found.values[local_edge] as usize;
            let token = if value < class_tokens.len() {
                class_tokens[value].clone()
            } else {
                block_tokens[value - class_tokens.len()].clone()
            };
            witness[global_edge] = Some(token);
        }
    }

    let witness = EdgeColoring::new(
        witness
            .into_iter()
            .map(|c| c.expect("every edge lies in a component with edges"))
            .collect(),
    );
    let value = fixed_tokens.len() + new_blocks;
    debug_assert_eq!(value, witness.distinct_count());
    Ok(SolveResult {
        value,
        witness,
        stats,
        status: if exhausted {
            SolveStatus::BudgetExhausted
        } else {
            SolveStatus::Optimal
        },
    })
}

/// Greedy P_3-free coloring of a connected component as a starting floor.
/// A P_3-free coloring has no rainbow P_k for any k >= 3.
fn greedy_floor(g: &Graph) -> Found {
    let greedy = greedy_bounded_degree(g).expect("component has edges");
    let ids = greedy.witness.dense_ids();
    Found {
        blocks: greedy.value,
        values: ids.into_iter().map(|i| i as u16).collect(),
    }
}

/// Mints "1", "2", ... skipping anything already used by the precoloring.
struct FreshTokens<'a> {
    taken: &'a BTreeSet<&'a Color>,
    next: usize,
}

impl<'a> FreshTokens<'a> {
    fn new(taken: &'a BTreeSet<&'a Color>) -> Self {
        FreshTokens { taken, next: 1 }
    }

    fn next(&mut self) -> Color {
        loop {
            let c = Color::from(self.next);
            self.next += 1;
            if !self.taken.contains(&c) {
                return c;
            }
        }
    }
}

#[cfg(test)]
mod tests;
