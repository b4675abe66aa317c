//! Result types shared by every solver.

use serde::{Deserialize, Serialize};

use crate::coloring::EdgeColoring;

/// Counters reported by the branch-and-prune search. Zero for direct
/// constructions.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub bound_prunes: u64,
    pub rainbow_prunes: u64,
}

impl SearchStats {
    pub fn absorb(&mut self, other: SearchStats) {
        self.nodes += other.nodes;
        self.bound_prunes += other.bound_prunes;
        self.rainbow_prunes += other.rainbow_prunes;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    /// `value` is the exact optimum.
    Optimal,
    /// The node budget ran out; `value` is the best coloring found so far.
    BudgetExhausted,
    /// Produced by an approximation algorithm.
    Approximate,
}

/// A coloring together with its number of distinct colors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub value: usize,
    pub witness: EdgeColoring,
    pub stats: SearchStats,
    pub status: SolveStatus,
}

impl SolveResult {
    pub(crate) fn constructed(witness: EdgeColoring, status: SolveStatus) -> Self {
        SolveResult {
            value: witness.distinct_count(),
            witness,
            stats: SearchStats::default(),
            status,
        }
    }

    pub fn is_optimal(&self) -> bool {
        self.status == SolveStatus::Optimal
    }
}
