//! Hardness constructions: independent set to `P_k`-free coloring (general
//! and 3-partite), and 3-SAT to precolored `P_3`-free coloring. Each comes
//! with the witness coloring from its forward direction, and the MIS ones
//! with extraction and audits for the backward direction.

mod cnf;
mod mis;
mod sat;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use cnf::{Cnf, Literal};
pub use mis::{
    audit_reduced_coloring, cycle_witness, extract_independent_set, mis_coloring, mis_to_3partite, mis_to_pk,
    mis_to_pk_with_cap, AuditReport, MisVariant, ReducedMisInstance, VertexGadget, DEFAULT_VERTEX_CAP,
};
pub use sat::{assignment_to_coloring, sat_gadgets, sat_to_precolored, ClauseGadget, SatReducedInstance, VariableGadget};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("malformed CNF at line {line}: {message}")]
    MalformedCnf { line: usize, message: String },
    #[error("pure-literal elimination satisfies every clause")]
    TriviallySat,
    #[error("clause {0} is not satisfied by the assignment")]
    UnsatisfyingAssignment(usize),
    #[error("variable {0} has no value in the assignment")]
    UnassignedVariable(usize),
    #[error("vertices {0} and {1} are adjacent in the source graph")]
    NotIndependent(usize, usize),
    #[error("vertex {0} is not in the source graph")]
    UnknownVertex(usize),
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("construction needs {vertices} vertices, above the cap of {cap}")]
    InstanceTooLarge { vertices: usize, cap: usize },
    #[error("path length must be odd and at least 3, got {0}")]
    InvalidPathLength(usize),
}

/// Constants of the `P_k` construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionParams {
    pub k: usize,
    pub f_k: usize,
    pub c_k: usize,
}

impl ReductionParams {
    pub fn new(k: usize) -> Result<Self, ReductionError> {
        if k < 3 || k.is_multiple_of(2) {
            return Err(ReductionError::InvalidPathLength(k));
        }
        Ok(ReductionParams {
            k,
            f_k: 4 * (k * k + 1),
            c_k: Self::c_k_for(k),
        })
    }

    /// `c_k = k`: every `P_k`-free coloring of a graph on `n` vertices uses at
    /// most `k n` colors, since choosing one edge per color gives a rainbow
    /// subgraph with more than `(k - 1) n / 2` edges, which contains `P_k`.
    pub fn c_k_for(k: usize) -> usize {
        k.max(1)
    }

    /// Paths per source vertex for `n` source vertices.
    pub fn paths_per_vertex(&self, n: usize) -> usize {
        (self.f_k + 1) * self.c_k * n
    }
}

/// Sidecar written next to a reduced graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Annotation {
    Mis(ReducedMisInstance),
    Sat(SatReducedInstance),
}
