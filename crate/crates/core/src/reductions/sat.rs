//! 3-SAT to precolored `P_3`-free coloring.
//!
//! Each variable becomes a free edge `{x_i, x̄_i}`. A clause `(z_1, z_2, z_3)`
//! gets hub `c_0` and leaves `c_1, c_2, c_3`, with `{c_j, z_j}` precolored
//! `T` for a positive literal and `F` for a negated one. When all three
//! literals share a polarity the hub carries three free spokes; otherwise the
//! odd literal goes last and hangs off a second hub `c_0'` joined to `c_0`.
//! The formula is satisfiable iff some extension uses `m + 2` colors.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::cnf::{Cnf, Literal};
use super::ReductionError;
use crate::coloring::{Color, EdgeColoring, PartialColoring};
use crate::exact::PrecoloredInstance;
use crate::graph::Graph;

pub const TRUE_TOKEN: &str = "T";
pub const FALSE_TOKEN: &str = "F";

fn polarity_token(positive: bool) -> Color {
    Color::from(if positive { TRUE_TOKEN } else { FALSE_TOKEN })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseGadget {
    /// Literals in gadget order; in a mixed clause the odd one is last.
    pub literals: [Literal; 3],
    pub hub: usize,
    pub second_hub: Option<usize>,
    pub leaves: [usize; 3],
    /// Free edge from a hub to `leaves[j]`.
    pub spokes: [usize; 3],
    /// Free edge `{c_0, c_0'}` of a mixed clause.
    pub bridge: Option<usize>,
    /// Precolored edge `{c_j, z_j}`.
    pub literal_edges: [usize; 3],
}

impl ClauseGadget {
    pub fn uncolored_edges(&self) -> Vec<usize> {
        let mut out = self.spokes.to_vec();
        out.extend(self.bridge);
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariableGadget {
    pub var: usize,
    /// Vertex `x_i`.
    pub positive: usize,
    /// Vertex `x̄_i`.
    pub negative: usize,
    /// The free edge `{x_i, x̄_i}`.
    pub edge: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatReducedInstance {
    pub graph: Graph,
    pub precoloring: PartialColoring,
    /// One entry per variable, in increasing variable order.
    pub variables: Vec<VariableGadget>,
    pub clause_gadgets: Vec<ClauseGadget>,
    pub formula: Cnf,
}

impl SatReducedInstance {
    pub fn instance(&self) -> PrecoloredInstance {
        PrecoloredInstance::new(self.graph.clone(), self.precoloring.clone())
            .expect("precoloring built for this graph")
    }

    /// `m + 2`, reached exactly when the formula is satisfiable.
    pub fn target(&self) -> usize {
        self.formula.clauses.len() + 2
    }

    /// Number of variables occurring in the formula.
    pub fn variable_count(&self) -> usize {
        self.variables.len()
    }

    pub fn variable_edge(&self, var: usize) -> Option<usize> {
        self.variables.iter().find(|v| v.var == var).map(|v| v.edge)
    }
}

/// Normalizes by pure-literal elimination, then builds the gadgets.
pub fn sat_to_precolored(phi: &Cnf) -> Result<SatReducedInstance, ReductionError> {
    let normalized = phi.normalized();
    if normalized.clauses.is_empty() {
        return Err(ReductionError::TriviallySat);
    }
    Ok(sat_gadgets(&normalized))
}

/// Builds the gadgets for `phi` as given, without normalizing. Variables that
/// occur in only one polarity leave their variable edge unconstrained.
pub fn sat_gadgets(phi: &Cnf) -> SatReducedInstance {
    let vars = phi.variables();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut tokens: Vec<Option<Color>> = Vec::new();
    let mut variables = Vec::with_capacity(vars.len());
    let mut literal_vertices = BTreeMap::new();
    for (j, &var) in vars.iter().enumerate() {
        literal_vertices.insert(var, (2 * j, 2 * j + 1));
        variables.push(VariableGadget {
            var,
            positive: 2 * j,
            negative: 2 * j + 1,
            edge: edges.len(),
        });
        edges.push((2 * j, 2 * j + 1));
        tokens.push(None);
    }
    let mut next_vertex = 2 * vars.len();
    let mut gadgets = Vec::with_capacity(phi.clauses.len());
    for clause in &phi.clauses {
        let literals = gadget_order(clause);
        let mixed = literals[2].positive != literals[0].positive;
        let hub = next_vertex;
        let leaves = [hub + 1, hub + 2, hub + 3];
        let second_hub = mixed.then_some(hub + 4);
        next_vertex += if mixed { 5 } else { 4 };

        let mut push = |e: (usize, usize), token: Option<Color>| {
            edges.push(e);
            tokens.push(token);
            edges.len() - 1
        };
        let spokes = [
            push((hub, leaves[0]), None),
            push((hub, leaves[1]), None),
            push((second_hub.unwrap_or(hub), leaves[2]), None),
        ];
        let bridge = second_hub.map(|h| push((hub, h), None));
        let mut literal_edges = [0; 3];
        for (j, lit) in literals.iter().enumerate() {
            let (x, nx) = literal_vertices[&lit.var];
            let z = if lit.positive { x } else { nx };
            literal_edges[j] = push((leaves[j], z), Some(polarity_token(lit.positive)));
        }
        gadgets.push(ClauseGadget {
            literals,
            hub,
            second_hub,
            leaves,
            spokes,
            bridge,
            literal_edges,
        });
    }
    let graph = Graph::new(next_vertex, edges).expect("gadget edges are simple");
    SatReducedInstance {
        graph,
        precoloring: PartialColoring::new(tokens),
        variables,
        clause_gadgets: gadgets,
        formula: phi.clone(),
    }
}

/// Majority-polarity literals first, in clause order, then the odd one.
fn gadget_order(clause: &[Literal; 3]) -> [Literal; 3] {
    let positives = clause.iter().filter(|l| l.positive).count();
    if positives == 0 || positives == 3 {
        return *clause;
    }
    let majority = positives == 2;
    let mut out: Vec<Literal> = clause.iter().copied().filter(|l| l.positive == majority).collect();
    out.extend(clause.iter().copied().filter(|l| l.positive != majority));
    [out[0], out[1], out[2]]
}

/// The `m + 2` coloring induced by a satisfying assignment: variable edges
/// get `T` or `F`, the spoke to each clause's first true literal gets the
/// clause's own token `C<j>`, and the other free gadget edges copy that
/// literal's polarity token.
pub fn assignment_to_coloring(
    inst: &SatReducedInstance,
    assignment: &BTreeMap<usize, bool>,
) -> Result<EdgeColoring, ReductionError> {
    let mut colors: Vec<Option<Color>> = inst.precoloring.colors().to_vec();
    for v in &inst.variables {
        let value = *assignment.get(&v.var).ok_or(ReductionError::UnassignedVariable(v.var))?;
        colors[v.edge] = Some(polarity_token(value));
    }
    for (j, gadget) in inst.clause_gadgets.iter().enumerate() {
        let chosen = gadget
            .literals
            .iter()
            .position(|l| l.holds(assignment) == Some(true))
            .ok_or(ReductionError::UnsatisfyingAssignment(j))?;
        let shared = polarity_token(gadget.literals[chosen].positive);
        for e in gadget.uncolored_edges() {
            colors[e] = Some(shared.clone());
        }
        colors[gadget.spokes[chosen]] = Some(Color::new(format!("C{}", j + 1)));
    }
    Ok(EdgeColoring::new(
        colors.into_iter().map(|c| c.expect("every edge assigned")).collect(),
    ))
}
