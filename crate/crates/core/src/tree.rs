//! `ar(T, P_3)` on forests in linear time, plus the two recoloring
//! procedures that justify it.
//!
//! Some optimal coloring of a tree has connected color classes and every
//! vertex either monochrome or rainbow. Rooting each tree, the DP keeps for
//! every non-root vertex `v`:
//!
//! * `mono[v]`: most colors on the edges below `v` plus the edge to its
//!   parent, with all edges at `v` sharing the parent edge's color;
//! * `rainbow[v]`: the same with all edges at `v` distinct.
//!
//! A rainbow vertex forces monochrome children, so
//!
//! ```text
//! mono[v]    = 1 + Σ (max(mono[u], rainbow[u]) - 1)
//! rainbow[v] = 1 + Σ mono[u]
//! ```
//!
//! over the children `u`. The root has no parent edge: its monochrome value
//! is `1 + Σ (max - 1)` and its rainbow value `Σ mono[u]`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{vertex_role, Color, EdgeColoring, VertexRole};
use crate::graph::Graph;
use crate::paths::find_rainbow_path;
use crate::solve::{SolveResult, SolveStatus};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("graph contains a cycle")]
    NotAForest,
    #[error("invalid input coloring: {0}")]
    InvalidInputColoring(String),
    #[error("root {0} is not a vertex or shares a component with another root")]
    BadRoot(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexState {
    Monochrome,
    Rainbow,
}

/// DP values and the rooted structure they were computed on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDpTable {
    pub roots: Vec<usize>,
    pub parent: Vec<Option<usize>>,
    pub parent_edge: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
    pub mono: Vec<usize>,
    pub rainbow: Vec<usize>,
    /// State each vertex takes when its parent is monochrome.
    pub preferred: Vec<VertexState>,
}

impl TreeDpTable {
    /// Builds the table rooting each component at the given root, or at its
    /// smallest vertex when none is given.
    pub fn compute(t: &Graph, roots: &[usize]) -> Result<Self, TreeError> {
        if !t.is_forest() {
            return Err(TreeError::NotAForest);
        }
        let n = t.vertex_count();
        let components = t.components();
        let mut component_of = vec![0; n];
        for (i, members) in components.iter().enumerate() {
            for &v in members {
                component_of[v] = i;
            }
        }
        let mut chosen: Vec<Option<usize>> = vec![None; components.len()];
        for &r in roots {
            if r >= n || chosen[component_of[r]].is_some() {
                return Err(TreeError::BadRoot(r));
            }
            chosen[component_of[r]] = Some(r);
        }
        let roots: Vec<usize> = chosen
            .iter()
            .zip(&components)
            .map(|(c, members)| c.unwrap_or(members[0]))
            .collect();

        let mut parent = vec![None; n];
        let mut parent_edge = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for &root in &roots {
            seen[root] = true;
            let start = order.len();
            order.push(root);
            let mut head = start;
            while head < order.len() {
                let v = order[head];
                head += 1;
                for &(u, e) in t.incident(v) {
                    if !seen[u] {
                        seen[u] = true;
                        parent[u] = Some(v);
                        parent_edge[u] = Some(e);
                        children[v].push(u);
                        order.push(u);
                    }
                }
            }
        }

        let mut mono = vec![0; n];
        let mut rainbow = vec![0; n];
        let mut preferred = vec![VertexState::Monochrome; n];
        for &v in order.iter().rev() {
            let kids = &children[v];
            let shared: usize = kids.iter().map(|&u| mono[u].max(rainbow[u]) - 1).sum();
            let all_mono: usize = kids.iter().map(|&u| mono[u]).sum();
            if parent[v].is_some() {
                mono[v] = 1 + shared;
                rainbow[v] = 1 + all_mono;
            } else if !kids.is_empty() {
                mono[v] = 1 + shared;
                rainbow[v] = all_mono;
            }
            if rainbow[v] > mono[v] {
                preferred[v] = VertexState::Rainbow;
            }
        }
        Ok(TreeDpTable {
            roots,
            parent,
            parent_edge,
            children,
            mono,
            rainbow,
            preferred,
        })
    }

    /// Sum over components of the better root state.
    pub fn value(&self) -> usize {
        self.roots
            .iter()
            .map(|&r| self.mono[r].max(self.rainbow[r]))
            .sum()
    }

    /// Rebuilds an optimal coloring from the table with tokens `t0, t1, ...`.
    pub fn reconstruct(&self, t: &Graph) -> EdgeColoring {
        let mut colors: Vec<Option<Color>> = vec![None; t.edge_count()];
        let mut counter = 0usize;
        let mut fresh = || {
            let c = Color::new(format!("t{counter}"));
            counter += 1;
            c
        };
        for &root in &self.roots {
            if self.children[root].is_empty() {
                continue;
            }
            let state = self.preferred[root];
            let mut stack: Vec<(usize, VertexState, Option<Color>)> = vec![(root, state, None)];
            while let Some((v, state, up)) = stack.pop() {
                match state {
                    VertexState::Monochrome => {
                        let shared = up.unwrap_or_else(&mut fresh);
                        for &u in self.children[v].iter().rev() {
                            colors[self.parent_edge[u].expect("child")] = Some(shared.clone());
                            stack.push((u, self.preferred[u], Some(shared.clone())));
                        }
                    }
                    VertexState::Rainbow => {
                        for &u in &self.children[v] {
                            let c = fresh();
                            colors[self.parent_edge[u].expect("child")] = Some(c.clone());
                            stack.push((u, VertexState::Monochrome, Some(c)));
                        }
                    }
                }
            }
        }
        EdgeColoring::new(colors.into_iter().map(|c| c.expect("forest edge colored")).collect())
    }
}

/// `ar(t, P_3)` for a forest, rooting each tree at its smallest vertex.
pub fn carnit(t: &Graph) -> Result<SolveResult, TreeError> {
    carnit_rooted(t, &[])
}

/// As [`carnit`], with explicit roots for some components.
pub fn carnit_rooted(t: &Graph, roots: &[usize]) -> Result<SolveResult, TreeError> {
    let table = TreeDpTable::compute(t, roots)?;
    let witness = table.reconstruct(t);
    let result = SolveResult::constructed(witness, SolveStatus::Optimal);
    debug_assert_eq!(result.value, table.value());
    Ok(result)
}

fn check_valid(t: &Graph, c: &EdgeColoring) -> Result<(), TreeError> {
    if !t.is_forest() {
        return Err(TreeError::NotAForest);
    }
    if !c.is_total_on(t) {
        return Err(TreeError::InvalidInputColoring(format!(
            "{} colors for {} edges",
            c.len(),
            t.edge_count()
        )));
    }
    if let Some(p) = find_rainbow_path(t, c, 3) {
        return Err(TreeError::InvalidInputColoring(format!(
            "rainbow path {:?}",
            p.vertices()
        )));
    }
    Ok(())
}

/// Rooted forest with preorder numbers, roots at the smallest vertex.
struct Rooted {
    tree_of: Vec<usize>,
    preorder: Vec<usize>,
    parent_edge: Vec<Option<usize>>,
    /// Endpoint of each edge closer to the root.
    upper: Vec<usize>,
}

impl Rooted {
    fn new(t: &Graph) -> Self {
        let n = t.vertex_count();
        let mut tree_of = vec![0; n];
        let mut preorder = vec![usize::MAX; n];
        let mut parent_edge = vec![None; n];
        let mut upper = vec![0; t.edge_count()];
        let mut next = 0;
        for (tree, members) in t.components().into_iter().enumerate() {
            let mut stack = vec![members[0]];
            while let Some(v) = stack.pop() {
                if preorder[v] != usize::MAX {
                    continue;
                }
                preorder[v] = next;
                next += 1;
                tree_of[v] = tree;
                for &(u, e) in t.incident(v).iter().rev() {
                    if preorder[u] == usize::MAX {
                        parent_edge[u] = Some(e);
                        upper[e] = v;
                        stack.push(u);
                    }
                }
            }
        }
        Rooted {
            tree_of,
            preorder,
            parent_edge,
            upper,
        }
    }
}

/// Edge components of every color class within each tree, as
/// `(tree, color) -> list of edge sets`.
fn class_components(t: &Graph, c: &EdgeColoring, rooted: &Rooted) -> BTreeMap<(usize, Color), Vec<Vec<usize>>> {
    let m = t.edge_count();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for v in 0..t.vertex_count() {
        let incident = t.incident(v);
        for (i, &(_, e)) in incident.iter().enumerate() {
            for &(_, f) in &incident[i + 1..] {
                if c.get(e) == c.get(f) {
                    let (a, b) = (find(&mut parent, e), find(&mut parent, f));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for e in 0..m {
        let r = find(&mut parent, e);
        groups.entry(r).or_default().push(e);
    }
    let mut out: BTreeMap<(usize, Color), Vec<Vec<usize>>> = BTreeMap::new();
    for (_, edges) in groups {
        let tree = rooted.tree_of[t.edge(edges[0]).0];
        out.entry((tree, c.get(edges[0]).clone())).or_default().push(edges);
    }
    for comps in out.values_mut() {
        comps.sort_by_key(|edges| top_preorder(edges, rooted));
    }
    out
}

fn top_preorder(edges: &[usize], rooted: &Rooted) -> usize {
    edges
        .iter()
        .map(|&e| rooted.preorder[rooted.upper[e]])
        .min()
        .expect("non-empty class")
}

/// Recolors until every color class is connected within each tree, keeping
/// the set of tokens used.
///
/// For each split class, the component reached first in preorder keeps the
/// color; every other component takes the color of the edge above its top
/// vertex. Tokens shared between different trees of a forest are left alone.
pub fn normalize_color_connected(t: &Graph, c: &EdgeColoring) -> Result<EdgeColoring, TreeError> {
    check_valid(t, c)?;
    let rooted = Rooted::new(t);
    let mut current = c.clone();
    loop {
        let classes = class_components(t, &current, &rooted);
        let Some(split) = classes.values().find(|comps| comps.len() > 1) else {
            break;
        };
        let mut recolor = Vec::new();
        for comp in &split[1..] {
            let top = comp
                .iter()
                .map(|&e| rooted.upper[e])
                .min_by_key(|&v| rooted.preorder[v])
                .expect("non-empty");
            let above = rooted.parent_edge[top].expect("only the first component can hold the root");
            recolor.push((comp.clone(), current.get(above).clone()));
        }
        for (edges, color) in recolor {
            for e in edges {
                current.set(e, color.clone());
            }
        }
    }
    Ok(current)
}

/// True iff every color class is connected within each tree of `t`.
pub fn classes_connected_per_tree(t: &Graph, c: &EdgeColoring) -> bool {
    let rooted = Rooted::new(t);
    class_components(t, c, &rooted).values().all(|comps| comps.len() == 1)
}

/// Repeatedly splits a repeated color at a mixed vertex off into a new
/// color until every vertex is monochrome or rainbow. Each step adds one
/// color.
pub fn improve_to_mono_rainbow(t: &Graph, c: &EdgeColoring) -> Result<EdgeColoring, TreeError> {
    check_valid(t, c)?;
    if !classes_connected_per_tree(t, c) {
        return Err(TreeError::InvalidInputColoring(
            "color classes are not connected".into(),
        ));
    }
    let mut current = c.clone();
    let mut used: BTreeSet<Color> = current.colors().iter().cloned().collect();
    let mut counter = 0usize;
    while let Some(u) = (0..t.vertex_count()).find(|&v| vertex_role(t, &current, v) == VertexRole::Mixed) {
        let incident = t.incident(u);
        let (x, ux) = incident
            .iter()
            .copied()
            .find(|&(_, e)| {
                incident
                    .iter()
                    .filter(|&&(_, f)| current.get(f) == current.get(e))
                    .count()
                    >= 2
            })
            .expect("a mixed vertex repeats some color");
        let split = current.get(ux).clone();
        let fresh = loop {
            counter += 1;
            let candidate = Color::new(format!("n{counter}"));
            if !used.contains(&candidate) {
                break candidate;
            }
        };
        used.insert(fresh.clone());
        // every edge of the split color on x's side of {u, x}
        current.set(ux, fresh.clone());
        let mut stack = vec![(x, u)];
        while let Some((v, from)) = stack.pop() {
            for &(w, e) in t.incident(v) {
                if w == from {
                    continue;
                }
                if *current.get(e) == split {
                    current.set(e, fresh.clone());
                }
                stack.push((w, v));
            }
        }
    }
    Ok(current)
}
