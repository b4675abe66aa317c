//! Independent set to `P_k`-free coloring.
//!
//! Every source vertex `v` becomes a bundle of internally disjoint `s_v`-`t_v`
//! paths, and every source edge adds cross edges between the two bundles'
//! endpoints. A bundle can carry many colors only if no adjacent bundle
//! does, so the richly colored bundles of a valid coloring form an
//! independent set.
//!
//! Vertex layout: `s_v = 2v`, `t_v = 2v + 1`, then path internals bundle by
//! bundle. Edge layout: bundles in source order, each path from `s_v` to
//! `t_v`, then the cross edges in source edge order.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{ReductionError, ReductionParams};
use crate::coloring::{Color, EdgeColoring};
use crate::graph::Graph;
use crate::paths::find_rainbow_path;

/// Default ceiling on the number of vertices `mis_to_pk` may create.
pub const DEFAULT_VERTEX_CAP: usize = 1_000_000;

const SHARED: &str = "c0";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MisVariant {
    /// Paths of length `k - 1`, four cross edges per source edge.
    Pk,
    /// Paths of length 2, two cross edges per source edge.
    ThreePartiteP3,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexGadget {
    pub s: usize,
    pub t: usize,
    /// Edge ids of each path, in order from `s` to `t`.
    pub paths: Vec<Vec<usize>>,
}

impl VertexGadget {
    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.paths.iter().flatten().copied()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedMisInstance {
    pub source: Graph,
    pub graph: Graph,
    pub gadgets: Vec<VertexGadget>,
    pub est_edges: Vec<usize>,
    pub params: ReductionParams,
    pub variant: MisVariant,
}

impl ReducedMisInstance {
    pub fn path_length(&self) -> usize {
        match self.variant {
            MisVariant::Pk => self.params.k - 1,
            MisVariant::ThreePartiteP3 => 2,
        }
    }

    pub fn k(&self) -> usize {
        match self.variant {
            MisVariant::Pk => self.params.k,
            MisVariant::ThreePartiteP3 => 3,
        }
    }

    pub fn paths_per_vertex(&self) -> usize {
        let n = self.source.vertex_count();
        match self.variant {
            MisVariant::Pk => self.params.paths_per_vertex(n),
            MisVariant::ThreePartiteP3 => 4 * n,
        }
    }

    /// Bundles with more colors than this are taken into the extracted set.
    pub fn extraction_threshold(&self) -> usize {
        match self.variant {
            MisVariant::Pk => (self.params.k - 3) * self.paths_per_vertex() + self.params.f_k,
            MisVariant::ThreePartiteP3 => 3,
        }
    }

    /// Most colors a single bundle can carry in a valid coloring.
    pub fn bundle_ceiling(&self) -> usize {
        match self.variant {
            MisVariant::Pk => (self.params.k - 2) * self.paths_per_vertex(),
            MisVariant::ThreePartiteP3 => 4 * self.source.vertex_count(),
        }
    }

    /// Most colors the cross edges can carry in a valid coloring: they span
    /// `2n` vertices.
    pub fn cross_ceiling(&self) -> usize {
        let n = self.source.vertex_count();
        match self.variant {
            MisVariant::Pk => 2 * self.params.c_k * n,
            MisVariant::ThreePartiteP3 => 2 * n,
        }
    }

    /// Number of distinct colors on each bundle.
    pub fn bundle_colors(&self, c: &EdgeColoring) -> Vec<usize> {
        self.gadgets
            .iter()
            .map(|g| g.edges().map(|e| c.get(e)).collect::<BTreeSet<_>>().len())
            .collect()
    }
}

/// The general construction for odd `k`, refusing to build more than
/// [`DEFAULT_VERTEX_CAP`] vertices.
pub fn mis_to_pk(g: &Graph, k: usize) -> Result<ReducedMisInstance, ReductionError> {
    mis_to_pk_with_cap(g, k, DEFAULT_VERTEX_CAP)
}

pub fn mis_to_pk_with_cap(g: &Graph, k: usize, cap: usize) -> Result<ReducedMisInstance, ReductionError> {
    let params = ReductionParams::new(k)?;
    let n = g.vertex_count();
    let paths = params.paths_per_vertex(n);
    let vertices = n
        .checked_mul(paths)
        .and_then(|x| x.checked_mul(k - 2))
        .and_then(|x| x.checked_add(2 * n));
    match vertices {
        Some(v) if v <= cap => {}
        _ => {
            return Err(ReductionError::InstanceTooLarge {
                vertices: vertices.unwrap_or(usize::MAX),
                cap,
            })
        }
    }
    Ok(build(g, params, paths, k - 1, MisVariant::Pk))
}

/// The 3-partite `P_3` construction: `4n` paths of length 2 per vertex.
pub fn mis_to_3partite(g: &Graph) -> ReducedMisInstance {
    let params = ReductionParams::new(3).expect("3 is odd");
    let paths = 4 * g.vertex_count();
    build(g, params, paths, 2, MisVariant::ThreePartiteP3)
}

fn build(g: &Graph, params: ReductionParams, paths: usize, length: usize, variant: MisVariant) -> ReducedMisInstance {
    let n = g.vertex_count();
    let mut next = 2 * n;
    let mut edges = Vec::with_capacity(n * paths * length + 4 * g.edge_count());
    let mut gadgets = Vec::with_capacity(n);
    for v in 0..n {
        let (s, t) = (2 * v, 2 * v + 1);
        let mut bundle = Vec::with_capacity(paths);
        for _ in 0..paths {
            let mut path = Vec::with_capacity(length);
            let mut at = s;
            for step in 0..length {
                let to = if step + 1 == length {
                    t
                } else {
                    next += 1;
                    next - 1
                };
                path.push(edges.len());
                edges.push((at, to));
                at = to;
            }
            bundle.push(path);
        }
        gadgets.push(VertexGadget { s, t, paths: bundle });
    }
    let mut est_edges = Vec::new();
    for &(u, v) in g.edges() {
        let (su, tu, sv, tv) = (2 * u, 2 * u + 1, 2 * v, 2 * v + 1);
        let mut cross = vec![(sv, tu), (tv, su)];
        if variant == MisVariant::Pk {
            cross.extend([(tv, tu), (sv, su)]);
        }
        for e in cross {
            est_edges.push(edges.len());
            edges.push(e);
        }
    }
    let graph = Graph::new(next, edges).expect("construction is simple");
    ReducedMisInstance {
        source: g.clone(),
        graph,
        gadgets,
        est_edges,
        params,
        variant,
    }
}

fn check_independent(g: &Graph, set: &BTreeSet<usize>) -> Result<(), ReductionError> {
    if let Some(&v) = set.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(ReductionError::UnknownVertex(v));
    }
    match g.edges().iter().find(|(u, v)| set.contains(u) && set.contains(v)) {
        Some(&(u, v)) => Err(ReductionError::NotIndependent(u, v)),
        None => Ok(()),
    }
}

/// Colors a path of even length `2t` with `2t - 1` tokens, the middle pair
/// sharing one. With `rich == false` the middle pair takes `shared` instead
/// and only `2t - 2` fresh tokens are used.
fn middle_pair(path: &[usize], rich: bool, shared: &Color, fresh: &mut impl FnMut() -> Color, out: &mut [Color]) {
    let t = path.len() / 2;
    for (i, &e) in path.iter().enumerate() {
        let position = i + 1;
        out[e] = if position == t || position == t + 1 {
            if !rich {
                shared.clone()
            } else if position == t {
                fresh()
            } else {
                out[path[i - 1]].clone()
            }
        } else {
            fresh()
        };
    }
}

/// The forward-direction coloring for an independent set `independent`.
///
/// Pk variant: bundles of `I` use `k - 2` fresh tokens per path and the
/// others `k - 3`, with the middle pair on `c0`. 3-partite: each path of a
/// bundle in `I` is one fresh token. Everything else is `c0`.
pub fn mis_coloring(inst: &ReducedMisInstance, independent: &BTreeSet<usize>) -> Result<EdgeColoring, ReductionError> {
    check_independent(&inst.source, independent)?;
    let shared = Color::from(SHARED);
    let mut out = vec![shared.clone(); inst.graph.edge_count()];
    let mut counter = 0usize;
    let mut fresh = || {
        counter += 1;
        Color::new(format!("c{counter}"))
    };
    for (v, gadget) in inst.gadgets.iter().enumerate() {
        let rich = independent.contains(&v);
        for path in &gadget.paths {
            match inst.variant {
                MisVariant::Pk => middle_pair(path, rich, &shared, &mut fresh, &mut out),
                MisVariant::ThreePartiteP3 if rich => {
                    let token = fresh();
                    for &e in path {
                        out[e] = token.clone();
                    }
                }
                MisVariant::ThreePartiteP3 => {}
            }
        }
    }
    Ok(EdgeColoring::new(out))
}

/// `C_{2(k-1)}` colored with `2(k - 2)` tokens: both `0`-`(k-1)` halves use
/// the middle-pair layout.
pub fn cycle_witness(k: usize) -> Result<(Graph, EdgeColoring), ReductionError> {
    ReductionParams::new(k)?;
    let n = 2 * (k - 1);
    let g = crate::generators::cycle(n);
    let forward: Vec<usize> = (0..k - 1).collect();
    let backward: Vec<usize> = (k - 1..n).rev().collect();
    let shared = Color::from(SHARED);
    let mut out = vec![shared.clone(); n];
    let mut counter = 0usize;
    let mut fresh = || {
        counter += 1;
        Color::from(counter)
    };
    middle_pair(&forward, true, &shared, &mut fresh, &mut out);
    middle_pair(&backward, true, &shared, &mut fresh, &mut out);
    Ok((g, EdgeColoring::new(out)))
}

fn check_coloring(inst: &ReducedMisInstance, c: &EdgeColoring) -> Result<(), ReductionError> {
    if !c.is_total_on(&inst.graph) {
        return Err(ReductionError::InvalidColoring(format!(
            "{} colors for {} edges",
            c.len(),
            inst.graph.edge_count()
        )));
    }
    if let Some(p) = find_rainbow_path(&inst.graph, c, inst.k()) {
        return Err(ReductionError::InvalidColoring(format!("rainbow path {:?}", p.vertices())));
    }
    Ok(())
}

/// Source vertices whose bundle carries more than
/// [`ReducedMisInstance::extraction_threshold`] colors.
pub fn extract_independent_set(inst: &ReducedMisInstance, c: &EdgeColoring) -> Result<BTreeSet<usize>, ReductionError> {
    check_coloring(inst, c)?;
    let threshold = inst.extraction_threshold();
    let set: BTreeSet<usize> = inst
        .bundle_colors(c)
        .into_iter()
        .enumerate()
        .filter(|&(_, count)| count > threshold)
        .map(|(v, _)| v)
        .collect();
    check_independent(&inst.source, &set)?;
    Ok(set)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub valid: bool,
    pub cross_colors: usize,
    pub cross_ceiling: usize,
    pub bundle_colors: Vec<usize>,
    pub bundle_ceiling: usize,
    /// Source edges whose two bundles both exceed the exclusion threshold.
    pub conflicts: Vec<(usize, usize)>,
}

impl AuditReport {
    /// Validity plus every count within its ceiling and no conflicts.
    pub fn passes(&self) -> bool {
        self.valid
            && self.cross_colors <= self.cross_ceiling
            && self.bundle_colors.iter().all(|&b| b <= self.bundle_ceiling)
            && self.conflicts.is_empty()
    }
}

/// Counts the structural quantities the backward direction relies on.
/// `c` must be total on the instance graph.
pub fn audit_reduced_coloring(inst: &ReducedMisInstance, c: &EdgeColoring) -> AuditReport {
    assert!(c.is_total_on(&inst.graph), "audit needs a total coloring");
    let valid = find_rainbow_path(&inst.graph, c, inst.k()).is_none();
    let cross_colors = inst.est_edges.iter().map(|&e| c.get(e)).collect::<BTreeSet<_>>().len();
    let bundle_colors = inst.bundle_colors(c);
    let exclusion = match inst.variant {
        MisVariant::Pk => inst.extraction_threshold() + 1,
        MisVariant::ThreePartiteP3 => 3,
    };
    let conflicts = inst
        .source
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| bundle_colors[u] >= exclusion && bundle_colors[v] >= exclusion)
        .collect();
    AuditReport {
        valid,
        cross_colors,
        cross_ceiling: inst.cross_ceiling(),
        bundle_colors,
        bundle_ceiling: inst.bundle_ceiling(),
        conflicts,
    }
}
