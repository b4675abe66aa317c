//! Branch-and-prune enumeration of restricted growth strings over the free
//! edges of one connected component.
//!
//! Each free edge takes a value in `0..classes + open + 1`: values below
//! `classes` fuse the edge with a precolored token class, the next `open`
//! values reuse a block opened earlier, and the last one opens a new block.
//! Values are tried in increasing order, so the first optimum reached is the
//! lexicographically smallest one.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::graph::Graph;
use crate::paths::enumerate_paths;
use crate::solve::SearchStats;

/// One component, flattened for the search.
pub(crate) struct ComponentProblem {
    /// Number of precolored token classes present in the component.
    pub classes: usize,
    /// Local edge id of each free edge, in search order.
    pub order: Vec<usize>,
    /// Preset values for precolored local edges (`u16::MAX` for free ones).
    pub preset: Vec<u16>,
    /// Paths (local edge ids) that become fully assigned at each position.
    checks: Vec<Vec<Vec<usize>>>,
    /// Upper bound on the number of new blocks.
    pub block_cap: usize,
    /// True when a path made only of precolored edges is already rainbow.
    pub fixed_conflict: bool,
}

impl ComponentProblem {
    /// `preset[e]` is the class of local edge `e`, or `None` when free.
    pub fn new(g: &Graph, k: usize, preset: &[Option<u16>], classes: usize, color_cap: usize) -> Self {
        let m = g.edge_count();
        let order = search_order(g, preset);
        let mut position = vec![usize::MAX; m];
        for (pos, &e) in order.iter().enumerate() {
            position[e] = pos;
        }
        let preset_values: Vec<u16> = preset.iter().map(|p| p.unwrap_or(u16::MAX)).collect();
        let mut checks = vec![Vec::new(); order.len()];
        let mut fixed_conflict = false;
        for path in enumerate_paths(g, k) {
            let last = path
                .edges()
                .iter()
                .filter(|&&e| position[e] != usize::MAX)
                .map(|&e| position[e])
                .max();
            match last {
                Some(pos) => checks[pos].push(path.edges().to_vec()),
                None => {
                    if all_distinct(path.edges().iter().map(|&e| preset_values[e])) {
                        fixed_conflict = true;
                    }
                }
            }
        }
        ComponentProblem {
            classes,
            order,
            preset: preset_values,
            checks,
            block_cap: color_cap.saturating_sub(classes),
            fixed_conflict,
        }
    }

    pub fn free_count(&self) -> usize {
        self.order.len()
    }
}

/// Free edges ordered so that each one touches an already placed edge when
/// possible (precolored edges count as placed); ties go to the lower id.
fn search_order(g: &Graph, preset: &[Option<u16>]) -> Vec<usize> {
    let m = g.edge_count();
    let mut touched = vec![false; g.vertex_count()];
    let mut placed = vec![false; m];
    for e in 0..m {
        if preset[e].is_some() {
            placed[e] = true;
            let (u, v) = g.edge(e);
            touched[u] = true;
            touched[v] = true;
        }
    }
    let mut order = Vec::new();
    while order.len() + preset.iter().filter(|p| p.is_some()).count() < m {
        let pick = (0..m)
            .filter(|&e| !placed[e])
            .find(|&e| {
                let (u, v) = g.edge(e);
                touched[u] || touched[v]
            })
            .or_else(|| (0..m).find(|&e| !placed[e]))
            .expect("an unplaced edge remains");
        placed[pick] = true;
        let (u, v) = g.edge(pick);
        touched[u] = true;
        touched[v] = true;
        order.push(pick);
    }
    order
}

fn all_distinct(values: impl Iterator<Item = u16>) -> bool {
    let mut seen: Vec<u16> = Vec::new();
    for v in values {
        if seen.contains(&v) {
            return false;
        }
        seen.push(v);
    }
    true
}

/// Shared between workers. `floor` holds `1 + best value seen anywhere`
/// (0 = none) and only ever prunes strictly, so each worker still finds the
/// lexicographically first optimum inside its own subtree.
pub(crate) struct Shared {
    pub floor: AtomicUsize,
    pub nodes: AtomicU64,
    pub budget: Option<u64>,
    pub exhausted: AtomicBool,
}

impl Shared {
    pub fn new(initial_floor: Option<usize>, budget: Option<u64>) -> Self {
        Shared {
            floor: AtomicUsize::new(initial_floor.map_or(0, |v| v + 1)),
            nodes: AtomicU64::new(0),
            budget,
            exhausted: AtomicBool::new(false),
        }
    }
}

/// Best assignment found: number of new blocks and the value of every local
/// edge (precolored ones included).
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Found {
    pub blocks: usize,
    pub values: Vec<u16>,
}

struct Worker<'a> {
    problem: &'a ComponentProblem,
    shared: &'a Shared,
    values: Vec<u16>,
    best: Option<Found>,
    stats: SearchStats,
}

impl<'a> Worker<'a> {
    fn new(problem: &'a ComponentProblem, shared: &'a Shared) -> Self {
        Worker {
            problem,
            shared,
            values: problem.preset.clone(),
            best: None,
            stats: SearchStats::default(),
        }
    }

    fn out_of_budget(&self) -> bool {
        if self.shared.exhausted.load(Ordering::Relaxed) {
            return true;
        }
        if let Some(budget) = self.shared.budget {
            if self.shared.nodes.fetch_add(1, Ordering::Relaxed) >= budget {
                self.shared.exhausted.store(true, Ordering::Relaxed);
                return true;
            }
        }
        false
    }

    /// True when assigning position `pos` completed a rainbow path.
    fn completes_rainbow(&self, pos: usize) -> bool {
        self.problem.checks[pos]
            .iter()
            .any(|path| all_distinct(path.iter().map(|&e| self.values[e])))
    }

    fn bound_allows(&self, blocks: usize, remaining: usize) -> bool {
        let bound = (blocks + remaining).min(self.problem.block_cap);
        if let Some(best) = &self.best {
            if bound <= best.blocks {
                return false;
            }
        }
        bound + 1 >= self.shared.floor.load(Ordering::Relaxed)
    }

    fn dfs(&mut self, pos: usize, blocks: usize) {
        self.stats.nodes += 1;
        if self.out_of_budget() {
            return;
        }
        let free = self.problem.order.len();
        if !self.bound_allows(blocks, free - pos) {
            self.stats.bound_prunes += 1;
            return;
        }
        if pos == free {
            self.best = Some(Found {
                blocks,
                values: self.values.clone(),
            });
            self.shared.floor.fetch_max(blocks + 1, Ordering::Relaxed);
            return;
        }
        let edge = self.problem.order[pos];
        let classes = self.problem.classes;
        for choice in 0..=(classes + blocks) {
            self.values[edge] = choice as u16;
            if self.completes_rainbow(pos) {
                self.stats.rainbow_prunes += 1;
                continue;
            }
            let opened = usize::from(choice == classes + blocks);
            self.dfs(pos + 1, blocks + opened);
            if self.shared.exhausted.load(Ordering::Relaxed) {
                break;
            }
        }
        self.values[edge] = u16::MAX;
    }
}

/// A subtree root: values for the first `depth` free positions.
#[derive(Clone)]
struct Task {
    depth: usize,
    blocks: usize,
    values: Vec<u16>,
}

/// Expands the search tree breadth-first, in lexicographic order, until at
/// least `target` subtrees exist or the free edges run out.
fn split(problem: &ComponentProblem, target: usize, stats: &mut SearchStats) -> Vec<Task> {
    let mut tasks = vec![Task {
        depth: 0,
        blocks: 0,
        values: problem.preset.clone(),
    }];
    let classes = problem.classes;
    let mut depth = 0;
    while tasks.len() < target && depth < problem.free_count() {
        let edge = problem.order[depth];
        let mut next = Vec::new();
        for task in tasks {
            stats.nodes += 1;
            for choice in 0..=(classes + task.blocks) {
                let mut values = task.values.clone();
                values[edge] = choice as u16;
                let rainbow = problem.checks[depth]
                    .iter()
                    .any(|path| all_distinct(path.iter().map(|&e| values[e])));
                if rainbow {
                    stats.rainbow_prunes += 1;
                    continue;
                }
                let opened = usize::from(choice == classes + task.blocks);
                next.push(Task {
                    depth: depth + 1,
                    blocks: task.blocks + opened,
                    values,
                });
            }
        }
        tasks = next;
        depth += 1;
    }
    tasks
}

/// Runs the search on one component. `workers == 1` stays on the calling
/// thread; otherwise subtrees are fanned out on a dedicated rayon pool.
pub(crate) fn solve_component(
    problem: &ComponentProblem,
    shared: &Shared,
    workers: usize,
) -> (Option<Found>, SearchStats) {
    if problem.fixed_conflict {
        return (None, SearchStats::default());
    }
    if workers <= 1 {
        let mut w = Worker::new(problem, shared);
        w.dfs(0, 0);
        return (w.best, w.stats);
    }
    let mut stats = SearchStats::default();
    let tasks = split(problem, workers * 8, &mut stats);
    let run = |task: &Task| {
        let mut w = Worker::new(problem, shared);
        w.values = task.values.clone();
        w.dfs(task.depth, task.blocks);
        (w.best, w.stats)
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool");
    let results: Vec<(Option<Found>, SearchStats)> =
        pool.install(|| tasks.par_iter().map(run).collect());
    let mut best: Option<Found> = None;
    for (found, s) in results {
        stats.absorb(s);
        if let Some(found) = found {
            // strict comparison keeps the earliest task on ties
            if best.as_ref().is_none_or(|b| found.blocks > b.blocks) {
                best = Some(found);
            }
        }
    }
    (best, stats)
}
