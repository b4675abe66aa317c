//! Brute-force oracles and instance families shared by the integration
//! tests. Nothing here calls the solvers under test.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use arl_core::reductions::{Cnf, Literal};
use arl_core::{enumerate_paths, generators, Color, EdgeColoring, Graph, PartialColoring};
use rand::seq::SliceRandom;
use rand::Rng;

fn has_rainbow(paths: &[Vec<usize>], values: &[usize]) -> bool {
    paths.iter().any(|p| {
        let mut seen: Vec<usize> = p.iter().map(|&e| values[e]).collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == p.len()
    })
}

/// Advances a restricted growth string in place whose entries may start at
/// `base` (values below `base` are fixed classes usable anywhere). Returns
/// false after the last one.
fn next_assignment(values: &mut [usize], base: usize) -> bool {
    let m = values.len();
    for i in (0..m).rev() {
        let opened = values[..i].iter().filter(|&&v| v >= base).map(|&v| v - base + 1).max().unwrap_or(0);
        if values[i] < base + opened {
            values[i] += 1;
            for x in &mut values[i + 1..] {
                *x = 0;
            }
            return true;
        }
    }
    false
}

/// `ar(g, P_k)` by checking every set partition of the edges against every
/// path of length `k`.
pub fn naive_ar(g: &Graph, k: usize) -> usize {
    naive_precolored(g, &PartialColoring::uncolored(g.edge_count()), k).expect("always feasible")
}

/// Precolored optimum by enumerating every way the free edges can join a
/// fixed token or a new block. `None` when no extension is valid.
pub fn naive_precolored(g: &Graph, pc: &PartialColoring, k: usize) -> Option<usize> {
    let fixed: Vec<Color> = pc.token_set().into_iter().cloned().collect();
    let base = fixed.len();
    let free: Vec<usize> = pc.uncolored_edges().collect();
    let paths: Vec<Vec<usize>> = enumerate_paths(g, k).into_iter().map(|p| p.edges().to_vec()).collect();
    let mut values = vec![0usize; g.edge_count()];
    for (e, c) in pc.colored_edges() {
        values[e] = fixed.iter().position(|f| f == c).unwrap();
    }
    let mut choice = vec![0usize; free.len()];
    let mut best: Option<usize> = None;
    loop {
        for (&e, &v) in free.iter().zip(&choice) {
            values[e] = v;
        }
        if !has_rainbow(&paths, &values) {
            let blocks = choice.iter().filter(|&&v| v >= base).map(|&v| v - base + 1).max().unwrap_or(0);
            best = Some(best.map_or(base + blocks, |b: usize| b.max(base + blocks)));
        }
        if free.is_empty() || !next_assignment(&mut choice, base) {
            return best;
        }
    }
}

/// Brute-force Hamiltonian path test over all vertex orders.
pub fn has_hamiltonian_path(g: &Graph) -> bool {
    fn extend(g: &Graph, v: usize, seen: &mut Vec<bool>, count: usize) -> bool {
        if count == g.vertex_count() {
            return true;
        }
        for u in g.neighbors(v).collect::<Vec<_>>() {
            if !seen[u] {
                seen[u] = true;
                if extend(g, u, seen, count + 1) {
                    return true;
                }
                seen[u] = false;
            }
        }
        false
    }
    let n = g.vertex_count();
    (0..n).any(|s| {
        let mut seen = vec![false; n];
        seen[s] = true;
        extend(g, s, &mut seen, 1)
    })
}

pub fn satisfying_assignment(phi: &Cnf) -> Option<BTreeMap<usize, bool>> {
    let vars: Vec<usize> = phi.variables().into_iter().collect();
    (0u32..1 << vars.len()).find_map(|mask| {
        let a: BTreeMap<usize, bool> = vars.iter().enumerate().map(|(i, &v)| (v, mask >> i & 1 == 1)).collect();
        phi.first_unsatisfied(&a).is_none().then_some(a)
    })
}

fn lit_code(l: Literal) -> usize {
    2 * (l.var - 1) + usize::from(!l.positive)
}

/// Canonical form under variable renaming and polarity flips.
fn cnf_canonical(phi: &Cnf, n: usize) -> Vec<[usize; 3]> {
    let mut perms: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..n {
        perms = perms
            .into_iter()
            .flat_map(|p| {
                (0..n)
                    .filter(|x| !p.contains(x))
                    .map(|x| [p.clone(), vec![x]].concat())
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    let mut best: Option<Vec<[usize; 3]>> = None;
    for perm in &perms {
        for flips in 0u32..1 << n {
            let mut form: Vec<[usize; 3]> = phi
                .clauses
                .iter()
                .map(|clause| {
                    let mut c = clause.map(|l| {
                        let var = perm[l.var - 1] + 1;
                        let positive = l.positive ^ (flips >> (l.var - 1) & 1 == 1);
                        lit_code(Literal { var, positive })
                    });
                    c.sort_unstable();
                    c
                })
                .collect();
            form.sort_unstable();
            if best.as_ref().is_none_or(|b| form < *b) {
                best = Some(form);
            }
        }
    }
    best.unwrap()
}

/// Every 3-CNF over at most `n` variables with 1..=`m` clauses that pure
/// literal elimination leaves unchanged, one per symmetry class.
pub fn normalized_cnfs(n: usize, m: usize) -> Vec<Cnf> {
    let literals: Vec<Literal> = (1..=n).flat_map(|v| [Literal::pos(v), Literal::neg(v)]).collect();
    let mut clauses = Vec::new();
    for a in 0..literals.len() {
        for b in a..literals.len() {
            for c in b..literals.len() {
                clauses.push([literals[a], literals[b], literals[c]]);
            }
        }
    }
    let mut formulas: Vec<Vec<usize>> = (0..clauses.len()).map(|i| vec![i]).collect();
    let mut frontier = formulas.clone();
    for _ in 1..m {
        frontier = frontier
            .iter()
            .flat_map(|f| (*f.last().unwrap()..clauses.len()).map(move |i| [f.clone(), vec![i]].concat()))
            .collect();
        formulas.extend(frontier.iter().cloned());
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for f in formulas {
        let phi = Cnf::new(n, f.iter().map(|&i| clauses[i]).collect());
        if phi.normalized() != phi {
            continue;
        }
        if seen.insert(cnf_canonical(&phi, n)) {
            out.push(phi);
        }
    }
    out
}

/// A random 3-CNF with `m` clauses over variables `1..=n`.
pub fn random_cnf<R: Rng>(n: usize, m: usize, rng: &mut R) -> Cnf {
    let clauses = (0..m)
        .map(|_| {
            [(); 3].map(|_| Literal {
                var: rng.gen_range(1..=n),
                positive: rng.gen_bool(0.5),
            })
        })
        .collect();
    Cnf::new(n, clauses)
}

/// Merges the color classes along rainbow `P_3`s until none is left.
pub fn repair_p3<R: Rng>(g: &Graph, colors: &mut [usize], rng: &mut R) {
    while let Some(p) = arl_core::find_rainbow_path(g, &to_coloring(colors), 3) {
        let edges = p.edges();
        let from = colors[edges[rng.gen_range(0..edges.len())]];
        let to = colors[edges[rng.gen_range(0..edges.len())]];
        let (from, to) = if from == to { (colors[edges[0]], colors[edges[1]]) } else { (from, to) };
        for c in colors.iter_mut() {
            if *c == from {
                *c = to;
            }
        }
    }
}

pub fn to_coloring(colors: &[usize]) -> EdgeColoring {
    EdgeColoring::from_tokens(colors.iter().copied())
}

/// A random valid `P_3`-free coloring of a tree: a random start merged into
/// validity, followed by single-edge moves that keep it valid.
pub fn random_valid_tree_coloring<R: Rng>(t: &Graph, rng: &mut R) -> EdgeColoring {
    let m = t.edge_count();
    let palette = rng.gen_range(1..=m.max(1));
    let mut colors: Vec<usize> = (0..m).map(|_| rng.gen_range(0..palette)).collect();
    repair_p3(t, &mut colors, rng);
    for _ in 0..m {
        if m == 0 {
            break;
        }
        let e = rng.gen_range(0..m);
        let old = colors[e];
        let mut options: Vec<usize> = colors.clone();
        options.push(palette + m);
        colors[e] = *options.choose(rng).unwrap();
        if arl_core::find_rainbow_path(t, &to_coloring(&colors), 3).is_some() {
            colors[e] = old;
        }
    }
    to_coloring(&colors)
}

/// Isomorphism-invariant form: colour refinement, then the smallest sorted
/// edge list over all orderings consistent with the refined classes.
pub fn graph_canonical(g: &Graph) -> (usize, Vec<(usize, usize)>) {
    let n = g.vertex_count();
    let mut class: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut s: Vec<usize> = g.neighbors(v).map(|u| class[u]).collect();
                s.sort_unstable();
                (class[v], s)
            })
            .collect();
        let ranks: BTreeSet<&(usize, Vec<usize>)> = signatures.iter().collect();
        let ranks: Vec<&(usize, Vec<usize>)> = ranks.into_iter().collect();
        let next: Vec<usize> = signatures.iter().map(|s| ranks.binary_search(&s).unwrap()).collect();
        let stable = next.iter().collect::<BTreeSet<_>>().len() == class.iter().collect::<BTreeSet<_>>().len();
        class = next;
        if stable {
            break;
        }
    }
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &c) in class.iter().enumerate() {
        cells.entry(c).or_default().push(v);
    }
    let cells: Vec<Vec<usize>> = cells.into_values().collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut label = vec![0usize; n];
    fn assign(
        g: &Graph,
        cells: &[Vec<usize>],
        idx: usize,
        offset: usize,
        label: &mut Vec<usize>,
        best: &mut Option<Vec<(usize, usize)>>,
    ) {
        if idx == cells.len() {
            let mut edges: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .map(|&(u, v)| (label[u].min(label[v]), label[u].max(label[v])))
                .collect();
            edges.sort_unstable();
            if best.as_ref().is_none_or(|b| edges < *b) {
                *best = Some(edges);
            }
            return;
        }
        let mut cell = cells[idx].clone();
        permute(&mut cell, 0, &mut |order| {
            for (i, &v) in order.iter().enumerate() {
                label[v] = offset + i;
            }
            assign(g, cells, idx + 1, offset + order.len(), label, best);
        });
    }
    fn permute(items: &mut Vec<usize>, start: usize, f: &mut dyn FnMut(&[usize])) {
        if start == items.len() {
            f(items);
            return;
        }
        for i in start..items.len() {
            items.swap(start, i);
            permute(items, start + 1, f);
            items.swap(start, i);
        }
    }
    assign(g, &cells, 0, 0, &mut label, &mut best);
    (n, best.unwrap_or_default())
}

/// Connected bipartite graphs with 1..=`max_edges` edges, one per
/// isomorphism class, grown by pendant edges and side-crossing chords.
pub fn connected_bipartite_graphs(max_edges: usize) -> Vec<Graph> {
    let mut level = vec![generators::path(1)];
    let mut out = level.clone();
    for _ in 1..max_edges {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &level {
            let n = g.vertex_count();
            let sides = arl_core::Bipartition::of(g).unwrap();
            let mut candidates: Vec<Graph> = (0..n)
                .map(|v| Graph::new(n + 1, g.edges().iter().copied().chain([(v, n)])).unwrap())
                .collect();
            for u in 0..n {
                for v in u + 1..n {
                    if sides.side(u) != sides.side(v) && !g.has_edge(u, v) {
                        candidates.push(Graph::new(n, g.edges().iter().copied().chain([(u, v)])).unwrap());
                    }
                }
            }
            for h in candidates {
                if seen.insert(graph_canonical(&h)) {
                    next.push(h);
                }
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

/// Every labelled graph on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            Graph::new(n, edges).unwrap()
        })
        .collect()
}

/// Every independent vertex set of `g`.
pub fn independent_sets(g: &Graph) -> Vec<BTreeSet<usize>> {
    let n = g.vertex_count();
    (0u32..1 << n)
        .map(|mask| (0..n).filter(|v| mask >> v & 1 == 1).collect::<BTreeSet<usize>>())
        .filter(|s| g.edges().iter().all(|(u, v)| !(s.contains(u) && s.contains(v))))
        .collect()
}
