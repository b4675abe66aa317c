//! Small graph families and seeded random graphs.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;

/// Path with `edges` edges on vertices `0..=edges`.
pub fn path(edges: usize) -> Graph {
    Graph::new(edges + 1, (0..edges).map(|i| (i, i + 1))).expect("path")
}

/// Cycle `v0 v1 ... v(n-1) v0`; edge `i` joins `i` and `i+1 mod n`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle")
}

/// Star `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star")
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(n, edges).expect("complete graph")
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    Graph::new(a + b, edges).expect("complete bipartite graph")
}

/// Uniform random recursive tree on `n` vertices with shuffled labels.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let edges = (1..n).map(|i| (labels[rng.gen_range(0..i)], labels[i]));
    Graph::new(n, edges.collect::<Vec<_>>()).expect("tree")
}

/// Random graph on `n` vertices with `m` edges, edges sampled uniformly.
pub fn random_graph<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Graph {
    let mut all: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    assert!(m <= all.len(), "too many edges requested");
    all.shuffle(rng);
    all.truncate(m);
    Graph::new(n, all).expect("random graph")
}

/// Random connected graph: a random spanning tree plus extra random edges.
pub fn random_connected<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Graph {
    assert!(n >= 1 && m + 1 >= n && m <= n * (n - 1) / 2);
    let tree = random_tree(n, rng);
    let mut edges: BTreeSet<(usize, usize)> = tree.edges().iter().copied().collect();
    let mut rest: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|p| !edges.contains(p))
        .collect();
    rest.shuffle(rng);
    edges.extend(rest.into_iter().take(m + 1 - n));
    let mut edges: Vec<_> = edges.into_iter().collect();
    edges.shuffle(rng);
    Graph::new(n, edges).expect("connected graph")
}

/// Random bipartite graph with sides `0..a`, `a..a+b` and `m` edges.
pub fn random_bipartite<R: Rng + ?Sized>(a: usize, b: usize, m: usize, rng: &mut R) -> Graph {
    let mut all: Vec<(usize, usize)> = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .collect();
    assert!(m <= all.len());
    all.shuffle(rng);
    all.truncate(m);
    Graph::new(a + b, all).expect("bipartite graph")
}

/// Random graph with maximum degree at most `max_degree`, built by
/// rejection-free greedy insertion of shuffled candidate edges.
pub fn random_bounded_degree<R: Rng + ?Sized>(
    n: usize,
    m: usize,
    max_degree: usize,
    rng: &mut R,
) -> Graph {
    let mut all: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    all.shuffle(rng);
    let mut degree = vec![0; n];
    let mut edges = Vec::new();
    for (u, v) in all {
        if edges.len() == m {
            break;
        }
        if degree[u] < max_degree && degree[v] < max_degree {
            degree[u] += 1;
            degree[v] += 1;
            edges.push((u, v));
        }
    }
    Graph::new(n, edges).expect("bounded degree graph")
}

/// All pairwise non-isomorphic trees on `n` vertices.
pub fn nonisomorphic_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for size in 1..n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for edges in &level {
            for attach in 0..size {
                let mut grown = edges.clone();
                grown.push((attach, size));
                if seen.insert(tree_canonical_form(size + 1, &grown)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level
        .into_iter()
        .map(|edges| Graph::new(n, edges).expect("tree"))
        .collect()
}

/// Isomorphism-invariant encoding of a tree: the smallest rooted
/// parenthesis encoding over all roots.
pub fn tree_canonical_form(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adjacency = vec![Vec::new(); n];
    for &(u, v) in edges {
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    fn encode(adjacency: &[Vec<usize>], v: usize, parent: usize) -> String {
        let mut parts: Vec<String> = adjacency[v]
            .iter()
            .filter(|&&u| u != parent)
            .map(|&u| encode(adjacency, u, v))
            .collect();
        parts.sort();
        format!("({})", parts.concat())
    }
    (0..n)
        .map(|root| encode(&adjacency, root, usize::MAX))
        .min()
        .unwrap_or_default()
}
