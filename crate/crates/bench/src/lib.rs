//! Seeded workloads shared by the benchmarks.

use arl_core::{generators, Graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Connected graphs on `n` vertices with `m` edges, one per seed.
pub fn connected_graphs(n: usize, m: usize, count: usize) -> Vec<Graph> {
    (0..count as u64)
        .map(|seed| generators::random_connected(n, m, &mut rng(seed)))
        .collect()
}

/// A random tree on `n` vertices.
pub fn tree(n: usize, seed: u64) -> Graph {
    generators::random_tree(n, &mut rng(seed))
}
