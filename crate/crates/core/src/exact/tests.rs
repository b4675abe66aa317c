use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::generators;
use crate::paths::{enumerate_paths, is_pk_free};

/// Every set partition of the edges, no pruning.
fn naive(g: &Graph, k: usize) -> usize {
    let m = g.edge_count();
    if m == 0 {
        return 0;
    }
    let paths: Vec<Vec<usize>> = enumerate_paths(g, k).into_iter().map(|p| p.edges().to_vec()).collect();
    let mut rgs = vec![0usize; m];
    let mut best = 0;
    loop {
        let ok = paths.iter().all(|p| {
            let mut seen: Vec<usize> = p.iter().map(|&e| rgs[e]).collect();
            seen.sort_unstable();
            seen.dedup();
            seen.len() < p.len()
        });
        if ok {
            best = best.max(rgs.iter().max().unwrap() + 1);
        }
        // next restricted growth string
        let mut i = m - 1;
        loop {
            if i == 0 {
                return best;
            }
            let prefix_max = rgs[..i].iter().copied().max().unwrap();
            if rgs[i] <= prefix_max {
                rgs[i] += 1;
                for x in &mut rgs[i + 1..] {
                    *x = 0;
                }
                break;
            }
            i -= 1;
        }
    }
}

fn limits() -> SearchLimits {
    SearchLimits::default()
}

#[test]
fn closed_forms() {
    assert_eq!(ar_exact(&generators::cycle(4), 3, &limits()).unwrap().value, 2);
    assert_eq!(ar_exact(&generators::cycle(8), 5, &limits()).unwrap().value, 6);
    assert_eq!(ar_exact(&generators::star(4), 3, &limits()).unwrap().value, 4);
    assert_eq!(ar_exact(&generators::path(4), 3, &limits()).unwrap().value, 3);
    assert_eq!(ar_exact(&generators::complete(4), 2, &limits()).unwrap().value, 1);
}

#[test]
fn upper_bounds() {
    assert_eq!(upper_bound(&generators::cycle(4), 3), 4);
    assert_eq!(upper_bound(&generators::star(4), 3), 5);
    assert_eq!(upper_bound(&generators::cycle(8), 5), 40);
}

#[test]
fn naive_oracle_sanity() {
    assert_eq!(naive(&generators::path(4), 3), 3);
    assert_eq!(naive(&generators::cycle(4), 3), 2);
    assert_eq!(naive(&generators::star(3), 3), 3);
}

#[test]
fn disconnected_sum() {
    let g = Graph::new(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)]).unwrap();
    let r = ar_exact(&g, 3, &limits()).unwrap();
    assert_eq!(r.value, 4);
    assert!(is_pk_free(&g, &r.witness, 3));
    assert_eq!(ar_exact(&Graph::empty(3), 3, &limits()).unwrap().value, 0);
}

#[test]
fn witness_is_canonical() {
    let r = ar_exact(&generators::path(4), 3, &limits()).unwrap();
    let tokens: Vec<&str> = r.witness.colors().iter().map(Color::as_str).collect();
    // lexicographically first optimal partition of the path e0..e3
    assert_eq!(tokens, ["1", "2", "2", "3"]);
}

#[test]
fn precolored_free_matches_exact() {
    let inst = PrecoloredInstance::free(generators::cycle(4));
    assert_eq!(ar_precolored(&inst, 3, &limits()).unwrap().value, 2);
}

#[test]
fn precolored_counts_fixed_tokens() {
    // P_3 with the middle edge fixed to "x"
    let g = generators::path(3);
    let pc = PartialColoring::new(vec![None, Some(Color::from("x")), None]);
    let inst = PrecoloredInstance::new(g.clone(), pc.clone()).unwrap();
    let r = ar_precolored(&inst, 3, &limits()).unwrap();
    assert_eq!(r.value, 2);
    assert!(pc.is_extended_by(&r.witness));
    assert!(is_pk_free(&g, &r.witness, 3));

    // precolored token "1" must not collide with fresh ones
    let pc = PartialColoring::new(vec![Some(Color::from("1")), None, None]);
    let inst = PrecoloredInstance::new(g.clone(), pc).unwrap();
    let r = ar_precolored(&inst, 3, &limits()).unwrap();
    assert_eq!(r.value, 2);
    assert_eq!(r.witness.distinct_count(), 2);
}

#[test]
fn infeasible_precoloring() {
    let g = generators::path(3);
    let pc = PartialColoring::new(["a", "b", "c"].map(|t| Some(Color::from(t))).to_vec());
    let inst = PrecoloredInstance::new(g, pc).unwrap();
    assert_eq!(ar_precolored(&inst, 3, &limits()), Err(SolveError::Infeasible));
}

#[test]
fn errors() {
    let g = generators::complete(7);
    assert_eq!(
        ar_exact(&g, 3, &limits()),
        Err(SolveError::InstanceTooLarge { uncolored: 21, limit: 16 })
    );
    assert_eq!(ar_exact(&generators::cycle(4), 1, &limits()), Err(SolveError::InvalidPathLength(1)));
    assert!(matches!(
        PrecoloredInstance::new(generators::cycle(4), PartialColoring::uncolored(3)),
        Err(SolveError::ColoringLength { expected: 4, got: 3 })
    ));
}

#[test]
fn budget_exhaustion_reports_best_found() {
    let g = generators::complete(5);
    let tight = SearchLimits {
        node_budget: Some(5),
        ..limits()
    };
    let r = ar_exact(&g, 3, &tight).unwrap();
    assert_eq!(r.status, SolveStatus::BudgetExhausted);
    assert!(is_pk_free(&g, &r.witness, 3));
    assert_eq!(r.value, r.witness.distinct_count());

    // no heuristic floor for k = 2
    let r = ar_exact(&g, 2, &SearchLimits { node_budget: Some(1), ..limits() });
    assert_eq!(r, Err(SolveError::BudgetExhausted));
}

#[test]
fn parallel_matches_sequential() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..5 {
        let g = generators::random_graph(6, 8, &mut rng);
        let base = ar_exact(&g, 3, &limits()).unwrap();
        for w in [2, 8] {
            let r = ar_exact(&g, 3, &limits().with_workers(w)).unwrap();
            assert_eq!(r.value, base.value);
            assert_eq!(r.witness, base.witness);
        }
    }
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (2usize..7, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let max = (n * (n - 1) / 2).min(8);
        let m = (seed as usize) % (max + 1);
        generators::random_graph(n, m, &mut rng)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn matches_naive(g in small_graph(), k in 2usize..5) {
        let r = ar_exact(&g, k, &limits()).unwrap();
        prop_assert_eq!(r.value, naive(&g, k));
        prop_assert!(is_pk_free(&g, &r.witness, k));
        prop_assert_eq!(r.value, r.witness.distinct_count());
        prop_assert!(r.value <= upper_bound(&g, k));
    }

    #[test]
    fn adding_an_edge_gains_at_most_one(g in small_graph()) {
        let n = g.vertex_count();
        let missing = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).find(|&(u, v)| !g.has_edge(u, v));
        if let Some(extra) = missing {
            let bigger = Graph::new(n, g.edges().iter().copied().chain([extra])).unwrap();
            let a = ar_exact(&g, 3, &limits()).unwrap().value;
            let b = ar_exact(&bigger, 3, &limits()).unwrap().value;
            prop_assert!(b <= a + 1);
        }
    }
}
