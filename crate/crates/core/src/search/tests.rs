use super::*;
use crate::bounds::bounds_m;
use crate::paths::{enumerate_paths, HamiltonPath};
use crate::predicates::PairwiseCondition as C;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Largest clique by checking all 2^m vertex subsets.
fn subset_oracle(m: usize, adjacent: impl Fn(usize, usize) -> bool) -> usize {
    assert!(m <= 20);
    (0u32..1 << m)
        .filter(|mask| {
            (0..m).filter(|i| mask >> i & 1 == 1).all(|i| {
                (i + 1..m)
                    .filter(|j| mask >> j & 1 == 1)
                    .all(|j| adjacent(i, j))
            })
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn full() -> CliqueOptions {
    CliqueOptions::default()
}

#[test]
fn trivial_graphs() {
    assert_eq!(maximum_clique(&BitGraph::empty(0), &full()).clique.len(), 0);
    let out = maximum_clique(&BitGraph::empty(7), &full());
    assert_eq!(out.clique, vec![0]);
    assert!(out.exhaustive);
    for m in 1..=12 {
        let out = maximum_clique(&BitGraph::complete(m), &full());
        assert_eq!(out.clique, (0..m).collect::<Vec<_>>());
    }
}

#[test]
fn random_graphs_match_subset_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for trial in 0..60 {
        let m = rng.gen_range(1..=16);
        let density: f64 = rng.gen_range(0.1..0.95);
        let g = BitGraph::from_fn(m, |_, _| rng.gen_bool(density));
        let out = maximum_clique(&g, &full());
        assert!(out.exhaustive);
        assert!(g.is_clique(&out.clique));
        assert_eq!(
            out.clique.len(),
            subset_oracle(m, |i, j| g.has_edge(i, j)),
            "trial {trial}"
        );
    }
}

#[test]
fn witness_is_lexicographically_smallest() {
    // two triangles {0,4,5} and {1,2,3}; the smaller sorted sequence wins
    let mut g = BitGraph::empty(6);
    for (a, b) in [(1, 2), (1, 3), (2, 3), (0, 4), (0, 5), (4, 5)] {
        g.add_edge(a, b);
    }
    assert_eq!(maximum_clique(&g, &full()).clique, vec![0, 4, 5]);
}

#[test]
fn budget_exhaustion_is_flagged() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let g = BitGraph::from_fn(400, |_, _| rng.gen_bool(0.9));
    let out = maximum_clique(
        &g,
        &CliqueOptions {
            budget: Some(Duration::ZERO),
            workers: Some(1),
        },
    );
    assert!(!out.exhaustive);
    assert!(g.is_clique(&out.clique));
}

#[test]
fn degeneracy_order_is_a_permutation() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let g = BitGraph::from_fn(40, |_, _| rng.gen_bool(0.3));
    let mut order = degeneracy_order(&g);
    order.sort_unstable();
    assert_eq!(order, (0..40).collect::<Vec<_>>());
}

#[test]
fn build_graph_shapes() {
    let g = build_graph(4, C::PrivateSubpath(2)).unwrap();
    assert_eq!(g.vertex_count(), 12);
    assert!(g.graph().is_symmetric());

    let g = build_graph(5, C::PrivateSubpath(4)).unwrap();
    for i in 0..g.vertex_count() {
        for j in 0..g.vertex_count() {
            let (p, q) = (&g.labels()[i], &g.labels()[j]);
            assert_eq!(g.graph().has_edge(i, j), p.edges().is_disjoint(&q.edges()));
        }
    }

    let g = build_graph(5, C::Degree4Union).unwrap();
    assert_eq!(g.vertex_count(), 60);
    assert!(g.graph().is_symmetric());

    match build_graph(9, C::PrivateSubpath(2)) {
        Err(Error::TooLarge { vertices, .. }) => assert_eq!(vertices, 181_440),
        other => panic!("unexpected {other:?}"),
    }
}

fn paths_oracle(n: usize, cond: C) -> usize {
    let all: Vec<HamiltonPath> = enumerate_paths(n).collect();
    subset_oracle(all.len(), |i, j| cond.holds(&all[i], &all[j]).unwrap())
}

#[test]
fn exact_values_match_subset_oracle() {
    let opts = SearchOptions::default();
    for (n, k) in [(3, 1), (3, 2), (4, 1), (4, 2), (4, 3)] {
        let r = exact_m(n, k, &opts).unwrap();
        assert!(r.exhaustive);
        assert_eq!(
            r.optimum,
            paths_oracle(n, C::PrivateSubpath(k)),
            "M({n},{k})"
        );
        assert!(verify_family(&r.witness).is_valid());
    }
    let r = exact_l(4, 1, &opts).unwrap();
    assert_eq!(r.optimum, paths_oracle(4, C::PrivateMatching(1)));
}

#[test]
fn exact_l_monotone_in_k() {
    // L(6,2) is out of desk-scale reach; (6,1) and (6,3..) are quick
    let opts = SearchOptions::default();
    for (n, ks) in [(5, vec![1, 2, 3, 4]), (6, vec![1, 3, 4, 5])] {
        let values: Vec<usize> = ks
            .iter()
            .map(|&k| exact_l(n, k, &opts).unwrap().optimum)
            .collect();
        assert!(values.windows(2).all(|w| w[0] >= w[1]), "n={n}: {values:?}");
    }
}

#[test]
fn neighbourhood_reduction_matches_full_search() {
    for n in [4, 5] {
        for cond in [
            C::PrivateSubpath(2),
            C::PrivateSubpath(3),
            C::PrivateMatching(2),
            C::Degree4Union,
        ] {
            let g = build_graph(n, cond).unwrap();
            let full = maximum_clique(g.graph(), &CliqueOptions::default());
            let reduced = max_clique(&g, &SearchOptions::default()).unwrap();
            assert!(full.exhaustive && reduced.exhaustive);
            let labels: Vec<_> = full.clique.iter().map(|&i| g.labels()[i].clone()).collect();
            assert_eq!(reduced.witness.members(), &labels[..], "n={n} {cond}");
        }
    }
}

/// About a minute on one core.
#[test]
#[ignore]
fn m_6_2_reaches_the_matching_count() {
    let r = exact_m(
        6,
        2,
        &SearchOptions {
            budget: None,
            workers: None,
        },
    )
    .unwrap();
    assert!(r.exhaustive);
    assert_eq!(r.optimum, 15);
}

#[test]
fn exact_m_within_bounds() {
    let opts = SearchOptions::default();
    for n in 4..=6 {
        let mut prev = usize::MAX;
        // (6,2) takes about a minute; see m_6_2_reaches_the_matching_count
        for k in (2..n).filter(|&k| (n, k) != (6, 2)) {
            let r = exact_m(n, k, &opts).unwrap();
            assert!(r.optimum <= prev, "monotonicity at ({n},{k})");
            prev = r.optimum;
            if let Some(ok) = bounds_m(n, k).admits(r.optimum) {
                assert!(ok, "({n},{k}) optimum {} outside bounds", r.optimum);
            }
        }
    }
}

#[test]
fn deterministic_across_worker_counts() {
    let one = exact_m(5, 2, &SearchOptions::with_workers(1)).unwrap();
    let many = exact_m(5, 2, &SearchOptions::with_workers(3)).unwrap();
    assert_eq!(one.optimum, many.optimum);
    assert_eq!(one.witness, many.witness);
}

#[test]
fn greedy_lower_is_valid_and_deterministic() {
    let a = greedy_lower(10, C::PrivateSubpath(4), 8, 7).unwrap();
    let b = greedy_lower(10, C::PrivateSubpath(4), 8, 7).unwrap();
    assert_eq!(a.witness, b.witness);
    assert!(!a.exhaustive);
    assert!(verify_family(&a.witness).is_valid());
    assert!(greedy_lower(6, C::PrivateSubpath(2), 0, 1).is_err());
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = ResultsCache::new(dir.path().join("c.jsonl"));
    assert!(cache.load().unwrap().is_empty());
    let r = exact_m(4, 2, &SearchOptions::default()).unwrap();
    let rec = SearchRecord::from_result(&r);
    cache.append(&rec).unwrap();
    cache.append(&rec).unwrap();
    assert_eq!(cache.load().unwrap().len(), 2);
    let hit = cache.lookup(4, 2, "private-subpath").unwrap().unwrap();
    assert_eq!(hit, rec);
    assert!(cache.lookup(4, 3, "private-subpath").unwrap().is_none());
    let line = std::fs::read_to_string(cache.path()).unwrap();
    assert!(line.starts_with("{\"n\":4,\"k\":2,\"condition\":\"private-subpath\""));
}
