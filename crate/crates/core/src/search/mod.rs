//! Exact optima at small `n` as clique numbers of compatibility graphs,
//! plus a randomized greedy for larger `n`.

mod cache;
mod clique;
mod graph;

pub use cache::{ResultsCache, SearchRecord, CACHE_ENV, CODE_VERSION, DEFAULT_CACHE_FILE};
pub use clique::{degeneracy_order, maximum_clique, CliqueOptions, CliqueOutcome};
pub use graph::{build_graph, BitGraph, CompatibilityGraph, MAX_GRAPH_N};

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::constructions::{candidate_pool, greedy_select, GREEDY_SAMPLE_SIZE};
use crate::error::{Error, Result};
use crate::paths::PathFamily;
use crate::predicates::{verify_family, PairwiseCondition};

pub const DEFAULT_BUDGET: Duration = Duration::from_secs(300);

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub budget: Option<Duration>,
    pub workers: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: Some(DEFAULT_BUDGET),
            workers: None,
        }
    }
}

impl SearchOptions {
    pub fn with_workers(workers: usize) -> Self {
        SearchOptions {
            workers: Some(workers),
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub optimum: usize,
    pub witness: PathFamily,
    pub nodes_expanded: u64,
    pub wall_time: Duration,
    pub exhaustive: bool,
}

/// Maximum clique of a compatibility graph, returned as a verified family.
///
/// By vertex-transitivity some maximum clique contains vertex 0, so only
/// its neighbourhood is searched. The lexicographically smallest maximum
/// clique also starts at vertex 0, hence the witness is the same as a
/// search over the whole graph would give.
pub fn max_clique(graph: &CompatibilityGraph, options: &SearchOptions) -> Result<SearchResult> {
    let start = Instant::now();
    let (sub, map) = graph.first_neighbourhood();
    let outcome = maximum_clique(
        &sub,
        &CliqueOptions {
            budget: options.budget,
            workers: options.workers,
        },
    );
    let members = std::iter::once(0)
        .chain(outcome.clique.iter().map(|&i| map[i]))
        .map(|i| graph.labels()[i].clone())
        .collect();
    let witness = PathFamily::new(graph.n(), graph.condition(), members)?;
    debug_assert!(verify_family(&witness).is_valid());
    Ok(SearchResult {
        optimum: witness.len(),
        witness,
        nodes_expanded: outcome.nodes,
        wall_time: start.elapsed(),
        exhaustive: outcome.exhaustive,
    })
}

/// Largest family under an arbitrary path condition, by exhaustive search.
pub fn exact_optimum(
    n: usize,
    condition: PairwiseCondition,
    options: &SearchOptions,
) -> Result<SearchResult> {
    let start = Instant::now();
    let graph = build_graph(n, condition)?;
    let mut result = max_clique(&graph, options)?;
    result.wall_time = start.elapsed();
    Ok(result)
}

/// Largest family with pairwise private `k`-subpaths.
pub fn exact_m(n: usize, k: usize, options: &SearchOptions) -> Result<SearchResult> {
    exact_optimum(n, PairwiseCondition::PrivateSubpath(k), options)
}

/// Largest family with pairwise private `k`-matchings.
pub fn exact_l(n: usize, k: usize, options: &SearchOptions) -> Result<SearchResult> {
    exact_optimum(n, PairwiseCondition::PrivateMatching(k), options)
}

/// Best of `restarts` greedy passes over one candidate pool (all canonical
/// paths for `n <= 9`, otherwise a seeded sample), each pass in a freshly
/// shuffled order. Deterministic given `seed`; never exhaustive.
pub fn greedy_lower(
    n: usize,
    condition: PairwiseCondition,
    restarts: usize,
    seed: u64,
) -> Result<SearchResult> {
    condition.validate_for_paths(n)?;
    if restarts == 0 {
        return Err(Error::bad("greedy_lower needs at least one restart"));
    }
    let start = Instant::now();
    let mut pool = candidate_pool(n, seed, GREEDY_SAMPLE_SIZE);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut best = Vec::new();
    for r in 0..restarts {
        if r > 0 {
            pool.shuffle(&mut rng);
        }
        let kept = greedy_select(&pool, condition);
        if kept.len() > best.len() {
            best = kept;
        }
    }
    let witness = PathFamily::new(n, condition, best)?;
    assert!(
        verify_family(&witness).is_valid(),
        "greedy selection kept an incompatible pair"
    );
    Ok(SearchResult {
        optimum: witness.len(),
        witness,
        nodes_expanded: 0,
        wall_time: start.elapsed(),
        exhaustive: false,
    })
}

#[cfg(test)]
mod tests;
