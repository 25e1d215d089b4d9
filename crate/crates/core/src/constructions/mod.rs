//! Explicit path families and the structures used to bound them.
//!
//! * [`build_even`] / [`build_odd`]: tuple-permutation families whose pairs
//!   all have a private `k`-window, with [`witness_window`] naming that
//!   window for a given pair.
//! * [`odd_edge_matching`] and [`skeleton`]: the edge classes that rule out
//!   private windows, used for upper bounds.
//! * [`greedy_family`] for parameters without an explicit construction.
//! * [`gv_family`]: greedy lexicode over characteristic vectors.

mod classes;
mod code;
mod scheme;

pub use classes::{
    check_matching_classes, check_skeleton_classes, distinct_path_matchings, ClassCheck,
    CLASS_CHECK_MAX_N,
};
pub use code::{gv_family, CodeFamily, GV_MAX_N};
pub use scheme::{
    build_construction, build_even, build_odd, witness_window, TupleScheme, WitnessKind,
    WitnessWindow,
};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::paths::{
    enumerate_paths, next_permutation, Edge, EdgeSet, HamiltonPath, PathFamily, Vertex,
};
use crate::predicates::{PairwiseCondition, PreparedPath};

/// Edges at positions 1, 3, 5, ...: a perfect matching for even `n`, a
/// near-perfect one for odd `n`.
pub fn odd_edge_matching(p: &HamiltonPath) -> EdgeSet {
    EdgeSet::from_edges(p.n(), (1..=p.edge_count()).step_by(2).map(|i| p.edge_at(i)))
}

/// Edges at positions 2, 4, 6, ...; for odd `n` the second near-perfect
/// matching of the path.
pub fn even_edge_matching(p: &HamiltonPath) -> EdgeSet {
    EdgeSet::from_edges(p.n(), (2..=p.edge_count()).step_by(2).map(|i| p.edge_at(i)))
}

/// Edges at positions `1, k+1, 2k+1, ..., n-k+1`. Every window of `k`
/// consecutive edges contains exactly one of them.
pub fn skeleton(p: &HamiltonPath, k: usize) -> Result<EdgeSet> {
    let n = p.n();
    if k == 0 || !n.is_multiple_of(k) {
        return Err(Error::bad(format!("skeleton needs k | n, got n={n} k={k}")));
    }
    Ok(EdgeSet::from_edges(
        n,
        (1..=n - k + 1).step_by(k).map(|i| p.edge_at(i)),
    ))
}

/// The fixed vertex-disjoint edges `{k i + 1, k i + 2}` for `i < n/k`.
pub fn reference_skeleton(n: usize, k: usize) -> Result<EdgeSet> {
    if k < 2 || !n.is_multiple_of(k) {
        return Err(Error::bad(format!(
            "reference skeleton needs k >= 2 and k | n, got n={n} k={k}"
        )));
    }
    Ok(EdgeSet::from_edges(
        n,
        (0..n / k).map(|i| Edge::new((k * i + 1) as Vertex, (k * i + 2) as Vertex)),
    ))
}

/// Counts vertex sequences of `[n]` whose skeleton (positions `1, k+1, ...`)
/// is exactly [`reference_skeleton`]`(n, k)`, by running through all `n!`
/// orders. Diagnostic for the closed-form class size; `n <= 10`.
pub fn enumerate_skeleton_class(n: usize, k: usize) -> Result<u64> {
    if n > 10 {
        return Err(Error::bad(
            "skeleton class enumeration is limited to n <= 10",
        ));
    }
    let target = reference_skeleton(n, k)?;
    let positions: Vec<usize> = (1..=n - k + 1).step_by(k).collect();
    let mut order: Vec<Vertex> = (1..=n as Vertex).collect();
    let mut count = 0u64;
    loop {
        if positions
            .iter()
            .all(|&i| target.contains(Edge::new(order[i - 1], order[i])))
        {
            count += 1;
        }
        if !next_permutation(&mut order) {
            break;
        }
    }
    Ok(count)
}

/// Candidate pool size used by [`greedy_family`] when `n > 9`.
pub const GREEDY_SAMPLE_SIZE: usize = 20_000;

/// Largest `n` for which [`greedy_family`] scans every canonical path.
pub const GREEDY_FULL_MAX_N: usize = 9;

/// Canonical paths in a seed-determined order: all of them for
/// `n <= 9`, otherwise [`GREEDY_SAMPLE_SIZE`] distinct random ones.
pub(crate) fn candidate_pool(n: usize, seed: u64, sample: usize) -> Vec<HamiltonPath> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if n <= GREEDY_FULL_MAX_N {
        let mut all: Vec<HamiltonPath> = enumerate_paths(n).collect();
        all.shuffle(&mut rng);
        return all;
    }
    let mut seen = std::collections::HashSet::new();
    let mut pool = Vec::with_capacity(sample);
    let mut attempts = 0;
    while pool.len() < sample && attempts < sample * 4 {
        attempts += 1;
        let p = HamiltonPath::random(n, &mut rng);
        if seen.insert(p.clone()) {
            pool.push(p);
        }
    }
    pool
}

/// Keeps each candidate compatible with everything kept so far.
pub(crate) fn greedy_select(
    candidates: &[HamiltonPath],
    condition: PairwiseCondition,
) -> Vec<HamiltonPath> {
    let mut kept: Vec<PreparedPath<'_>> = Vec::new();
    for c in candidates {
        let prepared = PreparedPath::new(c);
        if kept.iter().all(|k| condition.holds_prepared(k, &prepared)) {
            kept.push(prepared);
        }
    }
    kept.into_iter().map(|p| p.path().clone()).collect()
}

/// Greedy family: scan canonical paths in a seed-determined order and keep
/// each one compatible with all kept paths. Deterministic given `seed`.
pub fn greedy_family(n: usize, condition: PairwiseCondition, seed: u64) -> Result<PathFamily> {
    condition.validate_for_paths(n)?;
    let pool = candidate_pool(n, seed, GREEDY_SAMPLE_SIZE);
    PathFamily::new(n, condition, greedy_select(&pool, condition))
}
