//! Maximum clique by branch and bound over bit sets.
//!
//! Vertices are renumbered in degeneracy order (low-core vertices last). At
//! each node the candidate set is greedily coloured in that order and
//! vertices are branched on from the highest colour down; a branch is cut
//! when `|clique| + colour <= best`. Root branches run on a rayon pool and
//! share only the best size (atomic) and the node counter.
//!
//! Once the clique number is known, a second sequential pass finds the
//! lexicographically smallest maximum clique in the caller's numbering, so
//! the witness does not depend on thread scheduling.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::graph::BitGraph;
use crate::bitset::BitSet;

#[derive(Clone, Debug, Default)]
pub struct CliqueOptions {
    /// Wall-clock budget; `None` runs to completion.
    pub budget: Option<Duration>,
    /// Worker threads; `None` uses rayon's default (available parallelism).
    pub workers: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueOutcome {
    /// Vertices in ascending order.
    pub clique: Vec<usize>,
    /// The search finished, so `clique` is maximum.
    pub exhaustive: bool,
    pub nodes: u64,
}

struct Shared<'a> {
    adj: &'a [BitSet],
    best: AtomicUsize,
    best_clique: Mutex<Vec<usize>>,
    nodes: AtomicU64,
    aborted: AtomicBool,
    deadline: Option<Instant>,
}

impl Shared<'_> {
    fn offer(&self, clique: &[usize]) {
        let mut guard = self.best_clique.lock().expect("poisoned best clique");
        if clique.len() > guard.len() {
            guard.clear();
            guard.extend_from_slice(clique);
            self.best.store(clique.len(), Ordering::SeqCst);
        }
    }

    fn tick(&self, local: &mut u64) -> bool {
        *local += 1;
        if (*local).is_multiple_of(256) {
            self.nodes.fetch_add(256, Ordering::Relaxed);
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.aborted.store(true, Ordering::Relaxed);
                }
            }
        }
        self.aborted.load(Ordering::Relaxed)
    }

    fn flush(&self, local: u64) {
        self.nodes.fetch_add(local % 256, Ordering::Relaxed);
    }
}

/// Tries to place `v` in one of `classes`: directly when it has no
/// neighbour in a class, or by moving its single neighbour `w` in class
/// `k1` into another class `k2` that has no neighbour of `w`.
fn recolour(adj: &[BitSet], classes: &mut [BitSet], v: usize) -> bool {
    for k1 in 0..classes.len() {
        match adj[v].intersection_len(&classes[k1]) {
            0 => {
                classes[k1].insert(v);
                return true;
            }
            1 => {
                let w = adj[v]
                    .iter()
                    .find(|&w| classes[k1].contains(w))
                    .expect("one neighbour");
                for k2 in 0..classes.len() {
                    if k2 != k1 && adj[w].is_disjoint(&classes[k2]) {
                        classes[k1].remove(w);
                        classes[k2].insert(w);
                        classes[k1].insert(v);
                        return true;
                    }
                }
            }
            _ => {}
        }
    }
    false
}

/// Colours `candidates` and returns the vertices whose colour is at least
/// `min_colour`, with their colours, sorted by colour ascending.
///
/// The first `min_colour - 1` classes are built greedily in index order;
/// each leftover vertex is then offered to those classes via [`recolour`]
/// before the remainder is coloured greedily from `min_colour` up.
fn colour_classes(
    adj: &[BitSet],
    candidates: &BitSet,
    min_colour: usize,
) -> (Vec<usize>, Vec<usize>) {
    let mut uncoloured = candidates.clone();
    let mut classes: Vec<BitSet> = Vec::new();
    let mut class = BitSet::new(candidates.capacity());
    while classes.len() + 1 < min_colour && !uncoloured.is_empty() {
        let mut members = BitSet::new(candidates.capacity());
        class.clone_from(&uncoloured);
        while let Some(v) = class.first() {
            class.remove(v);
            class.difference_with(&adj[v]);
            uncoloured.remove(v);
            members.insert(v);
        }
        classes.push(members);
    }
    if !classes.is_empty() && classes.len() + 1 == min_colour {
        let leftover: Vec<usize> = uncoloured.iter().collect();
        for v in leftover {
            if recolour(adj, &mut classes, v) {
                uncoloured.remove(v);
            }
        }
    }
    let mut order = Vec::new();
    let mut colours = Vec::new();
    let mut colour = classes.len();
    while !uncoloured.is_empty() {
        colour += 1;
        class.clone_from(&uncoloured);
        while let Some(v) = class.first() {
            class.remove(v);
            class.difference_with(&adj[v]);
            uncoloured.remove(v);
            order.push(v);
            colours.push(colour);
        }
    }
    (order, colours)
}

/// True when `candidates` can be coloured with fewer than `k` colours (so
/// it holds no clique of size `k`), as witnessed by [`colour_classes`].
fn colourable_below(adj: &[BitSet], candidates: &BitSet, k: usize) -> bool {
    k > 0 && colour_classes(adj, candidates, k).0.is_empty()
}

fn expand(shared: &Shared<'_>, clique: &mut Vec<usize>, mut candidates: BitSet, local: &mut u64) {
    if shared.tick(local) {
        return;
    }
    let best = shared.best.load(Ordering::Relaxed);
    let min_colour = (best + 1).saturating_sub(clique.len()).max(1);
    let (order, colours) = colour_classes(shared.adj, &candidates, min_colour);
    let mut next = BitSet::new(candidates.capacity());
    for idx in (0..order.len()).rev() {
        if clique.len() + colours[idx] <= shared.best.load(Ordering::Relaxed) {
            return;
        }
        let v = order[idx];
        clique.push(v);
        candidates.intersection_into(&shared.adj[v], &mut next);
        if next.is_empty() {
            if clique.len() > shared.best.load(Ordering::Relaxed) {
                shared.offer(clique);
            }
        } else {
            expand(shared, clique, next.clone(), local);
        }
        clique.pop();
        candidates.remove(v);
        if shared.aborted.load(Ordering::Relaxed) {
            return;
        }
    }
}

/// Degeneracy order: repeatedly remove a minimum-degree vertex (smallest
/// index on ties); the result lists vertices in reverse removal order.
pub fn degeneracy_order(graph: &BitGraph) -> Vec<usize> {
    let m = graph.vertex_count();
    let mut degree: Vec<usize> = (0..m).map(|i| graph.degree(i)).collect();
    let mut removed = vec![false; m];
    let mut order = Vec::with_capacity(m);
    // bucket queue keyed by current degree
    let max_deg = degree.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); max_deg + 1];
    for (v, &d) in degree.iter().enumerate() {
        buckets[d].insert(v);
    }
    let mut low = 0;
    for _ in 0..m {
        while buckets[low].is_empty() {
            low += 1;
        }
        let v = buckets[low].pop_first().expect("non-empty bucket");
        removed[v] = true;
        order.push(v);
        for w in graph.neighbours(v).iter() {
            if !removed[w] {
                buckets[degree[w]].remove(&w);
                degree[w] -= 1;
                buckets[degree[w]].insert(w);
                low = low.min(degree[w]);
            }
        }
    }
    order.reverse();
    order
}

fn relabel(graph: &BitGraph, order: &[usize]) -> Vec<BitSet> {
    let m = order.len();
    let mut position = vec![0; m];
    for (new, &old) in order.iter().enumerate() {
        position[old] = new;
    }
    order
        .iter()
        .map(|&old| {
            let mut row = BitSet::new(m);
            for w in graph.neighbours(old).iter() {
                row.insert(position[w]);
            }
            row
        })
        .collect()
}

/// Size of a maximum clique plus an arbitrary maximum clique (in relabelled
/// indices), or the best found when the budget runs out.
fn clique_number(adj: &[BitSet], deadline: Option<Instant>) -> (usize, Vec<usize>, bool, u64) {
    let m = adj.len();
    let shared = Shared {
        adj,
        best: AtomicUsize::new(0),
        best_clique: Mutex::new(Vec::new()),
        nodes: AtomicU64::new(0),
        aborted: AtomicBool::new(false),
        deadline,
    };

    // initial incumbent: greedy clique in the search order
    let mut greedy: Vec<usize> = Vec::new();
    for v in 0..m {
        if greedy.iter().all(|&u| adj[u].contains(v)) {
            greedy.push(v);
        }
    }
    shared.offer(&greedy);

    let all = BitSet::full(m);
    let (order, colours) = colour_classes(adj, &all, 1);
    let mut rank = vec![usize::MAX; m];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    // branch t sees the root set minus the vertices branched on before it,
    // i.e. those later in `order`
    (0..order.len())
        .rev()
        .collect::<Vec<_>>()
        .into_par_iter()
        .for_each(|t| {
            if shared.aborted.load(Ordering::Relaxed) {
                return;
            }
            if colours[t] < shared.best.load(Ordering::Relaxed) {
                return;
            }
            let v = order[t];
            let mut candidates = adj[v].clone();
            let later: Vec<usize> = candidates
                .iter()
                .filter(|&u| rank[u] > t && rank[u] != usize::MAX)
                .collect();
            for u in later {
                candidates.remove(u);
            }
            let mut local = 0;
            let mut clique = vec![v];
            if candidates.is_empty() {
                shared.offer(&clique);
            } else {
                expand(&shared, &mut clique, candidates, &mut local);
            }
            shared.flush(local);
        });

    let aborted = shared.aborted.load(Ordering::SeqCst);
    let best = shared
        .best_clique
        .into_inner()
        .expect("poisoned best clique");
    (best.len(), best, !aborted, shared.nodes.into_inner())
}

/// Lexicographically smallest clique of exactly `target` vertices, by
/// ascending depth-first search with a colouring cut.
fn first_clique_of_size(
    adj: &[BitSet],
    target: usize,
    deadline: Option<Instant>,
    nodes: &mut u64,
) -> Option<Vec<usize>> {
    fn dfs(
        adj: &[BitSet],
        target: usize,
        clique: &mut Vec<usize>,
        mut candidates: BitSet,
        deadline: Option<Instant>,
        nodes: &mut u64,
    ) -> Option<bool> {
        *nodes += 1;
        if (*nodes).is_multiple_of(256) && deadline.is_some_and(|d| Instant::now() >= d) {
            return None;
        }
        if clique.len() == target {
            return Some(true);
        }
        let mut next = BitSet::new(candidates.capacity());
        while let Some(v) = candidates.first() {
            if clique.len() + candidates.len() < target {
                return Some(false);
            }
            candidates.remove(v);
            candidates.intersection_into(&adj[v], &mut next);
            if colourable_below(adj, &next, target - clique.len() - 1) {
                continue;
            }
            clique.push(v);
            if dfs(adj, target, clique, next.clone(), deadline, nodes)? {
                return Some(true);
            }
            clique.pop();
        }
        Some(false)
    }

    if target == 0 {
        return Some(Vec::new());
    }
    let mut clique = Vec::new();
    match dfs(
        adj,
        target,
        &mut clique,
        BitSet::full(adj.len()),
        deadline,
        nodes,
    ) {
        Some(true) => Some(clique),
        _ => None,
    }
}

fn run(graph: &BitGraph, deadline: Option<Instant>) -> CliqueOutcome {
    let m = graph.vertex_count();
    if m == 0 {
        return CliqueOutcome {
            clique: Vec::new(),
            exhaustive: true,
            nodes: 0,
        };
    }
    let order = degeneracy_order(graph);
    let relabelled = relabel(graph, &order);
    let (size, found, exhaustive, mut nodes) = clique_number(&relabelled, deadline);
    let mut fallback: Vec<usize> = found.iter().map(|&i| order[i]).collect();
    fallback.sort_unstable();
    if !exhaustive {
        return CliqueOutcome {
            clique: fallback,
            exhaustive,
            nodes,
        };
    }
    let rows: Vec<BitSet> = (0..m).map(|i| graph.neighbours(i).clone()).collect();
    let clique = first_clique_of_size(&rows, size, deadline, &mut nodes).unwrap_or(fallback);
    CliqueOutcome {
        clique,
        exhaustive,
        nodes,
    }
}

/// Maximum clique of `graph`.
///
/// The size is exact whenever `exhaustive` is set; the returned clique is
/// then the lexicographically smallest maximum clique (unless the witness
/// pass itself runs out of budget, in which case another maximum clique is
/// returned).
pub fn maximum_clique(graph: &BitGraph, options: &CliqueOptions) -> CliqueOutcome {
    let deadline = options.budget.map(|b| Instant::now() + b);
    match options.workers {
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .expect("failed to build worker pool");
            pool.install(|| run(graph, deadline))
        }
        None => run(graph, deadline),
    }
}
