//! Pairwise separation predicates and family verification.
//!
//! Every predicate is symmetric in its two arguments and invariant under
//! reversing either path. A "private" structure of one path is one whose
//! edges all lie outside the other path.

mod subset;

pub use subset::{private_triangle, VertexSubset};

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::CodeFamily;
use crate::error::{Error, Result};
use crate::paths::{EdgeSet, HamiltonPath, PathFamily, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairwiseCondition {
    /// `k` consecutive edges of one path, none in the other.
    PrivateSubpath(usize),
    /// Some vertex has degree 4 in the union of the two paths.
    Degree4Union,
    /// `k` vertex-disjoint edges of one path, none in the other.
    PrivateMatching(usize),
    /// A triangle inside one induced clique, edge-disjoint from the other.
    PrivateTrianglePair,
    /// A `k`-edge path inside one graph, edge-disjoint from the other.
    PrivateSubgraphPath(usize),
}

impl PairwiseCondition {
    pub const NAMES: [&'static str; 5] = [
        "private-subpath",
        "degree4-union",
        "private-matching",
        "private-triangle",
        "private-subgraph-path",
    ];

    pub fn name(self) -> &'static str {
        match self {
            PairwiseCondition::PrivateSubpath(_) => "private-subpath",
            PairwiseCondition::Degree4Union => "degree4-union",
            PairwiseCondition::PrivateMatching(_) => "private-matching",
            PairwiseCondition::PrivateTrianglePair => "private-triangle",
            PairwiseCondition::PrivateSubgraphPath(_) => "private-subgraph-path",
        }
    }

    pub fn k(self) -> Option<usize> {
        match self {
            PairwiseCondition::PrivateSubpath(k)
            | PairwiseCondition::PrivateMatching(k)
            | PairwiseCondition::PrivateSubgraphPath(k) => Some(k),
            PairwiseCondition::Degree4Union => None,
            PairwiseCondition::PrivateTrianglePair => None,
        }
    }

    /// `k` as written in family headers. The degree-4 union condition is a
    /// stand-in for the `k = 2` subpath condition and is written as `k=2`;
    /// the triangle condition as `k=3`.
    pub fn header_k(self) -> usize {
        match self {
            PairwiseCondition::Degree4Union => 2,
            PairwiseCondition::PrivateTrianglePair => 3,
            other => other.k().unwrap_or(0),
        }
    }

    /// Parses a condition name; `k` is required for parameterized conditions.
    pub fn from_name(name: &str, k: Option<usize>) -> Result<Self> {
        let need_k = || k.ok_or_else(|| Error::bad(format!("condition {name} needs k")));
        let cond = match name {
            "private-subpath" => PairwiseCondition::PrivateSubpath(need_k()?),
            "degree4-union" => PairwiseCondition::Degree4Union,
            "private-matching" => PairwiseCondition::PrivateMatching(need_k()?),
            "private-triangle" => PairwiseCondition::PrivateTrianglePair,
            "private-subgraph-path" => PairwiseCondition::PrivateSubgraphPath(need_k()?),
            other => {
                return Err(Error::bad(format!(
                    "unknown condition {other:?} (expected one of {})",
                    Self::NAMES.join(", ")
                )))
            }
        };
        if cond.k() == Some(0) {
            return Err(Error::bad("k must be at least 1"));
        }
        Ok(cond)
    }

    /// Checks the condition can be applied to Hamilton paths of `K_n`.
    pub fn validate_for_paths(self, n: usize) -> Result<()> {
        if n < 2 {
            return Err(Error::bad(format!("n={n} has no Hamilton paths")));
        }
        match self {
            PairwiseCondition::PrivateTrianglePair => Err(Error::bad(
                "private-triangle applies to vertex subsets, not paths",
            )),
            other if other.k() == Some(0) => Err(Error::bad("k must be at least 1")),
            _ => Ok(()),
        }
    }

    /// Evaluates the condition on a pair of paths.
    pub fn holds(self, p: &HamiltonPath, q: &HamiltonPath) -> Result<bool> {
        same_n(p, q)?;
        self.validate_for_paths(p.n())?;
        Ok(self.holds_prepared(&PreparedPath::new(p), &PreparedPath::new(q)))
    }

    /// Evaluates the condition on precomputed path data.
    ///
    /// # Panics
    /// On the triangle condition, which is not defined for paths.
    pub fn holds_prepared(self, p: &PreparedPath<'_>, q: &PreparedPath<'_>) -> bool {
        match self {
            PairwiseCondition::PrivateSubpath(k) => {
                p.longest_private_run(q, k) >= k || q.longest_private_run(p, k) >= k
            }
            PairwiseCondition::Degree4Union => p.has_degree4_union(q),
            PairwiseCondition::PrivateMatching(k) => {
                p.private_matching_size(q) >= k || q.private_matching_size(p) >= k
            }
            PairwiseCondition::PrivateSubgraphPath(k) => {
                has_path_of_length(&p.edges.difference(&q.edges), k)
                    || has_path_of_length(&q.edges.difference(&p.edges), k)
            }
            PairwiseCondition::PrivateTrianglePair => {
                panic!("private-triangle is defined on vertex subsets")
            }
        }
    }
}

impl fmt::Display for PairwiseCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k() {
            Some(k) => write!(f, "{}({k})", self.name()),
            None => f.write_str(self.name()),
        }
    }
}

impl FromStr for PairwiseCondition {
    type Err = Error;

    /// Accepts `name` or `name(k)`.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('(') {
            Some((name, rest)) => {
                let k = rest
                    .strip_suffix(')')
                    .and_then(|k| k.parse().ok())
                    .ok_or_else(|| Error::bad(format!("bad condition {s:?}")))?;
                Self::from_name(name, Some(k))
            }
            None => Self::from_name(s, None),
        }
    }
}

impl Serialize for PairwiseCondition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

fn same_n(p: &HamiltonPath, q: &HamiltonPath) -> Result<()> {
    if p.n() != q.n() {
        return Err(Error::MismatchedN {
            left: p.n(),
            right: q.n(),
        });
    }
    Ok(())
}

/// A path together with its edge set, edge indices in order and per-vertex
/// neighbours, so pairwise checks do no allocation.
#[derive(Clone, Debug)]
pub struct PreparedPath<'a> {
    path: &'a HamiltonPath,
    edges: EdgeSet,
    edge_order: Vec<usize>,
    /// `neighbours[v]` for label `v`; 0 marks a missing neighbour.
    neighbours: Vec<[Vertex; 2]>,
}

impl<'a> PreparedPath<'a> {
    pub fn new(path: &'a HamiltonPath) -> Self {
        let order = path.vertices();
        let mut neighbours = vec![[0; 2]; path.n() + 1];
        for (i, &v) in order.iter().enumerate() {
            let prev = if i > 0 { order[i - 1] } else { 0 };
            let next = order.get(i + 1).copied().unwrap_or(0);
            neighbours[v as usize] = [prev, next];
        }
        PreparedPath {
            path,
            edges: path.edges(),
            edge_order: path.edge_indices(),
            neighbours,
        }
    }

    pub fn path(&self) -> &'a HamiltonPath {
        self.path
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    /// Length of the longest run of consecutive edges of `self` missing from
    /// `other`, stopping early once `cap` is reached.
    pub fn longest_private_run(&self, other: &PreparedPath<'_>, cap: usize) -> usize {
        let mut best = 0;
        let mut run = 0;
        for &e in &self.edge_order {
            if other.edges.contains_index(e) {
                run = 0;
            } else {
                run += 1;
                if run > best {
                    best = run;
                    if best >= cap {
                        break;
                    }
                }
            }
        }
        best
    }

    /// Maximum matching among the edges of `self` missing from `other`.
    ///
    /// Those edges form vertex-disjoint subpaths of `self`; a subpath with
    /// `r` edges has a maximum matching of `ceil(r/2)`.
    pub fn private_matching_size(&self, other: &PreparedPath<'_>) -> usize {
        let mut total = 0;
        let mut run = 0usize;
        for &e in &self.edge_order {
            if other.edges.contains_index(e) {
                total += run.div_ceil(2);
                run = 0;
            } else {
                run += 1;
            }
        }
        total + run.div_ceil(2)
    }

    /// Vertex of degree 4 in the union: interior in both paths with four
    /// distinct neighbours.
    pub fn has_degree4_union(&self, other: &PreparedPath<'_>) -> bool {
        self.neighbours
            .iter()
            .zip(&other.neighbours)
            .skip(1)
            .any(|(a, b)| {
                a[0] != 0
                    && a[1] != 0
                    && b[0] != 0
                    && b[1] != 0
                    && a[0] != b[0]
                    && a[0] != b[1]
                    && a[1] != b[0]
                    && a[1] != b[1]
            })
    }
}

/// True iff `k` consecutive edges of one path are all absent from the other.
pub fn private_subpath(p: &HamiltonPath, q: &HamiltonPath, k: usize) -> Result<bool> {
    PairwiseCondition::PrivateSubpath(k).holds(p, q)
}

/// True iff some vertex has degree 4 in `edges_of(p) ∪ edges_of(q)`.
pub fn degree4_union(p: &HamiltonPath, q: &HamiltonPath) -> Result<bool> {
    PairwiseCondition::Degree4Union.holds(p, q)
}

/// `private_subpath(p, q, 2) || !degree4_union(p, q)`.
///
/// A degree-4 vertex has two incident edges from each path, none shared, so
/// the two from either path form a private 2-window. This is the diagnostic
/// for that implication.
pub fn degree4_implies_private2(p: &HamiltonPath, q: &HamiltonPath) -> Result<bool> {
    Ok(private_subpath(p, q, 2)? || !degree4_union(p, q)?)
}

/// Exhaustive check of [`degree4_implies_private2`] over all canonical
/// pairs of `K_n`. Returns the number of pairs checked and the first
/// counterexample, if any.
pub fn degree4_counterexample(n: usize) -> (u64, Option<(HamiltonPath, HamiltonPath)>) {
    let all: Vec<HamiltonPath> = crate::paths::enumerate_paths(n).collect();
    let prepared: Vec<PreparedPath<'_>> = all.iter().map(PreparedPath::new).collect();
    let mut checked = 0;
    for i in 0..prepared.len() {
        for j in i + 1..prepared.len() {
            checked += 1;
            let (p, q) = (&prepared[i], &prepared[j]);
            if p.has_degree4_union(q)
                && p.longest_private_run(q, 2) < 2
                && q.longest_private_run(p, 2) < 2
            {
                return (checked, Some((all[i].clone(), all[j].clone())));
            }
        }
    }
    (checked, None)
}

/// True iff one path has `k` vertex-disjoint edges none of which lies in the
/// other path.
pub fn private_matching(p: &HamiltonPath, q: &HamiltonPath, k: usize) -> Result<bool> {
    PairwiseCondition::PrivateMatching(k).holds(p, q)
}

/// True iff `g1 \ g2` or `g2 \ g1` contains a simple path with `k` edges.
///
/// Decided by depth-first search, exponential in the worst case; intended
/// for `n <= 16`.
pub fn private_subgraph_path(g1: &EdgeSet, g2: &EdgeSet, k: usize) -> Result<bool> {
    if g1.ambient_n() != g2.ambient_n() {
        return Err(Error::MismatchedN {
            left: g1.ambient_n(),
            right: g2.ambient_n(),
        });
    }
    if k == 0 {
        return Err(Error::bad("k must be at least 1"));
    }
    Ok(has_path_of_length(&g1.difference(g2), k) || has_path_of_length(&g2.difference(g1), k))
}

/// Whether `graph` contains a simple path with at least `k` edges.
pub fn has_path_of_length(graph: &EdgeSet, k: usize) -> bool {
    let n = graph.ambient_n();
    if k == 0 {
        return true;
    }
    if graph.len() < k || k >= n {
        return false;
    }
    let adj = graph.adjacency();
    let mut visited = vec![false; n + 1];

    fn extend(v: usize, depth: usize, k: usize, adj: &[Vec<Vertex>], visited: &mut [bool]) -> bool {
        if depth == k {
            return true;
        }
        visited[v] = true;
        let found = adj[v]
            .iter()
            .any(|&w| !visited[w as usize] && extend(w as usize, depth + 1, k, adj, visited));
        visited[v] = false;
        found
    }

    (1..=n).any(|v| !adj[v].is_empty() && extend(v, 0, k, &adj, &mut visited))
}

/// Unordered index pairs `(i, j)`, `i < j`, failing a family's condition,
/// in lexicographic order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ViolationReport {
    pub pairs: Vec<(usize, usize)>,
}

impl ViolationReport {
    pub fn is_valid(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Checks every pair of members against the family's condition.
pub fn verify_family(family: &PathFamily) -> ViolationReport {
    let prepared: Vec<PreparedPath<'_>> = family.members().iter().map(PreparedPath::new).collect();
    let cond = family.condition();
    let m = prepared.len();
    let mut pairs: Vec<(usize, usize)> = (0..m)
        .into_par_iter()
        .flat_map_iter(|i| {
            let prepared = &prepared;
            (i + 1..m)
                .filter(move |&j| !cond.holds_prepared(&prepared[i], &prepared[j]))
                .map(move |j| (i, j))
        })
        .collect();
    pairs.sort_unstable();
    ViolationReport { pairs }
}

/// Checks every pair of code words against [`private_triangle`].
pub fn verify_code_triangles(code: &CodeFamily) -> ViolationReport {
    let words = code.words();
    let mut pairs = Vec::new();
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            if !private_triangle(&words[i], &words[j]) {
                pairs.push((i, j));
            }
        }
    }
    ViolationReport { pairs }
}
