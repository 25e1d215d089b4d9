use rayon::prelude::*;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::paths::{enumerate_paths, path_count, HamiltonPath};
use crate::predicates::{PairwiseCondition, PreparedPath};

/// Simple undirected graph as a symmetric bit matrix with empty diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitGraph {
    rows: Vec<BitSet>,
}

impl BitGraph {
    pub fn empty(m: usize) -> Self {
        BitGraph {
            rows: vec![BitSet::new(m); m],
        }
    }

    pub fn complete(m: usize) -> Self {
        let mut g = Self::empty(m);
        for i in 0..m {
            for j in i + 1..m {
                g.add_edge(i, j);
            }
        }
        g
    }

    /// Builds from a symmetric predicate evaluated on `i < j`.
    pub fn from_fn(m: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(m);
        for i in 0..m {
            for j in i + 1..m {
                if adjacent(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Builds from full adjacency rows; rows must be symmetric.
    pub(crate) fn from_rows(rows: Vec<BitSet>) -> Self {
        BitGraph { rows }
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i != j, "loops are not allowed");
        self.rows[i].insert(j);
        self.rows[j].insert(i);
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    #[inline]
    pub fn neighbours(&self, i: usize) -> &BitSet {
        &self.rows[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.rows[i].len()
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(a, &i)| {
            vertices[a + 1..]
                .iter()
                .all(|&j| i != j && self.has_edge(i, j))
        })
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.rows.len()).all(|i| {
            !self.rows[i].contains(i) && self.rows[i].iter().all(|j| self.rows[j].contains(i))
        })
    }
}

/// Largest `n` accepted by [`build_graph`]; `8!/2 = 20160` vertices.
pub const MAX_GRAPH_N: usize = 8;

/// Canonical Hamilton paths of `K_n`, adjacent when the pair satisfies the
/// condition. Vertex `i` is the `i`-th path in lexicographic order.
///
/// Relabelling the vertices of `K_n` permutes Hamilton paths transitively
/// and preserves every condition, so the graph is vertex-transitive.
#[derive(Clone, Debug)]
pub struct CompatibilityGraph {
    n: usize,
    condition: PairwiseCondition,
    labels: Vec<HamiltonPath>,
    graph: BitGraph,
}

impl CompatibilityGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn condition(&self) -> PairwiseCondition {
        self.condition
    }

    pub fn labels(&self) -> &[HamiltonPath] {
        &self.labels
    }

    pub fn graph(&self) -> &BitGraph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Subgraph induced on the neighbours of vertex 0, with the map back to
    /// vertex indices (ascending).
    pub fn first_neighbourhood(&self) -> (BitGraph, Vec<usize>) {
        let nb: Vec<usize> = self.graph.neighbours(0).iter().collect();
        let sub = BitGraph::from_fn(nb.len(), |i, j| self.graph.has_edge(nb[i], nb[j]));
        (sub, nb)
    }
}

/// Evaluates the condition on all pairs of canonical paths of `K_n`.
pub fn build_graph(n: usize, condition: PairwiseCondition) -> Result<CompatibilityGraph> {
    if n > MAX_GRAPH_N {
        return Err(Error::TooLarge {
            vertices: path_count(n),
            max_n: MAX_GRAPH_N,
        });
    }
    condition.validate_for_paths(n)?;
    let labels: Vec<HamiltonPath> = enumerate_paths(n).collect();
    let prepared: Vec<PreparedPath<'_>> = labels.iter().map(PreparedPath::new).collect();
    let m = labels.len();
    // upper triangle in parallel, then mirror
    let mut rows: Vec<BitSet> = (0..m)
        .into_par_iter()
        .map(|i| {
            let mut row = BitSet::new(m);
            for j in i + 1..m {
                if condition.holds_prepared(&prepared[i], &prepared[j]) {
                    row.insert(j);
                }
            }
            row
        })
        .collect();
    for i in 0..m {
        let upper: Vec<usize> = rows[i].iter().filter(|&j| j > i).collect();
        for j in upper {
            rows[j].insert(i);
        }
    }
    Ok(CompatibilityGraph {
        n,
        condition,
        labels,
        graph: BitGraph::from_rows(rows),
    })
}
