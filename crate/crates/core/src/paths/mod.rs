//! Vertices, edges, Hamilton paths of `K_n` and their enumeration.
//!
//! Vertices are labelled `1..=n`. Edge positions along a path are 1-based:
//! position `i` joins the `i`-th and `(i+1)`-th vertex of the path.

mod edge;
mod enumerate;
mod family;
pub mod text;

pub use edge::{Edge, EdgeSet};
pub use enumerate::{enumerate_paths, next_permutation, path_count, CanonicalPaths};
pub use family::PathFamily;

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

pub type Vertex = u32;

/// An undirected Hamilton path of `K_n`, stored in canonical orientation:
/// the lexicographically smaller of the vertex order and its reversal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HamiltonPath {
    order: Vec<Vertex>,
}

pub(crate) fn check_permutation(order: &[Vertex]) -> Result<()> {
    let n = order.len();
    let mut seen = vec![false; n + 1];
    for &v in order {
        let idx = v as usize;
        if idx == 0 || idx > n {
            return Err(Error::NotAPermutation {
                n,
                detail: format!("vertex {v} out of range"),
            });
        }
        if seen[idx] {
            return Err(Error::NotAPermutation {
                n,
                detail: format!("vertex {v} repeats"),
            });
        }
        seen[idx] = true;
    }
    Ok(())
}

impl HamiltonPath {
    /// Validates `order` as a permutation of `1..=n` and returns its canonical form.
    pub fn canonicalize(order: impl Into<Vec<Vertex>>) -> Result<Self> {
        let order = order.into();
        check_permutation(&order)?;
        if order.len() < 2 {
            return Err(Error::NotAPermutation {
                n: order.len(),
                detail: "a Hamilton path needs at least 2 vertices".into(),
            });
        }
        Ok(Self::canonical_unchecked(order))
    }

    /// Canonicalizes an order that is already known to be a permutation.
    pub(crate) fn canonical_unchecked(mut order: Vec<Vertex>) -> Self {
        if order.iter().rev().lt(order.iter()) {
            order.reverse();
        }
        HamiltonPath { order }
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut order: Vec<Vertex> = (1..=n as Vertex).collect();
        order.shuffle(rng);
        Self::canonical_unchecked(order)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.order.len()
    }

    #[inline]
    pub fn vertices(&self) -> &[Vertex] {
        &self.order
    }

    pub fn reversed(&self) -> Vec<Vertex> {
        self.order.iter().rev().copied().collect()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.order.len() - 1
    }

    /// Edge at 1-based position `pos`.
    #[inline]
    pub fn edge_at(&self, pos: usize) -> Edge {
        Edge::new(self.order[pos - 1], self.order[pos])
    }

    /// Edges in path order.
    pub fn edge_list(&self) -> impl Iterator<Item = Edge> + '_ {
        self.order.windows(2).map(|w| Edge::new(w[0], w[1]))
    }

    /// Edge indices (see [`Edge::index`]) in path order.
    pub fn edge_indices(&self) -> Vec<usize> {
        self.edge_list().map(|e| e.index()).collect()
    }

    pub fn edges(&self) -> EdgeSet {
        EdgeSet::from_edges(self.n(), self.edge_list())
    }

    /// The `len` consecutive edges beginning at 1-based edge position `start`.
    pub fn window(&self, start: usize, len: usize) -> Result<EdgeSet> {
        let edges = self.edge_count();
        if start == 0 || len == 0 || start + len - 1 > edges {
            return Err(Error::OutOfRange { start, len, edges });
        }
        Ok(EdgeSet::from_edges(
            self.n(),
            (start..start + len).map(|p| self.edge_at(p)),
        ))
    }

    /// Neighbours of `v` along the path (one or two vertices).
    pub fn neighbours(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let pos = self.order.iter().position(|&x| x == v);
        pos.into_iter().flat_map(move |i| {
            let before = i.checked_sub(1).map(|j| self.order[j]);
            let after = self.order.get(i + 1).copied();
            before.into_iter().chain(after)
        })
    }
}

impl fmt::Display for HamiltonPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.order {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for HamiltonPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for HamiltonPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let order = s
            .split(',')
            .map(|t| {
                t.trim().parse::<Vertex>().map_err(|_| Error::Parse {
                    line: 0,
                    message: format!("bad vertex label {:?}", t.trim()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        HamiltonPath::canonicalize(order)
    }
}

/// Builds a canonical path from a literal, panicking on invalid input.
#[macro_export]
macro_rules! path {
    ($($v:expr),+ $(,)?) => {
        $crate::paths::HamiltonPath::canonicalize(vec![$($v as $crate::paths::Vertex),+])
            .expect("path literal is not a permutation")
    };
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edges;
    use proptest::prelude::*;

    #[test]
    fn edges_of_examples() {
        assert_eq!(path![1, 2, 3, 4].edges(), edges!(4; 1-2, 2-3, 3-4));
        assert_eq!(
            path![1, 5, 2, 6, 3, 7, 4, 8].edges(),
            edges!(8; 1-5, 2-5, 2-6, 3-6, 3-7, 4-7, 4-8)
        );
        assert_eq!(path![2, 1].edges(), edges!(2; 1-2));
        assert_eq!(path![1, 5, 2, 6, 3, 7, 4, 8].edges().len(), 7);
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(path![3, 2, 1].vertices(), &[1, 2, 3]);
        assert_eq!(path![1, 2, 3].vertices(), &[1, 2, 3]);
        assert_eq!(path![2, 3, 1].vertices(), &[1, 3, 2]);
    }

    #[test]
    fn canonicalize_rejects_non_permutations() {
        assert!(matches!(
            HamiltonPath::canonicalize(vec![1, 2, 2]),
            Err(Error::NotAPermutation { .. })
        ));
        assert!(matches!(
            HamiltonPath::canonicalize(vec![1, 4, 2]),
            Err(Error::NotAPermutation { .. })
        ));
        assert!(matches!(
            HamiltonPath::canonicalize(vec![0, 1]),
            Err(Error::NotAPermutation { .. })
        ));
        assert!(HamiltonPath::canonicalize(vec![1]).is_err());
    }

    #[test]
    fn window_examples() {
        let p = path![1, 5, 2, 6, 3, 7, 4, 8];
        assert_eq!(p.window(1, 4).unwrap(), edges!(8; 1-5, 2-5, 2-6, 3-6));
        assert_eq!(path![1, 2, 3, 4].window(3, 1).unwrap(), edges!(4; 3-4));
        assert!(matches!(
            path![1, 2, 3, 4].window(2, 3),
            Err(Error::OutOfRange { .. })
        ));
        assert!(path![1, 2, 3, 4].window(0, 1).is_err());
    }

    #[test]
    fn display_and_parse() {
        let p: HamiltonPath = "8,4,7,3,6,2,5,1".parse().unwrap();
        assert_eq!(p.to_string(), "1,5,2,6,3,7,4,8");
        assert!("1,x,3".parse::<HamiltonPath>().is_err());
    }

    #[test]
    fn neighbours() {
        let p = path![2, 1, 3, 4, 5];
        let mut nb: Vec<_> = p.neighbours(1).collect();
        nb.sort();
        assert_eq!(nb, vec![2, 3]);
        assert_eq!(p.neighbours(2).collect::<Vec<_>>(), vec![1]);
    }

    fn arb_perm() -> impl Strategy<Value = Vec<Vertex>> {
        (2usize..12).prop_flat_map(|n| Just((1..=n as Vertex).collect::<Vec<_>>()).prop_shuffle())
    }

    proptest! {
        #[test]
        fn canonicalize_idempotent(order in arb_perm()) {
            let once = HamiltonPath::canonicalize(order).unwrap();
            let twice = HamiltonPath::canonicalize(once.vertices().to_vec()).unwrap();
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn reversal_same_path(order in arb_perm()) {
            let fwd = HamiltonPath::canonicalize(order.clone()).unwrap();
            let rev: Vec<_> = order.iter().rev().copied().collect();
            let back = HamiltonPath::canonicalize(rev).unwrap();
            prop_assert_eq!(fwd.edges(), back.edges());
            prop_assert_eq!(fwd, back);
        }

        #[test]
        fn unit_windows_cover_edges(order in arb_perm()) {
            let p = HamiltonPath::canonicalize(order).unwrap();
            let mut union = EdgeSet::empty(p.n());
            for i in 0..p.edge_count() {
                union.union_with(&p.window(1 + i, 1).unwrap());
            }
            prop_assert_eq!(union, p.edges());
        }
    }
}
