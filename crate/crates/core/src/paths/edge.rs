use std::fmt;

use super::Vertex;
use crate::bitset::BitSet;

/// Unordered pair of distinct vertices, stored with `lo < hi`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    lo: Vertex,
    hi: Vertex,
}

impl Edge {
    /// # Panics
    /// If `u == v` or either label is 0.
    pub fn new(u: Vertex, v: Vertex) -> Self {
        assert!(
            u != v && u > 0 && v > 0,
            "edge needs two distinct positive labels"
        );
        if u < v {
            Edge { lo: u, hi: v }
        } else {
            Edge { lo: v, hi: u }
        }
    }

    pub fn lo(self) -> Vertex {
        self.lo
    }

    pub fn hi(self) -> Vertex {
        self.hi
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.lo == v || self.hi == v
    }

    /// Colex index `(hi-1)(hi-2)/2 + lo-1`. Independent of `n`; the edges
    /// of `K_n` occupy exactly `0..n(n-1)/2`.
    #[inline]
    pub fn index(self) -> usize {
        let (lo, hi) = (self.lo as usize, self.hi as usize);
        (hi - 1) * (hi - 2) / 2 + lo - 1
    }

    pub fn from_index(index: usize) -> Self {
        // largest hi with (hi-1)(hi-2)/2 <= index
        let mut hi = 2usize;
        while hi * (hi - 1) / 2 <= index {
            hi += 1;
        }
        let lo = index - (hi - 1) * (hi - 2) / 2 + 1;
        Edge {
            lo: lo as Vertex,
            hi: hi as Vertex,
        }
    }

    pub fn is_disjoint(self, other: Edge) -> bool {
        !other.contains(self.lo) && !other.contains(self.hi)
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

#[inline]
pub(crate) fn edge_capacity(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// A set of edges of `K_n`, stored as a bit set over [`Edge::index`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet {
    n: usize,
    bits: BitSet,
}

impl EdgeSet {
    pub fn empty(n: usize) -> Self {
        EdgeSet {
            n,
            bits: BitSet::new(edge_capacity(n)),
        }
    }

    pub fn complete(n: usize) -> Self {
        EdgeSet {
            n,
            bits: BitSet::full(edge_capacity(n)),
        }
    }

    /// # Panics
    /// If an endpoint exceeds `n`.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut s = Self::empty(n);
        for e in edges {
            s.insert(e);
        }
        s
    }

    #[inline]
    pub fn ambient_n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    #[inline]
    pub fn insert(&mut self, e: Edge) {
        assert!(e.hi() as usize <= self.n, "edge {e} outside K_{}", self.n);
        self.bits.insert(e.index());
    }

    pub fn remove(&mut self, e: Edge) {
        if e.hi() as usize <= self.n {
            self.bits.remove(e.index());
        }
    }

    #[inline]
    pub fn contains(&self, e: Edge) -> bool {
        self.bits.contains(e.index())
    }

    #[inline]
    pub fn contains_index(&self, index: usize) -> bool {
        self.bits.contains(index)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_disjoint(&self, other: &EdgeSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn intersection(&self, other: &EdgeSet) -> EdgeSet {
        let mut out = self.clone();
        out.bits.intersect_with(&other.bits);
        out
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        let mut out = self.clone();
        out.bits.difference_with(&other.bits);
        out
    }

    pub fn union_with(&mut self, other: &EdgeSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn iter(&self) -> impl Iterator<Item = Edge> + '_ {
        self.bits.iter().map(Edge::from_index)
    }

    /// Degree of each vertex, indexed by label (slot 0 unused).
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n + 1];
        for e in self.iter() {
            deg[e.lo() as usize] += 1;
            deg[e.hi() as usize] += 1;
        }
        deg
    }

    /// Adjacency lists indexed by label (slot 0 unused), neighbours ascending.
    pub fn adjacency(&self) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for e in self.iter() {
            adj[e.lo() as usize].push(e.hi());
            adj[e.hi() as usize].push(e.lo());
        }
        adj.iter_mut().for_each(|a| a.sort_unstable());
        adj
    }

    /// True if no two edges share an endpoint.
    pub fn is_matching(&self) -> bool {
        self.degrees().iter().all(|&d| d <= 1)
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// `edges!(n; 1-2, 2-3)` builds an [`EdgeSet`] of `K_n`.
#[macro_export]
macro_rules! edges {
    ($n:expr $(; $($u:literal - $v:literal),* $(,)?)?) => {
        $crate::paths::EdgeSet::from_edges(
            $n,
            [$($($crate::paths::Edge::new($u, $v)),*)?],
        )
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_round_trip() {
        let mut seen = Vec::new();
        for hi in 2..=20u32 {
            for lo in 1..hi {
                let e = Edge::new(lo, hi);
                assert_eq!(Edge::from_index(e.index()), e);
                seen.push(e.index());
            }
        }
        let expected: Vec<usize> = (0..edge_capacity(20)).collect();
        assert_eq!(seen, expected);
    }

    #[test]
    fn unordered_equality() {
        assert_eq!(Edge::new(3, 1), Edge::new(1, 3));
        assert_eq!(Edge::new(3, 1).index(), Edge::new(1, 3).index());
    }

    #[test]
    #[should_panic]
    fn loop_edge_panics() {
        Edge::new(2, 2);
    }

    #[test]
    fn set_queries() {
        let a = edges!(5; 1-2, 3-4);
        let b = edges!(5; 2-3, 4-5);
        assert!(a.is_disjoint(&b));
        assert!(a.is_matching());
        let mut u = a.clone();
        u.union_with(&b);
        assert_eq!(u.len(), 4);
        assert!(!u.is_matching());
        assert!(a.is_subset(&u));
        assert_eq!(u.difference(&a), b);
        assert_eq!(u.intersection(&a), a);
        assert_eq!(u.degrees(), vec![0, 1, 2, 2, 2, 1]);
        assert_eq!(EdgeSet::complete(5).len(), 10);
    }

    #[test]
    fn large_ambient_n() {
        let mut s = EdgeSet::empty(100);
        s.insert(Edge::new(99, 100));
        s.insert(Edge::new(1, 2));
        assert_eq!(
            s.iter().collect::<Vec<_>>(),
            vec![Edge::new(1, 2), Edge::new(99, 100)]
        );
    }
}
