use crate::error::{Error, Result};
use crate::paths::{next_permutation, EdgeSet, HamiltonPath, PathFamily, Vertex};
use crate::predicates::PairwiseCondition;

/// Vertex layout shared by the tuple-permutation families.
///
/// `[n]` splits into an ordered side `A` and a side `B` cut into equal
/// ordered tuples. A family member is determined by the order in which the
/// `B`-tuples are visited; the first `fixed_prefix_count` tuples never move.
///
/// * even `k`: `A = {1..n/2}`, `B = {n/2+1..n}` in tuples of size `k/2`;
///   the path alternates `a_1, b_1, a_2, b_2, ...`.
/// * odd `k`: `A = {1..a}` with `a = floor(k/2) n/k`, cut into
///   `floor(k/2)`-tuples; `B = {a+1..n}` in `ceil(k/2)`-tuples; the path runs
///   block by block, `b_1, y_1, b_2, ..., y_s, b_t`, jumping from the last
///   `b` of one block straight to the first `b` of the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleScheme {
    n: usize,
    k: usize,
    a_side: Vec<Vertex>,
    a_tuples: Vec<Vec<Vertex>>,
    b_tuples: Vec<Vec<Vertex>>,
    fixed_prefix_count: usize,
}

fn check_common(n: usize, k: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::bad(format!(
            "tuple constructions need k >= 3, got k={k}"
        )));
    }
    if !n.is_multiple_of(k) {
        return Err(Error::bad(format!("n={n} is not a multiple of k={k}")));
    }
    if n / k < 2 {
        return Err(Error::bad(format!("need n/k >= 2, got n={n} k={k}")));
    }
    Ok(())
}

fn chunks(start: usize, end: usize, size: usize) -> Vec<Vec<Vertex>> {
    (start..=end)
        .map(|v| v as Vertex)
        .collect::<Vec<_>>()
        .chunks(size)
        .map(<[Vertex]>::to_vec)
        .collect()
}

impl TupleScheme {
    pub fn even(n: usize, k: usize) -> Result<Self> {
        check_common(n, k)?;
        if !k.is_multiple_of(2) {
            return Err(Error::bad(format!(
                "even construction needs even k, got {k}"
            )));
        }
        let half = n / 2;
        Ok(TupleScheme {
            n,
            k,
            a_side: (1..=half as Vertex).collect(),
            a_tuples: Vec::new(),
            b_tuples: chunks(half + 1, n, k / 2),
            fixed_prefix_count: 0,
        })
    }

    pub fn odd(n: usize, k: usize) -> Result<Self> {
        check_common(n, k)?;
        if k.is_multiple_of(2) {
            return Err(Error::bad(format!("odd construction needs odd k, got {k}")));
        }
        let (s, t) = (k / 2, k.div_ceil(2));
        let a = s * n / k;
        Ok(TupleScheme {
            n,
            k,
            a_side: (1..=a as Vertex).collect(),
            a_tuples: chunks(1, a, s),
            b_tuples: chunks(a + 1, n, t),
            fixed_prefix_count: 1,
        })
    }

    /// Picks the even or odd layout by the parity of `k`.
    pub fn for_params(n: usize, k: usize) -> Result<Self> {
        if k.is_multiple_of(2) {
            Self::even(n, k)
        } else {
            Self::odd(n, k)
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_even(&self) -> bool {
        self.k.is_multiple_of(2)
    }

    pub fn a_side(&self) -> &[Vertex] {
        &self.a_side
    }

    pub fn b_tuples(&self) -> &[Vec<Vertex>] {
        &self.b_tuples
    }

    pub fn fixed_prefix_count(&self) -> usize {
        self.fixed_prefix_count
    }

    /// Admissible tuple orders (slot -> tuple index) in lexicographic order.
    pub fn permutations(&self) -> Vec<Vec<usize>> {
        let m = self.b_tuples.len();
        let fixed = self.fixed_prefix_count;
        let mut tail: Vec<usize> = (fixed..m).collect();
        let mut out = Vec::new();
        loop {
            out.push((0..fixed).chain(tail.iter().copied()).collect());
            if !next_permutation(&mut tail) {
                break;
            }
        }
        out
    }

    fn check_permutation(&self, perm: &[usize]) -> Result<()> {
        let m = self.b_tuples.len();
        let mut seen = vec![false; m];
        if perm.len() != m {
            return Err(Error::bad(format!(
                "tuple order has {} slots, expected {m}",
                perm.len()
            )));
        }
        for (slot, &t) in perm.iter().enumerate() {
            if t >= m || seen[t] {
                return Err(Error::bad(format!(
                    "tuple order {perm:?} is not a permutation"
                )));
            }
            if slot < self.fixed_prefix_count && t != slot {
                return Err(Error::bad(format!("tuple {slot} is fixed in this scheme")));
            }
            seen[t] = true;
        }
        Ok(())
    }

    /// The vertex order defined by a tuple order (already canonical: it
    /// starts at the smallest label that can ever open it).
    pub fn order(&self, perm: &[usize]) -> Result<Vec<Vertex>> {
        self.check_permutation(perm)?;
        let mut order = Vec::with_capacity(self.n);
        if self.is_even() {
            let b = perm.iter().flat_map(|&t| self.b_tuples[t].iter().copied());
            for (a, b) in self.a_side.iter().copied().zip(b) {
                order.push(a);
                order.push(b);
            }
        } else {
            for (slot, &t) in perm.iter().enumerate() {
                let bs = &self.b_tuples[t];
                let ys = &self.a_tuples[slot];
                for (i, &b) in bs.iter().enumerate() {
                    order.push(b);
                    if let Some(&y) = ys.get(i) {
                        order.push(y);
                    }
                }
            }
        }
        debug_assert_eq!(order.len(), self.n);
        Ok(order)
    }

    pub fn path(&self, perm: &[usize]) -> Result<HamiltonPath> {
        HamiltonPath::canonicalize(self.order(perm)?)
    }

    /// All members, in lexicographic order of their tuple orders.
    pub fn family(&self) -> Result<PathFamily> {
        let members = self
            .permutations()
            .iter()
            .map(|perm| self.path(perm))
            .collect::<Result<Vec<_>>>()?;
        PathFamily::new(self.n, PairwiseCondition::PrivateSubpath(self.k), members)
    }
}

/// The even-`k` family: `(n/k)!` paths with pairwise private `k`-windows.
pub fn build_even(n: usize, k: usize) -> Result<PathFamily> {
    TupleScheme::even(n, k)?.family()
}

/// The odd-`k` family: `(n/k - 1)!` paths with pairwise private `k`-windows.
pub fn build_odd(n: usize, k: usize) -> Result<PathFamily> {
    TupleScheme::odd(n, k)?.family()
}

pub fn build_construction(n: usize, k: usize) -> Result<PathFamily> {
    TupleScheme::for_params(n, k)?.family()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    /// Even `k`: the `k` edges incident to the first differing tuple.
    AroundTuple,
    /// Odd `k`: the block of the first differing tuple plus the jump to the
    /// next tuple's first vertex.
    AfterTuple,
    /// Odd `k`: the jump into the first differing tuple plus its block. Used
    /// when the tuple following it is the same in both orders.
    IntoTuple,
}

/// A window of `path`, the member built from the first tuple order, that
/// shares no edge with the member built from the second.
#[derive(Clone, Debug)]
pub struct WitnessWindow {
    pub path: HamiltonPath,
    /// 1-based edge position in `path` as stored (canonical orientation).
    pub start: usize,
    pub len: usize,
    pub edges: EdgeSet,
    pub kind: WitnessKind,
}

impl WitnessWindow {
    /// Whether every window edge is absent from `other`.
    pub fn is_private_against(&self, other: &HamiltonPath) -> bool {
        self.edges.is_disjoint(&other.edges())
    }
}

/// Private window of `scheme.path(first)` against `scheme.path(second)`,
/// located at the first slot where the two tuple orders differ.
pub fn witness_window(
    scheme: &TupleScheme,
    first: &[usize],
    second: &[usize],
) -> Result<WitnessWindow> {
    scheme.check_permutation(first)?;
    scheme.check_permutation(second)?;
    let slot = first
        .iter()
        .zip(second)
        .position(|(a, b)| a != b)
        .ok_or(Error::NoDifference)?;
    let k = scheme.k;
    let path = scheme.path(first)?;
    // `order` equals the canonical orientation for these layouts, so
    // positions carry over unchanged.
    debug_assert_eq!(path.vertices(), scheme.order(first)?.as_slice());
    let make = |start: usize, kind: WitnessKind| -> Result<WitnessWindow> {
        Ok(WitnessWindow {
            edges: path.window(start, k)?,
            path: path.clone(),
            start,
            len: k,
            kind,
        })
    };
    if scheme.is_even() {
        let t = k / 2;
        return make(2 * slot * t + 1, WitnessKind::AroundTuple);
    }
    let other = scheme.path(second)?;
    let after = make(slot * k + 1, WitnessKind::AfterTuple)?;
    if after.is_private_against(&other) {
        return Ok(after);
    }
    // slot >= 1 because slot 0 is fixed in the odd layout
    make(slot * k, WitnessKind::IntoTuple)
}
