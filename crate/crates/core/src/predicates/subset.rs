use std::fmt;

use crate::error::{Error, Result};
use crate::paths::Vertex;

/// Subset of `[n]` as an `n`-bit characteristic vector (bit `v-1` for vertex
/// `v`). Supports `n <= 64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSubset {
    n: usize,
    bits: u64,
}

impl VertexSubset {
    pub const MAX_N: usize = 64;

    pub fn from_bits(n: usize, bits: u64) -> Result<Self> {
        if n > Self::MAX_N {
            return Err(Error::bad(format!(
                "vertex subsets support n <= 64, got {n}"
            )));
        }
        if n < 64 && bits >> n != 0 {
            return Err(Error::bad(format!("bits beyond vertex {n}")));
        }
        Ok(VertexSubset { n, bits })
    }

    pub fn from_members(n: usize, members: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let mut bits = 0u64;
        for v in members {
            if v == 0 || v as usize > n {
                return Err(Error::bad(format!("vertex {v} outside [{n}]")));
            }
            bits |= 1 << (v - 1);
        }
        Self::from_bits(n, bits)
    }

    /// Parses an `n`-character `0`/`1` string; character `i` is vertex `i+1`.
    pub fn from_bit_string(s: &str) -> Result<Self> {
        let mut bits = 0u64;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' if i < 64 => bits |= 1 << i,
                _ => return Err(Error::bad(format!("bad character {c:?} in code word"))),
            }
        }
        Self::from_bits(s.chars().count(), bits)
    }

    pub fn to_bit_string(&self) -> String {
        (0..self.n)
            .map(|i| if self.bits >> i & 1 == 1 { '1' } else { '0' })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v >= 1 && (v as usize) <= self.n && self.bits >> (v - 1) & 1 == 1
    }

    pub fn members(&self) -> impl Iterator<Item = Vertex> + '_ {
        (1..=self.n as Vertex).filter(|&v| self.contains(v))
    }

    /// `|self \ other|`
    pub fn difference_len(&self, other: &VertexSubset) -> usize {
        (self.bits & !other.bits).count_ones() as usize
    }

    pub fn hamming(&self, other: &VertexSubset) -> usize {
        (self.bits ^ other.bits).count_ones() as usize
    }
}

impl fmt::Debug for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members()).finish()
    }
}

/// Whether the cliques induced on `s1` and `s2` are separated by a triangle
/// lying in one clique and sharing no edge with the other.
///
/// A triangle `{a,b,c} ⊆ s1` shares no edge with the clique on `s2` iff at
/// most one of its vertices is in `s2`, so such a triangle exists iff
/// `|s1| >= 3` and `|s1 \ s2| >= 2`.
pub fn private_triangle(s1: &VertexSubset, s2: &VertexSubset) -> bool {
    let one_sided = |a: &VertexSubset, b: &VertexSubset| a.len() >= 3 && a.difference_len(b) >= 2;
    one_sided(s1, s2) || one_sided(s2, s1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, m: &[Vertex]) -> VertexSubset {
        VertexSubset::from_members(n, m.iter().copied()).unwrap()
    }

    /// Enumerates triangles of each clique and looks for one with no edge
    /// inside the other set.
    fn triangle_oracle(s1: &VertexSubset, s2: &VertexSubset) -> bool {
        let private_in = |a: &VertexSubset, b: &VertexSubset| {
            let m: Vec<Vertex> = a.members().collect();
            for i in 0..m.len() {
                for j in i + 1..m.len() {
                    for l in j + 1..m.len() {
                        let tri = [(m[i], m[j]), (m[i], m[l]), (m[j], m[l])];
                        if tri.iter().all(|&(x, y)| !(b.contains(x) && b.contains(y))) {
                            return true;
                        }
                    }
                }
            }
            false
        };
        private_in(s1, s2) || private_in(s2, s1)
    }

    #[test]
    fn examples() {
        assert!(private_triangle(&set(6, &[1, 2, 3]), &set(6, &[4, 5, 6])));
        let s = set(6, &[1, 3, 5, 6]);
        assert!(!private_triangle(&s, &s));
        assert!(!private_triangle(
            &set(4, &[1, 2, 3, 4]),
            &set(4, &[1, 2, 3])
        ));
        assert!(!triangle_oracle(
            &set(4, &[1, 2, 3, 4]),
            &set(4, &[1, 2, 3])
        ));
    }

    #[test]
    fn closed_form_matches_enumeration_on_all_subsets_of_six() {
        for a in 0u64..64 {
            for b in 0u64..64 {
                let s1 = VertexSubset::from_bits(6, a).unwrap();
                let s2 = VertexSubset::from_bits(6, b).unwrap();
                assert_eq!(
                    private_triangle(&s1, &s2),
                    triangle_oracle(&s1, &s2),
                    "{s1:?} {s2:?}"
                );
                assert_eq!(private_triangle(&s1, &s2), private_triangle(&s2, &s1));
            }
        }
    }

    #[test]
    fn bit_strings() {
        let s = VertexSubset::from_bit_string("1010").unwrap();
        assert_eq!(s.members().collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(s.to_bit_string(), "1010");
        assert!(VertexSubset::from_bit_string("10a").is_err());
        assert!(VertexSubset::from_members(3, [4]).is_err());
        assert!(VertexSubset::from_bits(3, 0b1000).is_err());
        assert_eq!(
            s.hamming(&VertexSubset::from_bit_string("0110").unwrap()),
            2
        );
    }
}
