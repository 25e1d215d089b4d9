use crate::error::{Error, Result};
use crate::predicates::VertexSubset;

/// Largest word length accepted by [`gv_family`] (the scan visits `2^n` words).
pub const GV_MAX_N: usize = 24;

/// Binary code over `[n]` whose words are read as vertex subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeFamily {
    n: usize,
    min_distance: usize,
    words: Vec<VertexSubset>,
}

impl CodeFamily {
    /// Wraps parsed words without re-checking the distance claim.
    pub fn from_parts(n: usize, min_distance: usize, words: Vec<VertexSubset>) -> Self {
        CodeFamily {
            n,
            min_distance,
            words,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn min_distance(&self) -> usize {
        self.min_distance
    }

    pub fn words(&self) -> &[VertexSubset] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Smallest pairwise Hamming distance, `None` below two words.
    pub fn observed_min_distance(&self) -> Option<usize> {
        let w = &self.words;
        (0..w.len())
            .flat_map(|i| (i + 1..w.len()).map(move |j| w[i].hamming(&w[j])))
            .min()
    }
}

/// Greedy lexicode: scan all `n`-bit words of weight at least `min_weight`
/// in lexicographic order of their `0`/`1` strings, keeping a word when it
/// is at distance at least `d` from every word already kept.
///
/// With `min_weight = 0` every word ends up within distance `d-1` of a kept
/// word, so the result has at least `2^n / sum_{i<d} C(n,i)` words.
pub fn gv_family(n: usize, d: usize, min_weight: usize) -> Result<CodeFamily> {
    if n == 0 || n > GV_MAX_N {
        return Err(Error::bad(format!(
            "gv needs 1 <= n <= {GV_MAX_N}, got {n}"
        )));
    }
    if d == 0 || d > n {
        return Err(Error::bad(format!("gv needs 1 <= d <= n, got d={d} n={n}")));
    }
    let mut kept: Vec<u64> = Vec::new();
    for x in 0u64..1 << n {
        // string position 0 is the most significant bit of x and is vertex 1
        let bits = x.reverse_bits() >> (64 - n);
        if (bits.count_ones() as usize) < min_weight {
            continue;
        }
        if kept.iter().all(|&w| (w ^ bits).count_ones() as usize >= d) {
            kept.push(bits);
        }
    }
    let words = kept
        .into_iter()
        .map(|b| VertexSubset::from_bits(n, b))
        .collect::<Result<Vec<_>>>()?;
    Ok(CodeFamily {
        n,
        min_distance: d,
        words,
    })
}
