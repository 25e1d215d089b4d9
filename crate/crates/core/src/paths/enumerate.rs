use super::{HamiltonPath, Vertex};

/// Rearranges `items` into the lexicographically next permutation.
/// Returns `false` (leaving `items` sorted ascending) after the last one.
pub fn next_permutation<T: Ord>(items: &mut [T]) -> bool {
    if items.len() < 2 {
        return false;
    }
    let mut i = items.len() - 1;
    while i > 0 && items[i - 1] >= items[i] {
        i -= 1;
    }
    if i == 0 {
        items.reverse();
        return false;
    }
    let mut j = items.len() - 1;
    while items[j] <= items[i - 1] {
        j -= 1;
    }
    items.swap(i - 1, j);
    items[i..].reverse();
    true
}

/// Number of canonical Hamilton paths of `K_n`, `n!/2`.
pub fn path_count(n: usize) -> u128 {
    if n < 2 {
        return 0;
    }
    (3..=n as u128).product::<u128>()
}

/// Every canonical Hamilton path of `K_n` in lexicographic order.
///
/// # Panics
/// If `n < 2`.
pub fn enumerate_paths(n: usize) -> CanonicalPaths {
    assert!(n >= 2, "Hamilton paths need n >= 2");
    CanonicalPaths {
        n,
        order: Vec::new(),
        used: vec![false; n + 1],
        started: false,
    }
}

/// Depth-first generator of sequences with `first < last`.
///
/// Canonical forms are produced directly: a prefix is only extended while
/// some unused vertex larger than the first one remains for the final slot.
pub struct CanonicalPaths {
    n: usize,
    order: Vec<Vertex>,
    used: Vec<bool>,
    started: bool,
}

impl CanonicalPaths {
    fn max_unused_except(&self, skip: Vertex) -> Option<Vertex> {
        (1..=self.n as Vertex)
            .rev()
            .find(|&v| v != skip && !self.used[v as usize])
    }

    /// Whether `v` may be placed at depth `self.order.len()`.
    fn admissible(&self, v: Vertex) -> bool {
        let depth = self.order.len();
        if depth == 0 {
            return (v as usize) < self.n;
        }
        let first = self.order[0];
        if depth == self.n - 1 {
            return v > first;
        }
        self.max_unused_except(v).is_some_and(|m| m > first)
    }

    fn place(&mut self, v: Vertex) {
        self.used[v as usize] = true;
        self.order.push(v);
    }

    /// Extends the current prefix with the smallest admissible choices.
    fn fill(&mut self) {
        while self.order.len() < self.n {
            let v = (1..=self.n as Vertex)
                .find(|&v| !self.used[v as usize] && self.admissible(v))
                .expect("admissible prefix always has a completion");
            self.place(v);
        }
    }
}

impl Iterator for CanonicalPaths {
    type Item = HamiltonPath;

    fn next(&mut self) -> Option<HamiltonPath> {
        if !self.started {
            self.started = true;
            self.fill();
            return Some(HamiltonPath {
                order: self.order.clone(),
            });
        }
        while let Some(last) = self.order.pop() {
            self.used[last as usize] = false;
            let next = (last + 1..=self.n as Vertex)
                .find(|&v| !self.used[v as usize] && self.admissible(v));
            if let Some(v) = next {
                self.place(v);
                self.fill();
                return Some(HamiltonPath {
                    order: self.order.clone(),
                });
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn counts() {
        assert_eq!(enumerate_paths(2).count(), 1);
        assert_eq!(enumerate_paths(4).count(), 12);
        assert_eq!(enumerate_paths(6).count(), 360);
        assert_eq!(path_count(6), 360);
    }

    #[test]
    fn exhaustive_up_to_seven() {
        for n in 2..=7 {
            let all: Vec<HamiltonPath> = enumerate_paths(n).collect();
            assert_eq!(all.len() as u128, path_count(n), "n={n}");
            assert!(
                all.windows(2).all(|w| w[0] < w[1]),
                "not strictly lexicographic at n={n}"
            );
            let distinct: HashSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            for p in &all {
                let again = HamiltonPath::canonicalize(p.vertices().to_vec()).unwrap();
                assert_eq!(&again, p);
            }
        }
    }

    #[test]
    fn matches_filtered_permutations() {
        let n = 5;
        let mut perm: Vec<Vertex> = (1..=n as Vertex).collect();
        let mut filtered = Vec::new();
        loop {
            if perm[0] < perm[n - 1] {
                filtered.push(perm.clone());
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        let direct: Vec<Vec<Vertex>> = enumerate_paths(n).map(|p| p.vertices().to_vec()).collect();
        assert_eq!(direct, filtered);
    }

    #[test]
    fn next_permutation_cycles() {
        let mut v = vec![1, 2, 3];
        let mut seen = vec![v.clone()];
        while next_permutation(&mut v) {
            seen.push(v.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(v, vec![1, 2, 3]);
    }
}
