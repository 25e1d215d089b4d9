//! Exhaustive checks of the edge classes behind the upper bounds: paths
//! sharing a perfect matching (or a skeleton) never separate each other.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use super::{even_edge_matching, odd_edge_matching, skeleton};
use crate::error::{Error, Result};
use crate::paths::{enumerate_paths, EdgeSet, HamiltonPath};
use crate::predicates::{PairwiseCondition, PreparedPath};

/// Largest `n` for the exhaustive class checks (`8!/2` paths).
pub const CLASS_CHECK_MAX_N: usize = 8;

#[derive(Clone, Debug, Serialize)]
pub struct ClassCheck {
    pub n: usize,
    pub k: usize,
    /// Number of distinct class keys seen.
    pub classes: usize,
    pub pairs_checked: u64,
    /// A same-class pair that does separate, if any.
    #[serde(serialize_with = "serialize_pair")]
    pub counterexample: Option<(HamiltonPath, HamiltonPath)>,
}

impl ClassCheck {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn serialize_pair<S: serde::Serializer>(
    pair: &Option<(HamiltonPath, HamiltonPath)>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match pair {
        Some((p, q)) => s.collect_seq([p.to_string(), q.to_string()]),
        None => s.serialize_none(),
    }
}

fn check_classes(n: usize, k: usize, key: impl Fn(&HamiltonPath) -> EdgeSet) -> ClassCheck {
    let mut classes: HashMap<EdgeSet, Vec<HamiltonPath>> = HashMap::new();
    for p in enumerate_paths(n) {
        classes.entry(key(&p)).or_default().push(p);
    }
    let cond = PairwiseCondition::PrivateSubpath(k);
    let mut pairs_checked = 0u64;
    let mut counterexample = None;
    let mut keys: Vec<&EdgeSet> = classes.keys().collect();
    keys.sort();
    'outer: for key in keys {
        let members = &classes[key];
        let prepared: Vec<PreparedPath<'_>> = members.iter().map(PreparedPath::new).collect();
        for i in 0..prepared.len() {
            for j in i + 1..prepared.len() {
                pairs_checked += 1;
                if cond.holds_prepared(&prepared[i], &prepared[j]) {
                    counterexample = Some((members[i].clone(), members[j].clone()));
                    break 'outer;
                }
            }
        }
    }
    ClassCheck {
        n,
        k,
        classes: classes.len(),
        pairs_checked,
        counterexample,
    }
}

/// Every two distinct paths with the same odd-position perfect matching
/// lack a private 2-subpath. Even `n` only.
pub fn check_matching_classes(n: usize) -> Result<ClassCheck> {
    if !n.is_multiple_of(2) || !(2..=CLASS_CHECK_MAX_N).contains(&n) {
        return Err(Error::bad(format!(
            "matching classes need even 2 <= n <= {CLASS_CHECK_MAX_N}"
        )));
    }
    Ok(check_classes(n, 2, odd_edge_matching))
}

/// Every two distinct paths with the same skeleton lack a private
/// `k`-subpath.
pub fn check_skeleton_classes(n: usize, k: usize) -> Result<ClassCheck> {
    if n > CLASS_CHECK_MAX_N || k < 2 || !n.is_multiple_of(k) {
        return Err(Error::bad(format!(
            "skeleton classes need k >= 2, k | n and n <= {CLASS_CHECK_MAX_N}"
        )));
    }
    Ok(check_classes(n, k, |p| {
        skeleton(p, k).expect("k divides n")
    }))
}

/// Distinct (near-)perfect matchings carried by Hamilton paths of `K_n`: the
/// odd-position matchings, plus the even-position ones when `n` is odd.
pub fn distinct_path_matchings(n: usize) -> Result<usize> {
    if !(2..=CLASS_CHECK_MAX_N).contains(&n) {
        return Err(Error::bad(format!(
            "matching enumeration needs 2 <= n <= {CLASS_CHECK_MAX_N}"
        )));
    }
    let mut seen = HashSet::new();
    for p in enumerate_paths(n) {
        seen.insert(odd_edge_matching(&p));
        if n % 2 == 1 {
            seen.insert(even_edge_matching(&p));
        }
    }
    Ok(seen.len())
}
