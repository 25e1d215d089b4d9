use std::collections::HashMap;

use super::HamiltonPath;
use crate::error::{Error, Result};
use crate::predicates::PairwiseCondition;

/// Distinct canonical Hamilton paths of `K_n` claimed to satisfy `condition`
/// pairwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathFamily {
    n: usize,
    condition: PairwiseCondition,
    members: Vec<HamiltonPath>,
}

impl PathFamily {
    pub fn new(n: usize, condition: PairwiseCondition, members: Vec<HamiltonPath>) -> Result<Self> {
        condition.validate_for_paths(n)?;
        let mut seen: HashMap<&HamiltonPath, usize> = HashMap::new();
        for (i, p) in members.iter().enumerate() {
            if p.n() != n {
                return Err(Error::MismatchedN {
                    left: n,
                    right: p.n(),
                });
            }
            if let Some(&first) = seen.get(p) {
                return Err(Error::DuplicateMember {
                    line: i + 1,
                    first: first + 1,
                });
            }
            seen.insert(p, i);
        }
        Ok(PathFamily {
            n,
            condition,
            members,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The separation parameter carried in the family header.
    pub fn k(&self) -> usize {
        self.condition.header_k()
    }

    pub fn condition(&self) -> PairwiseCondition {
        self.condition
    }

    pub fn members(&self) -> &[HamiltonPath] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn into_members(self) -> Vec<HamiltonPath> {
        self.members
    }
}
