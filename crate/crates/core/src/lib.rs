//! Hamilton path families of `K_n` with lasting separation.
//!
//! Two Hamilton paths of the complete graph are *separated* at level `k`
//! when one of them has `k` consecutive edges none of which lies on the
//! other. This crate
//!
//! * builds explicit families with pairwise separation ([`constructions`]),
//! * checks separation predicates exactly ([`predicates`]),
//! * evaluates the known lower and upper bounds in exact arithmetic
//!   ([`bounds`]),
//! * computes exact optima for small `n` by maximum-clique search over the
//!   compatibility graph of all paths ([`search`]).
//!
//! Runnable examples live in `examples/`; the `lasting-sep` binary exposes
//! the same capabilities on the command line ([`cli`]).
//!
//! ```
//! use lasting_sep::{constructions, predicates};
//!
//! let family = constructions::build_even(8, 4).unwrap();
//! assert_eq!(family.len(), 2);
//! assert!(predicates::verify_family(&family).is_valid());
//! ```

pub mod bitset;
pub mod bounds;
pub mod cli;
pub mod constructions;
mod error;
pub mod paths;
pub mod predicates;
pub mod search;

pub use error::{Error, Result};
pub use paths::{enumerate_paths, Edge, EdgeSet, HamiltonPath, PathFamily, Vertex};
pub use predicates::PairwiseCondition;
