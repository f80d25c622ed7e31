//! Generalized Turán numbers `ex(n, H, F)` with a focus on generalized
//! books `B_{r,s}`: graph constructions, exact copy counting, freeness
//! checks, closed-form predictions, symmetrization and an exhaustive oracle
//! for small `n`.

pub mod bitset;
pub mod canon;
mod cliques;
pub mod construct;
pub mod count;
pub mod error;
pub mod formula;
pub mod free;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod parse;
pub mod symmetrize;
pub mod verify;

pub use canon::{are_isomorphic, canonical_form, CanonicalForm};
pub use count::{count_cliques, count_copies, CopyCount};
pub use error::{Error, Result};
pub use free::{contains, ForbiddenPattern};
pub use graph::Graph;
