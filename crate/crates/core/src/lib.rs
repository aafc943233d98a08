//! Finite permutation groups, their subgroup lattices, and checkers for
//! chain subnormality, chain abnormality and the E_U classification.

pub mod arith;
pub mod builders;
pub mod corpus;
pub mod coset;
pub mod error;
pub mod export;
pub mod formations;
pub mod group;
pub mod lattice;
pub mod lemmas;
pub mod perm;
pub mod subnorm;
pub mod theorems;

pub use coset::CosetAction;
pub use error::{GroupError, Result};
pub use group::PermGroup;
pub use lattice::{NodeId, SubgroupLattice};
pub use perm::{parse_permutation, Permutation};
