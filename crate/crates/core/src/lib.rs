//! Exact counts of finite-index subgroups, and of their conjugacy classes, in
//! free groups `F_r`, orientable surface groups `Φ_g` and non-orientable
//! surface groups `Λ_p`.
//!
//! Equivalently: the number of connected n-fold coverings (up to equivalence)
//! of a bordered surface, a closed orientable surface and a closed
//! non-orientable surface.
//!
//! Every formula path is paired with a brute-force check in [`oracle`], which
//! enumerates permutation representations directly.

pub mod abelian;
pub mod census;
pub mod characters;
pub mod classes;
mod error;
pub mod numtheory;
pub mod oracle;

pub use abelian::{epi_count, hom_count, HomologySignature};
pub use census::{count_subgroups, covering_fiber, FiberClass, Family, GroupKind};
pub use characters::{beta, partitions, Partition};
pub use classes::{census_table, count_classes, count_classes_generic, CensusRow, CensusTable};
pub use error::{Error, Result};

pub use num_bigint::BigUint;
