//! Partitions, tableaux, Specht modules, Jucys–Murphy elements and
//! hyperoctahedral cosets.

pub mod cosets;
pub mod murphy;
pub mod partition;
pub mod perm;
pub mod specht;
pub mod tableau;

pub use cosets::{coset_count, enumerate_group, CosetError, CosetTable};
pub use murphy::{
    jm_matrices, murphy_basis, murphy_basis_of, reversal, JmVariant, MurphyBasis, MurphyError,
};
pub use partition::{factorial, specht_dimension, weyl_dimension, Partition, PartitionError};
pub use perm::{BcGenerator, Permutation, SignedPermutation};
pub use specht::{SpechtModule, Tabloid};
pub use tableau::{enumerate_standard_tableaux, StandardTableau};
