//! Partitions, Jacobi-Trudi determinants in quotient variables and in
//! explicit alphabets, and expansion into the Δ basis.

pub mod delta;
pub mod expand;
pub mod identities;
pub mod partition;
pub mod quotient;

pub use delta::{delta_alphabet, delta_quotient, delta_raw, straighten};
pub use expand::{schur_expand, Kostka, SchurContext, SchurError, SchurExpansion};
pub use identities::{factorization_identity, gustafson_milne_identity};
pub use partition::{partitions, Partition, PartitionError};
pub use quotient::{c_values, rho, rho_c};
