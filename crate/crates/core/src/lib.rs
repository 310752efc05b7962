//! Absolute-order intervals, factorization posets, weighted factorization
//! complexes, graded topological posets and degree-d noncrossing partitions.

pub mod error;
pub mod export;
pub mod factor_posets;
pub mod labels;
pub mod marked_group;
pub mod ncs;
pub mod poset;
pub mod registry;
pub mod session;
pub mod top_poset;
pub mod verify;
pub mod weighted_complexes;

pub use error::{Error, Result};
pub use marked_group::{Group, Limits, MarkedGroup, Permutation, SetPartition};
pub use poset::GradedPoset;
pub use registry::Registry;
