//! Inscribed Tverberg-type partitions for orbit polytopes.

pub mod error;
pub mod group;
pub mod linalg;
pub mod rep;

pub use error::{Error, Result};
pub use group::FiniteGroup;
pub use rep::{Representation, SubspaceBasis, SubspaceName};
