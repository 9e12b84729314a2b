//! Conjugation representations of the symmetric group on nilpotent partial
//! transformations, decomposed through rooted forests.

pub mod character;
pub mod counting;
pub mod error;
pub mod forest;
pub mod forest_rep;
pub mod odun;
pub mod oracle;
pub mod partition;
pub mod symfunc;
pub mod tables;
pub mod transform;
pub mod verify;

pub use error::{Error, Result};
pub use odun::{Odun, RootedTree};
pub use partition::Partition;
pub use transform::{PartialTransformation, Permutation};
