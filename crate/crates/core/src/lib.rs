//! k-ordered Hamiltonian cycles in powers of connected graphs: constructions
//! that emit checkable certificates, an independent verifier, and an
//! exhaustive oracle for small instances.

pub mod coloring;
pub mod dispatch;
pub mod error;
pub mod extension;
pub mod families;
pub mod four;
pub mod gen;
pub mod general;
pub mod graph;
pub mod ham_paths;
pub mod oracle;
pub mod par;
pub mod verify;
pub mod witness;

pub use error::{Error, Result};
