//! Cobordism distance between torus links: exact algebra, Seifert forms,
//! cobordism bounds and the Hirano curve verifier.

pub mod algebra;
pub mod cobordism;
pub mod error;
pub mod hirano;
pub mod invariants;
pub mod torus;

pub use error::{Error, Result};
