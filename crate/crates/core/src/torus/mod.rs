//! Torus links, their Seifert forms and signatures.

pub mod link;
pub mod seifert;
pub mod signature;

pub use link::TorusLink;
pub use seifert::{
    positive_braid_signature, seifert_matrix_positive_braid, torus_braid_word, Convention,
    SeifertMatrix,
};
pub use signature::{fiber_b1, g4, signature, signature_from_braid, signature_oracle};
