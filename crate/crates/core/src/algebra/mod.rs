//! Exact polynomial algebra over the rationals.

pub mod gcd;
pub mod linalg;
pub mod local;
pub mod multipoly;
pub mod parse;
pub mod rational;
pub mod resultant;
pub mod unipoly;

pub use gcd::{gcd, squarefree_check, SquarefreeCertificate};
pub use local::{
    local_algebra_dimension, local_algebra_dimension_with_budget,
    local_intersection_certificate, local_intersection_multiplicity, IntersectionCertificate,
};
pub use multipoly::MultiPoly;
pub use rational::{frac, rat, Rational};
pub use resultant::{resultant, resultant_bareiss};
pub use unipoly::UniPoly;
