//! Hirano's sextic-type family
//! `F = (x^m + y^m + z^m)^2 - 4(x^m y^m + y^m z^m + z^m x^m)` and a
//! certificate for its singular points.

pub mod audit;
pub mod curve;
pub mod locus;
pub mod point;
pub mod report;

pub use audit::{lemma_chi_audit, AuditRecord, AuditStep};
pub use curve::{hirano_polynomial, ProjectiveCurve};
pub use locus::{singular_locus, LineCertificate, SingularLocus};
pub use point::{classify_a, hessian_corank, local_equation, milnor_at, SingularPointReport};
pub use report::{singular_genus, verify_hirano, HiranoReport};
