//! Euler characteristic bookkeeping for cobordisms between torus links.
//!
//! Cobordisms are never built geometrically. Each edge records its
//! endpoints, the move that produces it and its Euler characteristic, and
//! every value can be recomputed from the move's formula.

pub mod bounds;
pub mod edge;
pub mod table;

pub use bounds::{
    affine_curve_chi, chi_d_bounds, chi_dn_bounds, local_thom_exact, local_thom_exact_n,
    signature_upper, theorem_display, BoundInterval, Branch, DnBounds, UpperMethod,
};
pub use edge::{
    band_sum_edge, compose, dd_edge, lemma_edge, lemma_edge_special, local_thom_edge,
    local_thom_edge_two,    stabilization_edge, theorem1_chain, CobordismChain, CobordismEdge, Provenance,
};
pub use table::{bounds_table, TableRow};
