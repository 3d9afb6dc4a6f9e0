//! Lipschitz concordance invariants, the inequalities they must satisfy on
//! engine cobordisms, and estimators for the smooth degree `d_sm(n)`.

mod checks;
mod constants;
mod dsm;
mod lipschitz;

pub use checks::{
    chain_genus, check_lipschitz_on_chain, corollary13_check, corollary13_grid, eq4_check,
    knotify, Cor13Report, Eq4Report, LipschitzReport,
};
pub use constants::{asymptotic_constant, AsymptoticConstant, ASYMPTOTIC_CONSTANTS};
pub use dsm::{dsm_lower, dsm_lower_monotone, obs_b1_bound};
pub use lipschitz::{sigma_half, LipschitzInvariant, SignatureInvariant, TableInvariant};

/// Largest `d` whose `T(d,d+1)` signature is computed without opting in to
/// slow checks.
pub const FAST_D_MAX: i64 = 20;

/// Slow checks are enabled by `COBDIST_SLOW=1`.
pub fn slow_enabled() -> bool {
    std::env::var("COBDIST_SLOW").is_ok_and(|v| v == "1")
}
