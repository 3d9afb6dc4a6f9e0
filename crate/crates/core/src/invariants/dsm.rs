use num_integer::Roots;
use num_traits::{One, Signed};

use crate::algebra::rational::{frac, Rational};
use crate::error::{Error, Result};

/// `(d-1)^2 + floor((d^2-1)/2)`, which equals `-sigma(T(d,d)) + (d-1)^2`.
fn signature_room(d: u64) -> u128 {
    let d = u128::from(d);
    (d - 1) * (d - 1) + (d * d - 1) / 2
}

/// Least `d >= 1` with `2n <= (d-1)^2 + floor((d^2-1)/2)`.
///
/// A cobordism `T(d,d) -> T(2,n+1)` of Euler characteristic `n - (d-1)^2`
/// cannot beat the signature bound, so this is a lower bound for the
/// smallest such `d`. It is not claimed to be attained.
pub fn dsm_lower(n: u64) -> u64 {
    let target = 2 * u128::from(n);
    // the room is below 3d^2/2, so every d <= sqrt(4n/3) fails
    let mut d = ((4 * u128::from(n)) / 3).sqrt().max(1) as u64;
    while signature_room(d) < target {
        d += 1;
    }
    d
}

/// `(1 + c')/2`, the bound on `liminf n/d_sm(n)^2` produced by an invariant
/// whose normalized value on `T(d,d+1)` has `liminf` equal to `c'`.
pub fn obs_b1_bound(c_prime: &Rational) -> Result<Rational> {
    if c_prime.is_negative() || *c_prime > Rational::one() {
        return Err(Error::Usage(format!(
            "c' must lie in [0, 1], got {c_prime}"
        )));
    }
    Ok((Rational::one() + c_prime) * frac(1, 2))
}

/// True if `dsm_lower` is nondecreasing on `0..=n_max`.
pub fn dsm_lower_monotone(n_max: u64) -> bool {
    let mut prev = 0;
    (0..=n_max).all(|n| {
        let d = dsm_lower(n);
        let ok = d >= prev;
        prev = d;
        ok
    })
}
