//! Exact rationals.
//!
//! `BigRational` already keeps values in lowest terms with a positive
//! denominator, so it is used directly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats as `a` or `a/b`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `a` or `a/b` with optional sign.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = |msg: &str| Error::Parse {
        pos: 0,
        msg: format!("{msg}: `{s}`"),
    };
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad("bad numerator"))?;
    let d: BigInt = d.parse().map_err(|_| bad("bad denominator"))?;
    if d.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(n, d))
}

/// Floor of a rational as an `i64`.
pub fn floor_i64(r: &Rational) -> i64 {
    to_i64(&r.floor().to_integer())
}

/// Ceiling of a rational as an `i64`.
pub fn ceil_i64(r: &Rational) -> i64 {
    to_i64(&r.ceil().to_integer())
}

/// Serde helper writing a rational as `a/b`.
pub(crate) fn ser_rational<S: serde::Serializer>(
    r: &Rational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rational(r))
}

pub(crate) fn to_i64(n: &BigInt) -> i64 {
    i64::try_from(n).expect("integer exceeds i64")
}
