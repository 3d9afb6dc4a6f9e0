use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The torus link `T(p, q)`.
///
/// Stored normalized: `0 <= |p| <= q`, with the sign on `p` marking the
/// mirror image. `T(1, q)` is the unknot. One zero parameter gives the
/// unlink `T(n, 0)` on `n` components, printed that way round.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusLink {
    p: i64,
    q: i64,
}

impl TorusLink {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p == 0 && q == 0 {
            return Err(Error::Usage("T(0,0) is not a link".into()));
        }
        let mirror = (p < 0) != (q < 0) && p != 0 && q != 0;
        let (a, b) = (p.abs().min(q.abs()), p.abs().max(q.abs()));
        Ok(TorusLink {
            p: if mirror { -a } else { a },
            q: b,
        })
    }

    /// `T(2, n)`, the family on the target side of the bounds.
    pub fn two(n: i64) -> Self {
        TorusLink::new(2, n).expect("nonzero parameter")
    }

    /// `T(d, d)`, the mirror of `T(|d|, |d|)` for negative `d`.
    pub fn diagonal(d: i64) -> Self {
        TorusLink::new(d, d.abs()).expect("d is nonzero")
    }

    pub fn unknot() -> Self {
        TorusLink { p: 1, q: 1 }
    }

    /// Smaller parameter, carrying the mirror sign.
    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_mirror(&self) -> bool {
        self.p < 0
    }

    pub fn mirror(&self) -> Self {
        TorusLink {
            p: -self.p,
            q: self.q,
        }
    }

    /// The same link with positive parameters.
    pub fn positive(&self) -> Self {
        TorusLink {
            p: self.p.abs(),
            q: self.q,
        }
    }

    pub fn is_unlink(&self) -> bool {
        self.p == 0
    }

    pub fn components(&self) -> u64 {
        self.p.unsigned_abs().gcd(&self.q.unsigned_abs())
    }

    pub fn is_knot(&self) -> bool {
        self.components() == 1
    }

    pub fn is_unknot(&self) -> bool {
        self.p.abs() == 1
    }
}

impl fmt::Display for TorusLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p == 0 {
            write!(f, "T({},0)", self.q)
        } else {
            write!(f, "T({},{})", self.p, self.q)
        }
    }
}

impl FromStr for TorusLink {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Usage(format!("expected T(p,q), got `{s}`"));
        let inner = s
            .trim()
            .strip_prefix("T(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (a, b) = inner.split_once(',').ok_or_else(bad)?;
        let p = a.trim().parse().map_err(|_| bad())?;
        let q = b.trim().parse().map_err(|_| bad())?;
        TorusLink::new(p, q)
    }
}

impl Serialize for TorusLink {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TorusLink {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
