//! Signatures, four-genus and fiber Betti numbers of torus links.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use super::link::TorusLink;
use super::seifert::{positive_braid_signature, torus_braid_word, Convention};
use crate::error::{Error, Result};

type Memo = RwLock<HashMap<(u32, u32), i64>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Signature of `V + V^T` for the closure of `(s_1 ... s_{strands-1})^twists`,
/// computed from the braid every time (no memo, no closed forms).
pub fn signature_from_braid(strands: u32, twists: u32) -> i64 {
    if strands <= 1 || twists == 0 {
        return 0;
    }
    let word = torus_braid_word(strands, twists);
    positive_braid_signature(&word, strands, Convention::default())
        .expect("torus braid words use every generator")
}

/// Signature from the Seifert matrix of the torus braid, memoized by the
/// positive parameters. Braids run on the smaller parameter.
pub fn signature_oracle(link: TorusLink) -> i64 {
    if link.is_unlink() {
        return 0;
    }
    let pos = link.positive();
    let key = (pos.p() as u32, pos.q() as u32);
    let cached = memo().read().expect("memo poisoned").get(&key).copied();
    let sigma = match cached {
        Some(s) => s,
        None => {
            let s = signature_from_braid(key.0, key.1);
            memo().write().expect("memo poisoned").insert(key, s);
            s
        }
    };
    if link.is_mirror() {
        -sigma
    } else {
        sigma
    }
}

/// Signature of `T(p, q)`: closed forms for `T(d, d)` and `T(2, k)`,
/// zero for unknots and unlinks, the Seifert oracle otherwise.
pub fn signature(link: TorusLink) -> i64 {
    let (p, q) = (link.p().abs(), link.q());
    let sigma = if link.is_unlink() || p == 1 {
        0
    } else if p == q {
        -((p * p - 1) / 2)
    } else if p == 2 {
        -(q - 1)
    } else {
        return signature_oracle(link);
    };
    if link.is_mirror() {
        -sigma
    } else {
        sigma
    }
}

/// Smooth four-genus `(|p| - 1)(|q| - 1)/2` of a torus knot.
pub fn g4(link: TorusLink) -> Result<u64> {
    if !link.is_knot() {
        return Err(Error::NotAKnot(link.to_string()));
    }
    let (p, q) = (link.p().unsigned_abs(), link.q().unsigned_abs());
    Ok((p - 1) * (q - 1) / 2)
}

/// First Betti number of the fiber surface of the torus braid closure:
/// letters minus strands plus one.
pub fn fiber_b1(link: TorusLink) -> Result<u64> {
    if link.is_unlink() {
        return Err(Error::DisconnectedSurface(format!(
            "{link} bounds no connected fiber surface"
        )));
    }
    let (s, t) = (link.p().unsigned_abs(), link.q().unsigned_abs());
    Ok((s - 1) * t + 1 - s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(p: i64, q: i64) -> TorusLink {
        TorusLink::new(p, q).unwrap()
    }

    #[test]
    fn closed_forms() {
        assert_eq!(signature(t(2, 7)), -6);
        assert_eq!(signature(t(5, 5)), -12);
        assert_eq!(signature(t(1, 9)), 0);
        assert_eq!(signature(t(-2, 7)), 6);
        assert_eq!(signature(t(3, 0)), 0);
    }

    #[test]
    fn oracle_values() {
        assert_eq!(signature(t(3, 4)), -6);
        assert_eq!(signature_oracle(t(2, 5)), -4);
        assert_eq!(signature_oracle(t(4, 4)), -7);
        assert_eq!(signature_oracle(t(3, 5)), -8);
        assert_eq!(signature_oracle(t(4, 5)), -8);
        assert_eq!(signature_oracle(t(-3, 5)), 8);
    }

    #[test]
    fn genus_and_betti() {
        assert_eq!(g4(t(2, 3)).unwrap(), 1);
        assert_eq!(g4(t(4, 5)).unwrap(), 6);
        assert_eq!(g4(t(-4, 5)).unwrap(), 6);
        assert!(matches!(g4(t(2, 4)), Err(Error::NotAKnot(_))));
        assert_eq!(fiber_b1(t(2, 8)).unwrap(), 7);
        assert_eq!(fiber_b1(t(1, 5)).unwrap(), 0);
    }
}
