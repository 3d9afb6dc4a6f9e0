use serde::Serialize;

use crate::algebra::rational::{frac, Rational};

/// A known bound on an asymptotic ratio, with where it comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AsymptoticConstant {
    pub name: &'static str,
    pub numer: i64,
    pub denom: i64,
    pub statement: &'static str,
    pub source: &'static str,
}

impl AsymptoticConstant {
    pub fn value(&self) -> Rational {
        frac(self.numer, self.denom)
    }
}

/// `d(n)` is the least degree of an affine curve with an `A_n` point and
/// `d_sm(n)` its smooth analogue.
pub const ASYMPTOTIC_CONSTANTS: [AsymptoticConstant; 4] = [
    AsymptoticConstant {
        name: "algebraic_liminf_lower",
        numer: 7,
        denom: 12,
        statement: "7/12 <= liminf n/d(n)^2",
        source: "Orevkov 2012, explicit construction",
    },
    AsymptoticConstant {
        name: "limsup_upper",
        numer: 3,
        denom: 4,
        statement: "limsup n/d(n)^2 <= 3/4 and limsup n/d_sm(n)^2 <= 3/4",
        source: "signature spectrum",
    },
    AsymptoticConstant {
        name: "smooth_liminf_lower",
        numer: 2,
        denom: 3,
        statement: "2/3 <= liminf n/d_sm(n)^2",
        source: "Orevkov 2012, smooth case",
    },
    AsymptoticConstant {
        name: "lipschitz_ratio_lower",
        numer: 1,
        denom: 2,
        statement: "liminf I(T(d,d+1))/g4(T(d,d+1)) >= 1/2",
        source: "every 1-Lipschitz concordance invariant normalized on T(2,2m+1)",
    },
];

pub fn asymptotic_constant(name: &str) -> Option<&'static AsymptoticConstant> {
    ASYMPTOTIC_CONSTANTS.iter().find(|c| c.name == name)
}
