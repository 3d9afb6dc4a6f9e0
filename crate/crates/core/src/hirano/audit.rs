//! The Euler characteristic arithmetic behind the Hirano cobordism,
//! recomputed step by step in exact rationals.

use serde::Serialize;

use crate::algebra::rational::{fmt_rational, rat, Rational};
use crate::cobordism::lemma_edge;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize)]
pub struct AuditStep {
    pub name: String,
    pub value: String,
    pub expected: String,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditRecord {
    pub m: i64,
    pub d: i64,
    #[serde(rename = "N")]
    pub n: i64,
    pub chi_f: i64,
    pub chi_f_prime: i64,
    pub total: i64,
    pub steps: Vec<AuditStep>,
}

impl AuditRecord {
    pub fn ok(&self) -> bool {
        self.steps.iter().all(|s| s.ok)
    }
}

/// With `d = 2m` and `N = 3m`:
///
/// * the surface cut from the curve has genus
///   `((d-1)(d-2) - N(m-1))/2` and `d + 1` boundary circles, so
///   `chi(F) = 2 - 2g - (d+1) = -(d-1)^2 + N(m-1)`;
/// * `N - 1` bands merge the singular links: `chi(F') = -N + 1`;
/// * `chi(F) + chi(F') = -(d-1)^2 + (m-2)N + 1 = -m^2 - 2m`.
pub fn lemma_chi_audit(m: i64) -> Result<AuditRecord> {
    if m < 1 {
        return Err(Error::Usage(format!("need m >= 1, got {m}")));
    }
    let (d, n) = (2 * m, 3 * m);
    let mut steps = Vec::new();
    let mut step = |name: &str, value: Rational, expected: Rational| {
        steps.push(AuditStep {
            name: name.to_string(),
            ok: value == expected,
            value: fmt_rational(&value),
            expected: fmt_rational(&expected),
        });
        value
    };

    let genus = (rat((d - 1) * (d - 2)) - rat(n * (m - 1))) / rat(2);
    let chi_f_genus = rat(2) - rat(2) * &genus - rat(d + 1);
    let chi_f = step("chi(F) from genus and boundary", chi_f_genus, rat(-(d - 1).pow(2) + n * (m - 1)));
    let chi_f_prime = step("chi(F') from N-1 bands", rat(-(n - 1)), rat(-n + 1));
    let total = step("chi(F) + chi(F')", &chi_f + &chi_f_prime, rat(-(d - 1).pow(2) + (m - 2) * n + 1));
    step("closed form", total.clone(), rat(-m * m - 2 * m));
    step("engine edge", rat(lemma_edge(m)?.chi), total.clone());

    let as_int = |r: &Rational| i64::try_from(r.to_integer()).expect("small integer");
    let record = AuditRecord {
        m,
        d,
        n,
        chi_f: as_int(&chi_f),
        chi_f_prime: as_int(&chi_f_prime),
        total: as_int(&total),
        steps,
    };
    if let Some(bad) = record.steps.iter().find(|s| !s.ok) {
        return Err(Error::Verification {
            step: bad.name.clone(),
            detail: format!("got {}, expected {}", bad.value, bad.expected),
        });
    }
    Ok(record)
}
