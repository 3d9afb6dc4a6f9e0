use serde::Serialize;

use super::audit::{lemma_chi_audit, AuditRecord};
use super::curve::{even_factorization, hirano_polynomial, ProjectiveCurve};
use super::locus::{singular_locus, SingularLocus};
use super::point::{analyze_point, SingularPointReport};
use crate::algebra::rational::{fmt_rational, frac, Rational};
use crate::algebra::squarefree_check;
use crate::error::{Error, Result};

/// Everything `verify-hirano` prints.
#[derive(Debug, Clone, Serialize)]
pub struct HiranoReport {
    pub m: u32,
    pub degree: u32,
    pub polynomial_sha256: String,
    pub squarefree: bool,
    pub euler_identity: bool,
    pub permutation_symmetric: bool,
    pub locus: SingularLocus,
    pub singular_count: usize,
    pub orbits: Vec<SingularPointReport>,
    /// `(d-1)(d-2)/2` minus the delta invariants.
    pub genus: i64,
    /// `(d-1)(d-2)/2 - N(m-1)/2`; agrees with `genus` for odd `m`.
    pub genus_display: String,
    /// For even `m` the curve splits into four components; these are they.
    pub factors: Option<Vec<String>>,
    pub audit: AuditRecord,
    pub pass: bool,
}

/// Arithmetic genus minus the delta invariants of the listed orbits.
pub fn singular_genus(curve: &ProjectiveCurve, reports: &[SingularPointReport]) -> Result<i64> {
    let d = i64::from(curve.degree());
    let mut delta = 0i64;
    for r in reports {
        let dv = r.delta.ok_or_else(|| Error::Verification {
            step: format!("genus at {}", r.representative),
            detail: "point is not of type A, delta unknown".into(),
        })?;
        delta += i64::from(dv) * r.orbit_size as i64;
    }
    Ok((d - 1) * (d - 2) / 2 - delta)
}

/// Builds the curve for `m` and certifies its singular points.
pub fn verify_hirano(m: u32) -> Result<HiranoReport> {
    let curve = hirano_polynomial(m)?;
    let locus = singular_locus(&curve)?;
    let budget = 4 * (m - 1) + 8;
    let orbits = locus
        .lines
        .iter()
        .map(|l| analyze_point(&curve, &l.representative, &l.line, l.roots, budget))
        .collect::<Result<Vec<_>>>()?;
    let genus = singular_genus(&curve, &orbits)?;
    let (d, n, mm) = (i64::from(2 * m), i64::from(3 * m), i64::from(m));
    let display: Rational = frac((d - 1) * (d - 2), 2) - frac(n * (mm - 1), 2);
    let factors = even_factorization(&curve, m).map(|fs| fs.iter().map(|f| f.to_string()).collect());
    let audit = lemma_chi_audit(mm)?;
    let squarefree = squarefree_check(curve.poly())?.squarefree;
    let euler_identity = curve.euler_identity_holds();
    let permutation_symmetric = curve.permutation_symmetric();
    let orbits_ok = orbits.iter().all(|o| o.a_type == Some(m - 1));
    let pass = squarefree
        && euler_identity
        && permutation_symmetric
        && locus.certified()
        && orbits_ok
        && audit.ok()
        && (m.is_multiple_of(2) || Rational::from_integer(genus.into()) == display);
    Ok(HiranoReport {
        m,
        degree: curve.degree(),
        polynomial_sha256: curve.hash(),
        squarefree,
        euler_identity,
        permutation_symmetric,
        singular_count: locus.count,
        locus,
        orbits,
        genus,
        genus_display: fmt_rational(&display),
        factors,
        audit,
        pass,
    })
}
