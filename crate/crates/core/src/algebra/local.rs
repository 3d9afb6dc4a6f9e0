//! Local intersection multiplicity of two plane curves at the origin.
//!
//! Two independent methods. [`local_intersection_multiplicity`] shears the
//! coordinates until a resultant certificate applies and reads the order of
//! vanishing of `Res_v(g, h)` at `u = 0`. [`local_algebra_dimension`]
//! computes `dim Q[u,v]/((g, h) + m^T)` by linear algebra on truncated
//! polynomials and stops once two consecutive truncation orders agree.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::Serialize;

use super::gcd::gcd;
use super::multipoly::MultiPoly;
use super::rational::{rat, Rational};
use super::resultant::bivariate_resultant;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Number of shears tried before giving up.
pub const SHEAR_BUDGET: u32 = 16;

/// Truncation order budget used when none is given.
pub const DEFAULT_TRUNCATION_BUDGET: u32 = 24;

/// The shear sequence `0, 1, -1, 2, -2, ...`.
pub fn shear(attempt: u32) -> i64 {
    let k = i64::from(attempt.div_ceil(2));
    if attempt % 2 == 1 {
        k
    } else {
        -k
    }
}

/// Evidence for a multiplicity computed from a resultant.
#[derive(Debug, Clone, Serialize)]
pub struct IntersectionCertificate {
    /// Shear `u <- u + lambda * v` that passed certification.
    pub lambda: i64,
    /// `Res_v` of the sheared pair, as a polynomial in `u`.
    pub resultant: String,
    pub multiplicity: u32,
}

/// Prepared pair over exactly two variables, or an early answer.
enum Prepared {
    Done(u32),
    Pair(MultiPoly, MultiPoly),
}

fn prepare(g: &MultiPoly, h: &MultiPoly) -> Result<Prepared> {
    let (g, h) = g.align(h);
    if g.is_zero() || h.is_zero() {
        return Err(Error::CommonComponent("zero polynomial".into()));
    }
    if !g.eval_origin().is_zero() || !h.eval_origin().is_zero() {
        return Ok(Prepared::Done(0));
    }
    match g.vars().len() {
        2 => {}
        n if n < 2 => {
            // both vanish at the origin and depend on one coordinate only
            let c = gcd(&g, &h);
            return Err(Error::CommonComponent(c.to_string()));
        }
        n => {
            return Err(Error::Usage(format!(
                "plane curves need two variables, got {n}"
            )))
        }
    }
    let c = gcd(&g, &h);
    if c.is_constant() {
        return Ok(Prepared::Pair(g, h));
    }
    if c.eval_origin().is_zero() {
        return Err(Error::CommonComponent(c.to_string()));
    }
    // a common factor that is a unit near the origin does not change I_0
    Ok(Prepared::Pair(g.div_exact(&c)?, h.div_exact(&c)?))
}

/// `I_0(g, h)`, the intersection multiplicity at the origin of two curves
/// in two variables (the first variable of the shared list is `u`, the
/// second `v`).
pub fn local_intersection_multiplicity(g: &MultiPoly, h: &MultiPoly) -> Result<u32> {
    local_intersection_certificate(g, h).map(|c| c.multiplicity)
}

pub fn local_intersection_certificate(
    g: &MultiPoly,
    h: &MultiPoly,
) -> Result<IntersectionCertificate> {
    let (g, h) = match prepare(g, h)? {
        Prepared::Done(m) => {
            return Ok(IntersectionCertificate {
                lambda: 0,
                resultant: "1".into(),
                multiplicity: m,
            })
        }
        Prepared::Pair(g, h) => (g, h),
    };
    let vars = g.vars().to_vec();
    let u = MultiPoly::var(&vars[0], &vars)?;
    let v = MultiPoly::var(&vars[1], &vars)?;
    for attempt in 0..SHEAR_BUDGET {
        let lambda = shear(attempt);
        let images = [&u + &v.scale(&rat(lambda)), v.clone()];
        let gs = g.compose(&images);
        let hs = h.compose(&images);
        if !certified(&gs, &hs) {
            continue;
        }
        let r = bivariate_resultant(&gs, &hs, 0, 1);
        let multiplicity = r.root_multiplicity_at_zero()? as u32;
        return Ok(IntersectionCertificate {
            lambda,
            resultant: r.to_string_in(&vars[0]),
            multiplicity,
        });
    }
    Err(Error::CertificationExhausted {
        attempts: SHEAR_BUDGET,
    })
}

fn certified(g: &MultiPoly, h: &MultiPoly) -> bool {
    let zero = Rational::zero();
    if g.leading_coefficient_in(1).substitute_value(0, &zero).is_zero()
        || h.leading_coefficient_in(1).substitute_value(0, &zero).is_zero()
    {
        return false;
    }
    let on_line = |p: &MultiPoly| -> UniPoly {
        p.substitute_value(0, &zero)
            .to_unipoly(1)
            .expect("restriction is univariate")
    };
    on_line(g).gcd(&on_line(h)).is_monomial()
}

/// `dim Q[[u, v]]/(g, h)` by truncation, with the default budget.
pub fn local_algebra_dimension(g: &MultiPoly, h: &MultiPoly) -> Result<u32> {
    local_algebra_dimension_with_budget(g, h, DEFAULT_TRUNCATION_BUDGET)
}

/// For `T = 2, 3, ...` computes the codimension of the span of
/// `{m g, m h : deg m < T}` in polynomials truncated below degree `T`.
/// Once the value repeats, `m^T` lies in the ideal locally and the value is
/// the local algebra dimension.
pub fn local_algebra_dimension_with_budget(
    g: &MultiPoly,
    h: &MultiPoly,
    budget: u32,
) -> Result<u32> {
    let (g, h) = match prepare(g, h)? {
        Prepared::Done(m) => return Ok(m),
        Prepared::Pair(g, h) => (g, h),
    };
    let mut prev = None;
    for t in 2..=budget {
        let d = truncated_quotient_dimension(&g, &h, t);
        if prev == Some(d) {
            return Ok(d);
        }
        prev = Some(d);
    }
    Err(Error::TruncationBudget { budget })
}

fn truncated_quotient_dimension(g: &MultiPoly, h: &MultiPoly, t: u32) -> u32 {
    let monomials: Vec<(u32, u32)> = (0..t)
        .flat_map(|d| (0..=d).map(move |a| (d - a, a)))
        .collect();
    let column: HashMap<(u32, u32), usize> = monomials
        .iter()
        .enumerate()
        .map(|(i, &m)| (m, i))
        .collect();
    let mut echelon = Echelon::default();
    for f in [g, h] {
        for &(a, b) in &monomials {
            let row: BTreeMap<usize, Rational> = f
                .terms()
                .filter(|(e, _)| e[0] + a + e[1] + b < t)
                .map(|(e, c)| (column[&(e[0] + a, e[1] + b)], c.clone()))
                .collect();
            echelon.insert(row);
        }
    }
    (monomials.len() - echelon.rank()) as u32
}

/// Sparse row echelon form with rows normalized to leading entry 1.
#[derive(Default)]
struct Echelon {
    pivots: HashMap<usize, BTreeMap<usize, Rational>>,
}

impl Echelon {
    fn insert(&mut self, mut row: BTreeMap<usize, Rational>) {
        while let Some((&lead, c)) = row.first_key_value() {
            let Some(pivot) = self.pivots.get(&lead) else {
                let inv = Rational::one() / c;
                for x in row.values_mut() {
                    *x *= &inv;
                }
                self.pivots.insert(lead, row);
                return;
            };
            let c = c.clone();
            for (j, x) in pivot {
                let entry = row.entry(*j).or_insert_with(Rational::zero);
                *entry -= &c * x;
                if entry.is_zero() {
                    row.remove(j);
                }
            }
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}
