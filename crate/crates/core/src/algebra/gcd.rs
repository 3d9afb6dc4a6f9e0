//! Multivariate gcd by content / primitive-part recursion on the highest
//! occurring variable, with a primitive pseudo-remainder sequence at each
//! level. Adequate for the small degrees met here.

use serde::Serialize;

use super::multipoly::MultiPoly;
use crate::error::{Error, Result};

/// Greatest common divisor, normalized to graded-lex leading coefficient 1.
/// `gcd(0, 0) = 0`.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let (a, b) = a.align(b);
    gcd_rec(&a, &b)
}

fn main_var(a: &MultiPoly, b: &MultiPoly) -> Option<usize> {
    (0..a.vars().len())
        .rev()
        .find(|&i| a.degree_in(i).unwrap_or(0) > 0 || b.degree_in(i).unwrap_or(0) > 0)
}

fn gcd_rec(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.normalized();
    }
    if b.is_zero() {
        return a.normalized();
    }
    let k = match main_var(a, b) {
        None => return MultiPoly::one(a.vars()),
        Some(k) => k,
    };
    if let (Some(ua), Some(ub)) = (a.to_unipoly(k), b.to_unipoly(k)) {
        return MultiPoly::from_unipoly(&ua.gcd(&ub), k, a.vars());
    }
    let ca = content(a, k);
    let cb = content(b, k);
    let c = gcd_rec(&ca, &cb);
    let mut pa = a.div_exact(&ca).expect("content divides");
    let mut pb = b.div_exact(&cb).expect("content divides");
    if pa.degree_in(k) < pb.degree_in(k) {
        std::mem::swap(&mut pa, &mut pb);
    }
    let g = loop {
        if pb.is_zero() {
            break pa;
        }
        if pb.degree_in(k) == Some(0) {
            break MultiPoly::one(a.vars());
        }
        let r = pseudo_remainder(&pa, &pb, k);
        pa = pb;
        pb = primitive_part(&r, k);
    };
    (&c * &primitive_part(&g, k)).normalized()
}

/// Gcd of the coefficients with respect to the variable at `k`.
pub fn content(p: &MultiPoly, k: usize) -> MultiPoly {
    let mut acc = MultiPoly::zero(p.vars());
    for c in p.coefficients_in(k) {
        if c.is_zero() {
            continue;
        }
        acc = gcd_rec(&acc, &c);
        if acc.is_constant() {
            break;
        }
    }
    acc
}

pub fn primitive_part(p: &MultiPoly, k: usize) -> MultiPoly {
    if p.is_zero() {
        return p.clone();
    }
    p.div_exact(&content(p, k))
        .expect("content divides")
        .normalized()
}

/// `lc(b)^e * a mod b` in the variable at `k`, computed by repeated
/// leading-term cancellation.
pub fn pseudo_remainder(a: &MultiPoly, b: &MultiPoly, k: usize) -> MultiPoly {
    let db = b.degree_in(k).expect("nonzero divisor");
    let lb = b.leading_coefficient_in(k);
    let mut r = a.clone();
    while let Some(dr) = r.degree_in(k) {
        if dr < db {
            break;
        }
        let lr = r.leading_coefficient_in(k);
        let mut e = vec![0; r.vars().len()];
        e[k] = dr - db;
        let shift = MultiPoly::from_terms(r.vars(), [(e, super::rational::rat(1))]);
        r = &(&lb * &r) - &(&(&lr * &shift) * b);
    }
    r
}

/// Per-variable evidence for [`squarefree_check`].
#[derive(Debug, Clone, Serialize)]
pub struct SquarefreeCertificate {
    pub squarefree: bool,
    /// `(variable, gcd(p, dp/dvariable))` for every variable of positive degree.
    pub gcds: Vec<(String, String)>,
}

/// `p` is square-free iff for every variable `v` in which it has positive
/// degree, `gcd(p, dp/dv)` has degree 0 in `v`.
pub fn squarefree_check(p: &MultiPoly) -> Result<SquarefreeCertificate> {
    if p.is_constant() {
        return Err(Error::Degenerate(
            "square-free check of a constant polynomial".into(),
        ));
    }
    let mut squarefree = true;
    let mut gcds = Vec::new();
    for (i, name) in p.vars().iter().enumerate() {
        if p.degree_in(i).unwrap_or(0) == 0 {
            continue;
        }
        let g = gcd(p, &p.derivative_at(i));
        if g.degree_in(i).unwrap_or(0) > 0 {
            squarefree = false;
        }
        gcds.push((name.clone(), g.to_string()));
    }
    Ok(SquarefreeCertificate { squarefree, gcds })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(s).unwrap()
    }

    #[test]
    fn bivariate_gcd() {
        let a = p("(x + y)^2 * (x - 2*y + 1)");
        let b = p("(x + y) * (x^2 + y^3)");
        assert_eq!(gcd(&a, &b), p("x + y"));
        assert_eq!(gcd(&p("x^2 - 1"), &p("y")).to_string(), "1");
    }

    #[test]
    fn gcd_with_content() {
        let a = p("x*y*(y + 1)");
        let b = p("x^2*y^2");
        assert_eq!(gcd(&a, &b), p("x*y"));
    }

    #[test]
    fn trivariate_gcd() {
        let c = p("x*y - z^2 + 1");
        let a = &c * &p("x + z");
        let b = &c * &p("y^2 - x*z");
        assert_eq!(gcd(&a, &b), c.normalized());
    }

    #[test]
    fn squarefree_examples() {
        assert!(!squarefree_check(&p("x^2*y")).unwrap().squarefree);
        assert!(squarefree_check(&p("x*y*(x+y)")).unwrap().squarefree);
        assert!(matches!(
            squarefree_check(&p("5")),
            Err(Error::Degenerate(_))
        ));
    }
}
