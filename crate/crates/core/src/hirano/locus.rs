//! The singular locus of a Hirano curve, certified case by case.
//!
//! The partials factor as `F_x = 2m x^(m-1) (x^m - y^m - z^m)` and
//! symmetrically. If no coordinate vanishes, all three brackets vanish,
//! a linear system in `(x^m, y^m, z^m)` with nonzero determinant, so there
//! is no such point. On a coordinate line the gradient restricts to
//! univariate polynomials whose gcd is the singular condition; its degree,
//! once square-free, counts the singular points on that line.

use num_traits::Zero;
use serde::Serialize;

use super::curve::{gradient_factorization_holds, hirano_polynomial, ProjectiveCurve, VARS};
use crate::algebra::{linalg, rat, Rational, UniPoly};
use crate::error::{Error, Result};

/// Singular points on one coordinate line.
#[derive(Debug, Clone, Serialize)]
pub struct LineCertificate {
    /// e.g. `z=0`
    pub line: String,
    /// Affine chart used on the line, e.g. `x=1`.
    pub chart: String,
    /// gcd of the restricted equation and partials, in the remaining
    /// coordinate.
    pub condition: String,
    pub squarefree: bool,
    pub roots: usize,
    /// Rational point of the line on which the others are images under
    /// scaling by roots of unity.
    pub representative: [i64; 3],
}

#[derive(Debug, Clone, Serialize)]
pub struct SingularLocus {
    pub m: u32,
    pub gradient_factorization: bool,
    /// Determinant of the bracket system; nonzero rules out points off the
    /// coordinate lines.
    pub bracket_determinant: i64,
    pub vertices_nonsingular: bool,
    pub lines: Vec<LineCertificate>,
    pub count: usize,
}

pub fn format_point(p: &[i64; 3]) -> String {
    format!("[{}:{}:{}]", p[0], p[1], p[2])
}

/// Certifies the singular points of a member of the Hirano family.
/// Other curves are rejected: only this family's case analysis is
/// implemented.
pub fn singular_locus(curve: &ProjectiveCurve) -> Result<SingularLocus> {
    let d = curve.degree();
    let m = d / 2;
    let recognized = d.is_multiple_of(2) && m >= 2 && hirano_polynomial(m)?.poly() == curve.poly();
    if !recognized {
        return Err(Error::Unsupported(
            "singular locus of a general curve; only the Hirano family is handled".into(),
        ));
    }
    let gradient_factorization = gradient_factorization_holds(curve, m);
    let brackets = linalg::from_i64(&[vec![1, -1, -1], vec![-1, 1, -1], vec![-1, -1, 1]]);
    let det = linalg::det(&brackets);
    let bracket_determinant = i64::try_from(det.to_integer()).expect("small determinant");

    let mut equations = vec![curve.poly().clone()];
    equations.extend(curve.partials());

    let vertices_nonsingular = (0..3).all(|i| {
        let mut point = vec![Rational::zero(); 3];
        point[i] = rat(1);
        equations[1..].iter().any(|f| !f.eval(&point).is_zero())
    });

    let mut lines = Vec::new();
    for (i, (j, k)) in [(1, 2), (0, 2), (0, 1)].into_iter().enumerate() {
        let restricted: Vec<UniPoly> = equations
            .iter()
            .map(|f| {
                f.substitute_value(i, &rat(0))
                    .substitute_value(j, &rat(1))
                    .to_unipoly(k)
                    .expect("one coordinate left")
            })
            .collect();
        let condition = restricted
            .iter()
            .fold(UniPoly::zero(), |acc, p| acc.gcd(p));
        let roots = condition.degree().unwrap_or(0);
        let squarefree = condition.is_squarefree();
        // t = 0 is a vertex, already known to be smooth
        debug_assert!(!condition.eval(&rat(0)).is_zero() || !vertices_nonsingular);
        let mut representative = [0; 3];
        representative[j] = 1;
        representative[k] = 1;
        if !condition.eval(&rat(1)).is_zero() {
            return Err(Error::Verification {
                step: format!("line {}=0", VARS[i]),
                detail: format!("{} is not singular", format_point(&representative)),
            });
        }
        lines.push(LineCertificate {
            line: format!("{}=0", VARS[i]),
            chart: format!("{}=1", VARS[j]),
            condition: condition.to_string_in(VARS[k]),
            squarefree,
            roots,
            representative,
        });
    }
    let count = lines.iter().map(|l| l.roots).sum();
    Ok(SingularLocus {
        m,
        gradient_factorization,
        bracket_determinant,
        vertices_nonsingular,
        lines,
        count,
    })
}

impl SingularLocus {
    /// All certificate conditions hold and the count is `3m`.
    pub fn certified(&self) -> bool {
        self.gradient_factorization
            && self.bracket_determinant != 0
            && self.vertices_nonsingular
            && self.lines.iter().all(|l| l.squarefree)
            && self.count == 3 * self.m as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::MultiPoly;

    #[test]
    fn counts() {
        for (m, n) in [(2, 6), (3, 9), (4, 12), (5, 15)] {
            let locus = singular_locus(&hirano_polynomial(m).unwrap()).unwrap();
            assert_eq!(locus.count, n);
            assert!(locus.certified());
            assert_eq!(locus.bracket_determinant, -4);
            assert!(locus.lines.iter().all(|l| l.roots == m as usize));
        }
    }

    #[test]
    fn m2_condition() {
        let locus = singular_locus(&hirano_polynomial(2).unwrap()).unwrap();
        let z0 = &locus.lines[2];
        assert_eq!((z0.line.as_str(), z0.chart.as_str()), ("z=0", "x=1"));
        assert_eq!(z0.condition, "y^2 - 1");
        assert_eq!(format_point(&z0.representative), "[1:1:0]");
    }

    #[test]
    fn other_curves_unsupported() {
        let c = ProjectiveCurve::new(MultiPoly::parse("x^2*y^2 + z^4").unwrap()).unwrap();
        assert!(matches!(singular_locus(&c), Err(Error::Unsupported(_))));
    }
}
