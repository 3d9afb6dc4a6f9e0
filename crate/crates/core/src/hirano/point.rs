//! Local analysis at a singular point: Milnor number by two methods,
//! Hessian corank and the `A_k` type.

use num_traits::Zero;
use serde::Serialize;

use super::curve::{ProjectiveCurve, VARS};
use super::locus::format_point;
use crate::algebra::{
    linalg, local_algebra_dimension_with_budget, local_intersection_certificate, rat, MultiPoly,
};
use crate::error::{Error, Result};

const LOCAL: [&str; 2] = ["u", "v"];

#[derive(Debug, Clone, Serialize)]
pub struct SingularPointReport {
    pub chart: String,
    pub representative: String,
    /// Coordinate line containing the orbit, e.g. `z=0`.
    pub line: String,
    pub orbit_size: usize,
    /// The two oracle values; a report only exists when they agree.
    pub milnor_resultant: u32,
    pub milnor_local_algebra: u32,
    pub milnor: u32,
    /// Shear that certified the resultant computation.
    pub shear: i64,
    pub hessian_corank: u32,
    /// `k` for an `A_k` point.
    pub a_type: Option<u32>,
    pub delta: Option<u32>,
}

/// `f(u, v)`: the curve in the chart of the first nonzero coordinate of
/// `point`, recentred so that the point sits at the origin. The remaining
/// two coordinates become `point_j + u` and `point_k + v`.
pub fn local_equation(curve: &ProjectiveCurve, point: &[i64; 3]) -> Result<MultiPoly> {
    let chart = point
        .iter()
        .position(|&c| c != 0)
        .ok_or_else(|| Error::Usage("[0:0:0] is not a point".into()))?;
    let scale = point[chart];
    let mut free = (0..3).filter(|&i| i != chart);
    let (j, k) = (free.next().unwrap(), free.next().unwrap());
    let u = MultiPoly::var("u", &LOCAL)?;
    let v = MultiPoly::var("v", &LOCAL)?;
    let mut images = vec![MultiPoly::zero(&LOCAL); 3];
    images[chart] = MultiPoly::one(&LOCAL);
    images[j] = &MultiPoly::constant(rat(point[j]) / rat(scale), &LOCAL) + &u;
    images[k] = &MultiPoly::constant(rat(point[k]) / rat(scale), &LOCAL) + &v;
    Ok(curve.poly().compose(&images))
}

fn chart_name(point: &[i64; 3]) -> String {
    let i = point.iter().position(|&c| c != 0).unwrap_or(0);
    format!("{}=1", VARS[i])
}

/// Milnor number `I_0(f_u, f_v)` by the resultant route and the local
/// algebra route; they must agree. Returns `(milnor, shear)`.
pub fn milnor_at(f: &MultiPoly, budget: u32) -> Result<(u32, i64)> {
    let fu = f.derivative_at(0);
    let fv = f.derivative_at(1);
    let cert = local_intersection_certificate(&fu, &fv)?;
    let dim = local_algebra_dimension_with_budget(&fu, &fv, budget)?;
    if cert.multiplicity != dim {
        return Err(Error::OracleDisagreement {
            resultant: cert.multiplicity,
            local_algebra: dim,
        });
    }
    Ok((dim, cert.lambda))
}

/// `2 - rank` of the Hessian of `f` at the origin.
pub fn hessian_corank(f: &MultiPoly) -> u32 {
    let second = |a: usize, b: usize| f.derivative_at(a).derivative_at(b).eval_origin();
    let h = vec![vec![second(0, 0), second(0, 1)], vec![second(1, 0), second(1, 1)]];
    2 - linalg::rank(&h) as u32
}

/// `A_1` for a nondegenerate Hessian with `mu = 1`; `A_k` for corank 1 and
/// `mu = k >= 2`; nothing otherwise.
pub fn classify_a(milnor: u32, corank: u32) -> Option<u32> {
    match (milnor, corank) {
        (1, 0) => Some(1),
        (k, 1) if k >= 2 => Some(k),
        _ => None,
    }
}

/// Full local report for the orbit of `point` on `line`.
pub fn analyze_point(
    curve: &ProjectiveCurve,
    point: &[i64; 3],
    line: &str,
    orbit_size: usize,
    budget: u32,
) -> Result<SingularPointReport> {
    let f = local_equation(curve, point)?;
    if !f.eval_origin().is_zero() {
        return Err(Error::Verification {
            step: format!("point {}", format_point(point)),
            detail: "not on the curve".into(),
        });
    }
    let (milnor, shear) = milnor_at(&f, budget)?;
    let corank = hessian_corank(&f);
    let a_type = classify_a(milnor, corank);
    Ok(SingularPointReport {
        chart: chart_name(point),
        representative: format_point(point),
        line: line.to_string(),
        orbit_size,
        milnor_resultant: milnor,
        milnor_local_algebra: milnor,
        milnor,
        shear,
        hessian_corank: corank,
        a_type,
        delta: a_type.map(|k| k.div_ceil(2)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hirano::hirano_polynomial;

    #[test]
    fn milnor_numbers() {
        for (m, mu) in [(2, 1), (3, 2), (4, 3)] {
            let c = hirano_polynomial(m).unwrap();
            let f = local_equation(&c, &[1, 1, 0]).unwrap();
            assert_eq!(milnor_at(&f, 4 * (m - 1) + 8).unwrap().0, mu, "m={m}");
        }
    }

    #[test]
    fn a_types() {
        let c = hirano_polynomial(2).unwrap();
        let r = analyze_point(&c, &[1, 1, 0], "z=0", 2, 12).unwrap();
        assert_eq!((r.a_type, r.hessian_corank, r.delta), (Some(1), 0, Some(1)));
        let c = hirano_polynomial(4).unwrap();
        let r = analyze_point(&c, &[1, 1, 0], "z=0", 4, 20).unwrap();
        assert_eq!((r.a_type, r.hessian_corank, r.delta), (Some(3), 1, Some(2)));
    }

    #[test]
    fn synthetic() {
        let node = MultiPoly::parse_with_vars("u^2 + v^2", &LOCAL).unwrap();
        assert_eq!(hessian_corank(&node), 0);
        assert_eq!(classify_a(milnor_at(&node, 10).unwrap().0, 0), Some(1));
        let d4 = MultiPoly::parse_with_vars("u^3 + v^3", &LOCAL).unwrap();
        assert_eq!(hessian_corank(&d4), 2);
        assert_eq!(classify_a(milnor_at(&d4, 12).unwrap().0, 2), None);
    }

    #[test]
    fn local_equation_chart() {
        let c = hirano_polynomial(2).unwrap();
        let f = local_equation(&c, &[1, 1, 0]).unwrap();
        let direct = MultiPoly::parse_with_vars("1 + (1+u)^4 + v^4 - 2*(1+u)^2 - 2*v^2 - 2*(1+u)^2*v^2", &LOCAL).unwrap();
        assert_eq!(f, direct);
    }
}
