use serde::Serialize;

use super::edge::{local_thom_edge, local_thom_edge_two, stabilization_edge, theorem1_chain, CobordismChain};
use crate::algebra::rational::{frac, rat, ser_rational, Rational};
use crate::error::{Error, Result};
use crate::torus::{signature, TorusLink};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum UpperMethod {
    Signature,
    #[serde(rename = "Triangle+LocalThom")]
    TriangleLocalThom,
    ExactLocalThom,
}

/// Closed interval of integers containing the maximal Euler characteristic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundInterval {
    pub lower: i64,
    pub upper: i64,
    pub lower_witness: Option<CobordismChain>,
    pub upper_method: UpperMethod,
}

impl BoundInterval {
    pub fn exact(&self) -> Option<i64> {
        (self.lower == self.upper).then_some(self.lower)
    }
}

/// Which argument supplies the upper bound for `T(d, d) -> T(2, N)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Branch {
    /// `4N >= 3d^2`: signature obstruction.
    A,
    /// `0 <= N < 3d^2/4`: through the unknot.
    B,
    /// `N <= -1`: exact through the unknot.
    C,
    /// `|d| = 1`: exact.
    #[serde(rename = "unknot")]
    Unknot,
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Branch::A => "A",
            Branch::B => "B",
            Branch::C => "C",
            Branch::Unknot => "unknot",
        })
    }
}

/// Bounds on the maximal Euler characteristic of a connected cobordism
/// `T(d, d) -> T(2, N)`, next to the closed-form envelope
/// `-d^2/4 - |sign(d) 3d^2/4 - N| + [-4|d|, 2|d|]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DnBounds {
    pub d: i64,
    #[serde(rename = "N")]
    pub n: i64,
    pub interval: BoundInterval,
    pub branch: Branch,
    #[serde(serialize_with = "ser_rational")]
    pub envelope_lower: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub envelope_upper: Rational,
}

/// `sigma(target) - sigma(source)`, an upper bound for `chi` whenever the
/// target is further from the unknot in signature.
pub fn signature_upper(source: TorusLink, target: TorusLink) -> i64 {
    signature(target) - signature(source)
}

/// `chi(T(d, d) -> unknot) = -(|d| - 1)^2`.
pub fn local_thom_exact(d: i64) -> Result<i64> {
    if d == 0 {
        return Err(Error::Usage("d must be nonzero".into()));
    }
    Ok(-(d.abs() - 1).pow(2))
}

/// `chi(unknot -> T(2, N)) = -||N| - 1|`.
pub fn local_thom_exact_n(n: i64) -> i64 {
    -(n.abs() - 1).abs()
}

/// `n - (d - 1)^2`: a smooth degree `d` curve with a `T(2, n + 1)` link
/// removed, read as a cobordism from `T(d, d)`.
pub fn affine_curve_chi(n: i64, d: i64) -> i64 {
    n - (d - 1).pow(2)
}

/// `(lower, upper)` of the closed-form envelope.
pub fn theorem_display(d: i64, n: i64) -> (Rational, Rational) {
    let d2 = rat(d * d);
    let three_quarters = frac(3, 4) * &d2 * rat(d.signum());
    let core = -(&d2 / rat(4)) - num_traits::abs(three_quarters - rat(n));
    (&core - rat(4 * d.abs()), core + rat(2 * d.abs()))
}

/// For `d >= 2`: the chain of [`theorem1_chain`] below, the signature
/// obstruction weakened to `-floor(d^2/4) + 1` above.
pub fn chi_d_bounds(d: i64) -> Result<BoundInterval> {
    let chain = theorem1_chain(d)?;
    let lower = chain.verify()?;
    Ok(BoundInterval {
        lower,
        upper: -(d * d / 4) + 1,
        lower_witness: Some(chain),
        upper_method: UpperMethod::Signature,
    })
}

pub fn chi_dn_bounds(d: i64, n: i64) -> Result<DnBounds> {
    if d == 0 {
        return Err(Error::Usage("d must be nonzero".into()));
    }
    let (envelope_lower, envelope_upper) = theorem_display(d, n);
    if d < 0 {
        // T(-d,-d) -> T(2,N) is the mirror of T(d,d) -> T(2,-N)
        let mut b = chi_dn_bounds(-d, -n)?;
        b.interval.lower_witness = b.interval.lower_witness.map(|c| c.mirrored());
        return Ok(DnBounds {
            d,
            n,
            envelope_lower,
            envelope_upper,
            ..b
        });
    }
    let (interval, branch) = if d == 1 {
        let exact = local_thom_exact_n(n);
        (exact_interval(exact, vec![local_thom_edge_two(n)]), Branch::Unknot)
    } else if n <= -1 {
        let exact = local_thom_exact(d)? + local_thom_exact_n(n);
        let witness = vec![local_thom_edge(d)?, local_thom_edge_two(n)];
        (exact_interval(exact, witness), Branch::C)
    } else {
        let chain = theorem1_chain(d)?.then(stabilization_edge(3 * d * d / 4, n));
        let lower = chain.verify()?;
        let (upper, method, branch) = if 4 * n >= 3 * d * d {
            let u = signature_upper(TorusLink::diagonal(d), TorusLink::two(n));
            (u, UpperMethod::Signature, Branch::A)
        } else {
            // Through the unknot: -(d-1)^2 + (N-1). At N = 0 the triangle
            // inequality only gives -(d-1)^2 + 1, but capping both unlink
            // components with disks turns a cobordism to T(2,0) into a
            // connected surface for T(d,d) with chi + 2.
            (local_thom_exact(d)? + n - 1, UpperMethod::TriangleLocalThom, Branch::B)
        };
        (
            BoundInterval {
                lower,
                upper,
                lower_witness: Some(chain),
                upper_method: method,
            },
            branch,
        )
    };
    Ok(DnBounds {
        d,
        n,
        interval,
        branch,
        envelope_lower,
        envelope_upper,
    })
}

fn exact_interval(chi: i64, edges: Vec<super::edge::CobordismEdge>) -> BoundInterval {
    let chain = CobordismChain::new(edges);
    debug_assert_eq!(chain.verify(), Ok(chi));
    BoundInterval {
        lower: chi,
        upper: chi,
        lower_witness: Some(chain),
        upper_method: UpperMethod::ExactLocalThom,
    }
}
