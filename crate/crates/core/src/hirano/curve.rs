use sha2::{Digest, Sha256};

use crate::algebra::{rat, MultiPoly};
use crate::error::{Error, Result};

pub const VARS: [&str; 3] = ["x", "y", "z"];

/// A plane projective curve given by a homogeneous polynomial in `x, y, z`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectiveCurve {
    poly: MultiPoly,
    degree: u32,
}

impl ProjectiveCurve {
    pub fn new(poly: MultiPoly) -> Result<Self> {
        let poly = poly.with_vars(&VARS)?;
        let degree = poly
            .total_degree()
            .ok_or_else(|| Error::Degenerate("zero polynomial".into()))?;
        if degree == 0 || !poly.is_homogeneous() {
            return Err(Error::Usage("curve equation must be homogeneous of positive degree".into()));
        }
        Ok(ProjectiveCurve { poly, degree })
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn partials(&self) -> [MultiPoly; 3] {
        [0, 1, 2].map(|i| self.poly.derivative_at(i))
    }

    /// SHA-256 of the canonical text form.
    pub fn hash(&self) -> String {
        hex::encode(Sha256::digest(self.poly.to_string().as_bytes()))
    }

    /// `x F_x + y F_y + z F_z = deg F * F`.
    pub fn euler_identity_holds(&self) -> bool {
        let [fx, fy, fz] = self.partials();
        let v = |i| MultiPoly::var(VARS[i], &VARS).expect("known variable");
        let lhs = &(&(&v(0) * &fx) + &(&v(1) * &fy)) + &(&v(2) * &fz);
        (&lhs - &self.poly.scale(&rat(i64::from(self.degree)))).is_zero()
    }

    /// Invariance under all six permutations of the coordinates.
    pub fn permutation_symmetric(&self) -> bool {
        const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        PERMS.iter().all(|p| self.poly.permute(p) == self.poly)
    }

    /// Every exponent of variable `i` is divisible by `m`, so scaling that
    /// coordinate by an `m`-th root of unity fixes the curve.
    pub fn root_of_unity_symmetric(&self, i: usize, m: u32) -> bool {
        self.poly.terms().all(|(e, _)| e[i] % m == 0)
    }
}

/// `(x^m + y^m + z^m)^2 - 4(x^m y^m + y^m z^m + z^m x^m)`, expanded.
pub fn hirano_polynomial(m: u32) -> Result<ProjectiveCurve> {
    if m < 2 {
        return Err(Error::Usage(format!("need m >= 2, got {m}")));
    }
    let [a, b, c] = powers(m, 1);
    let sum = &(&a + &b) + &c;
    let cross = &(&(&a * &b) + &(&b * &c)) + &(&c * &a);
    ProjectiveCurve::new(&sum.pow(2) - &cross.scale(&rat(4)))
}

fn powers(m: u32, k: u32) -> [MultiPoly; 3] {
    VARS.map(|v| {
        MultiPoly::var(v, &VARS)
            .expect("known variable")
            .pow(m / k)
    })
}

/// `F_x - 2m x^(m-1) (x^m - y^m - z^m)` and its two permutations vanish.
pub fn gradient_factorization_holds(curve: &ProjectiveCurve, m: u32) -> bool {
    let [a, b, c] = powers(m, 1);
    let scale = rat(2 * i64::from(m));
    let partials = curve.partials();
    let brackets = [&(&a - &b) - &c, &(&b - &a) - &c, &(&c - &a) - &b];
    (0..3).all(|i| {
        let lead = MultiPoly::var(VARS[i], &VARS)
            .expect("known variable")
            .pow(m - 1)
            .scale(&scale);
        (&partials[i] - &(&lead * &brackets[i])).is_zero()
    })
}

/// For even `m`, with `X = x^(m/2)` and so on,
/// `F = (X + Y + Z)(X - Y - Z)(X + Y - Z)(X - Y + Z)`. Returns the factors
/// when the identity holds.
pub fn even_factorization(curve: &ProjectiveCurve, m: u32) -> Option<Vec<MultiPoly>> {
    if !m.is_multiple_of(2) {
        return None;
    }
    let [x, y, z] = powers(m, 2);
    let factors = vec![
        &(&x + &y) + &z,
        &(&x - &y) - &z,
        &(&x + &y) - &z,
        &(&x - &y) + &z,
    ];
    let product = factors
        .iter()
        .fold(MultiPoly::one(&VARS), |acc, f| &acc * f);
    (product == *curve.poly()).then_some(factors)
}
