//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{fmt_rational, rat, Rational};
use crate::error::{Error, Result};

/// Coefficients lowest degree first; the leading coefficient is nonzero
/// unless the polynomial is zero (empty vector).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Scaled so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    /// Largest `k` with `t^k` dividing `self`.
    pub fn root_multiplicity_at_zero(&self) -> Result<usize> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::InfiniteMultiplicity)
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// True when this is `c * t^k` for some nonzero `c`.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
    }

    /// Yun's square-free decomposition: `self = c * prod f_i^i`, returned as
    /// `[(f_1, 1), (f_2, 2), ...]` skipping constant factors.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.div_rem(&a).0;
        let mut c = df.div_rem(&a).0;
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Number of distinct real roots in the half-open interval `(lo, hi]`,
    /// by Sturm's theorem. Requires `self` square-free and nonzero.
    pub fn sturm_count(&self, lo: &SturmBound, hi: &SturmBound) -> usize {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(-r);
        }
        let changes = |b: &SturmBound| {
            let signs: Vec<i8> = chain
                .iter()
                .map(|p| b.sign_of(p))
                .filter(|&s| s != 0)
                .collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        changes(lo).saturating_sub(changes(hi))
    }
}

/// Endpoint for Sturm root counting.
#[derive(Debug, Clone)]
pub enum SturmBound {
    NegInfinity,
    At(Rational),
    PosInfinity,
}

impl SturmBound {
    fn sign_of(&self, p: &UniPoly) -> i8 {
        let sign = |r: &Rational| {
            if r.is_zero() {
                0
            } else if r.is_positive() {
                1
            } else {
                -1
            }
        };
        match self {
            SturmBound::At(t) => sign(&p.eval(t)),
            SturmBound::PosInfinity => p.leading().map_or(0, sign),
            SturmBound::NegInfinity => {
                let s = p.leading().map_or(0, sign);
                if p.degree().unwrap_or(0) % 2 == 1 {
                    -s
                } else {
                    s
                }
            }
        }
    }
}

/// Newton interpolation through `(xs[i], ys[i])`; the `xs` must be distinct.
pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> UniPoly {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    let mut dd: Vec<Rational> = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut result = UniPoly::zero();
    for i in (0..n).rev() {
        // result = result * (t - xs[i]) + dd[i]
        let shifted = &result * &UniPoly::new(vec![-xs[i].clone(), Rational::one()]);
        result = &shifted + &UniPoly::constant(dd[i].clone());
    }
    result
}

/// Interpolation through `(k, ys[k])` for `k = 0, 1, ..., n - 1`.
///
/// Works in integers: the values are cleared of denominators, the forward
/// differences `D^k` are taken, and `(n-1)! * p(t) = sum_k D^k (n-1)!/k! t(t-1)..(t-k+1)`
/// is accumulated by Horner's rule before the single final division.
pub fn interpolate_consecutive(ys: &[Rational]) -> UniPoly {
    let n = ys.len();
    if n == 0 {
        return UniPoly::zero();
    }
    let den = ys
        .iter()
        .fold(BigInt::one(), |acc, y| acc.lcm(y.denom()));
    let mut diff: Vec<BigInt> = ys
        .iter()
        .map(|y| y.numer() * (&den / y.denom()))
        .collect();
    for level in 1..n {
        for i in (level..n).rev() {
            diff[i] = &diff[i] - &diff[i - 1];
        }
    }
    // ratio[k] = (n-1)!/k!
    let mut ratio = vec![BigInt::one(); n];
    for k in (0..n - 1).rev() {
        ratio[k] = &ratio[k + 1] * BigInt::from(k + 1);
    }
    let mut q: Vec<BigInt> = vec![diff[n - 1].clone()];
    for k in (0..n - 1).rev() {
        // q <- (t - k) q + D^k (n-1)!/k!
        let mut next = vec![BigInt::zero(); q.len() + 1];
        let kk = BigInt::from(k);
        for (i, c) in q.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * &kk;
        }
        next[0] += &diff[k] * &ratio[k];
        q = next;
    }
    let scale = Rational::from_integer(&ratio[0] * &den);
    UniPoly::new(
        q.into_iter()
            .map(|c| Rational::from_integer(c) / &scale)
            .collect(),
    )
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl UniPoly {
    /// Text form in the variable `var`, highest degree first.
    pub fn to_string_in(&self, var: &str) -> String {
        let mut s = String::new();
        self.write_in(&mut s, var).expect("writing to a String");
        s
    }

    fn write_in(&self, f: &mut impl fmt::Write, var: &str) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if mono.is_empty() {
                write!(f, "{}", fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", fmt_rational(&mag))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_in(f, "t")
    }
}
