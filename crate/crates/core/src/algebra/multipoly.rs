//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! A polynomial owns its ordered variable list. Binary operations on two
//! polynomials over different lists first embed both into the union (the
//! left operand's variables first, then the right operand's new ones).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{fmt_rational, rat, Rational};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Exponent vector, one entry per variable.
pub type Exponents = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Exponents, Rational>,
}

/// Graded lexicographic comparison: total degree first, then the first
/// variable's exponent, and so on.
pub fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl MultiPoly {
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        MultiPoly {
            vars: vars.iter().map(|v| v.as_ref().to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant<S: AsRef<str>>(c: Rational, vars: &[S]) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    pub fn one<S: AsRef<str>>(vars: &[S]) -> Self {
        Self::constant(Rational::one(), vars)
    }

    /// The polynomial `name` over `vars`; `name` must be one of `vars`.
    pub fn var<S: AsRef<str>>(name: &str, vars: &[S]) -> Result<Self> {
        let mut p = Self::zero(vars);
        let idx = p.var_index(name)?;
        let mut e = vec![0; p.vars.len()];
        e[idx] = 1;
        p.terms.insert(e, Rational::one());
        Ok(p)
    }

    /// Builds from `(exponents, coefficient)` pairs, summing duplicates.
    pub fn from_terms<S: AsRef<str>>(
        vars: &[S],
        terms: impl IntoIterator<Item = (Exponents, Rational)>,
    ) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), p.vars.len(), "exponent vector length mismatch");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&k| k == 0))
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&vec![0; self.vars.len()])
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Maximum total degree; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Degree in the variable at `idx`; `None` for zero.
    pub fn degree_in(&self, idx: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[idx]).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|k| k == d),
        }
    }

    /// Leading term in graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&Exponents, &Rational)> {
        self.terms.iter().max_by(|a, b| grlex(a.0, b.0))
    }

    /// Re-expresses over `vars`, which must contain every variable that
    /// occurs with a positive exponent.
    pub fn with_vars<S: AsRef<str>>(&self, vars: &[S]) -> Result<Self> {
        let target: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        if target == self.vars {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            let pos = target.iter().position(|t| t == v);
            if pos.is_none() && self.degree_in(i).unwrap_or(0) > 0 {
                return Err(Error::UnknownVariable(v.clone()));
            }
            map.push(pos);
        }
        let terms = self.terms.iter().map(|(e, c)| {
            let mut ne = vec![0; target.len()];
            for (i, &k) in e.iter().enumerate() {
                if let Some(j) = map[i] {
                    ne[j] = k;
                }
            }
            (ne, c.clone())
        });
        Ok(Self::from_terms(&target, terms))
    }

    /// Both operands over the union of their variable lists.
    pub fn align(&self, other: &MultiPoly) -> (MultiPoly, MultiPoly) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        (
            self.with_vars(&vars).expect("superset"),
            other.with_vars(&vars).expect("superset"),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one(&self.vars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn partial_derivative(&self, var: &str) -> Result<Self> {
        Ok(self.derivative_at(self.var_index(var)?))
    }

    pub fn derivative_at(&self, idx: usize) -> Self {
        let terms = self.terms.iter().filter(|(e, _)| e[idx] > 0).map(|(e, c)| {
            let mut ne = e.clone();
            ne[idx] -= 1;
            (ne, c * rat(e[idx] as i64))
        });
        Self::from_terms(&self.vars, terms)
    }

    /// Coefficients with respect to the variable at `idx`, lowest power
    /// first. Each coefficient keeps the full variable list.
    pub fn coefficients_in(&self, idx: usize) -> Vec<MultiPoly> {
        let deg = match self.degree_in(idx) {
            None => return Vec::new(),
            Some(d) => d as usize,
        };
        let mut out = vec![Self::zero(&self.vars); deg + 1];
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let k = ne[idx] as usize;
            ne[idx] = 0;
            out[k].terms.insert(ne, c.clone());
        }
        out
    }

    /// Inverse of [`coefficients_in`](Self::coefficients_in).
    pub fn from_coefficients_in(idx: usize, coeffs: &[MultiPoly], vars: &[String]) -> Self {
        let mut p = Self::zero(vars);
        for (k, c) in coeffs.iter().enumerate() {
            for (e, a) in &c.terms {
                let mut ne = e.clone();
                ne[idx] += k as u32;
                p.add_term(ne, a.clone());
            }
        }
        p
    }

    /// Leading coefficient in the variable at `idx`.
    pub fn leading_coefficient_in(&self, idx: usize) -> MultiPoly {
        self.coefficients_in(idx)
            .pop()
            .unwrap_or_else(|| Self::zero(&self.vars))
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.vars.len());
        let mut sum = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            sum += t;
        }
        sum
    }

    /// Value at the origin.
    pub fn eval_origin(&self) -> Rational {
        self.constant_term()
    }

    /// Replaces the variable at `idx` by a constant, keeping the variable list.
    pub fn substitute_value(&self, idx: usize, value: &Rational) -> Self {
        let mut p = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let k = std::mem::replace(&mut ne[idx], 0);
            p.add_term(ne, c * num_traits::pow(value.clone(), k as usize));
        }
        p
    }

    /// Substitutes `images[i]` for variable `i`. All images must share one
    /// variable list, which becomes the result's.
    pub fn compose(&self, images: &[MultiPoly]) -> Self {
        assert_eq!(images.len(), self.vars.len(), "one image per variable");
        let target = images
            .first()
            .map(|p| p.vars.clone())
            .unwrap_or_default();
        assert!(images.iter().all(|p| p.vars == target), "images must share variables");
        let mut powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|p| vec![Self::one(&target), p.clone()])
            .collect();
        let mut result = Self::zero(&target);
        for (e, c) in &self.terms {
            let mut t = Self::constant(c.clone(), &target);
            for (i, &k) in e.iter().enumerate() {
                let k = k as usize;
                while powers[i].len() <= k {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                if k > 0 {
                    t = &t * &powers[i][k];
                }
            }
            result = &result + &t;
        }
        result
    }

    /// Renames variable positions: variable `i` becomes variable `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.vars.len());
        let terms = self.terms.iter().map(|(e, c)| {
            let mut ne = vec![0; e.len()];
            for (i, &k) in e.iter().enumerate() {
                ne[perm[i]] = k;
            }
            (ne, c.clone())
        });
        Self::from_terms(&self.vars, terms)
    }

    /// Exact quotient `self / divisor`; errors if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Result<Self> {
        let (num, den) = self.align(divisor);
        let (lead_e, lead_c) = match den.leading_term() {
            None => return Err(Error::Degenerate("division by zero polynomial".into())),
            Some((e, c)) => (e.clone(), c.clone()),
        };
        let vars = num.vars.clone();
        let mut rem = num;
        let mut quot = Self::zero(&vars);
        while let Some((e, c)) = rem.leading_term() {
            if e.iter().zip(&lead_e).any(|(a, b)| a < b) {
                return Err(Error::Degenerate(format!("{den} does not divide exactly")));
            }
            let qe: Exponents = e.iter().zip(&lead_e).map(|(a, b)| a - b).collect();
            let qc = c / &lead_c;
            let mono = Self::from_terms(&vars, [(qe, qc)]);
            rem = &rem - &(&mono * &den);
            quot = &quot + &mono;
        }
        Ok(quot)
    }

    /// Univariate view when only the variable at `idx` occurs.
    pub fn to_unipoly(&self, idx: usize) -> Option<UniPoly> {
        let deg = self.degree_in(idx).unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(i, &k)| i != idx && k > 0) {
                return None;
            }
            coeffs[e[idx] as usize] = c.clone();
        }
        Some(UniPoly::new(coeffs))
    }

    pub fn from_unipoly<S: AsRef<str>>(u: &UniPoly, idx: usize, vars: &[S]) -> Self {
        let n = vars.len();
        let terms = u.coeffs().iter().enumerate().map(|(k, c)| {
            let mut e = vec![0; n];
            e[idx] = k as u32;
            (e, c.clone())
        });
        Self::from_terms(vars, terms)
    }

    /// Scaled so the graded-lex leading coefficient is 1.
    pub fn normalized(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    /// Terms in descending graded lexicographic order.
    pub fn sorted_terms(&self) -> Vec<(&Exponents, &Rational)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| grlex(b.0, a.0));
        t
    }

    pub fn parse(s: &str) -> Result<Self> {
        super::parse::parse(s)
    }

    pub fn parse_with_vars<S: AsRef<str>>(s: &str, vars: &[S]) -> Result<Self> {
        super::parse::parse(s)?.with_vars(vars)
    }
}

fn binop(a: &MultiPoly, b: &MultiPoly, sign: i8) -> MultiPoly {
    let (mut a, b) = a.align(b);
    for (e, c) in b.terms {
        a.add_term(e, if sign < 0 { -c } else { c });
    }
    a
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        binop(self, rhs, 1)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        binop(self, rhs, -1)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let (a, b) = self.align(rhs);
        let mut out = MultiPoly::zero(&a.vars);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&rat(-1))
    }
}

impl fmt::Display for MultiPoly {
    /// Fully expanded, terms in descending graded lexicographic order:
    /// `x^4 - 2*x^2*y^2 + 3/4*y - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mag = c.abs();
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(j, &k)| {
                    if k == 1 {
                        self.vars[j].clone()
                    } else {
                        format!("{}^{}", self.vars[j], k)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{}", fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&mag), factors.join("*"))?;
            }
        }
        Ok(())
    }
}
