//! Sylvester resultants.
//!
//! The Sylvester matrix of `p = sum a_i v^i` (degree m) and `q = sum b_j v^j`
//! (degree n) has n shifted rows of p's coefficients followed by m shifted
//! rows of q's, highest power first. Its determinant is computed three ways
//! depending on how many other variables remain: directly over the
//! rationals, by evaluation at integer points and interpolation (one other
//! variable), or by fraction-free Bareiss elimination over the polynomial
//! ring (several).

use num_traits::{One, Zero};

use super::linalg;
use super::multipoly::MultiPoly;
use super::rational::{rat, Rational};
use super::unipoly::{interpolate_consecutive, UniPoly};
use crate::error::{Error, Result};

/// Sylvester matrix from coefficient lists given lowest degree first.
pub fn sylvester<T: Clone + Zero>(p: &[T], q: &[T]) -> Vec<Vec<T>> {
    let m = p.len() - 1;
    let n = q.len() - 1;
    let size = m + n;
    let mut rows = vec![vec![T::zero(); size]; size];
    for i in 0..n {
        for (k, c) in p.iter().rev().enumerate() {
            rows[i][i + k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in q.iter().rev().enumerate() {
            rows[n + i][i + k] = c.clone();
        }
    }
    rows
}

fn prepare(p: &MultiPoly, q: &MultiPoly, v: &str) -> Result<(MultiPoly, MultiPoly, usize)> {
    let (p, q) = p.align(q);
    let idx = p.var_index(v)?;
    if p.is_zero() || q.is_zero() {
        return Err(Error::Degenerate("resultant with a zero polynomial".into()));
    }
    Ok((p, q, idx))
}

/// `Res_v(p, q)` as a polynomial over the union of the inputs' variables
/// (in which `v` no longer occurs).
///
/// When both inputs have degree 0 in `v` the Sylvester matrix is empty and
/// the resultant is 1.
pub fn resultant(p: &MultiPoly, q: &MultiPoly, v: &str) -> Result<MultiPoly> {
    let (p, q, idx) = prepare(p, q, v)?;
    let vars = p.vars().to_vec();
    let others: Vec<usize> = (0..vars.len())
        .filter(|&i| i != idx && (p.degree_in(i) > Some(0) || q.degree_in(i) > Some(0)))
        .collect();
    match others.as_slice() {
        [] => {
            let pc: Vec<Rational> = p.coefficients_in(idx).iter().map(|c| c.constant_term()).collect();
            let qc: Vec<Rational> = q.coefficients_in(idx).iter().map(|c| c.constant_term()).collect();
            Ok(MultiPoly::constant(linalg::det(&sylvester(&pc, &qc)), &vars))
        }
        [u] => {
            let r = bivariate_resultant(&p, &q, *u, idx);
            Ok(MultiPoly::from_unipoly(&r, *u, &vars))
        }
        _ => resultant_bareiss(&p, &q, v),
    }
}

/// Sylvester determinant by Bareiss elimination over the polynomial ring.
/// Works for any number of remaining variables.
pub fn resultant_bareiss(p: &MultiPoly, q: &MultiPoly, v: &str) -> Result<MultiPoly> {
    let (p, q, idx) = prepare(p, q, v)?;
    let vars = p.vars().to_vec();
    let mut a = sylvester(&p.coefficients_in(idx), &q.coefficients_in(idx));
    for row in a.iter_mut() {
        for x in row.iter_mut() {
            if x.vars().is_empty() {
                *x = MultiPoly::zero(&vars);
            }
        }
    }
    let n = a.len();
    let one = MultiPoly::one(&vars);
    let mut sign = false;
    let mut prev = one.clone();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(piv) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(MultiPoly::zero(&vars));
            };
            a.swap(k, piv);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = if n == 0 { one } else { a[n - 1][n - 1].clone() };
    Ok(if sign { -&d } else { d })
}

/// `Res_v(g, h)` for polynomials in two variables (at positions `u` and `v`
/// of their shared variable list), as a dense polynomial in `u`.
///
/// The entries of the Sylvester matrix are polynomials in `u`; its
/// determinant has degree at most the sum over rows of the largest entry
/// degree. The determinant is evaluated at `u = 0, 1, ..., bound` and
/// interpolated.
pub fn bivariate_resultant(g: &MultiPoly, h: &MultiPoly, u: usize, v: usize) -> UniPoly {
    let to_uni = |c: &MultiPoly| c.to_unipoly(u).expect("only u and v may occur");
    let gc: Vec<UniPoly> = g.coefficients_in(v).iter().map(to_uni).collect();
    let hc: Vec<UniPoly> = h.coefficients_in(v).iter().map(to_uni).collect();
    let s = sylvester_uni(&gc, &hc);
    if s.is_empty() {
        return UniPoly::constant(Rational::one());
    }
    let bound: usize = s
        .iter()
        .map(|row| row.iter().filter_map(|e| e.degree()).max().unwrap_or(0))
        .sum();
    let ys: Vec<Rational> = (0..=bound as i64)
        .map(|x| {
            let x = rat(x);
            let m: linalg::Matrix = s
                .iter()
                .map(|row| row.iter().map(|e| e.eval(&x)).collect())
                .collect();
            linalg::det(&m)
        })
        .collect();
    interpolate_consecutive(&ys)
}

fn sylvester_uni(p: &[UniPoly], q: &[UniPoly]) -> Vec<Vec<UniPoly>> {
    let m = p.len() - 1;
    let n = q.len() - 1;
    let size = m + n;
    let mut rows = vec![vec![UniPoly::zero(); size]; size];
    for i in 0..n {
        for (k, c) in p.iter().rev().enumerate() {
            rows[i][i + k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in q.iter().rev().enumerate() {
            rows[n + i][i + k] = c.clone();
        }
    }
    rows
}

impl Zero for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero::<&str>(&[])
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
}

impl std::ops::Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Zero for UniPoly {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
}

impl std::ops::Add for UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: UniPoly) -> UniPoly {
        &self + &rhs
    }
}
