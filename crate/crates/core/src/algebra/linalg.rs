//! Exact rational linear algebra: determinants, rank, and the signature of
//! symmetric matrices.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{rat, Rational};
use super::unipoly::{SturmBound, UniPoly};

pub type Matrix = Vec<Vec<Rational>>;

/// Rows of a symmetric matrix holding only the nonzero entries.
pub type SparseRows = Vec<BTreeMap<usize, Rational>>;

pub fn from_i64(rows: &[Vec<i64>]) -> Matrix {
    rows.iter()
        .map(|r| r.iter().map(|&x| rat(x)).collect())
        .collect()
}

/// Determinant; `det` of the 0x0 matrix is 1.
///
/// Rows are scaled to integers and reduced by fraction-free (Bareiss)
/// elimination, which keeps every intermediate entry a minor of the input.
pub fn det(m: &Matrix) -> Rational {
    let n = m.len();
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            row.iter().map(|x| (x * &l).to_integer()).collect()
        })
        .collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Rational::zero();
            };
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = if n == 0 { BigInt::one() } else { a[n - 1][n - 1].clone() };
    let d = Rational::new(d, scale);
    if negate {
        -d
    } else {
        d
    }
}

/// Rank of a (possibly non-square) matrix.
pub fn rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let inv = a[r][c].recip();
        let (top, below) = a.split_at_mut(r + 1);
        let pivot = &top[r];
        for row in below {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] * &inv;
            for (x, y) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x -= &f * y;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

pub fn transpose(m: &Matrix) -> Matrix {
    let n = m.len();
    let k = m.first().map_or(0, |r| r.len());
    (0..k).map(|j| (0..n).map(|i| m[i][j].clone()).collect()).collect()
}

/// `m + m^T`
pub fn symmetrize(m: &Matrix) -> Matrix {
    let n = m.len();
    (0..n)
        .map(|i| (0..n).map(|j| &m[i][j] + &m[j][i]).collect())
        .collect()
}

/// Inertia `(positive, negative, zero)` of a symmetric form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    fn count(&mut self, pivot: &Rational) {
        if pivot.is_positive() {
            self.positive += 1;
        } else {
            self.negative += 1;
        }
    }
}

/// Inertia of a symmetric matrix by exact congruence reduction.
///
/// Works through the indices in order, which keeps banded matrices banded.
/// Index `k` is eliminated with its own diagonal entry when that is
/// nonzero. Otherwise it is paired with the first live `j` in its row: if
/// `a_jj` is nonzero, `j` is eliminated first; if not, `(k, j)` spans a
/// hyperbolic block `[[0, a], [a, 0]]` contributing one positive and one
/// negative direction, and its Schur complement is taken. An empty row
/// adds to the nullity.
/// Rows are stored sparsely, so only nonzero entries are touched.
pub fn symmetric_inertia(m: &Matrix) -> Inertia {
    let rows: SparseRows = m
        .iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(j, x)| (j, x.clone()))
                .collect()
        })
        .collect();
    for (i, r) in rows.iter().enumerate() {
        for (j, x) in r {
            debug_assert_eq!(m[*j][i], *x, "matrix must be symmetric");
        }
    }
    symmetric_inertia_sparse(rows)
}

/// [`symmetric_inertia`] on a matrix given by its nonzero entries, which
/// must be symmetric.
pub fn symmetric_inertia_sparse(mut rows: SparseRows) -> Inertia {
    let n = rows.len();
    let mut alive = vec![true; n];
    let mut inertia = Inertia {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    let mut k = 0;
    while k < n {
        if !alive[k] {
            k += 1;
            continue;
        }
        if let Some(pivot) = rows[k].get(&k).cloned() {
            inertia.count(&pivot);
            eliminate_one(&mut rows, &mut alive, k, &pivot);
            continue;
        }
        let Some(j) = rows[k].keys().copied().find(|&j| j != k && alive[j]) else {
            alive[k] = false;
            inertia.zero += 1;
            continue;
        };
        match rows[j].get(&j).cloned() {
            // k stays and is looked at again with its updated row
            Some(pivot) => {
                inertia.count(&pivot);
                eliminate_one(&mut rows, &mut alive, j, &pivot);
            }
            None => {
                inertia.positive += 1;
                inertia.negative += 1;
                eliminate_pair(&mut rows, &mut alive, k, j);
            }
        }
    }
    inertia
}

fn eliminate_one(
    rows: &mut [BTreeMap<usize, Rational>],
    alive: &mut [bool],
    k: usize,
    pivot: &Rational,
) {
    alive[k] = false;
    let row_k: Vec<(usize, Rational)> = rows[k]
        .iter()
        .filter(|(j, _)| alive[**j])
        .map(|(j, x)| (*j, x.clone()))
        .collect();
    for (i, a_ik) in &row_k {
        let f = a_ik / pivot;
        let row_i = &mut rows[*i];
        for (j, a_kj) in &row_k {
            let delta = &f * a_kj;
            update(row_i, *j, delta);
        }
        row_i.remove(&k);
    }
    rows[k].clear();
}

fn eliminate_pair(rows: &mut [BTreeMap<usize, Rational>], alive: &mut [bool], i: usize, j: usize) {
    // B = [[0, a], [a, 0]] with B^{-1} = [[0, 1/a], [1/a, 0]].
    alive[i] = false;
    alive[j] = false;
    let a_inv = rows[i][&j].recip();
    let ci: BTreeMap<usize, Rational> = rows[i]
        .iter()
        .filter(|(r, _)| alive[**r])
        .map(|(r, x)| (*r, x.clone()))
        .collect();
    let cj: BTreeMap<usize, Rational> = rows[j]
        .iter()
        .filter(|(r, _)| alive[**r])
        .map(|(r, x)| (*r, x.clone()))
        .collect();
    let touched: BTreeSet<usize> = ci.keys().chain(cj.keys()).copied().collect();
    // M'[r][s] = M[r][s] - (c_ri c_sj + c_rj c_si) / a
    for &r in &touched {
        for &s in &touched {
            let zero = Rational::zero();
            let (ri, rj) = (ci.get(&r).unwrap_or(&zero), cj.get(&r).unwrap_or(&zero));
            let (si, sj) = (ci.get(&s).unwrap_or(&zero), cj.get(&s).unwrap_or(&zero));
            let delta = (ri * sj + rj * si) * &a_inv;
            if !delta.is_zero() {
                update(&mut rows[r], s, delta);
            }
        }
    }
    for &r in &touched {
        rows[r].remove(&i);
        rows[r].remove(&j);
    }
    rows[i].clear();
    rows[j].clear();
}

fn update(row: &mut BTreeMap<usize, Rational>, j: usize, delta: Rational) {
    use std::collections::btree_map::Entry;
    match row.entry(j) {
        Entry::Vacant(v) => {
            v.insert(-delta);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() -= delta;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Characteristic polynomial `det(t I - m)` by the Faddeev-LeVerrier
/// recursion.
pub fn charpoly(m: &Matrix) -> UniPoly {
    let n = m.len();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut mk: Matrix = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        // mk = m * mk_prev + c_{n-k+1} I
        let mut next = matmul(m, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        mk = next;
        let am = matmul(m, &mk);
        let tr: Rational = (0..n).map(|i| am[i][i].clone()).sum();
        coeffs[n - k] = -tr / rat(k as i64);
    }
    UniPoly::new(coeffs)
}

fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let k = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![Rational::zero(); k]; n];
    for i in 0..n {
        for (l, a_il) in a[i].iter().enumerate() {
            if a_il.is_zero() {
                continue;
            }
            for j in 0..k {
                out[i][j] += a_il * &b[l][j];
            }
        }
    }
    out
}

/// Signature of a symmetric matrix from the characteristic polynomial:
/// eigenvalue signs counted with multiplicity by Sturm sequences on each
/// square-free factor. Independent of [`symmetric_inertia`].
pub fn signature_via_charpoly(m: &Matrix) -> i64 {
    let cp = charpoly(m);
    let zero = SturmBound::At(Rational::zero());
    let mut sig = 0i64;
    for (factor, mult) in cp.squarefree_decomposition() {
        let pos = factor.sturm_count(&zero, &SturmBound::PosInfinity);
        let nonpos = factor.sturm_count(&SturmBound::NegInfinity, &zero);
        let at_zero = usize::from(factor.eval(&Rational::zero()).is_zero());
        let neg = nonpos - at_zero;
        sig += (pos as i64 - neg as i64) * mult as i64;
    }
    sig
}
