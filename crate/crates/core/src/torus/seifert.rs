//! Seifert matrices of positive braid closures.
//!
//! The closure of a positive braid word bounds a fiber surface built from
//! one disk per strand and one half-twisted band per letter. Each letter
//! except the last occurrence of its generator starts a loop that runs
//! through its band and the next band of the same generator; these loops
//! form a basis of the first homology. Linking numbers between a loop and
//! the push-off of another depend only on how the two loops sit along the
//! word and whether their generators are adjacent.

use std::collections::BTreeMap;

use crate::algebra::linalg::{self, Matrix, SparseRows};
use crate::algebra::rational::rat;
use crate::algebra::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Sign convention for the linking form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Convention {
    /// Positive braids get negative definite-leaning forms: the trefoil
    /// has signature -2.
    #[default]
    NegativeDefinite,
    /// The opposite orientation: every entry negated.
    PositiveDefinite,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeifertMatrix {
    entries: Matrix,
}

impl SeifertMatrix {
    pub fn entries(&self) -> &Matrix {
        &self.entries
    }

    /// Equals the first Betti number of the surface.
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// `V + V^T`
    pub fn symmetrized(&self) -> Matrix {
        linalg::symmetrize(&self.entries)
    }

    /// Signature of `V + V^T` by congruence reduction.
    pub fn signature(&self) -> i64 {
        linalg::symmetric_inertia(&self.symmetrized()).signature()
    }

    /// Signature of `V + V^T` from Sturm counts on its characteristic
    /// polynomial. Much slower; used as a cross-check.
    pub fn signature_via_charpoly(&self) -> i64 {
        linalg::signature_via_charpoly(&self.symmetrized())
    }

    /// `det(t V - V^T)`, the Alexander polynomial up to a unit.
    pub fn alexander(&self) -> UniPoly {
        let v = &self.entries;
        let n = v.len();
        // the determinant has degree <= n; interpolate through n + 1 points
        let xs: Vec<_> = (0..=n as i64).map(rat).collect();
        let ys: Vec<_> = xs
            .iter()
            .map(|t| {
                let m: Matrix = (0..n)
                    .map(|i| (0..n).map(|j| t * &v[i][j] - &v[j][i]).collect())
                    .collect();
                linalg::det(&m)
            })
            .collect();
        crate::algebra::unipoly::interpolate(&xs, &ys)
    }
}

/// The word `(s_1 s_2 ... s_{p-1})^q` whose closure is `T(p, q)`.
pub fn torus_braid_word(strands: u32, twists: u32) -> Vec<u32> {
    (0..twists).flat_map(|_| 1..strands).collect()
}

/// `(row, column, value)`
type Entry = (usize, usize, i64);

/// Nonzero entries of the Seifert matrix of a positive braid closure in the
/// negative definite convention, and its size.
fn linking_entries(word: &[u32], strands: u32) -> Result<(usize, Vec<Entry>)> {
    if strands == 0 {
        return Err(Error::Usage("a braid needs at least one strand".into()));
    }
    if let Some(&g) = word.iter().find(|&&g| g == 0 || g >= strands) {
        return Err(Error::Usage(format!(
            "generator {g} out of range for {strands} strands"
        )));
    }
    if let Some(g) = (1..strands).find(|g| !word.contains(g)) {
        return Err(Error::DisconnectedSurface(format!(
            "generator {g} never occurs, so the closure splits"
        )));
    }
    // next[i]: position of the next occurrence of word[i], if any
    let next: Vec<Option<usize>> = (0..word.len())
        .map(|i| (i + 1..word.len()).find(|&j| word[j] == word[i]))
        .collect();
    let loops: Vec<usize> = (0..word.len()).filter(|&i| next[i].is_some()).collect();
    let mut entries = Vec::new();
    for (ri, &i) in loops.iter().enumerate() {
        let hi = next[i].unwrap();
        entries.push((ri, ri, -1));
        for (rj, &j) in loops.iter().enumerate().skip(ri + 1) {
            if j > hi {
                // loops are sorted, so every later one is disjoint
                break;
            }
            let hj = next[j].unwrap();
            if hj < hi {
                // nested
                continue;
            }
            if j == hi {
                entries.push((ri, rj, 1));
                continue;
            }
            let (gi, gj) = (i64::from(word[i]), i64::from(word[j]));
            if gi - gj == 1 {
                entries.push((rj, ri, -1));
            } else if gj - gi == 1 {
                entries.push((ri, rj, 1));
            }
        }
    }
    Ok((loops.len(), entries))
}

fn convention_sign(convention: Convention) -> i64 {
    match convention {
        Convention::NegativeDefinite => 1,
        Convention::PositiveDefinite => -1,
    }
}

/// Seifert matrix of the closure of a positive braid word on `strands`
/// strands, generators numbered from 1. Size is `len(word) - strands + 1`.
pub fn seifert_matrix_positive_braid(
    word: &[u32],
    strands: u32,
    convention: Convention,
) -> Result<SeifertMatrix> {
    let (n, entries) = linking_entries(word, strands)?;
    let sign = convention_sign(convention);
    let mut a = vec![vec![rat(0); n]; n];
    for (i, j, x) in entries {
        a[i][j] = rat(sign * x);
    }
    Ok(SeifertMatrix { entries: a })
}

/// Signature of `V + V^T` for the closure of a positive braid word, with
/// `V` kept sparse throughout. Agrees with
/// [`SeifertMatrix::signature`] but needs memory proportional to the
/// number of nonzero entries rather than the square of the size.
pub fn positive_braid_signature(word: &[u32], strands: u32, convention: Convention) -> Result<i64> {
    let (n, entries) = linking_entries(word, strands)?;
    let sign = convention_sign(convention);
    let mut sym: Vec<BTreeMap<usize, i64>> = vec![BTreeMap::new(); n];
    for (i, j, x) in entries {
        *sym[i].entry(j).or_insert(0) += sign * x;
        *sym[j].entry(i).or_insert(0) += sign * x;
    }
    let rows: SparseRows = sym
        .into_iter()
        .map(|r| r.into_iter().filter(|&(_, x)| x != 0).map(|(j, x)| (j, rat(x))).collect())
        .collect();
    Ok(linalg::symmetric_inertia_sparse(rows).signature())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(word: &[u32], s: u32) -> SeifertMatrix {
        seifert_matrix_positive_braid(word, s, Convention::default()).unwrap()
    }

    #[test]
    fn trefoil_calibration() {
        let t = v(&[1, 1, 1], 2);
        assert_eq!(t.entries(), &linalg::from_i64(&[vec![-1, 1], vec![0, -1]]));
        assert_eq!(t.signature(), -2);
        let flipped = seifert_matrix_positive_braid(&[1, 1, 1], 2, Convention::PositiveDefinite)
            .unwrap();
        assert_eq!(flipped.signature(), 2);
    }

    #[test]
    fn hopf_and_unknot() {
        let h = v(&[1, 1], 2);
        assert_eq!((h.size(), h.signature()), (1, -1));
        let u = v(&[1], 2);
        assert_eq!((u.size(), u.signature()), (0, 0));
        assert_eq!(v(&[], 1).size(), 0);
    }

    #[test]
    fn disconnected() {
        assert!(matches!(
            seifert_matrix_positive_braid(&[], 2, Convention::default()),
            Err(Error::DisconnectedSurface(_))
        ));
        assert!(matches!(
            seifert_matrix_positive_braid(&[1, 1, 3], 4, Convention::default()),
            Err(Error::DisconnectedSurface(_))
        ));
        assert!(seifert_matrix_positive_braid(&[3], 2, Convention::default()).is_err());
    }

    #[test]
    fn size_is_letters_minus_strands_plus_one() {
        let w = torus_braid_word(4, 5);
        assert_eq!(w.len(), 15);
        assert_eq!(v(&w, 4).size(), 12);
    }

    #[test]
    fn sparse_signature_matches_dense() {
        for strands in 2..=4u32 {
            let gens = u64::from(strands - 1);
            for len in 1..=7u32 {
                for code in 0..gens.pow(len) {
                    let word: Vec<u32> = (0..len)
                        .map(|k| (code / gens.pow(k) % gens) as u32 + 1)
                        .collect();
                    for c in [Convention::NegativeDefinite, Convention::PositiveDefinite] {
                        let dense = seifert_matrix_positive_braid(&word, strands, c);
                        let sparse = positive_braid_signature(&word, strands, c);
                        match (dense, sparse) {
                            (Ok(d), Ok(s)) => assert_eq!(d.signature(), s, "{word:?}"),
                            (Err(_), Err(_)) => {}
                            _ => panic!("{word:?}: only one route failed"),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn trefoil_alexander() {
        // t^2 - t + 1 up to a unit
        let a = v(&[1, 1, 1], 2).alexander();
        assert_eq!(a.monic(), UniPoly::from_i64(&[1, -1, 1]));
    }
}
