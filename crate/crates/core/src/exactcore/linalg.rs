use num_traits::{One, Zero};

use super::{BigRat, MultiPoly};
use crate::{Error, Result};

/// Determinant of a square matrix of polynomials by Bareiss fraction-free
/// elimination. Every intermediate division is exact in the polynomial ring.
pub fn poly_det(m: &[Vec<MultiPoly>]) -> Result<MultiPoly> {
    let n = m.len();
    if n == 0 {
        return Err(Error::Dimension("empty matrix".into()));
    }
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::Dimension(format!("matrix is not square ({n} rows)")));
    }
    let ring = &m[0][0];
    if m.iter().flatten().any(|e| !e.same_ring(ring)) {
        return Err(Error::Dimension(
            "entries over different indeterminate lists".into(),
        ));
    }
    let mut a: Vec<Vec<MultiPoly>> = m.to_vec();
    let mut sign_flip = false;
    let mut prev = ring.one_like();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return Ok(ring.zero_like()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss step divides exactly");
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if sign_flip { -det } else { det })
}

/// Solution set of a rational linear system `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<BigRat>),
    /// `particular + span(basis)`.
    Parametric {
        particular: Vec<BigRat>,
        basis: Vec<Vec<BigRat>>,
    },
    Inconsistent,
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(a: &mut [Vec<BigRat>], cols: usize) -> Vec<usize> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solve `A x = b` exactly. Inconsistency is an answer, not an error.
pub fn linsolve_rational(a: &[Vec<BigRat>], b: &[BigRat]) -> Result<Solution> {
    if a.len() != b.len() {
        return Err(Error::Dimension(format!(
            "{} equations but {} right-hand sides",
            a.len(),
            b.len()
        )));
    }
    let cols = a.first().map_or(0, |r| r.len());
    if a.iter().any(|r| r.len() != cols) {
        return Err(Error::Dimension("ragged coefficient matrix".into()));
    }
    let mut aug: Vec<Vec<BigRat>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, cols + 1);
    if pivots.last() == Some(&cols) {
        return Ok(Solution::Inconsistent);
    }
    let mut particular = vec![BigRat::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = aug[r][cols].clone();
    }
    let basis = kernel_from_rref(&aug, &pivots, cols);
    if basis.is_empty() {
        Ok(Solution::Unique(particular))
    } else {
        Ok(Solution::Parametric { particular, basis })
    }
}

fn kernel_from_rref(a: &[Vec<BigRat>], pivots: &[usize], cols: usize) -> Vec<Vec<BigRat>> {
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRat::zero(); cols];
            v[f] = BigRat::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -a[r][f].clone();
            }
            v
        })
        .collect()
}

/// Basis of the right kernel of `a` (with `cols` columns), one vector per
/// free column of the reduced echelon form.
pub fn nullspace(a: &[Vec<BigRat>], cols: usize) -> Vec<Vec<BigRat>> {
    let mut m = a.to_vec();
    let pivots = rref(&mut m, cols);
    kernel_from_rref(&m, &pivots, cols)
}
