//! MacMahon's Master Theorem.
//!
//! For linear forms Xᵢ = Σⱼ aᵢⱼxⱼ, the coefficient of x₁^{ξ₁}…xₙ^{ξₙ} in
//! X₁^{ξ₁}…Xₙ^{ξₙ} equals the coefficient of the same monomial in 1/Vₙ,
//! where Vₙ = det(I − diag(x)·A).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{check_cap, domain};
use crate::exactcore::{binomial, inverse_coeff, multinomial, poly_det, BigRat, MultiPoly};
use crate::{Error, Result};

/// Names x1..xn.
pub fn master_vars(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

fn check_square(a: &[Vec<BigRat>]) -> Result<usize> {
    let n = a.len();
    if n == 0 || a.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension("coefficient matrix must be square and non-empty".into()));
    }
    Ok(n)
}

/// Vₙ = det(I − diag(x₁..xₙ)·A) over x1..xn.
pub fn master_denominator(a: &[Vec<BigRat>]) -> Result<MultiPoly> {
    let n = check_square(a)?;
    let vars = master_vars(n);
    let one = MultiPoly::one(&vars);
    let m: Vec<Vec<MultiPoly>> = (0..n)
        .map(|i| {
            let xi = one.monomial_like(i, 1);
            (0..n)
                .map(|j| {
                    let off = xi.scale(&a[i][j]);
                    if i == j {
                        &one - &off
                    } else {
                        -off
                    }
                })
                .collect()
        })
        .collect();
    poly_det(&m)
}

fn check_xi(n: usize, xi: &[u32], max_degree: u64) -> Result<()> {
    if xi.len() != n {
        return Err(Error::Dimension(format!("multidegree has {} entries, matrix is {n}×{n}", xi.len())));
    }
    let d: u64 = xi.iter().map(|&e| e as u64).sum();
    check_cap("total degree", d, max_degree)
}

/// Coefficient of ∏xᵢ^{ξᵢ} in 1/Vₙ. Refuses multidegrees whose total
/// exceeds `max_degree`.
pub fn master_coefficient(a: &[Vec<BigRat>], xi: &[u32], max_degree: u64) -> Result<BigRat> {
    let n = check_square(a)?;
    check_xi(n, xi, max_degree)?;
    inverse_coeff(&master_denominator(a)?, xi)
}

/// The same coefficient read from the redundant product ∏Xᵢ^{ξᵢ}.
pub fn redundant_coefficient(a: &[Vec<BigRat>], xi: &[u32], max_degree: u64) -> Result<BigRat> {
    let n = check_square(a)?;
    check_xi(n, xi, max_degree)?;
    let vars = master_vars(n);
    let zero = MultiPoly::zero(&vars);
    let mut prod = MultiPoly::one(&vars);
    for (i, &e) in xi.iter().enumerate() {
        let mut form = zero.clone();
        for (j, c) in a[i].iter().enumerate() {
            form = &form + &zero.monomial_like(j, 1).scale(c);
        }
        prod = prod.checked_mul(&form.pow(e))?;
    }
    Ok(prod.coeff(xi))
}

/// The rencontres matrix: zeros on the diagonal, ones elsewhere.
pub fn derangement_matrix(n: usize) -> Vec<Vec<BigRat>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRat::zero() } else { BigRat::one() }).collect())
        .collect()
}

/// Pₙ = C(n,2)Pₙ₋₂ + 2C(n,3)Pₙ₋₃ + … + (n−1)C(n,n), with P₀ = 1.
pub fn derangements(n: u64) -> BigInt {
    let mut p: Vec<BigInt> = vec![BigInt::one()];
    for m in 1..=n {
        let mut acc = BigInt::zero();
        for k in 2..=m {
            acc += binomial(m, k) * (k - 1) * &p[(m - k) as usize];
        }
        p.push(acc);
    }
    p[n as usize].clone()
}

/// Pₙ from the redundant generating function: Σₛ (−1)^s n!/s!.
pub fn derangements_redundant(n: u64) -> BigInt {
    let mut acc = BigInt::zero();
    // n!/s! = (s+1)(s+2)…n
    let mut tail = BigInt::one();
    for s in (0..=n).rev() {
        if s % 2 == 0 {
            acc += &tail;
        } else {
            acc -= &tail;
        }
        tail *= s.max(1);
    }
    acc
}

/// {m; ξ₁ξ₂…ξₙ}: arrangements of x₁^{ξ₁}…xₙ^{ξₙ} with exactly `m` symbols
/// left in their original places. Block i of positions receives Mᵢⱼ copies
/// of symbol j; summing ∏ᵢ multinomial(Mᵢ·) over matrices with row and
/// column sums ξ and trace m gives the count.
pub fn generalized_rencontres(m: u64, xi: &[u64]) -> Result<BigInt> {
    let total: u64 = xi.iter().sum();
    if m > total {
        return domain(format!("m = {m} exceeds the {total} symbols"));
    }
    Ok(rencontres_distribution(xi)?.remove(&m).unwrap_or_default())
}

/// {m; ξ} for every m.
pub fn rencontres_distribution(xi: &[u64]) -> Result<BTreeMap<u64, BigInt>> {
    if xi.is_empty() {
        return domain("empty multidegree");
    }
    check_cap("symbols", xi.iter().sum(), 40)?;
    let mut out = BTreeMap::new();
    let n = xi.len();
    let mut cols = xi.to_vec();
    let mut weight_trace = Vec::new();
    tables(xi, 0, &mut cols, &mut vec![0; n], BigInt::one(), 0, &mut weight_trace);
    for (t, w) in weight_trace {
        *out.entry(t).or_insert_with(BigInt::zero) += w;
    }
    Ok(out)
}

/// Rows are filled one at a time; `cols` holds the column sums still open.
fn tables(
    xi: &[u64],
    row: usize,
    cols: &mut Vec<u64>,
    cur: &mut Vec<u64>,
    weight: BigInt,
    trace: u64,
    out: &mut Vec<(u64, BigInt)>,
) {
    let n = xi.len();
    if row == n {
        out.push((trace, weight));
        return;
    }
    row_fill(xi, row, 0, xi[row], cols, cur, &weight, trace, out);
}

#[allow(clippy::too_many_arguments)]
fn row_fill(
    xi: &[u64],
    row: usize,
    col: usize,
    left: u64,
    cols: &mut Vec<u64>,
    cur: &mut Vec<u64>,
    weight: &BigInt,
    trace: u64,
    out: &mut Vec<(u64, BigInt)>,
) {
    let n = xi.len();
    if col == n {
        if left == 0 {
            let w = weight * multinomial(cur);
            let t = trace + cur[row];
            tables(xi, row + 1, cols, &mut vec![0; n], w, t, out);
        }
        return;
    }
    let hi = left.min(cols[col]);
    let lo = if col == n - 1 { left } else { 0 };
    if lo > hi {
        return;
    }
    for v in lo..=hi {
        cur[col] = v;
        cols[col] -= v;
        row_fill(xi, row, col + 1, left - v, cols, cur, weight, trace, out);
        cols[col] += v;
    }
    cur[col] = 0;
}

/// The Master Theorem with a diagonal marker t: the coefficient of
/// t^m x^ξ in ∏(t xᵢ + Σ_{j≠i} xⱼ)^{ξᵢ}, read through 1/Vₙ with aᵢᵢ = t.
/// Exposed for cross-checking the table count.
pub fn rencontres_via_master(m: u64, xi: &[u32]) -> Result<BigInt> {
    let n = xi.len();
    let mut vars = master_vars(n);
    vars.push("t".into());
    let one = MultiPoly::one(&vars);
    let t = one.monomial_like(n, 1);
    let mat: Vec<Vec<MultiPoly>> = (0..n)
        .map(|i| {
            let x = one.monomial_like(i, 1);
            (0..n)
                .map(|j| if i == j { &one - &(&x * &t) } else { -x.clone() })
                .collect()
        })
        .collect();
    let v = poly_det(&mat)?;
    let mut exps: Vec<u32> = xi.to_vec();
    exps.push(u32::try_from(m).map_err(|_| Error::ExponentOverflow)?);
    let c = inverse_coeff(&v, &exps)?;
    if !c.is_integer() {
        return domain("non-integral coefficient");
    }
    Ok(c.to_integer())
}
