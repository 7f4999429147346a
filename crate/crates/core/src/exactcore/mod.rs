//! Exact arithmetic substrate: big integers and rationals, multivariate
//! polynomials over named indeterminates, truncated power series,
//! polynomial determinants and rational linear solving.
//!
//! Nothing in this module rounds. Integers and rationals come from
//! `num-bigint`/`num-rational`; the polynomial, series and elimination code
//! is local.

mod linalg;
mod poly;
mod series;

pub use linalg::{linsolve_rational, nullspace, poly_det, Solution};
pub use poly::{Exponents, MultiPoly};
pub use series::{series_inverse, series_inverse_capped, TruncSeries};

pub use num_bigint::BigInt;
pub type BigRat = num_rational::BigRational;

/// Integer as an exact rational.
pub fn rat(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

/// `n / d` as an exact rational. Panics when `d == 0`.
pub fn ratio(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

/// Indeterminate names `prefix0 .. prefix{n-1}`.
pub fn indexed_vars(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// Coefficient of `x^exps` in the series of `1/p`, computed to the least
/// bound that determines it.
pub fn inverse_coeff(p: &MultiPoly, exps: &[u32]) -> crate::Result<BigRat> {
    let d: u64 = exps.iter().map(|&e| e as u64).sum();
    let bound = u32::try_from(d).map_err(|_| crate::Error::ExponentOverflow)?;
    let caps: Vec<u32> = exps.to_vec();
    series_inverse_capped(p, bound, Some(&caps))?.coeff(exps)
}

/// `n!` exactly.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Multinomial coefficient `(Σ ks)! / Π ks!`.
pub fn multinomial(ks: &[u64]) -> BigInt {
    let mut acc = BigInt::from(1);
    let mut n = 0;
    for &k in ks {
        n += k;
        acc *= binomial(n, k);
    }
    acc
}
