//! Divisor series and their continuations, potency and multiplicity,
//! factorization counts and the bipartite totient.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{check_cap, domain};
use crate::Result;

/// Which filter and sign the pairs (s, m) with s·m = n carry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DivisorSeriesKind {
    /// Plain: each pair contributes s.
    A,
    /// Odd minus even: s counts with sign (−1)^(s+1).
    B,
    /// Odd conjugate: only pairs with m odd.
    C,
}

impl fmt::Display for DivisorSeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DivisorSeriesKind::A => "A",
            DivisorSeriesKind::B => "B",
            DivisorSeriesKind::C => "C",
        })
    }
}

/// Cap on n for the divisor-series tables.
pub const SERIES_CAP: u64 = 10_000;

/// Divisors of n in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The k = 1 coefficient of the chosen series.
pub fn first_level_coeff(kind: DivisorSeriesKind, n: u64) -> BigInt {
    divisors(n)
        .into_iter()
        .filter(|&s| kind != DivisorSeriesKind::C || (n / s) % 2 == 1)
        .map(|s| {
            let v = BigInt::from(s);
            if kind == DivisorSeriesKind::B && s % 2 == 0 {
                -v
            } else {
                v
            }
        })
        .sum()
}

/// Coefficients 0..=n of the k-th series: the sum over ordered k-tuples of
/// pairs with Σ sᵢmᵢ = n of ∏sᵢ (signed or filtered per kind), which is the
/// k-th convolution power of the first-level series. For B and C with
/// k > 1 this per-factor reading is provisional.
pub fn divisor_series(kind: DivisorSeriesKind, n: u64, k: u32) -> Result<Vec<BigInt>> {
    if k == 0 {
        return domain("level k must be at least 1");
    }
    check_cap("divisor series length", n, SERIES_CAP)?;
    let base: Vec<BigInt> = (0..=n)
        .map(|i| if i == 0 { BigInt::zero() } else { first_level_coeff(kind, i) })
        .collect();
    let mut acc = base.clone();
    for _ in 1..k {
        let mut next = vec![BigInt::zero(); acc.len()];
        for (i, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in base.iter().enumerate().take(acc.len() - i) {
                next[i + j] += a * b;
            }
        }
        acc = next;
    }
    Ok(acc)
}

pub fn divisor_series_coeff(kind: DivisorSeriesKind, n: u64, k: u32) -> Result<BigInt> {
    if n == 0 {
        return domain("n must be at least 1");
    }
    Ok(divisor_series(kind, n, k)?.swap_remove(n as usize))
}

/// Rows k = 1..=kmax, columns n = 1..=nmax.
pub fn divisor_series_table(kind: DivisorSeriesKind, nmax: u64, kmax: u32) -> Result<Vec<Vec<BigInt>>> {
    (1..=kmax)
        .map(|k| divisor_series(kind, nmax, k).map(|mut v| v.split_off(1)))
        .collect()
}

/// Plane partition counts 0..=bound from ∏ (1 − x^k)^(−k).
pub fn plane_partition_series(bound: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); bound + 1];
    p[0] = BigInt::one();
    for k in 1..=bound {
        // multiply by 1/(1 − x^k), k times
        for _ in 0..k {
            for i in k..=bound {
                let add = p[i - k].clone();
                p[i] += add;
            }
        }
    }
    p
}

/// Coefficients 1..=bound of x·d/dx log ∏ (1 − x^k)^(−k), by exact series
/// division; entry n is σ₂(n).
pub fn sigma2_from_plane_partitions(bound: usize) -> Result<Vec<BigInt>> {
    if bound == 0 {
        return domain("bound must be at least 1");
    }
    check_cap("series bound", bound as u64, 2_000)?;
    let p = plane_partition_series(bound);
    let mut q = vec![BigInt::zero(); bound + 1];
    for n in 1..=bound {
        let mut v = &p[n] * n;
        for j in 1..n {
            v -= &q[j] * &p[n - j];
        }
        q[n] = v;
    }
    q.remove(0);
    Ok(q)
}

/// σ_r(n) by direct enumeration.
pub fn sigma(n: u64, r: u32) -> BigInt {
    divisors(n).into_iter().map(|d| BigInt::from(d).pow(r)).sum()
}

/// Prime factorization as (prime, exponent), primes increasing.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// Σ πᵢpᵢ; pt(1) = 0.
pub fn potency(n: u64) -> Result<u64> {
    if n == 0 {
        return domain("n must be at least 1");
    }
    Ok(factorize(n).iter().map(|&(p, e)| p * e as u64).sum())
}

/// Σ πᵢ; mt(1) = 0.
pub fn multiplicity(n: u64) -> Result<u64> {
    if n == 0 {
        return domain("n must be at least 1");
    }
    Ok(factorize(n).iter().map(|&(_, e)| e as u64).sum())
}

/// The exponents of n's factorization, largest first: the multipartite
/// number associated with it.
pub fn multipartite_signature(n: u64) -> Result<Vec<u32>> {
    if n == 0 {
        return domain("n must be at least 1");
    }
    let mut e: Vec<u32> = factorize(n).into_iter().map(|(_, e)| e).collect();
    e.sort_unstable_by(|a, b| b.cmp(a));
    Ok(e)
}

/// Number of integers of potency ν: the coefficient of b^ν in
/// ∏ over primes of 1/(1 − b^p).
pub fn potency_count(nu: u64) -> Result<BigInt> {
    check_cap("potency", nu, 100_000)?;
    let n = nu as usize;
    let mut c = vec![BigInt::zero(); n + 1];
    c[0] = BigInt::one();
    for p in (2..=nu).filter(|&p| is_prime(p)) {
        let p = p as usize;
        for i in p..=n {
            let add = c[i - p].clone();
            c[i] += add;
        }
    }
    Ok(c.swap_remove(n))
}

/// Primes p ≤ q with p + q = ν: an integer pq of potency ν and
/// multiplicity 2.
pub fn goldbach_witness(nu: u64) -> Option<(u64, u64)> {
    (2..=nu / 2).find(|&p| is_prime(p) && is_prime(nu - p)).map(|p| (p, nu - p))
}

/// Ways to write m as a product of integers ≥ 2, as a multiset or as a
/// sequence; m = 1 has the empty product.
pub fn factorizations(m: u64, ordered: bool) -> Result<BigInt> {
    if m == 0 {
        return domain("m must be at least 1");
    }
    check_cap("factorization target", m, 1 << 40)?;
    let divs: Vec<u64> = divisors(m).into_iter().filter(|&d| d > 1).collect();
    let mut memo = BTreeMap::new();
    Ok(if ordered {
        ordered_count(m, &divs, &mut memo)
    } else {
        unordered_count(m, u64::MAX, &divs, &mut BTreeMap::new())
    })
}

fn ordered_count(m: u64, divs: &[u64], memo: &mut BTreeMap<u64, BigInt>) -> BigInt {
    if m == 1 {
        return BigInt::one();
    }
    if let Some(v) = memo.get(&m) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for &d in divs.iter().filter(|&&d| d <= m && m % d == 0) {
        total += ordered_count(m / d, divs, memo);
    }
    memo.insert(m, total.clone());
    total
}

/// Factor multisets of m with every factor at most `max`.
fn unordered_count(m: u64, max: u64, divs: &[u64], memo: &mut BTreeMap<(u64, u64), BigInt>) -> BigInt {
    if m == 1 {
        return BigInt::one();
    }
    if let Some(v) = memo.get(&(m, max)) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for &d in divs.iter().filter(|&&d| d <= max.min(m) && m % d == 0) {
        total += unordered_count(m / d, d, divs, memo);
    }
    memo.insert((m, max), total.clone());
    total
}

/// Bipartite numbers (a, n − a), both parts ≥ 1, with gcd(a, n − a) = 1.
/// For n = 1 this returns 1, the classical φ(1).
pub fn totient_bipartite(n: u64) -> Result<BigInt> {
    totient_multipartite(n, 2)
}

/// Compositions of n into r positive parts whose gcd is 1; r = 2 gives φ(n).
/// For n = 1, returns 1 by the classical convention.
pub fn totient_multipartite(n: u64, r: u32) -> Result<BigInt> {
    if n == 0 || r == 0 {
        return domain("n and r must be at least 1");
    }
    if n == 1 {
        return Ok(BigInt::one());
    }
    check_cap("totient argument", n, 1_000_000)?;
    // compositions with all parts divisible by d number C(n/d − 1, r − 1);
    // Möbius inversion over d | n leaves gcd exactly 1
    let mut total = BigInt::zero();
    for d in divisors(n) {
        let mu = mobius(d);
        if mu == 0 {
            continue;
        }
        let c = binom(n / d - 1, r as u64 - 1);
        if mu > 0 {
            total += c;
        } else {
            total -= c;
        }
    }
    Ok(total)
}

fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * (n - i) / (i + 1);
    }
    c
}

pub fn mobius(n: u64) -> i8 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_even() {
        1
    } else {
        -1
    }
}

/// Euler's φ from the factorization.
pub fn euler_phi(n: u64) -> u64 {
    factorize(n).iter().fold(n, |acc, &(p, _)| acc / p * (p - 1))
}
