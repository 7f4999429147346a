//! The nineteenth-century English recurrences: De Morgan's greatest-part
//! table, Warburton's least-part counts, the Herschel closed forms and
//! Cayley's denumerants.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// De Morgan's table `u[x][y]` for `1 ≤ y ≤ x ≤ xmax`: partitions of `x`
/// whose greatest part is exactly `y`. Row and column 0 are padding.
///
/// The exact reading is the only one consistent with the tabulated values,
/// the recurrence and both closed forms (row sums equal p(x)).
pub fn demorgan_table(xmax: usize) -> Vec<Vec<BigInt>> {
    let mut u = vec![vec![BigInt::zero(); xmax + 1]; xmax + 1];
    for x in 1..=xmax {
        for y in 1..=x {
            u[x][y] = if y == 1 || y == x {
                BigInt::one()
            } else {
                // u_{x,y} = u_{x-1,y-1} + u_{x-y,y}; the second term counts
                // partitions that keep y after deleting one part y.
                let a = u[x - 1][y - 1].clone();
                let rest = x - y;
                let b = if y <= rest { u[rest][y].clone() } else { BigInt::zero() };
                a + b
            };
        }
    }
    u
}

/// Partitions of `x` with greatest part exactly `y`; zero when `y > x` or
/// `y == 0`.
pub fn demorgan_u(x: u64, y: u64) -> BigInt {
    if y == 0 || y > x {
        return BigInt::zero();
    }
    demorgan_table(x as usize)[x as usize][y as usize].clone()
}

/// u_{x,2} = x/2 − 1/4 + (−1)^x/4, for x ≥ 2.
pub fn closed_form_u2(x: u64) -> Result<BigInt> {
    if x < 2 {
        return Err(Error::Domain("closed form for u_{x,2} needs x ≥ 2".into()));
    }
    let sign: i64 = if x % 2 == 0 { 1 } else { -1 };
    Ok((BigInt::from(2) * x - 1 + sign) / 4)
}

/// Residues `t[x mod 6]` with u_{x,3} = (6x² + t)/72. They are the value of
/// −7 − 9(−1)^x + 8(β^x + γ^x) for the complex cube roots β, γ of unity.
pub const U3_RESIDUES: [i64; 6] = [0, -6, -24, 18, -24, -6];

/// u_{x,3} for x ≥ 3 from the six-case residue table.
pub fn closed_form_u3(x: u64) -> Result<BigInt> {
    if x < 3 {
        return Err(Error::Domain("closed form for u_{x,3} needs x ≥ 3".into()));
    }
    let xb = BigInt::from(x);
    let num = BigInt::from(6) * &xb * &xb + U3_RESIDUES[(x % 6) as usize];
    let (q, r) = num.div_rem(&BigInt::from(72));
    debug_assert!(r.is_zero());
    Ok(q)
}

/// Partitions of `n` into exactly `k` positive parts, by the Euler
/// recurrence P(n,k) = P(n−1,k−1) + P(n−k,k).
fn exact_parts(n: u64, k: u64, memo: &mut HashMap<(u64, u64), BigInt>) -> BigInt {
    if k == 0 {
        return if n == 0 { BigInt::one() } else { BigInt::zero() };
    }
    if n < k {
        return BigInt::zero();
    }
    if let Some(v) = memo.get(&(n, k)) {
        return v.clone();
    }
    let v = exact_parts(n - 1, k - 1, memo) + exact_parts(n - k, k, memo);
    memo.insert((n, k), v.clone());
    v
}

/// Warburton's [N, p_η] by the first route: classify by the least part
/// η + z and strip it,
/// [N, p_η] = Σ_{z=0}^{⌊N/p⌋−η} [N − (1 + p(η−1)) − zp, (p−1)_1].
pub fn warburton_route1(n: u64, p: u64, h: u64) -> BigInt {
    let mut memo = HashMap::new();
    route1(n, p, h.max(1), &mut memo)
}

fn route1(n: u64, p: u64, h: u64, memo: &mut HashMap<(u64, u64, u64), BigInt>) -> BigInt {
    if p == 0 {
        return if n == 0 { BigInt::one() } else { BigInt::zero() };
    }
    if n < p * h {
        return BigInt::zero();
    }
    if let Some(v) = memo.get(&(n, p, h)) {
        return v.clone();
    }
    let y = n / p;
    let mut acc = BigInt::zero();
    for z in 0..=(y - h) {
        let strip = 1 + p * (h - 1) + z * p;
        if strip > n {
            break;
        }
        acc += route1(n - strip, p - 1, 1, memo);
    }
    memo.insert((n, p, h), acc.clone());
    acc
}

/// Warburton's [N, p_η] by the second route: lower every part by η and count
/// the survivors,
/// [N, p_η] = Σ_{z=0}^{p} [N − pη, z_1].
pub fn warburton_route2(n: u64, p: u64, h: u64) -> BigInt {
    let h = h.max(1);
    if p == 0 {
        return if n == 0 { BigInt::one() } else { BigInt::zero() };
    }
    if n < p * h {
        return BigInt::zero();
    }
    let m = n - p * h;
    let mut memo = HashMap::new();
    (0..=p).map(|z| exact_parts(m, z, &mut memo)).sum()
}

/// [N, p_η]: partitions of `n` into exactly `p` parts, each at least `h`.
pub fn warburton_count(n: u64, p: u64, h: u64) -> BigInt {
    warburton_route1(n, p, h)
}

/// Cayley's P(a, b, c, …)q: ways to write `q` as a non-negative combination
/// of the given elements.
pub fn cayley_denumerant(elements: &[u64], q: u64) -> Result<BigInt> {
    if elements.is_empty() || elements.contains(&0) {
        return Err(Error::Domain("elements must be a non-empty list of positive integers".into()));
    }
    let q = q as usize;
    let mut ways = vec![BigInt::zero(); q + 1];
    ways[0] = BigInt::one();
    for &e in elements {
        let e = e as usize;
        for s in e..=q {
            let t = ways[s - e].clone();
            ways[s] += t;
        }
    }
    Ok(ways[q].clone())
}

/// P(1,2)q = ¼{2q + 3 + (1, −1)pcr₂ q}, the prime circulator contributing
/// +1 for even q and −1 for odd q.
pub fn cayley_p12(q: u64) -> BigInt {
    let circ: i64 = if q % 2 == 0 { 1 } else { -1 };
    (BigInt::from(2) * q + 3 + circ) / 4
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn warburton_anchor() {
        assert_eq!(warburton_route1(31, 5, 3), BigInt::from(101));
        assert_eq!(warburton_route2(31, 5, 3), BigInt::from(101));
        assert_eq!(warburton_count(16, 5, 1), BigInt::from(37));
    }

    #[test]
    fn warburton_identities() {
        assert_eq!(warburton_count(0, 0, 1), BigInt::one());
        assert_eq!(warburton_count(5, 0, 1), BigInt::zero());
        assert_eq!(warburton_count(14, 5, 3), BigInt::zero());
        assert_eq!(warburton_count(15, 5, 3), BigInt::one());
    }
}
