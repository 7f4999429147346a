//! Perfect and subperfect partitions, and the scales of numeration that
//! generate them.
//!
//! A perfect partition of n contains exactly one partition of every lower
//! number. Writing n + 1 = f₁f₂…f_k with every fᵢ ≥ 2 gives the perfect
//! partition 1^{f₁−1} f₁^{f₂−1} (f₁f₂)^{f₃−1} …, and every perfect partition
//! arises this way from exactly one ordered factorization. The two-pan
//! analogue uses 2n + 1 and odd factors.

use super::Partition;
use crate::{Error, Result};

/// Ordered factorizations of `m` into factors ≥ 2 (the empty one for m = 1).
pub fn ordered_factorizations(m: u64) -> Vec<Vec<u64>> {
    if m == 1 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for d in 2..=m {
        if m % d == 0 {
            for mut rest in ordered_factorizations(m / d) {
                rest.insert(0, d);
                out.push(rest);
            }
        }
    }
    out
}

fn from_factors(factors: &[u64], step: impl Fn(u64) -> u64) -> Partition {
    let mut parts = Vec::new();
    let mut place = 1u64;
    for &f in factors {
        for _ in 0..step(f) {
            parts.push(place);
        }
        place *= f;
    }
    Partition::from_unsorted(parts)
}

/// Every perfect partition of `n`, in lexicographically descending order.
pub fn enumerate_perfect(n: u64) -> Vec<Partition> {
    let mut out: Vec<Partition> = ordered_factorizations(n + 1)
        .iter()
        .map(|f| from_factors(f, |x| x - 1))
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    out.dedup();
    out
}

/// Every subperfect (two-pan) partition of `n`, from odd factorizations
/// of 2n + 1, in lexicographically descending order.
pub fn enumerate_subperfect(n: u64) -> Vec<Partition> {
    let mut out: Vec<Partition> = ordered_factorizations(2 * n + 1)
        .iter()
        .map(|f| from_factors(f, |x| (x - 1) / 2))
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    out.dedup();
    out
}

/// Number of ways to choose counts `c_v ≤ mult_v` with Σ c_v·v = m, for
/// every m up to `n`, where the counts range over `lo(k)..=k`.
fn representation_counts(values: &[(i64, i64)], n: i64, signed: bool) -> Vec<u64> {
    // index offset so negative sums fit
    let span = values.iter().map(|(v, k)| v * k).sum::<i64>();
    let off = if signed { span } else { 0 };
    let size = (span + off + 1) as usize;
    let mut ways = vec![0u64; size];
    ways[off as usize] = 1;
    for &(v, k) in values {
        let mut next = vec![0u64; size];
        for (idx, &w) in ways.iter().enumerate() {
            if w == 0 {
                continue;
            }
            let lo = if signed { -k } else { 0 };
            for c in lo..=k {
                let t = idx as i64 + c * v;
                if t >= 0 && (t as usize) < size {
                    next[t as usize] = next[t as usize].saturating_add(w);
                }
            }
        }
        ways = next;
    }
    (0..=n)
        .map(|m| {
            let i = m + off;
            if i >= 0 && (i as usize) < size {
                ways[i as usize]
            } else {
                0
            }
        })
        .collect()
}

fn grouped(parts: &[u64]) -> Vec<(i64, i64)> {
    Partition::from_unsorted(parts.to_vec())
        .multiplicities()
        .into_iter()
        .map(|(v, k)| (v as i64, k as i64))
        .collect()
}

/// Whether every m in 1..=n, n the weight, has exactly one sub-multiset of
/// parts summing to it.
pub fn is_perfect(p: &Partition) -> bool {
    let n = p.weight() as i64;
    let counts = representation_counts(&grouped(p.parts()), n, false);
    counts[1..].iter().all(|&c| c == 1)
}

/// Whether every m in 1..=n has exactly one signed representation, where
/// n = Σ|parts| and each distinct weight may appear with net multiplicity
/// between −(copies) and +(copies). A negative part is a weight already
/// sitting in the other pan, so only absolute values matter.
pub fn is_subperfect(parts: &[i64]) -> bool {
    let abs: Vec<u64> = parts.iter().map(|p| p.unsigned_abs()).filter(|&p| p > 0).collect();
    let n = abs.iter().sum::<u64>() as i64;
    if n == 0 {
        return false;
    }
    let counts = representation_counts(&grouped(&abs), n, true);
    counts[1..].iter().all(|&c| c == 1)
}

/// A mixed-radix scale: digit i runs over 0..=αᵢ and has place value
/// (1+α₁)…(1+α_{i−1}).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scale {
    pub alphas: Vec<u64>,
    pub place_values: Vec<u64>,
    /// Largest representable number, ∏(1+αᵢ) − 1.
    pub max: u64,
}

impl Scale {
    /// Digits of `m`, least significant first.
    pub fn represent(&self, m: u64) -> Result<Vec<u64>> {
        if m > self.max {
            return Err(Error::Domain(format!("{m} exceeds the scale maximum {}", self.max)));
        }
        let mut rest = m;
        Ok(self
            .alphas
            .iter()
            .map(|&a| {
                let d = rest % (a + 1);
                rest /= a + 1;
                d
            })
            .collect())
    }

    /// The finite perfect partition 1^{α₁}(1+α₁)^{α₂}… of `max`.
    pub fn perfect_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for (&a, &v) in self.alphas.iter().zip(&self.place_values) {
            parts.extend(std::iter::repeat_n(v, a as usize));
        }
        Partition::from_unsorted(parts)
    }
}

pub fn scale_of_numeration(alphas: &[u64]) -> Result<Scale> {
    if alphas.is_empty() || alphas.contains(&0) {
        return Err(Error::Domain("alphas must be a non-empty list of positive integers".into()));
    }
    let mut place_values = Vec::with_capacity(alphas.len());
    let mut v: u64 = 1;
    for &a in alphas {
        place_values.push(v);
        v = v
            .checked_mul(a + 1)
            .ok_or_else(|| Error::Domain("scale overflows 64-bit place values".into()))?;
    }
    Ok(Scale {
        alphas: alphas.to_vec(),
        place_values,
        max: v - 1,
    })
}
