//! Partitions of integers: enumeration under constraints, the pentagonal
//! recurrence for p(n), the English recurrences (De Morgan, Warburton,
//! Herschel, Cayley), modular and perfect partitions, the generalized Euler
//! theorem, relation patterns, plane partitions and xy-symmetric stacks.

mod english;
mod perfect;
mod plane;
mod xysym;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

pub use english::{
    cayley_denumerant, cayley_p12, closed_form_u2, closed_form_u3, demorgan_table, demorgan_u,
    warburton_count, warburton_route1, warburton_route2, U3_RESIDUES,
};
pub use perfect::{
    enumerate_perfect, enumerate_subperfect, is_perfect, is_subperfect, ordered_factorizations,
    scale_of_numeration, Scale,
};
pub use plane::{
    count_boxed_plane_partitions, count_plane_partitions, enumerate_plane_partitions,
    plane_partition_gf, PlanePartition,
};
pub use xysym::{xy_symmetric_count, xy_symmetric_two_layer_coeffs, xy_symmetric_two_layer_poly};

/// A partition: positive parts in non-increasing order.
///
/// The empty partition is the unique partition of 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u64>);

impl Partition {
    /// Validates that parts are positive and non-increasing.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Domain("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain("partition parts must be non-increasing".into()));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts; zeros are dropped.
    pub fn from_unsorted(mut parts: Vec<u64>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> Option<u64> {
        self.0.first().copied()
    }

    /// Multiplicity of each distinct part, largest part first.
    pub fn multiplicities(&self) -> Vec<(u64, u64)> {
        let mut out: Vec<(u64, u64)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, k)) if *v == p => *k += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Which corner the dot diagram hangs from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Orientation {
    /// Longest row at the top.
    #[default]
    English,
    /// Longest row at the bottom.
    French,
}

/// Dot diagram of a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FerrersGraph {
    pub rows: Partition,
    pub orientation: Orientation,
}

impl FerrersGraph {
    pub fn new(rows: Partition) -> Self {
        FerrersGraph {
            rows,
            orientation: Orientation::English,
        }
    }

    pub fn transpose(&self) -> FerrersGraph {
        FerrersGraph {
            rows: conjugate(&self.rows),
            orientation: self.orientation,
        }
    }

    pub fn render(&self) -> String {
        let mut lines: Vec<String> = self
            .rows
            .parts()
            .iter()
            .map(|&r| vec!["•"; r as usize].join(" "))
            .collect();
        if self.orientation == Orientation::French {
            lines.reverse();
        }
        lines.join("\n")
    }
}

/// Restrictions on the partitions to enumerate. All fields are optional.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartitionConstraint {
    pub max_part: Option<u64>,
    pub min_part: Option<u64>,
    pub exact_parts: Option<usize>,
    pub min_parts: Option<usize>,
    pub max_parts: Option<usize>,
    pub distinct: bool,
    pub allowed: Option<BTreeSet<u64>>,
}

impl PartitionConstraint {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn max_part(mut self, m: u64) -> Self {
        self.max_part = Some(m);
        self
    }

    pub fn min_part(mut self, h: u64) -> Self {
        self.min_part = Some(h);
        self
    }

    pub fn exact_parts(mut self, k: usize) -> Self {
        self.exact_parts = Some(k);
        self
    }

    pub fn min_parts(mut self, k: usize) -> Self {
        self.min_parts = Some(k);
        self
    }

    pub fn max_parts(mut self, k: usize) -> Self {
        self.max_parts = Some(k);
        self
    }

    pub fn distinct(mut self) -> Self {
        self.distinct = true;
        self
    }

    pub fn allowed(mut self, parts: impl IntoIterator<Item = u64>) -> Self {
        self.allowed = Some(parts.into_iter().collect());
        self
    }

    /// Whether the bounds can be satisfied by anything at all.
    pub fn is_consistent(&self) -> bool {
        let lo_part = self.min_part.unwrap_or(1);
        if self.max_part.is_some_and(|m| m < lo_part) {
            return false;
        }
        let (lo, hi) = self.count_range();
        lo <= hi
    }

    fn count_range(&self) -> (usize, usize) {
        let mut lo = self.min_parts.unwrap_or(0);
        let mut hi = self.max_parts.unwrap_or(usize::MAX);
        if let Some(k) = self.exact_parts {
            lo = lo.max(k);
            hi = hi.min(k);
        }
        (lo, hi)
    }

    fn admits(&self, part: u64) -> bool {
        part >= self.min_part.unwrap_or(1)
            && self.max_part.is_none_or(|m| part <= m)
            && self.allowed.as_ref().is_none_or(|a| a.contains(&part))
    }
}

/// All partitions of `n` satisfying `c`, in lexicographically descending
/// order of their part lists. An infeasible constraint gives an empty list.
pub fn enumerate_partitions(n: u64, c: &PartitionConstraint) -> Vec<Partition> {
    let mut out = Vec::new();
    if !c.is_consistent() {
        return out;
    }
    let (lo, hi) = c.count_range();
    let mut cur = Vec::new();
    let top = c.max_part.unwrap_or(n).min(n);
    enum_rec(n, top, c, lo, hi, &mut cur, &mut out);
    out
}

fn enum_rec(
    remaining: u64,
    cap: u64,
    c: &PartitionConstraint,
    lo: usize,
    hi: usize,
    cur: &mut Vec<u64>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        if cur.len() >= lo {
            out.push(Partition(cur.clone()));
        }
        return;
    }
    if cur.len() >= hi {
        return;
    }
    let min_part = c.min_part.unwrap_or(1);
    let mut part = cap.min(remaining);
    while part >= min_part && part >= 1 {
        if c.admits(part) {
            // remaining parts must each be at least min_part
            let rest = remaining - part;
            if rest == 0 || rest >= min_part {
                cur.push(part);
                let next_cap = if c.distinct { part - 1 } else { part };
                enum_rec(rest, next_cap, c, lo, hi, cur, out);
                cur.pop();
            }
        }
        part -= 1;
    }
}

/// p(0..=n) by Euler's pentagonal recurrence.
pub fn partition_table(n: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n + 1];
    p[0] = BigInt::one();
    for i in 1..=n {
        let mut acc = BigInt::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let mut term = p[i - g1].clone();
            if g2 <= i {
                term += &p[i - g2];
            }
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[i] = acc;
    }
    p
}

/// p(n), the number of unrestricted partitions of `n`.
pub fn count_partitions(n: u64) -> BigInt {
    partition_table(n as usize).pop().unwrap()
}

/// De Morgan's u-table and Euler duality rely on this transpose.
pub fn conjugate(p: &Partition) -> Partition {
    let Some(&first) = p.0.first() else {
        return Partition::default();
    };
    let parts = (1..=first)
        .map(|k| p.0.iter().take_while(|&&x| x >= k).count() as u64)
        .collect();
    Partition(parts)
}

/// Rows of the modulus-`m` graph: each part `q` becomes `m, m, …, r` with
/// `0 < r ≤ m`.
pub fn modular_partition(p: &Partition, m: u64) -> Result<Vec<Vec<u64>>> {
    if m == 0 {
        return Err(Error::Domain("modulus must be at least 1".into()));
    }
    Ok(p.0
        .iter()
        .map(|&q| {
            let full = (q - 1) / m;
            let r = q - full * m;
            let mut row = vec![m; full as usize];
            row.push(r);
            row
        })
        .collect())
}

/// Row rendering used in tables: digits run together when every entry is a
/// single digit, otherwise separated by spaces.
pub fn format_modular_rows(rows: &[Vec<u64>]) -> String {
    let compact = rows.iter().flatten().all(|&x| x < 10);
    rows.iter()
        .map(|r| {
            let s: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            s.join(if compact { "" } else { " " })
        })
        .collect::<Vec<_>>()
        .join(" / ")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Parities of p(0..=n), running the pentagonal recurrence in GF(2).
pub fn parity_table(n: usize) -> Vec<u8> {
    let mut p = vec![0u8; n + 1];
    p[0] = 1;
    for i in 1..=n {
        let mut acc = 0u8;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            acc ^= p[i - g1];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= i {
                acc ^= p[i - g2];
            }
        }
        p[i] = acc;
    }
    p
}

pub fn parity_p(n: u64) -> Parity {
    if parity_table(n as usize)[n as usize] == 1 {
        Parity::Odd
    } else {
        Parity::Even
    }
}

/// First `k` binary digits after the point of the MacMahon number: digit
/// `j` is 1 exactly when p(j) is odd.
pub fn macmahon_digits(k: usize) -> String {
    parity_table(k)[1..]
        .iter()
        .map(|&b| if b == 1 { '1' } else { '0' })
        .collect()
}

/// The MacMahon number 1.b₁b₂… to double precision.
pub fn macmahon_number() -> f64 {
    let bits = parity_table(60);
    let mut x = 1.0;
    let mut w = 0.5;
    for &b in &bits[1..] {
        if b == 1 {
            x += w;
        }
        w /= 2.0;
    }
    x
}

/// Counts for the generalized Euler theorem with excluded primes `primes`:
/// (distinct parts avoiding every multiple of a listed prime, odd parts
/// avoiding the same, repetition allowed).
pub fn generalized_euler_counts(primes: &[u64], n: u64) -> (BigInt, BigInt) {
    let free = |k: u64| primes.iter().all(|&p| k % p != 0);
    let n = n as usize;
    let mut distinct = vec![BigInt::zero(); n + 1];
    distinct[0] = BigInt::one();
    let mut odd = distinct.clone();
    for k in 1..=n {
        if !free(k as u64) {
            continue;
        }
        for s in (k..=n).rev() {
            let t = distinct[s - k].clone();
            distinct[s] += t;
        }
        if k % 2 == 1 {
            for s in k..=n {
                let t = odd[s - k].clone();
                odd[s] += t;
            }
        }
    }
    (distinct[n].clone(), odd[n].clone())
}

/// Relation between consecutive parts α_i and α_{i+1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Gt,
    Eq,
    Lt,
    Ge,
    Le,
    Any,
}

impl Relation {
    pub fn holds(self, a: u64, b: u64) -> bool {
        match self {
            Relation::Gt => a > b,
            Relation::Eq => a == b,
            Relation::Lt => a < b,
            Relation::Ge => a >= b,
            Relation::Le => a <= b,
            Relation::Any => true,
        }
    }

    pub fn parse(s: &str) -> Option<Relation> {
        Some(match s {
            ">" => Relation::Gt,
            "=" => Relation::Eq,
            "<" => Relation::Lt,
            ">=" | "≥" => Relation::Ge,
            "<=" | "≤" => Relation::Le,
            "*" | "_" | "any" => Relation::Any,
            _ => return None,
        })
    }
}

/// Number of sequences of `pattern.len() + 1` positive integers summing to
/// `n` whose consecutive pairs satisfy the pattern.
pub fn relation_pattern_count(n: u64, pattern: &[Relation]) -> BigInt {
    let n = n as usize;
    if n == 0 {
        return BigInt::zero();
    }
    // ways[s][v]: sequences so far with sum s and last part v.
    let mut ways = vec![vec![BigInt::zero(); n + 1]; n + 1];
    for v in 1..=n {
        ways[v][v] = BigInt::one();
    }
    for rel in pattern {
        let mut next = vec![vec![BigInt::zero(); n + 1]; n + 1];
        for s in 1..=n {
            for a in 1..=s {
                if ways[s][a].is_zero() {
                    continue;
                }
                for b in 1..=n - s {
                    if rel.holds(a as u64, b as u64) {
                        let t = ways[s][a].clone();
                        next[s + b][b] += t;
                    }
                }
            }
        }
        ways = next;
    }
    ways[n].iter().sum()
}
