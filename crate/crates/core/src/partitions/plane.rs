//! Plane partitions: arrays of non-negative integers decreasing weakly
//! along rows and down columns.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactcore::{series_inverse, MultiPoly, TruncSeries};
use crate::error::check_cap;
use crate::Result;

/// Canonical form keeps only positive entries: each row is a partition and
/// rows shrink weakly downwards, so trailing zero rows and columns are gone.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlanePartition {
    rows: Vec<Vec<u64>>,
}

impl PlanePartition {
    /// Validates weak decrease in both directions and trims zeros.
    pub fn new(grid: Vec<Vec<u64>>) -> Result<Self> {
        let rows: Vec<Vec<u64>> = grid
            .into_iter()
            .map(|r| r.into_iter().take_while(|&x| x > 0).collect::<Vec<_>>())
            .take_while(|r| !r.is_empty())
            .collect();
        for (i, r) in rows.iter().enumerate() {
            if r.windows(2).any(|w| w[0] < w[1]) {
                return crate::error::domain("rows must be non-increasing");
            }
            if i > 0 {
                let above = &rows[i - 1];
                if r.len() > above.len() || r.iter().zip(above).any(|(b, a)| b > a) {
                    return crate::error::domain("columns must be non-increasing");
                }
            }
        }
        Ok(PlanePartition { rows })
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn weight(&self) -> u64 {
        self.rows.iter().flatten().sum()
    }
}

impl fmt::Display for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&lines.join(" / "))
    }
}

/// All plane partitions of `n`, rows compared lexicographically descending.
pub fn enumerate_plane_partitions(n: u64) -> Vec<PlanePartition> {
    let mut out = Vec::new();
    let mut rows = Vec::new();
    plane_rec(n, None, &mut rows, &mut out);
    out
}

fn plane_rec(remaining: u64, above: Option<&[u64]>, rows: &mut Vec<Vec<u64>>, out: &mut Vec<PlanePartition>) {
    if remaining == 0 {
        out.push(PlanePartition { rows: rows.clone() });
        return;
    }
    let mut candidates = Vec::new();
    bounded_rows(remaining, above, &mut Vec::new(), &mut candidates);
    for row in candidates {
        let s: u64 = row.iter().sum();
        rows.push(row);
        let last = rows.last().unwrap().clone();
        plane_rec(remaining - s, Some(&last), rows, out);
        rows.pop();
    }
}

/// Non-empty rows with sum ≤ `budget`, fitting under `above`, in
/// lexicographically descending order.
fn bounded_rows(budget: u64, above: Option<&[u64]>, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    let i = cur.len();
    let cap_above = match above {
        Some(a) if i >= a.len() => 0,
        Some(a) => a[i],
        None => u64::MAX,
    };
    let cap_left = cur.last().copied().unwrap_or(u64::MAX);
    let cap = budget.min(cap_above).min(cap_left);
    for v in (1..=cap).rev() {
        cur.push(v);
        out.push(cur.clone());
        bounded_rows(budget - v, above, cur, out);
        cur.pop();
    }
}

/// ∏_{k≥1} (1 − x^k)^{−k} truncated at degree `bound`.
pub fn plane_partition_gf(bound: u32) -> TruncSeries {
    let vars = ["x"];
    let one = MultiPoly::one(&vars);
    let x = MultiPoly::var(&vars, "x");
    let mut denom = one.clone();
    for k in 1..=bound {
        let factor = (&one - &x.pow(k)).pow(k);
        denom = TruncSeries::new(&denom * &factor, bound).poly().clone();
    }
    series_inverse(&denom, bound).expect("constant term is 1")
}

/// Number of plane partitions of `n`, read from the generating product.
pub fn count_plane_partitions(n: u64) -> BigInt {
    let s = plane_partition_gf(n as u32);
    s.coeff(&[n as u32]).expect("within bound").to_integer()
}

/// Plane partitions of `n` fitting in `m` rows and `cols` columns with every
/// entry at most `l` (`None` for unbounded), by direct enumeration. The
/// enumeration refuses boxes with more than `cell_cap` cells.
pub fn count_boxed_plane_partitions(n: u64, l: Option<u64>, m: usize, cols: usize, cell_cap: u64) -> Result<BigInt> {
    check_cap("box cells", (m as u64).saturating_mul(cols as u64), cell_cap)?;
    let mut grid = vec![vec![0u64; cols]; m];
    let mut count = BigInt::zero();
    box_rec(0, n, l.unwrap_or(u64::MAX), &mut grid, &mut count);
    Ok(count)
}

fn box_rec(cell: usize, remaining: u64, l: u64, grid: &mut Vec<Vec<u64>>, count: &mut BigInt) {
    let m = grid.len();
    let cols = grid.first().map_or(0, |r| r.len());
    if remaining == 0 {
        *count += 1;
        return;
    }
    if cell == m * cols {
        return;
    }
    let (i, j) = (cell / cols, cell % cols);
    let mut cap = l.min(remaining);
    if i > 0 {
        cap = cap.min(grid[i - 1][j]);
    }
    if j > 0 {
        cap = cap.min(grid[i][j - 1]);
    }
    for v in (0..=cap).rev() {
        grid[i][j] = v;
        box_rec(cell + 1, remaining - v, l, grid, count);
    }
    grid[i][j] = 0;
}
