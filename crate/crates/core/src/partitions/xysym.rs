//! Two-layer xy-symmetric graphs.
//!
//! An xy-symmetric layer is a self-conjugate Ferrers graph, which splits into
//! nested right-angled hooks of odd sizes 1, 3, …, 2i−1. The lower layer
//! uses hooks S₁ ⊆ {1..i} including the outermost hook i; the upper layer
//! uses any S₂. Stacking is legal when the upper layer sits inside the lower
//! one, which for hook sets reads: for every k, S₁ has at least as many hooks
//! of index ≥ k as S₂ does. Pairs failing this are the terms deleted by the
//! Ω rule (negative powers of the auxiliary variable).

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactcore::MultiPoly;

/// Coefficients c[w] of the two-layer polynomial for axis bound `i`.
pub fn xy_symmetric_two_layer_coeffs(i: u32) -> Vec<BigInt> {
    if i == 0 {
        return vec![];
    }
    let max_w = 2 * (i as usize) * (i as usize);
    let mut c = vec![BigInt::zero(); max_w + 1];
    let n = i as usize;
    for s1 in 0u32..(1 << n) {
        if s1 & (1 << (n - 1)) == 0 {
            continue;
        }
        for s2 in 0u32..(1 << n) {
            let survives = (0..n).all(|k| (s1 >> k).count_ones() >= (s2 >> k).count_ones());
            if survives {
                c[hook_weight(s1) + hook_weight(s2)] += 1;
            }
        }
    }
    c
}

/// Bit k of `set` stands for hook k+1 of size 2k+1.
fn hook_weight(set: u32) -> usize {
    (0..32).filter(|k| set & (1 << k) != 0).map(|k| 2 * k + 1).sum()
}

/// The two-layer polynomial Σ c_w x^w.
pub fn xy_symmetric_two_layer_poly(i: u32) -> MultiPoly {
    let vars = ["x"];
    let zero = MultiPoly::zero(&vars);
    let mut p = zero.clone();
    for (w, c) in xy_symmetric_two_layer_coeffs(i).into_iter().enumerate() {
        if !c.is_zero() {
            p = &p + &zero.term_like(vec![w as u32], crate::BigRat::from_integer(c));
        }
    }
    p
}

/// Number of surviving two-layer graphs of total weight `w`.
pub fn xy_symmetric_count(w: u64, i: u32) -> BigInt {
    xy_symmetric_two_layer_coeffs(i)
        .get(w as usize)
        .cloned()
        .unwrap_or_default()
}
