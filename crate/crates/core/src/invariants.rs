//! Binary quantics and the operator calculus of seminvariants.
//!
//! Coefficients are indeterminates named `a0 .. ap`; covariants also use
//! `x` and `y`. The default convention writes the quantic as
//! Σ C(p,k)·a_k·x^{p−k}y^k, for which
//!
//! Ω = a₀∂/∂a₁ + 2a₁∂/∂a₂ + … + p·a_{p−1}∂/∂a_p,
//! O = p·a₁∂/∂a₀ + (p−1)a₂∂/∂a₁ + … + a_p∂/∂a_{p−1}.
//!
//! Other conventions rescale a_k, and the operators are rescaled to match.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactcore::{binomial, factorial, nullspace, rat, BigRat, MultiPoly};
use crate::error::domain;
use crate::{Error, Result};

/// How the coefficient a_k is weighted in the quantic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Convention {
    /// Σ C(p,k)·a_k·x^{p−k}y^k.
    #[default]
    Binomial,
    /// Σ a_k·x^{p−k}y^k.
    Plain,
    /// a₀xᵖ + p·a₁x^{p−1}y + p(p−1)·a₂x^{p−2}y² + …, weights p!/(p−k)!.
    /// Ω becomes Σ a_{k−1}∂/∂a_k.
    Derived,
}

/// A binary quantic of order p in a fixed convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BinaryQuantic {
    pub p: usize,
    pub convention: Convention,
}

impl BinaryQuantic {
    pub fn new(p: usize, convention: Convention) -> Result<Self> {
        if p == 0 {
            return domain("a binary quantic needs order p ≥ 1");
        }
        Ok(BinaryQuantic { p, convention })
    }

    pub fn binomial(p: usize) -> Result<Self> {
        Self::new(p, Convention::Binomial)
    }

    /// a0 .. ap.
    pub fn coeff_vars(&self) -> Vec<String> {
        coeff_vars(self.p)
    }

    /// a0 .. ap, x, y.
    pub fn covariant_vars(&self) -> Vec<String> {
        let mut v = self.coeff_vars();
        v.push("x".into());
        v.push("y".into());
        v
    }

    /// Weight of a_k in the quantic.
    pub fn weight(&self, k: usize) -> BigRat {
        let p = self.p as u64;
        let k = k as u64;
        BigRat::from_integer(match self.convention {
            Convention::Binomial => binomial(p, k),
            Convention::Plain => BigInt::one(),
            Convention::Derived => factorial(p) / factorial(p - k),
        })
    }

    /// The quantic itself as a polynomial over a0..ap, x, y.
    pub fn form(&self) -> MultiPoly {
        let vars = self.covariant_vars();
        let one = MultiPoly::one(&vars);
        let (xi, yi) = (self.p + 1, self.p + 2);
        let mut f = one.zero_like();
        for k in 0..=self.p {
            let mut e = vec![0u32; vars.len()];
            e[k] = 1;
            e[xi] = (self.p - k) as u32;
            e[yi] = k as u32;
            f = &f + &one.term_like(e, self.weight(k));
        }
        f
    }

    /// Ω = Σ_k (p−k+1)·(w_{k−1}/w_k)·a_{k−1}∂/∂a_k: the binomial operator
    /// carried through the rescaling of the coefficients.
    pub fn omega(&self, f: &MultiPoly) -> MultiPoly {
        let p = self.p;
        let mut out = f.zero_like();
        for k in 1..=p {
            // (p − k + 1)·w_{k−1}/w_k
            let c = rat((p - k + 1) as i64) * self.weight(k - 1) / self.weight(k);
            out = &out + &derivation_term(f, k - 1, k, &c);
        }
        out
    }

    /// O = Σ_k (k+1)·(w_{k+1}/w_k)·a_{k+1}∂/∂a_k.
    pub fn oop(&self, f: &MultiPoly) -> MultiPoly {
        let p = self.p;
        let mut out = f.zero_like();
        for k in 0..p {
            let c = rat((k + 1) as i64) * self.weight(k + 1) / self.weight(k);
            out = &out + &derivation_term(f, k + 1, k, &c);
        }
        out
    }
}

pub fn coeff_vars(p: usize) -> Vec<String> {
    (0..=p).map(|k| format!("a{k}")).collect()
}

/// c·a_src·∂f/∂a_dst, or zero when either indeterminate is absent.
fn derivation_term(f: &MultiPoly, src: usize, dst: usize, c: &BigRat) -> MultiPoly {
    let (Some(si), Some(di)) = (f.var_index(&format!("a{src}")), f.var_index(&format!("a{dst}"))) else {
        return f.zero_like();
    };
    let d = f.partial(di);
    if d.is_zero() {
        return d;
    }
    (&d * &f.monomial_like(si, 1)).scale(c)
}

/// Ω on the binomial quantic of order p.
pub fn omega(f: &MultiPoly, p: usize) -> MultiPoly {
    BinaryQuantic { p, convention: Convention::Binomial }.omega(f)
}

/// O on the binomial quantic of order p.
pub fn oop(f: &MultiPoly, p: usize) -> MultiPoly {
    BinaryQuantic { p, convention: Convention::Binomial }.oop(f)
}

/// Sum of coefficient suffixes, when every term agrees.
pub fn weight(f: &MultiPoly) -> Option<u64> {
    let idx: Vec<(usize, u64)> = f
        .vars()
        .iter()
        .enumerate()
        .filter_map(|(i, v)| v.strip_prefix('a').and_then(|s| s.parse().ok()).map(|k| (i, k)))
        .collect();
    let mut w = None;
    for (e, _) in f.terms() {
        let t: u64 = idx.iter().map(|&(i, k)| e[i] as u64 * k).sum();
        match w {
            None => w = Some(t),
            Some(v) if v != t => return None,
            _ => {}
        }
    }
    w
}

/// The coefficients C_k = O^k(seed)/k! until O annihilates.
pub fn covariant_chain(seed: &MultiPoly, p: usize) -> Result<Vec<MultiPoly>> {
    if !omega(seed, p).is_zero() {
        return Err(Error::Rejected("seed is not annihilated by Ω".into()));
    }
    let mut chain = vec![seed.clone()];
    let mut cur = seed.clone();
    let mut k = 1u64;
    loop {
        cur = oop(&cur, p);
        if cur.is_zero() {
            break;
        }
        // a finite-degree seminvariant chain ends after at most degree·p steps
        chain.push(cur.scale(&BigRat::new(BigInt::one(), factorial(k))));
        k += 1;
    }
    Ok(chain)
}

/// Σ C_k·x^{ω−k}y^k over a0..ap, x, y, with ω + 1 chain members.
pub fn covariant_from_seed(seed: &MultiPoly, p: usize) -> Result<MultiPoly> {
    let chain = covariant_chain(seed, p)?;
    let q = BinaryQuantic::binomial(p)?;
    let vars = q.covariant_vars();
    let order = chain.len() - 1;
    let one = MultiPoly::one(&vars);
    let (xi, yi) = (p + 1, p + 2);
    let mut out = one.zero_like();
    for (k, c) in chain.iter().enumerate() {
        let c = c.embed(&vars)?;
        let mon = &one.monomial_like(xi, (order - k) as u32) * &one.monomial_like(yi, k as u32);
        out = &out + &(&c * &mon);
    }
    Ok(out)
}

/// x = lX + mY, y = l′X + m′Y.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearTransform2 {
    pub l: BigRat,
    pub m: BigRat,
    pub l2: BigRat,
    pub m2: BigRat,
}

impl LinearTransform2 {
    pub fn new(l: BigRat, m: BigRat, l2: BigRat, m2: BigRat) -> Result<Self> {
        let t = LinearTransform2 { l, m, l2, m2 };
        if t.modulus().is_zero() {
            return domain("transform modulus lm′ − l′m must be nonzero");
        }
        Ok(t)
    }

    pub fn from_ints(l: i64, m: i64, l2: i64, m2: i64) -> Result<Self> {
        Self::new(rat(l), rat(m), rat(l2), rat(m2))
    }

    pub fn modulus(&self) -> BigRat {
        &self.l * &self.m2 - &self.l2 * &self.m
    }
}

/// New coefficients A_0..A_p as linear forms in the a's, living in the
/// ring of `like`.
pub fn transformed_coefficients(q: &BinaryQuantic, t: &LinearTransform2, like: &MultiPoly) -> Result<Vec<MultiPoly>> {
    let p = q.p;
    let xy = ["X", "Y"];
    let xv = MultiPoly::var(&xy, "X");
    let yv = MultiPoly::var(&xy, "Y");
    let x_img = &xv.scale(&t.l) + &yv.scale(&t.m);
    let y_img = &xv.scale(&t.l2) + &yv.scale(&t.m2);
    let mut out = vec![like.zero_like(); p + 1];
    for k in 0..=p {
        let Some(ak) = like.var_index(&format!("a{k}")) else {
            return Err(Error::Dimension(format!("polynomial ring lacks a{k}")));
        };
        let expanded = &x_img.pow((p - k) as u32) * &y_img.pow(k as u32);
        for (j, slot) in out.iter_mut().enumerate() {
            let c = expanded.coeff(&[(p - j) as u32, j as u32]);
            if c.is_zero() {
                continue;
            }
            let c = c * q.weight(k) / q.weight(j);
            *slot = &*slot + &like.monomial_like(ak, 1).scale(&c);
        }
    }
    Ok(out)
}

/// Outcome of substituting a transform into a candidate invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariance {
    /// f(A; X, Y) is a constant multiple c of f(a; x, y).
    pub holds: bool,
    /// s with c = M^s. `None` when the identity fails or when |M| = 1 leaves
    /// s undetermined.
    pub exponent: Option<i64>,
    /// The multiplier c, when f(A) is proportional to f(a).
    pub factor: Option<BigRat>,
}

/// Test f(A₀..A_p; X, Y) = M^s·f(a₀..a_p; x, y) as a polynomial identity.
/// `x` and `y`, if present in the ring, are replaced by the new variables
/// X = (m′x − my)/M and Y = (−l′x + ly)/M.
pub fn invariance_check(f: &MultiPoly, q: &BinaryQuantic, t: &LinearTransform2) -> Result<Invariance> {
    let mm = t.modulus();
    let mut images = transformed_coefficients(q, t, f)?;
    let nvars = f.vars().len();
    images.truncate(q.p + 1);
    let mut full: Vec<MultiPoly> = (0..nvars).map(|i| f.monomial_like(i, 1)).collect();
    for (k, img) in images.into_iter().enumerate() {
        let i = f.var_index(&format!("a{k}")).expect("checked above");
        full[i] = img;
    }
    if let (Some(xi), Some(yi)) = (f.var_index("x"), f.var_index("y")) {
        let x = f.monomial_like(xi, 1);
        let y = f.monomial_like(yi, 1);
        full[xi] = (&x.scale(&t.m2) - &y.scale(&t.m)).scale(&mm.recip());
        full[yi] = (&y.scale(&t.l) - &x.scale(&t.l2)).scale(&mm.recip());
    }
    let g = f.compose(&full);
    let fail = Invariance { holds: false, exponent: None, factor: None };
    let (Some((e, cf)), Some((e2, cg))) = (f.leading_term(), g.leading_term()) else {
        let both_zero = f.is_zero() && g.is_zero();
        return Ok(Invariance { holds: both_zero, ..fail });
    };
    if e != e2 {
        return Ok(fail);
    }
    let c = cg / cf;
    if g != f.scale(&c) {
        return Ok(fail);
    }
    let exponent = power_of(&mm, &c);
    if exponent.is_none() && !mm.abs().is_one() {
        // proportional, but not by a power of the modulus
        return Ok(Invariance { holds: false, exponent: None, factor: Some(c) });
    }
    let exponent = if mm.abs().is_one() { None } else { exponent };
    let holds = !mm.abs().is_one() || c.abs().is_one();
    Ok(Invariance { holds, exponent, factor: Some(c) })
}

/// s with base^s = c for integer s, when |base| ≠ 1.
fn power_of(base: &BigRat, c: &BigRat) -> Option<i64> {
    if base.abs().is_one() || c.is_zero() {
        return None;
    }
    let mut pos = BigRat::one();
    let mut neg = BigRat::one();
    let inv = base.recip();
    for s in 0..=256i64 {
        if &pos == c {
            return Some(s);
        }
        if s > 0 && &neg == c {
            return Some(-s);
        }
        pos *= base;
        neg *= &inv;
    }
    None
}

/// w = ip/2 for an invariant of degree i; `None` when ip is odd.
pub fn invariant_weight(i: u64, p: u64) -> Option<u64> {
    (i * p).is_even().then(|| i * p / 2)
}

/// Exponent vectors over a0..ap of total degree j and weight w.
fn isobaric_monomials(p: usize, j: u32, w: u64) -> Vec<Vec<u32>> {
    fn rec(k: usize, p: usize, j: u32, w: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k > p {
            if j == 0 && w == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let max_e = if k == 0 { j } else { j.min((w / k as u64) as u32) };
        for e in (0..=max_e).rev() {
            cur.push(e);
            rec(k + 1, p, j - e, w - e as u64 * k as u64, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, p, j, w, &mut Vec::new(), &mut out);
    out
}

/// Primitive integer multiple with positive leading coefficient.
pub fn normalize(f: &MultiPoly) -> MultiPoly {
    let Some((_, lead)) = f.leading_term() else {
        return f.clone();
    };
    let mut den = BigInt::one();
    let mut num = BigInt::zero();
    for (_, c) in f.terms() {
        den = den.lcm(c.denom());
    }
    for (_, c) in f.terms() {
        num = num.gcd(&(c * BigRat::from_integer(den.clone())).to_integer());
    }
    let mut s = BigRat::new(den, num);
    if lead.is_negative() {
        s = -s;
    }
    f.scale(&s)
}

/// Basis of seminvariants of degree j and weight w for the binomial
/// quantic of order p: the kernel of Ω on isobaric monomials, each vector
/// normalized to a primitive integer polynomial.
pub fn seminvariant_basis(p: usize, j: u32, w: u64) -> Vec<MultiPoly> {
    let vars = coeff_vars(p);
    let source = isobaric_monomials(p, j, w);
    if source.is_empty() {
        return vec![];
    }
    let one = MultiPoly::one(&vars);
    let images: Vec<MultiPoly> = source
        .iter()
        .map(|e| omega(&one.term_like(e.clone(), BigRat::one()), p))
        .collect();
    let mut rows: BTreeMap<Vec<u32>, Vec<BigRat>> = BTreeMap::new();
    for (c, img) in images.iter().enumerate() {
        for (e, v) in img.terms() {
            rows.entry(e.to_vec()).or_insert_with(|| vec![BigRat::zero(); source.len()])[c] = v.clone();
        }
    }
    let a: Vec<Vec<BigRat>> = rows.into_values().collect();
    nullspace(&a, source.len())
        .into_iter()
        .map(|v| {
            let f = MultiPoly::from_terms(&vars, source.iter().cloned().zip(v));
            normalize(&f)
        })
        .collect()
}

/// Number of partitions of `n` into at most `parts` parts, each ≤ `max`.
pub fn gaussian_count(n: u64, parts: u64, max: u64) -> BigInt {
    let n = n as usize;
    // dp over part sizes 1..=max with a count of parts used
    let k = parts as usize;
    let mut dp = vec![vec![BigInt::zero(); n + 1]; k + 1];
    dp[0][0] = BigInt::one();
    for size in 1..=max as usize {
        if size > n {
            break;
        }
        for used in 1..=k {
            for s in size..=n {
                let t = dp[used - 1][s - size].clone();
                dp[used][s] += t;
            }
        }
    }
    (0..=k).map(|u| dp[u][n].clone()).sum()
}

/// Cayley–Sylvester: dim of seminvariants of degree j, weight w for order p
/// is N(w) − N(w − 1), N counting partitions into at most j parts ≤ p.
/// Past the middle weight jp/2 the difference is negative and the space is
/// empty.
pub fn cayley_sylvester_dimension(p: u64, j: u64, w: u64) -> BigInt {
    let n = gaussian_count(w, j, p);
    if w == 0 {
        return n;
    }
    (n - gaussian_count(w - 1, j, p)).max(BigInt::zero())
}

/// Non-unitary partitions of w with parts ≤ j; with `exact` the largest part
/// must equal j.
pub fn nonunitary_partitions(w: u64, j: u64, exact: bool) -> BigInt {
    fn rec(n: u64, max: u64, need: Option<u64>) -> BigInt {
        if n == 0 {
            return if need.is_none() { BigInt::one() } else { BigInt::zero() };
        }
        let mut acc = BigInt::zero();
        let top = need.unwrap_or(max).min(n).min(max);
        for part in (2..=top).rev() {
            if let Some(r) = need {
                if part != r {
                    continue;
                }
            }
            acc += rec(n - part, part, None);
        }
        acc
    }
    if w == 0 {
        return if exact { BigInt::zero() } else { BigInt::one() };
    }
    rec(w, j, exact.then_some(j))
}

/// Hammond's sources for the binomial quantic of order p, up to weight
/// `max_weight` ≤ p: U = a₀, then for each weight w ≥ 2 the quadrinvariant
/// Q_w (H for w = 2) when w is even, and the cubic source C_w when w is
/// odd. Each is checked against Ω before it is returned.
pub fn protomorphs(p: usize, max_weight: usize) -> Result<Vec<(String, MultiPoly)>> {
    if p < 2 {
        return domain("protomorphs need p ≥ 2");
    }
    let vars = coeff_vars(p);
    let one = MultiPoly::one(&vars);
    let a = |k: usize| one.monomial_like(k, 1);
    let mut out = vec![("U".to_string(), a(0))];
    for w in 2..=max_weight.min(p) {
        let (name, f) = if w % 2 == 0 {
            let mut q = one.zero_like();
            for k in 0..=w {
                let c = binomial(w as u64, k as u64) * if k % 2 == 0 { 1 } else { -1 };
                q = &q + &(&a(k) * &a(w - k)).scale(&BigRat::from_integer(c));
            }
            let name = if w == 2 { "H".to_string() } else { format!("Q{w}") };
            (name, q.scale(&crate::exactcore::ratio(1, 2)))
        } else {
            (format!("C{w}"), cubic_source(p, w)?)
        };
        if !omega(&f, p).is_zero() {
            return Err(Error::Rejected(format!("{name} is not annihilated by Ω")));
        }
        out.push((name, f));
    }
    Ok(out)
}

/// The degree-3 seminvariant of odd weight w whose terms all contain a₀ or
/// a₁, scaled so that a₀²a_w has coefficient 1.
fn cubic_source(p: usize, w: usize) -> Result<MultiPoly> {
    let vars = coeff_vars(p);
    let basis = seminvariant_basis(p, 3, w as u64);
    // restrict the kernel to the allowed support
    let allowed = |e: &[u32]| e[0] > 0 || e[1] > 0;
    let mut rows: BTreeMap<Vec<u32>, Vec<BigRat>> = BTreeMap::new();
    for (c, f) in basis.iter().enumerate() {
        for (e, v) in f.terms() {
            if !allowed(e) {
                rows.entry(e.to_vec()).or_insert_with(|| vec![BigRat::zero(); basis.len()])[c] = v.clone();
            }
        }
    }
    let a: Vec<Vec<BigRat>> = rows.into_values().collect();
    let combos = if a.is_empty() {
        (0..basis.len())
            .map(|i| (0..basis.len()).map(|j| if i == j { BigRat::one() } else { BigRat::zero() }).collect())
            .collect()
    } else {
        nullspace(&a, basis.len())
    };
    let mut lead = vec![0u32; p + 1];
    lead[0] = 2;
    lead[w] = 1;
    for v in combos {
        let mut f = MultiPoly::zero(&vars);
        for (c, b) in v.iter().zip(&basis) {
            f = &f + &b.scale(c);
        }
        let c = f.coeff(&lead);
        if !c.is_zero() {
            return Ok(f.scale(&c.recip()));
        }
    }
    Err(Error::Rejected(format!("no cubic source of weight {w}")))
}

/// A syzygant found by `syzygant_search`.
#[derive(Clone, Debug, PartialEq)]
pub struct Syzygant {
    pub alpha: Vec<BigRat>,
    pub quotient: MultiPoly,
}

/// Rational α with Σαᵢ·sourceᵢ divisible by a₀^k, one per basis vector of
/// the solution space, each with its quotient. The quotient is checked
/// against Ω. An empty result means only α = 0 works.
pub fn syzygant_search(sources: &[MultiPoly], k: u32) -> Result<Vec<Syzygant>> {
    let Some(first) = sources.first() else {
        return Ok(vec![]);
    };
    if sources.iter().any(|s| !s.same_ring(first)) {
        return Err(Error::Dimension("sources must share one ring".into()));
    }
    let a0 = first
        .var_index("a0")
        .ok_or_else(|| Error::Dimension("sources need the indeterminate a0".into()))?;
    let p = first.vars().iter().filter(|v| v.starts_with('a')).count() - 1;
    let mut rows: BTreeMap<Vec<u32>, Vec<BigRat>> = BTreeMap::new();
    for (c, s) in sources.iter().enumerate() {
        for (e, v) in s.terms() {
            if e[a0] < k {
                rows.entry(e.to_vec()).or_insert_with(|| vec![BigRat::zero(); sources.len()])[c] = v.clone();
            }
        }
    }
    let a: Vec<Vec<BigRat>> = rows.into_values().collect();
    let basis = if a.is_empty() {
        (0..sources.len())
            .map(|i| (0..sources.len()).map(|j| if i == j { BigRat::one() } else { BigRat::zero() }).collect())
            .collect()
    } else {
        nullspace(&a, sources.len())
    };
    let divisor = first.monomial_like(a0, k);
    let mut out = Vec::new();
    for alpha in basis {
        let mut sum = first.zero_like();
        for (c, s) in alpha.iter().zip(sources) {
            sum = &sum + &s.scale(c);
        }
        let quotient = sum
            .div_exact(&divisor)
            .ok_or_else(|| Error::Rejected("combination not divisible after all".into()))?;
        if !omega(&quotient, p).is_zero() {
            return Err(Error::Rejected("quotient is not a seminvariant".into()));
        }
        out.push(Syzygant { alpha, quotient });
    }
    Ok(out)
}

/// The Prior–MacMahon product
/// [Σ ±aᵢ/Δ(rest)]·[Σ ±Δ(rest)/aᵢ], signs alternating from +, with
/// Δ(y₁..y_{n−1}) = ∏_{i<j}(yᵢ − yⱼ). Equals n² when Σaᵢ^j = 0 for
/// 1 ≤ j ≤ n − 2.
pub fn prior_product(a: &[BigRat]) -> Result<BigRat> {
    let n = a.len();
    if n < 2 {
        return domain("need at least two values");
    }
    let mut left = BigRat::zero();
    let mut right = BigRat::zero();
    for i in 0..n {
        let rest: Vec<&BigRat> = a.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, v)| v).collect();
        let mut d = BigRat::one();
        for x in 0..rest.len() {
            for y in x + 1..rest.len() {
                d *= rest[x] - rest[y];
            }
        }
        if d.is_zero() || a[i].is_zero() {
            return domain("degenerate values: a zero or a repeated entry");
        }
        let term_l = &a[i] / &d;
        let term_r = &d / &a[i];
        if i % 2 == 0 {
            left += term_l;
            right += term_r;
        } else {
            left -= term_l;
            right -= term_r;
        }
    }
    Ok(left * right)
}

/// Elementary symmetric functions e₀..e_n of the roots.
pub fn elementary_symmetric(roots: &[BigRat]) -> Vec<BigRat> {
    let mut e = vec![BigRat::one()];
    for r in roots {
        let mut next = vec![BigRat::zero(); e.len() + 1];
        for (k, v) in e.iter().enumerate() {
            next[k] += v;
            next[k + 1] += v * r;
        }
        e = next;
    }
    e
}

/// Results of `roots_correspondence_check`.
#[derive(Clone, Debug, PartialEq)]
pub struct RootsReport {
    pub trials: usize,
    /// Trials where 2a₂ − a₁² = −Σα².
    pub q2_agree: usize,
    /// Trials where 3a₃ − 3a₁a₂ + a₁³ = Σα³ (order ≥ 3 only).
    pub c3_agree: usize,
    /// Prior–MacMahon products for n = 3 root triples summing to zero.
    pub prior_products: Vec<BigRat>,
    /// Degenerate samples that were drawn again.
    pub resampled: usize,
}

/// Random rational roots α of xⁿ − a₁xⁿ⁻¹ + a₂xⁿ⁻² − … (so a_k = e_k),
/// checking the non-unitary correspondences q₂ = −(2) and c₃ = (3), and
/// the n = 3 Prior–MacMahon product on triples with zero sum.
pub fn roots_correspondence_check(p: usize, trials: usize, seed: u64) -> Result<RootsReport> {
    if trials == 0 {
        return domain("need at least one trial");
    }
    if p < 2 {
        return domain("need order p ≥ 2");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| BigRat::new(BigInt::from(rng.gen_range(-20i64..=20)), BigInt::from(rng.gen_range(1i64..=6)));
    let mut report = RootsReport { trials, q2_agree: 0, c3_agree: 0, prior_products: vec![], resampled: 0 };
    for _ in 0..trials {
        let roots: Vec<BigRat> = (0..p).map(|_| draw(&mut rng)).collect();
        let e = elementary_symmetric(&roots);
        let p2: BigRat = roots.iter().map(|r| r * r).sum();
        if rat(2) * &e[2] - &e[1] * &e[1] == -p2 {
            report.q2_agree += 1;
        }
        if p >= 3 {
            let p3: BigRat = roots.iter().map(|r| r * r * r).sum();
            let c3 = rat(3) * &e[3] - rat(3) * &e[1] * &e[2] + &e[1] * &e[1] * &e[1];
            if c3 == p3 {
                report.c3_agree += 1;
            }
        }
        loop {
            let a1 = draw(&mut rng);
            let a2 = draw(&mut rng);
            let a3 = -(&a1 + &a2);
            match prior_product(&[a1, a2, a3]) {
                Ok(v) => {
                    report.prior_products.push(v);
                    break;
                }
                Err(_) => report.resampled += 1,
            }
        }
    }
    Ok(report)
}
