use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::BigRat;
use crate::{Error, Result};

/// Exponent vector, one entry per declared indeterminate.
pub type Exponents = Vec<u32>;

/// Exact multivariate polynomial with rational coefficients.
///
/// The indeterminate list is fixed when the polynomial is built and is part
/// of its identity: two polynomials over different lists never compare
/// equal, and arithmetic between them panics. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Exponents, BigRat>,
}

impl MultiPoly {
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        MultiPoly {
            vars: vars.iter().map(|v| v.as_ref().to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one<S: AsRef<str>>(vars: &[S]) -> Self {
        Self::zero(vars).with_constant(BigRat::one())
    }

    pub fn constant<S: AsRef<str>>(vars: &[S], c: BigRat) -> Self {
        Self::zero(vars).with_constant(c)
    }

    /// The polynomial consisting of the single indeterminate `name`.
    ///
    /// Panics when `name` is not declared in `vars`.
    pub fn var<S: AsRef<str>>(vars: &[S], name: &str) -> Self {
        let p = Self::zero(vars);
        let i = p
            .var_index(name)
            .unwrap_or_else(|| panic!("indeterminate {name} not declared"));
        p.monomial_like(i, 1)
    }

    /// Zero polynomial sharing this polynomial's indeterminate list.
    pub fn zero_like(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one_like(&self) -> Self {
        self.constant_like(BigRat::one())
    }

    pub fn constant_like(&self, c: BigRat) -> Self {
        self.zero_like().with_constant(c)
    }

    /// `x_i^e` over this polynomial's indeterminates.
    pub fn monomial_like(&self, i: usize, e: u32) -> Self {
        let mut exps = vec![0; self.vars.len()];
        exps[i] = e;
        let mut p = self.zero_like();
        p.terms.insert(exps, BigRat::one());
        p
    }

    /// Single term `c · x^exps` over this polynomial's indeterminates.
    pub fn term_like(&self, exps: Exponents, c: BigRat) -> Self {
        assert_eq!(exps.len(), self.vars.len(), "exponent vector length");
        let mut p = self.zero_like();
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn from_terms<S: AsRef<str>, I>(vars: &[S], terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, BigRat)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), p.vars.len(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    fn with_constant(mut self, c: BigRat) -> Self {
        if !c.is_zero() {
            self.terms.insert(vec![0; self.vars.len()], c);
        }
        self
    }

    pub(crate) fn add_term(&mut self, e: Exponents, c: BigRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn same_ring(&self, other: &MultiPoly) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }

    fn assert_ring(&self, other: &MultiPoly) {
        assert!(
            self.same_ring(other),
            "indeterminate lists differ: {:?} vs {:?}",
            self.vars,
            other.vars
        );
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigRat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigRat {
        self.terms.get(exps).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn constant_term(&self) -> BigRat {
        self.coeff(&vec![0; self.vars.len()])
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(|e| total(e)).max()
    }

    /// Homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u64) -> MultiPoly {
        let mut p = self.zero_like();
        for (e, c) in &self.terms {
            if total(e) == d {
                p.terms.insert(e.clone(), c.clone());
            }
        }
        p
    }

    /// Keep only terms for which `keep` holds.
    pub fn filter_terms(&self, mut keep: impl FnMut(&[u32]) -> bool) -> MultiPoly {
        let mut p = self.zero_like();
        for (e, c) in &self.terms {
            if keep(e) {
                p.terms.insert(e.clone(), c.clone());
            }
        }
        p
    }

    pub fn scale(&self, c: &BigRat) -> MultiPoly {
        if c.is_zero() {
            return self.zero_like();
        }
        let mut p = self.clone();
        for v in p.terms.values_mut() {
            *v *= c;
        }
        p
    }

    /// Product with overflow checking on exponents.
    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.assert_ring(other);
        let mut p = self.zero_like();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut e = Vec::with_capacity(ea.len());
                for (x, y) in ea.iter().zip(eb) {
                    e.push(x.checked_add(*y).ok_or(Error::ExponentOverflow)?);
                }
                p.add_term(e, ca * cb);
            }
        }
        Ok(p)
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut result = self.one_like();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative with respect to indeterminate `i`.
    pub fn partial(&self, i: usize) -> MultiPoly {
        let mut p = self.zero_like();
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = e.clone();
                f[i] -= 1;
                p.add_term(f, c * BigRat::from_integer(e[i].into()));
            }
        }
        p
    }

    /// Substitute `images[i]` for indeterminate `i`; the result lives in the
    /// ring of the images.
    pub fn compose(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.vars.len(), "one image per indeterminate");
        let target = images
            .first()
            .map(|p| p.zero_like())
            .unwrap_or_else(|| self.zero_like());
        let mut powers: Vec<Vec<MultiPoly>> = images.iter().map(|p| vec![p.one_like()]).collect();
        let mut out = target;
        for (e, c) in &self.terms {
            let mut t = out.constant_like(c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][k as usize];
            }
            out = &out + &t;
        }
        out
    }

    /// Evaluate at rational values, one per indeterminate.
    pub fn eval(&self, values: &[BigRat]) -> BigRat {
        assert_eq!(values.len(), self.vars.len());
        let mut sum = BigRat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (v, &k) in values.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(v.clone(), k as usize);
                }
            }
            sum += t;
        }
        sum
    }

    /// Re-embed into a ring whose indeterminate list contains all of ours.
    pub fn embed<S: AsRef<str>>(&self, vars: &[S]) -> Result<MultiPoly> {
        let mut p = Self::zero(vars);
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                p.var_index(v).ok_or_else(|| {
                    Error::Dimension(format!("indeterminate {v} missing from target ring"))
                })
            })
            .collect::<Result<_>>()?;
        for (e, c) in &self.terms {
            let mut f = vec![0; p.vars.len()];
            for (i, &k) in e.iter().enumerate() {
                f[map[i]] = k;
            }
            p.terms.insert(f, c.clone());
        }
        Ok(p)
    }

    /// Lexicographically greatest term.
    pub fn leading_term(&self) -> Option<(&Exponents, &BigRat)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder. Divides leading terms in lex order, which succeeds at every
    /// step precisely when the divisor divides exactly.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        self.assert_ring(divisor);
        let (ld, lc) = divisor.leading_term()?;
        let (ld, lc) = (ld.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = self.zero_like();
        while let Some((lr, cr)) = rem.leading_term() {
            if lr.iter().zip(&ld).any(|(a, b)| a < b) {
                return None;
            }
            let e: Exponents = lr.iter().zip(&ld).map(|(a, b)| a - b).collect();
            let c = cr / &lc;
            let t = self.term_like(e, c);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Largest power `k` of indeterminate `i` dividing every term.
    pub fn min_exponent(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).min().unwrap_or(0)
    }

    fn fmt_monomial(&self, e: &[u32], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, &k) in self.vars.iter().zip(e) {
            if k == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if k == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{k}")?;
            }
        }
        Ok(())
    }

    /// Terms in display order: descending total degree, then descending lex.
    pub fn display_order(&self) -> Vec<(&Exponents, &BigRat)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|a, b| total(b.0).cmp(&total(a.0)).then_with(|| b.0.cmp(a.0)));
        ts
    }
}

fn total(e: &[u32]) -> u64 {
    e.iter().map(|&x| x as u64).sum()
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.display_order().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let is_const = e.iter().all(|&k| k == 0);
            if is_const {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                self.fmt_monomial(e, f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.vars.join(","), self)
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.assert_ring(rhs);
        let mut p = self.clone();
        for (e, c) in &rhs.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.assert_ring(rhs);
        let mut p = self.clone();
        for (e, c) in &rhs.terms {
            p.add_term(e.clone(), -c.clone());
        }
        p
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    /// Panics on exponent overflow; see [`MultiPoly::checked_mul`].
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs)
            .expect("exponent overflow in polynomial product")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let mut p = self.clone();
        for v in p.terms.values_mut() {
            *v = -v.clone();
        }
        p
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}
