use num_traits::Zero;

use super::{BigRat, MultiPoly};
use crate::{Error, Result};

/// Multivariate power series known exactly up to a total-degree bound.
///
/// Optionally each indeterminate also carries its own degree cap; monomials
/// exceeding a cap are dropped exactly like those beyond the total bound.
/// Coefficients outside the known region are not zero but unknown, so
/// [`TruncSeries::coeff`] refuses them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    poly: MultiPoly,
    bound: u32,
    caps: Option<Vec<u32>>,
}

impl TruncSeries {
    pub fn new(poly: MultiPoly, bound: u32) -> Self {
        Self::with_caps(poly, bound, None)
    }

    pub fn with_caps(poly: MultiPoly, bound: u32, caps: Option<Vec<u32>>) -> Self {
        if let Some(c) = &caps {
            assert_eq!(c.len(), poly.vars().len(), "one cap per indeterminate");
        }
        let poly = truncate(&poly, bound, caps.as_deref());
        TruncSeries { poly, bound, caps }
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn caps(&self) -> Option<&[u32]> {
        self.caps.as_deref()
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    fn inside(&self, exps: &[u32]) -> Result<()> {
        let degree: u64 = exps.iter().map(|&e| e as u64).sum();
        if degree > self.bound as u64 {
            return Err(Error::OutOfBound {
                degree,
                bound: self.bound,
            });
        }
        if let Some(caps) = &self.caps {
            if exps.iter().zip(caps).any(|(e, c)| e > c) {
                return Err(Error::OutOfBound {
                    degree,
                    bound: self.bound,
                });
            }
        }
        Ok(())
    }

    /// Exact coefficient of `x^exps`; an error if the monomial lies outside
    /// the truncation region.
    pub fn coeff(&self, exps: &[u32]) -> Result<BigRat> {
        if exps.len() != self.poly.vars().len() {
            return Err(Error::Dimension(format!(
                "monomial has {} exponents, series has {} indeterminates",
                exps.len(),
                self.poly.vars().len()
            )));
        }
        self.inside(exps)?;
        Ok(self.poly.coeff(exps))
    }

    /// Product, truncated to the smaller of the two bounds (and the tighter
    /// of any per-variable caps).
    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        let bound = self.bound.min(other.bound);
        let caps = match (&self.caps, &other.caps) {
            (Some(a), Some(b)) => Some(a.iter().zip(b).map(|(x, y)| *x.min(y)).collect()),
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (None, None) => None,
        };
        let p = truncated_product(&self.poly, &other.poly, bound, caps.as_deref());
        TruncSeries {
            poly: p,
            bound,
            caps,
        }
    }

    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        let bound = self.bound.min(other.bound);
        let caps = match (&self.caps, &other.caps) {
            (Some(a), Some(b)) => Some(a.iter().zip(b).map(|(x, y)| *x.min(y)).collect()),
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (None, None) => None,
        };
        TruncSeries::with_caps(&self.poly + &other.poly, bound, caps)
    }
}

fn fits(e: &[u32], bound: u32, caps: Option<&[u32]>) -> bool {
    let d: u64 = e.iter().map(|&x| x as u64).sum();
    d <= bound as u64 && caps.is_none_or(|c| e.iter().zip(c).all(|(x, y)| x <= y))
}

fn truncate(p: &MultiPoly, bound: u32, caps: Option<&[u32]>) -> MultiPoly {
    p.filter_terms(|e| fits(e, bound, caps))
}

fn truncated_product(a: &MultiPoly, b: &MultiPoly, bound: u32, caps: Option<&[u32]>) -> MultiPoly {
    let mut out = a.zero_like();
    for (ea, ca) in a.terms() {
        for (eb, cb) in b.terms() {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            if fits(&e, bound, caps) {
                out.add_term(e, ca * cb);
            }
        }
    }
    out
}

/// Inverse of `p` as a power series, exact through total degree `bound`.
pub fn series_inverse(p: &MultiPoly, bound: u32) -> Result<TruncSeries> {
    series_inverse_capped(p, bound, None)
}

/// As [`series_inverse`], additionally dropping monomials beyond per-variable
/// caps. Dropping them is exact because the retained region is closed under
/// taking divisors of monomials.
pub fn series_inverse_capped(
    p: &MultiPoly,
    bound: u32,
    caps: Option<&[u32]>,
) -> Result<TruncSeries> {
    let c0 = p.constant_term();
    if c0.is_zero() {
        return Err(Error::SingularSeries);
    }
    let inv_c0 = c0.recip();
    // Homogeneous recurrence: q_d = -(1/c0) * sum_{j=1..d} p_j q_{d-j}.
    let parts: Vec<MultiPoly> = (0..=bound as u64)
        .map(|d| truncate(&p.homogeneous_part(d), bound, caps))
        .collect();
    let mut q: Vec<MultiPoly> = vec![p.constant_like(inv_c0.clone())];
    for d in 1..=bound as usize {
        let mut acc = p.zero_like();
        for j in 1..=d {
            if parts[j].is_zero() || q[d - j].is_zero() {
                continue;
            }
            acc = &acc + &truncated_product(&parts[j], &q[d - j], bound, caps);
        }
        q.push(acc.scale(&-inv_c0.clone()));
    }
    let mut total = p.zero_like();
    for part in &q {
        total = &total + part;
    }
    Ok(TruncSeries::with_caps(
        total,
        bound,
        caps.map(|c| c.to_vec()),
    ))
}
