//! Ballot problems and the electoral sampling model.
//!
//! The ballot side is exact: André's "always ahead" probability, the
//! never-behind variant, and MacMahon's product for many candidates. The
//! sampling side follows the hypergeometric chance C_pq of drawing p of one
//! party and q of the other, with its Stirling approximation, the cube law,
//! and a seeded simulation of constituencies shovelled from one bin.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{check_cap, domain};
use crate::exactcore::{binomial, multinomial, BigRat};
use crate::{Error, Result};

/// P(first candidate strictly ahead throughout) = (m − n)/(m + n).
pub fn ballot_strictly_ahead(m: u64, n: u64) -> Result<BigRat> {
    if m < n {
        return domain(format!("need m ≥ n, got m = {m}, n = {n}"));
    }
    if m == n {
        // a tie at the end means the leader was caught
        return Ok(BigRat::zero());
    }
    Ok(BigRat::new(BigInt::from(m - n), BigInt::from(m + n)))
}

/// P(first candidate never behind) = 1 − b/(a + 1).
pub fn ballot_never_behind(a: u64, b: u64) -> Result<BigRat> {
    if b > a {
        return domain(format!("need a ≥ b, got a = {a}, b = {b}"));
    }
    Ok(BigRat::one() - BigRat::new(BigInt::from(b), BigInt::from(a + 1)))
}

/// Final counts a₁ ≥ a₂ ≥ … ≥ a_n, all positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VoteTally(Vec<u64>);

impl VoteTally {
    pub fn new(counts: Vec<u64>) -> Result<Self> {
        if counts.is_empty() || counts.contains(&0) {
            return domain("a tally needs at least one candidate and positive counts");
        }
        if counts.windows(2).any(|w| w[0] < w[1]) {
            return domain("tally counts must be non-increasing");
        }
        Ok(VoteTally(counts))
    }

    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Number of distinct counting orders.
    pub fn orderings(&self) -> BigInt {
        multinomial(&self.0)
    }
}

/// ∏_{t<s} (1 − a_s/(a_t + s − t)): the chance that at every stage of the
/// count candidate t has at least as many votes as candidate s for t < s.
pub fn macmahon_order_probability(t: &VoteTally) -> Result<BigRat> {
    let a = t.counts();
    if a.len() < 2 {
        return domain("need at least two candidates");
    }
    let mut prod = BigRat::one();
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let den = BigInt::from(a[i] + (j - i) as u64);
            prod *= BigRat::one() - BigRat::new(BigInt::from(a[j]), den);
        }
    }
    Ok(prod)
}

/// A population of A voters, b for one party and c for the other, sampled
/// n at a time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElectorateModel {
    pub b: u64,
    pub c: u64,
    pub n: u64,
}

impl ElectorateModel {
    pub fn new(b: u64, c: u64, n: u64) -> Result<Self> {
        if n == 0 || n > b + c {
            return domain(format!("sample size must satisfy 0 < n ≤ A = {}", b + c));
        }
        Ok(ElectorateModel { b, c, n })
    }

    /// A = b + c.
    pub fn population(&self) -> u64 {
        self.b + self.c
    }

    /// λ = c/b.
    pub fn lambda(&self) -> f64 {
        self.c as f64 / self.b as f64
    }

    /// The proportional split p = nb/A, as a real number.
    pub fn proportional_p(&self) -> f64 {
        self.n as f64 * self.b as f64 / self.population() as f64
    }
}

/// C_pq = C(b,p)·C(c,q)/C(A,p+q): the chance that a sample of n = p + q holds
/// p of the first party and q of the second. Zero when p > b or q > c.
pub fn sample_prob_exact(m: &ElectorateModel, p: u64, q: u64) -> Result<BigRat> {
    if p + q != m.n {
        return domain(format!("p + q = {} differs from the sample size {}", p + q, m.n));
    }
    if p > m.b || q > m.c {
        return Ok(BigRat::zero());
    }
    Ok(BigRat::new(binomial(m.b, p) * binomial(m.c, q), binomial(m.population(), m.n)))
}

/// Σ C_{p₀+k, q₀−k} for |k| ≤ r about the integer split p₀ = nb/A, summed
/// exactly. Requires nb/A to be an integer.
pub fn sample_cumulative_exact(m: &ElectorateModel, r: u64) -> Result<BigRat> {
    Ok(sample_cumulative_profile(m, r)?.pop().expect("r + 1 entries"))
}

/// S₀, S₁, …, S_r in one pass. Numerators C(b,p)·C(c,q) are stepped as
/// integers, with one division by C(A,n) at the end.
pub fn sample_cumulative_profile(m: &ElectorateModel, r: u64) -> Result<Vec<BigRat>> {
    let a = m.population();
    if (m.n * m.b) % a != 0 {
        return domain("the proportional split nb/A is not an integer");
    }
    let (b, c) = (m.b, m.c);
    let p0 = m.n * m.b / a;
    let q0 = m.n - p0;
    let centre = binomial(b, p0) * binomial(c, q0);
    let denom = binomial(a, m.n);
    let (mut up_b, mut up_c) = (binomial(b, p0), binomial(c, q0));
    let (mut dn_b, mut dn_c) = (up_b.clone(), up_c.clone());
    let mut acc = centre;
    let mut out = vec![BigRat::new(acc.clone(), denom.clone())];
    for k in 1..=r {
        // C(b, p₀+k)·C(c, q₀−k)
        if p0 + k <= b && k <= q0 {
            up_b = up_b * (b - (p0 + k - 1)) / (p0 + k);
            up_c = up_c * (q0 - k + 1) / (c - (q0 - k));
            acc += &up_b * &up_c;
        }
        // C(b, p₀−k)·C(c, q₀+k)
        if k <= p0 && q0 + k <= c {
            dn_b = dn_b * (p0 - k + 1) / (b - (p0 - k));
            dn_c = dn_c * (c - (q0 + k - 1)) / (q0 + k);
            acc += &dn_b * &dn_c;
        }
        out.push(BigRat::new(acc.clone(), denom.clone()));
    }
    Ok(out)
}

/// Closest f64 to a rational.
pub fn to_f64(x: &BigRat) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// The Stirling-regime approximation at deviation r.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SampleApprox {
    /// C₀ = √((1 + λ)b / (2πλ·p(b − p))).
    pub c0: f64,
    /// μ with μ² = ½(1 + 1/λ)(1/d + 1/p), d = b − p.
    pub mu: f64,
    /// (2/√π)∫₀^{μr} e^{−z²} dz = erf(μr).
    pub erf_term: f64,
    /// (μ/√π)·e^{−μ²r²}.
    pub tail_term: f64,
    /// erf_term + tail_term.
    pub s_r: f64,
}

/// Smallest of p, b − p and λp for which the approximation is offered.
pub const APPROX_GUARD: f64 = 100.0;

/// C₀ and S_r from the Stirling approximation. Refuses small parameters,
/// for which `sample_prob_exact` should be used instead.
pub fn sample_prob_approx(m: &ElectorateModel, r: u64) -> Result<SampleApprox> {
    if m.b == 0 || m.c == 0 {
        return domain("both parties need voters");
    }
    let b = m.b as f64;
    let lambda = m.lambda();
    let p = m.proportional_p();
    let d = b - p;
    if p < APPROX_GUARD || d < APPROX_GUARD || lambda * p < APPROX_GUARD {
        return Err(Error::Rejected(format!(
            "approximation needs p, b − p and λp all ≥ {APPROX_GUARD}; use sample_prob_exact"
        )));
    }
    let pi = std::f64::consts::PI;
    let c0 = ((1.0 + lambda) * b / (2.0 * pi * lambda * p * d)).sqrt();
    let mu = (0.5 * (1.0 + 1.0 / lambda) * (1.0 / d + 1.0 / p)).sqrt();
    let x = mu * r as f64;
    let erf_term = libm::erf(x);
    let tail_term = mu / pi.sqrt() * (-x * x).exp();
    Ok(SampleApprox { c0, mu, erf_term, tail_term, s_r: erf_term + tail_term })
}

/// Seats split in the ratio v_A^k : v_B^k by largest remainder. A tied
/// remainder goes to the larger vote; equal votes give the odd seat to B.
pub fn power_law_seats(va: f64, vb: f64, seats: u64, k: f64) -> Result<(u64, u64)> {
    if !(va > 0.0 && vb > 0.0) || seats == 0 || !(k > 0.0) {
        return domain("votes and exponent must be positive and seats ≥ 1");
    }
    let wa = va.powf(k);
    let wb = vb.powf(k);
    let qa = seats as f64 * wa / (wa + wb);
    let qb = seats as f64 - qa;
    let (mut sa, mut sb) = (qa.floor() as u64, qb.floor() as u64);
    if sa + sb < seats {
        let (ra, rb) = (qa - qa.floor(), qb - qb.floor());
        if ra > rb || (ra == rb && va > vb) {
            sa += 1;
        } else {
            sb += 1;
        }
    }
    Ok((sa, sb))
}

/// The cube law: exponent 3.
pub fn cube_law_seats(va: f64, vb: f64, seats: u64) -> Result<(u64, u64)> {
    power_law_seats(va, vb, seats, 3.0)
}

/// The √3 rule.
pub fn sqrt3_rule_seats(va: f64, vb: f64, seats: u64) -> Result<(u64, u64)> {
    power_law_seats(va, vb, seats, 3f64.sqrt())
}

/// n = ln V / ln S.
pub fn taagepera_exponent(v: f64, s: f64) -> Result<f64> {
    if !(s >= 2.0 && v >= s) {
        return domain("need V ≥ S ≥ 2");
    }
    Ok(v.ln() / s.ln())
}

/// Channels per MP: 2V/S to constituents plus about S²/2 among members.
pub fn channel_count(v: f64, s: f64) -> f64 {
    2.0 * v / s + s * s / 2.0
}

/// S = (2V)^{1/3}, where the channel count is least.
pub fn cube_root_seat_rule(v: f64) -> Result<f64> {
    if !(v > 0.0) {
        return domain("V must be positive");
    }
    Ok((2.0 * v).cbrt())
}

/// Integer S minimizing the channel count.
pub fn optimal_seats(v: f64) -> Result<u64> {
    let s = cube_root_seat_rule(v)?;
    let lo = s.floor().max(1.0) as u64;
    Ok([lo, lo + 1]
        .into_iter()
        .min_by(|&x, &y| channel_count(v, x as f64).total_cmp(&channel_count(v, y as f64)))
        .expect("two candidates"))
}

/// Parameters of a seeded election.
#[derive(Clone, Debug, PartialEq)]
pub struct ElectionSpec {
    /// National vote share of party A, in (0, 1).
    pub share: f64,
    /// 1 for a perfectly mixed bin, 0 for complete segregation by party.
    pub mixing: f64,
    /// Voters per constituency.
    pub constituencies: Vec<u64>,
}

/// Outcome of `simulate_election`.
#[derive(Clone, Debug, PartialEq)]
pub struct ElectionReport {
    pub seats_a: u64,
    pub seats_b: u64,
    /// Constituencies split evenly, decided by a seeded coin.
    pub ties: u64,
    pub vote_share_a: f64,
    pub seat_share_a: f64,
    /// Seat share predicted by the cube law from the national vote.
    pub cube_law_share_a: f64,
}

/// Cap on the simulated electorate.
pub const MAX_SIMULATED_VOTERS: u64 = 20_000_000;

/// Fill a bin with round(share·N) voters for A out of N = Σ sizes, order it
/// by key mixing·U + (1 − mixing)·[voter is B] with U uniform, and shovel
/// consecutive runs into the constituencies. Mixing 1 is a random
/// partition of the bin; smaller values cluster each party together.
pub fn simulate_election(spec: &ElectionSpec, seed: u64) -> Result<ElectionReport> {
    if !(spec.share > 0.0 && spec.share < 1.0) {
        return domain("vote share must lie in (0, 1)");
    }
    if !(0.0..=1.0).contains(&spec.mixing) {
        return domain("mixing must lie in [0, 1]");
    }
    if spec.constituencies.is_empty() || spec.constituencies.contains(&0) {
        return domain("need at least one non-empty constituency");
    }
    let total: u64 = spec.constituencies.iter().sum();
    check_cap("simulated voters", total, MAX_SIMULATED_VOTERS)?;
    let a_votes = (spec.share * total as f64).round() as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bin: Vec<bool> = (0..total).map(|i| i < a_votes).collect();
    if spec.mixing >= 1.0 {
        bin.shuffle(&mut rng);
    } else {
        let mut keyed: Vec<(f64, bool)> = bin
            .iter()
            .map(|&is_a| {
                let u: f64 = rng.gen();
                (spec.mixing * u + (1.0 - spec.mixing) * if is_a { 0.0 } else { 1.0 }, is_a)
            })
            .collect();
        keyed.sort_by(|x, y| x.0.total_cmp(&y.0));
        bin = keyed.into_iter().map(|(_, v)| v).collect();
    }
    let mut report = ElectionReport {
        seats_a: 0,
        seats_b: 0,
        ties: 0,
        vote_share_a: a_votes as f64 / total as f64,
        seat_share_a: 0.0,
        cube_law_share_a: 0.0,
    };
    let mut start = 0usize;
    for &size in &spec.constituencies {
        let end = start + size as usize;
        let a = bin[start..end].iter().filter(|&&v| v).count() as u64;
        let b = size - a;
        if a > b || (a == b && rng.gen::<bool>()) {
            report.seats_a += 1;
        } else {
            report.seats_b += 1;
        }
        if a == b {
            report.ties += 1;
        }
        start = end;
    }
    let seats = report.seats_a + report.seats_b;
    report.seat_share_a = report.seats_a as f64 / seats as f64;
    let (wa, wb) = (report.vote_share_a.powi(3), (1.0 - report.vote_share_a).powi(3));
    report.cube_law_share_a = wa / (wa + wb);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_candidates() {
        assert_eq!(ballot_strictly_ahead(2, 1).unwrap(), BigRat::new(1.into(), 3.into()));
        assert_eq!(ballot_never_behind(3, 2).unwrap(), BigRat::new(1.into(), 2.into()));
        assert!(ballot_never_behind(1, 2).is_err());
    }

    #[test]
    fn tally_order_enforced() {
        assert!(VoteTally::new(vec![1, 2]).is_err());
        assert!(VoteTally::new(vec![2, 0]).is_err());
    }
}
