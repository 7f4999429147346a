use combanal::divisors::*;
use combanal::partitions::{enumerate_perfect, partition_table};
use combanal::{BigInt, Error};
use proptest::prelude::*;

use DivisorSeriesKind::{A, B, C};

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Brute force over ordered k-tuples of pairs (s, m) with Σ s·m = n.
fn tuple_oracle(kind: DivisorSeriesKind, n: u64, k: u32) -> BigInt {
    fn rec(kind: DivisorSeriesKind, left: u64, k: u32, prod: i64) -> i64 {
        if k == 0 {
            return if left == 0 { prod } else { 0 };
        }
        let mut total = 0;
        for s in 1..=left {
            for m in 1..=left / s {
                if kind == DivisorSeriesKind::C && m % 2 == 0 {
                    continue;
                }
                let f = if kind == DivisorSeriesKind::B && s % 2 == 0 { -(s as i64) } else { s as i64 };
                total += rec(kind, left - s * m, k - 1, prod * f);
            }
        }
        total
    }
    big(rec(kind, n, k, 1))
}

#[test]
fn first_level_examples() {
    assert_eq!(divisor_series_coeff(A, 6, 1).unwrap(), big(12));
    assert_eq!(divisor_series_coeff(A, 1, 1).unwrap(), big(1));
    assert_eq!(divisor_series_coeff(B, 6, 1).unwrap(), big(-4));
    // divisors of 12 with odd conjugate: 4 (m = 3) and 12 (m = 1)
    assert_eq!(divisor_series_coeff(C, 12, 1).unwrap(), big(16));
    assert!(divisor_series_coeff(A, 3, 0).is_err());
    assert!(divisor_series_coeff(A, 0, 1).is_err());
}

#[test]
fn sigma_agrees_for_n_up_to_100() {
    for n in 1..=100u64 {
        let direct: u64 = (1..=n).filter(|d| n % d == 0).sum();
        assert_eq!(divisor_series_coeff(A, n, 1).unwrap(), BigInt::from(direct));
        assert_eq!(sigma(n, 1), BigInt::from(direct));
    }
}

#[test]
fn series_match_tuple_oracle() {
    for kind in [A, B, C] {
        for k in 1..=3 {
            let s = divisor_series(kind, 10, k).unwrap();
            for n in 1..=10 {
                assert_eq!(s[n as usize], tuple_oracle(kind, n, k), "{kind} n={n} k={k}");
            }
        }
    }
}

#[test]
fn table_shape() {
    let t = divisor_series_table(A, 16, 5).unwrap();
    assert_eq!(t.len(), 5);
    assert!(t.iter().all(|r| r.len() == 16));
    assert_eq!(t[0][5], big(12));
    // A_k begins at q^k with coefficient 1
    for (k, row) in t.iter().enumerate() {
        assert!(row[..k].iter().all(|c| *c == big(0)));
        assert_eq!(row[k], big(1));
    }
}

#[test]
fn sigma2_via_plane_partitions() {
    let s = sigma2_from_plane_partitions(30).unwrap();
    assert_eq!(s[0], big(1));
    assert_eq!(s[3], big(21));
    for n in 1..=30u64 {
        let direct: u64 = (1..=n).filter(|d| n % d == 0).map(|d| d * d).sum();
        assert_eq!(s[n as usize - 1], BigInt::from(direct));
    }
    let p = plane_partition_series(6);
    assert_eq!(p, [1, 1, 3, 6, 13, 24, 48].map(big).to_vec());
    assert!(sigma2_from_plane_partitions(0).is_err());
}

#[test]
fn potency_and_multiplicity() {
    assert_eq!((potency(33).unwrap(), multiplicity(33).unwrap()), (14, 2));
    assert_eq!((potency(1).unwrap(), multiplicity(1).unwrap()), (0, 0));
    assert_eq!((potency(12).unwrap(), multiplicity(12).unwrap()), (7, 3));
    assert_eq!(multipartite_signature(33).unwrap(), vec![1, 1]);
    assert_eq!(multipartite_signature(360).unwrap(), vec![3, 2, 1]);
    assert!(potency(0).is_err());
}

#[test]
fn potency_counts_match_search() {
    assert_eq!(potency_count(1).unwrap(), big(0));
    assert_eq!(potency_count(5).unwrap(), big(2));
    for nu in 0..=20u64 {
        // the largest integer of potency ν is below 3^(ν/3 + 1)
        let bound = 3u64.pow(nu as u32 / 3 + 1);
        let direct = (1..=bound).filter(|&n| potency(n).unwrap() == nu).count();
        assert_eq!(potency_count(nu).unwrap(), BigInt::from(direct), "ν={nu}");
    }
}

#[test]
fn goldbach_recast() {
    for nu in (6..=60).step_by(2) {
        let (p, q) = goldbach_witness(nu).expect("witness");
        let n = p * q;
        assert_eq!(potency(n).unwrap(), nu);
        assert_eq!(multiplicity(n).unwrap(), 2);
    }
    assert!(goldbach_witness(11).is_none());
}

#[test]
fn factorization_counts() {
    assert_eq!(factorizations(12, false).unwrap(), big(4));
    assert_eq!(factorizations(12, true).unwrap(), big(8));
    assert_eq!(factorizations(13, false).unwrap(), big(1));
    assert_eq!(factorizations(13, true).unwrap(), big(1));
    assert_eq!(factorizations(1, true).unwrap(), big(1));
    assert_eq!(factorizations(8, true).unwrap(), big(4));
    assert_eq!(factorizations(8, true).unwrap(), BigInt::from(enumerate_perfect(7).len()));
    for n in 1..=30u64 {
        assert_eq!(factorizations(n + 1, true).unwrap(), BigInt::from(enumerate_perfect(n).len()));
    }
    // powers of a prime factor like partitions of the exponent
    let p = partition_table(12);
    for e in 0..=12u32 {
        assert_eq!(factorizations(2u64.pow(e), false).unwrap(), p[e as usize]);
    }
}

#[test]
fn totients() {
    assert_eq!(totient_bipartite(6).unwrap(), big(2));
    assert_eq!(totient_bipartite(13).unwrap(), big(12));
    assert_eq!(totient_bipartite(12).unwrap(), big(4));
    assert_eq!(totient_bipartite(1).unwrap(), big(1));
    for n in 2..=200u64 {
        let pairs = (1..n).filter(|&a| gcd(a, n - a) == 1).count() as u64;
        let classical = (1..=n).filter(|&a| gcd(a, n) == 1).count() as u64;
        assert_eq!(totient_bipartite(n).unwrap(), BigInt::from(pairs));
        assert_eq!(pairs, classical);
        assert_eq!(euler_phi(n), classical);
    }
    // tripartite: brute force over compositions
    for n in 3..=25u64 {
        let mut c = 0;
        for a in 1..n {
            for b in 1..n - a {
                if gcd(gcd(a, b), n - a - b) == 1 {
                    c += 1;
                }
            }
        }
        assert_eq!(totient_multipartite(n, 3).unwrap(), big(c));
    }
    assert!(matches!(totient_bipartite(0), Err(Error::Domain(_))));
}

proptest! {
    #[test]
    fn factorize_round_trips(n in 1u64..1_000_000) {
        let f = factorize(n);
        prop_assert_eq!(f.iter().map(|&(p, e)| p.pow(e)).product::<u64>(), n);
        prop_assert!(f.iter().all(|&(p, _)| is_prime(p)));
        prop_assert!(f.windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn potency_is_additive(a in 1u64..2000, b in 1u64..2000) {
        prop_assert_eq!(potency(a * b).unwrap(), potency(a).unwrap() + potency(b).unwrap());
        prop_assert_eq!(multiplicity(a * b).unwrap(), multiplicity(a).unwrap() + multiplicity(b).unwrap());
    }

    #[test]
    fn b_series_is_sign_split(n in 1u64..500) {
        let odd: i64 = (1..=n).filter(|d| n % d == 0 && d % 2 == 1).map(|d| d as i64).sum();
        let even: i64 = (1..=n).filter(|d| n % d == 0 && d % 2 == 0).map(|d| d as i64).sum();
        prop_assert_eq!(divisor_series_coeff(DivisorSeriesKind::B, n, 1).unwrap(), big(odd - even));
    }
}
