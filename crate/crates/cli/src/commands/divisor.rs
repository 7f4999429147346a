use clap::{Subcommand, ValueEnum};
use combanal::divisors::*;
use serde_json::json;

use super::{join, num};
use crate::output::Report;
use crate::{usage, work, CmdResult, Ctx};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Kind {
    /// Each divisor counts once.
    A,
    /// Odd divisors minus even ones.
    B,
    /// Only divisors with odd cofactor.
    C,
}

impl From<Kind> for DivisorSeriesKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::A => DivisorSeriesKind::A,
            Kind::B => DivisorSeriesKind::B,
            Kind::C => DivisorSeriesKind::C,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Coefficient of xⁿ in the k-th divisor series, or a table of them.
    Series {
        n: u64,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, value_enum, default_value = "a")]
        kind: Kind,
        /// Rows k = 1..=K, columns 1..=n.
        #[arg(long)]
        table: bool,
    },
    /// σ_r(n).
    Sigma {
        n: u64,
        #[arg(long, default_value_t = 1)]
        r: u32,
    },
    /// σ₂(1..=n) read from the plane partition series, beside direct sums.
    Sigma2 { bound: usize },
    /// Potency Σπᵢpᵢ and multiplicity Σπᵢ of n.
    Potency {
        n: Option<u64>,
        /// How many integers have this potency.
        #[arg(long)]
        count: Option<u64>,
        /// Primes p ≤ q with p + q = ν.
        #[arg(long)]
        goldbach: Option<u64>,
    },
    /// Prime factorization, or the number of ways to write m as a product.
    Factorize {
        m: u64,
        /// Count factorizations into integers ≥ 2.
        #[arg(long)]
        count: bool,
        /// Count ordered factorizations.
        #[arg(long)]
        ordered: bool,
    },
    /// Compositions of n into r parts with gcd 1; φ(n) for r = 2.
    Totient {
        n: u64,
        #[arg(long, default_value_t = 2)]
        parts: u32,
    },
}

fn factor_string(f: &[(u64, u32)]) -> String {
    f.iter()
        .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
        .collect::<Vec<_>>()
        .join(" * ")
}

pub fn run(cmd: Cmd, ctx: &Ctx) -> CmdResult {
    match cmd {
        Cmd::Series { n, k, kind, table } => {
            work(ctx, "series terms", (n as f64) * (n as f64) * k as f64)?;
            if table {
                let t = divisor_series_table(kind.into(), n, k)?;
                let mut headers = vec!["k".to_string()];
                headers.extend((1..=n).map(|i| i.to_string()));
                let h: Vec<&str> = headers.iter().map(|s| s.as_str()).collect();
                let rows = t
                    .iter()
                    .enumerate()
                    .map(|(i, r)| {
                        let mut row = vec![(i + 1).to_string()];
                        row.extend(r.iter().map(|v| v.to_string()));
                        row
                    })
                    .collect();
                return Ok(Report::table(&h, rows));
            }
            Ok(Report::scalar(divisor_series_coeff(kind.into(), n, k)?))
        }
        Cmd::Sigma { n, r } => {
            if n == 0 {
                return usage("n must be at least 1");
            }
            work(ctx, "trial divisions", (n as f64).sqrt())?;
            Ok(Report::scalar(sigma(n, r)))
        }
        Cmd::Sigma2 { bound } => {
            work(ctx, "series terms", (bound as f64) * (bound as f64))?;
            let s = sigma2_from_plane_partitions(bound)?;
            let rows = s
                .iter()
                .enumerate()
                .map(|(i, v)| vec![(i + 1).to_string(), v.to_string(), sigma(i as u64 + 1, 2).to_string()])
                .collect();
            Ok(Report::table(&["n", "series", "direct"], rows))
        }
        Cmd::Potency { n, count, goldbach } => match (n, count, goldbach) {
            (Some(n), None, None) => {
                let (pt, mt) = (potency(n)?, multiplicity(n)?);
                let sig = multipartite_signature(n)?;
                Ok(Report::value(
                    format!("potency {pt}\nmultiplicity {mt}\nsignature {}", join(&sig, ",")),
                    json!({ "potency": pt, "multiplicity": mt, "signature": sig }),
                ))
            }
            (None, Some(nu), None) => {
                work(ctx, "series terms", (nu as f64) * (nu as f64).sqrt())?;
                Ok(Report::scalar(potency_count(nu)?))
            }
            (None, None, Some(nu)) => match goldbach_witness(nu) {
                Some((p, q)) => Ok(Report::value(format!("{p} {q}"), json!([p, q]))),
                None => Ok(Report::value("none", json!(null))),
            },
            _ => usage("give one of n, --count ν and --goldbach ν"),
        },
        Cmd::Factorize { m, count, ordered } => {
            if m == 0 {
                return usage("m must be at least 1");
            }
            if count || ordered {
                work(ctx, "divisor walks", (m as f64).sqrt())?;
                return Ok(Report::scalar(factorizations(m, ordered)?));
            }
            let f = factorize(m);
            Ok(Report::value(
                factor_string(&f),
                json!(f.iter().map(|&(p, e)| json!([p, e])).collect::<Vec<_>>()),
            ))
        }
        Cmd::Totient { n, parts } => {
            work(ctx, "divisor walks", n as f64)?;
            let v = totient_multipartite(n, parts)?;
            Ok(Report::scalar(&v).with_json(num(&v)))
        }
    }
}
