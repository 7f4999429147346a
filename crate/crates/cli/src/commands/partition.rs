use clap::{Args, Subcommand, ValueEnum};
use combanal::partitions::*;
use combanal::BigInt;
use num_traits::ToPrimitive;
use serde_json::json;

use super::{arg, join, num};
use crate::output::Report;
use crate::{parse, usage, work, CmdResult, Ctx};

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Number of partitions of n, optionally constrained.
    Count {
        n: u64,
        #[command(flatten)]
        c: Constraint,
        /// Count sequences whose consecutive parts obey relations, e.g. ">=,>".
        #[arg(long)]
        pattern: Option<String>,
        /// Count partitions into the given parts only (Cayley's denumerant).
        #[arg(long)]
        elements: Option<String>,
    },
    /// List partitions of n in descending lexicographic order.
    Enum {
        n: u64,
        #[command(flatten)]
        c: Constraint,
    },
    /// Tables of counts for 0..=n.
    Table {
        n: u64,
        #[arg(long, value_enum, default_value = "count")]
        kind: TableKind,
        /// Primes for the generalized Euler table.
        #[arg(long, default_value = "")]
        primes: String,
    },
    /// Conjugate partition.
    Conj {
        parts: String,
        /// Draw both dot diagrams.
        #[arg(long)]
        ferrers: bool,
    },
    /// Modular partition rows: each part split into blocks of m.
    Modular {
        parts: String,
        /// Modulus; all moduli 1..=largest part when omitted.
        #[arg(long)]
        modulus: Option<u64>,
    },
    /// Parity of p(n), or leading binary digits of the MacMahon number.
    Parity {
        n: Option<u64>,
        #[arg(long)]
        digits: Option<usize>,
    },
    /// Perfect (or subperfect) partitions of n.
    Perfect {
        n: u64,
        #[arg(long)]
        sub: bool,
    },
    /// Plane partitions of n, boxed counts, or the xy-symmetric polynomial.
    Plane {
        n: Option<u64>,
        /// List them instead of counting.
        #[arg(long)]
        list: bool,
        /// Box with this many rows (requires --cols).
        #[arg(long)]
        rows: Option<usize>,
        #[arg(long)]
        cols: Option<usize>,
        /// Bound on each entry in a boxed count.
        #[arg(long)]
        max: Option<u64>,
        /// Coefficients of the two-layer xy-symmetric polynomial for this axis bound.
        #[arg(long)]
        xy: Option<u32>,
    },
    /// A mixed-radix scale of numeration and its perfect partition.
    Scale {
        /// Digit ranges α₁,α₂,...
        alphas: String,
        /// Write this number in the scale.
        #[arg(long)]
        represent: Option<u64>,
    },
}

#[derive(Args, Debug, Default)]
pub struct Constraint {
    /// Largest part at most m.
    #[arg(long)]
    max_part: Option<u64>,
    /// Smallest part at least h.
    #[arg(long)]
    min_part: Option<u64>,
    /// Exactly k parts.
    #[arg(long)]
    parts: Option<usize>,
    #[arg(long)]
    max_parts: Option<usize>,
    #[arg(long)]
    min_parts: Option<usize>,
    /// Distinct parts only.
    #[arg(long)]
    distinct: bool,
    /// Parts drawn from this list.
    #[arg(long)]
    allowed: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum TableKind {
    /// p(n) by the pentagonal recurrence.
    Count,
    /// u_{x,y}: partitions of x with greatest part y.
    Demorgan,
    /// p(n) mod 2.
    Parity,
    /// Herschel's closed forms for two and three parts against the recurrence.
    Herschel,
    /// Distinct parts against odd parts, both avoiding multiples of the
    /// given primes.
    Euler,
}

impl Constraint {
    fn build(&self) -> CmdResultT<PartitionConstraint> {
        let mut c = PartitionConstraint::none();
        if let Some(m) = self.max_part {
            c = c.max_part(m);
        }
        if let Some(h) = self.min_part {
            c = c.min_part(h);
        }
        if let Some(k) = self.parts {
            c = c.exact_parts(k);
        }
        if let Some(k) = self.max_parts {
            c = c.max_parts(k);
        }
        if let Some(k) = self.min_parts {
            c = c.min_parts(k);
        }
        if self.distinct {
            c = c.distinct();
        }
        if let Some(a) = &self.allowed {
            c = c.allowed(arg(parse::u64_list(a))?);
        }
        Ok(c)
    }

    fn is_none(&self) -> bool {
        self.max_part.is_none()
            && self.min_part.is_none()
            && self.parts.is_none()
            && self.max_parts.is_none()
            && self.min_parts.is_none()
            && !self.distinct
            && self.allowed.is_none()
    }

    /// Only a part count and a lower bound: the Warburton recurrence applies.
    fn warburton(&self) -> Option<(u64, u64)> {
        let only = self.max_part.is_none()
            && self.max_parts.is_none()
            && self.min_parts.is_none()
            && !self.distinct
            && self.allowed.is_none();
        match (only, self.parts) {
            (true, Some(k)) => Some((k as u64, self.min_part.unwrap_or(1))),
            _ => None,
        }
    }
}

type CmdResultT<T> = Result<T, crate::Failure>;

fn enumeration_budget(ctx: &Ctx, n: u64) -> CmdResultT<()> {
    work(ctx, "enumerating partitions", count_partitions(n).to_f64().unwrap_or(f64::INFINITY))
}

pub fn run(cmd: Cmd, ctx: &Ctx) -> CmdResult {
    match cmd {
        Cmd::Count { n, c, pattern, elements } => {
            if let Some(p) = pattern {
                let rels = p
                    .split(',')
                    .map(|r| Relation::parse(r.trim()).ok_or_else(|| format!("unknown relation {r:?}")))
                    .collect::<Result<Vec<_>, _>>();
                return Ok(Report::scalar(relation_pattern_count(n, &arg(rels)?)));
            }
            if let Some(e) = elements {
                return Ok(Report::scalar(cayley_denumerant(&arg(parse::u64_list(&e))?, n)?));
            }
            if c.is_none() {
                return Ok(Report::scalar(count_partitions(n)));
            }
            if let Some((k, h)) = c.warburton() {
                return Ok(Report::scalar(warburton_count(n, k, h)));
            }
            let pc = c.build()?;
            enumeration_budget(ctx, n)?;
            Ok(Report::scalar(enumerate_partitions(n, &pc).len()))
        }
        Cmd::Enum { n, c } => {
            let pc = c.build()?;
            enumeration_budget(ctx, n)?;
            let all = enumerate_partitions(n, &pc);
            let json = json!(all.iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>());
            Ok(Report::list("partition", all.iter().map(|p| p.to_string()).collect()).with_json(json))
        }
        Cmd::Table { n, kind, primes } => table(n, kind, &primes, ctx),
        Cmd::Conj { parts, ferrers } => {
            let p = arg(parse::partition(&parts))?;
            let c = conjugate(&p);
            let json = json!({ "partition": p.parts(), "conjugate": c.parts() });
            let mut r = Report::scalar(&c).with_json(json);
            if ferrers {
                let g = FerrersGraph::new(p);
                r = r.with_text(format!("{}\n\n{}", g.render(), g.transpose().render()));
            }
            Ok(r)
        }
        Cmd::Modular { parts, modulus } => {
            let p = arg(parse::partition(&parts))?;
            let moduli: Vec<u64> = match modulus {
                Some(m) => vec![m],
                None => (1..=p.largest().unwrap_or(1)).collect(),
            };
            let mut rows = Vec::new();
            for m in &moduli {
                rows.push((*m, modular_partition(&p, *m)?));
            }
            if modulus.is_some() {
                let (_, r) = &rows[0];
                return Ok(Report::table(&["modulus", "rows"], vec![vec![moduli[0].to_string(), format_modular_rows(r)]])
                    .with_text(format_modular_rows(r))
                    .with_json(json!(r)));
            }
            let json = json!(rows.iter().map(|(m, r)| json!({ "modulus": m, "rows": r })).collect::<Vec<_>>());
            Ok(Report::table(
                &["modulus", "rows"],
                rows.iter().map(|(m, r)| vec![m.to_string(), format_modular_rows(r)]).collect(),
            )
            .with_json(json))
        }
        Cmd::Parity { n, digits } => match (n, digits) {
            (Some(n), None) => {
                work(ctx, "parity recurrence", n as f64)?;
                Ok(Report::scalar(parity_p(n)).with_json(json!(parity_p(n).to_string())))
            }
            (None, Some(k)) => {
                work(ctx, "parity recurrence", k as f64)?;
                let d = macmahon_digits(k);
                Ok(Report::value(d.clone(), json!(d)))
            }
            _ => usage("give either n or --digits k"),
        },
        Cmd::Perfect { n, sub } => {
            work(ctx, "perfect partitions", n as f64)?;
            let all = if sub { enumerate_subperfect(n) } else { enumerate_perfect(n) };
            let json = json!(all.iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>());
            Ok(Report::list("partition", all.iter().map(|p| p.to_string()).collect()).with_json(json))
        }
        Cmd::Plane { n, list, rows, cols, max, xy } => {
            if let Some(i) = xy {
                work(ctx, "two-layer graphs", 4f64.powi(i as i32))?;
                let c = xy_symmetric_two_layer_coeffs(i);
                let rows: Vec<Vec<String>> = c
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| **v != BigInt::from(0))
                    .map(|(w, v)| vec![w.to_string(), v.to_string()])
                    .collect();
                return Ok(Report::table(&["weight", "count"], rows).with_text(xy_symmetric_two_layer_poly(i).to_string()));
            }
            let Some(n) = n else { return usage("give n or --xy") };
            match (rows, cols) {
                (Some(m), Some(k)) => {
                    let cells = (m * k) as u64;
                    work(ctx, "boxed plane partitions", (n as f64 + 1.0).powf(cells as f64).min(f64::MAX))?;
                    Ok(Report::scalar(count_boxed_plane_partitions(n, max, m, k, ctx.max_work)?))
                }
                (None, None) if max.is_none() => {
                    if list {
                        work(ctx, "plane partitions", count_plane_partitions(n).to_f64().unwrap_or(f64::INFINITY))?;
                        let all = enumerate_plane_partitions(n);
                        let json = json!(all.iter().map(|p| p.rows().to_vec()).collect::<Vec<_>>());
                        Ok(Report::list("plane partition", all.iter().map(|p| p.to_string()).collect()).with_json(json))
                    } else {
                        work(ctx, "plane partition series", (n * n) as f64)?;
                        Ok(Report::scalar(count_plane_partitions(n)))
                    }
                }
                _ => usage("a boxed count needs both --rows and --cols"),
            }
        }
        Cmd::Scale { alphas, represent } => {
            let s = scale_of_numeration(&arg(parse::u64_list(&alphas))?)?;
            if let Some(m) = represent {
                let d = s.represent(m)?;
                return Ok(Report::value(join(&d, ","), json!(d)));
            }
            let pp = s.perfect_partition();
            let json = json!({ "place_values": s.place_values, "max": s.max, "perfect_partition": pp.parts() });
            Ok(Report::value(
                format!("place values {}\nmax {}\nperfect partition {}", join(&s.place_values, ","), s.max, pp),
                json,
            ))
        }
    }
}

fn table(n: u64, kind: TableKind, primes: &str, ctx: &Ctx) -> CmdResult {
    let n = n as usize;
    match kind {
        TableKind::Count => {
            work(ctx, "partition table", (n * n) as f64)?;
            let t = partition_table(n);
            Ok(Report::table(&["n", "p"], t.iter().enumerate().map(|(i, v)| vec![i.to_string(), v.to_string()]).collect()))
        }
        TableKind::Parity => {
            work(ctx, "parity table", (n * n) as f64)?;
            let t = parity_table(n);
            Ok(Report::table(&["n", "parity"], t.iter().enumerate().map(|(i, v)| vec![i.to_string(), v.to_string()]).collect()))
        }
        TableKind::Demorgan => {
            work(ctx, "De Morgan table", (n * n) as f64)?;
            let t = demorgan_table(n);
            let mut headers = vec!["x".to_string()];
            headers.extend((1..=n).map(|y| y.to_string()));
            let rows: Vec<Vec<String>> = (1..=n)
                .map(|x| {
                    let mut r = vec![x.to_string()];
                    r.extend((1..=n).map(|y| if y <= x { t[x][y].to_string() } else { String::new() }));
                    r
                })
                .collect();
            let h: Vec<&str> = headers.iter().map(|s| s.as_str()).collect();
            let json = json!((1..=n).map(|x| t[x][1..=x].iter().map(num).collect::<Vec<_>>()).collect::<Vec<_>>());
            Ok(Report::table(&h, rows).with_json(json))
        }
        TableKind::Herschel => {
            work(ctx, "Herschel table", (n * n) as f64)?;
            let mut rows = Vec::new();
            for x in 3..=n as u64 {
                rows.push(vec![
                    x.to_string(),
                    closed_form_u2(x)?.to_string(),
                    demorgan_u(x, 2).to_string(),
                    closed_form_u3(x)?.to_string(),
                    demorgan_u(x, 3).to_string(),
                ]);
            }
            Ok(Report::table(&["x", "u2_closed", "u2", "u3_closed", "u3"], rows))
        }
        TableKind::Euler => {
            let ps = arg(parse::u64_list(primes))?;
            work(ctx, "Euler table", (n * n) as f64)?;
            let rows = (0..=n as u64)
                .map(|k| {
                    let (a, b) = generalized_euler_counts(&ps, k);
                    vec![k.to_string(), a.to_string(), b.to_string()]
                })
                .collect();
            Ok(Report::table(&["n", "distinct", "odd"], rows))
        }
    }
}
