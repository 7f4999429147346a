use clap::Subcommand;
use combanal::masterthm::*;
use serde_json::json;

use super::{arg, num};
use crate::output::Report;
use crate::{parse, usage, CmdResult, Ctx};

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Coefficient of x^ξ in 1/det(I − diag(x)A).
    Coeff {
        /// Rows separated by ';', entries by ',', e.g. "0,1,1;1,0,1;1,1,0".
        #[arg(long)]
        matrix: String,
        /// Multidegree ξ, e.g. 2,2,2.
        #[arg(long)]
        xi: Option<String>,
        /// Refuse multidegrees of larger total degree.
        #[arg(long, default_value_t = 16)]
        max_degree: u64,
        /// Also expand the redundant product ∏Xᵢ^{ξᵢ}.
        #[arg(long)]
        redundant: bool,
        /// Print the determinant itself.
        #[arg(long)]
        denominator: bool,
    },
    /// Derangements of n.
    Derange {
        n: u64,
        /// Through the Master Theorem as well as the recurrence.
        #[arg(long)]
        redundant: bool,
    },
    /// Arrangements of x₁^{ξ₁}…xₙ^{ξₙ} by symbols left in place.
    Rencontres {
        /// Multiplicities ξ, e.g. 2,1,1.
        xi: String,
        /// Only arrangements with exactly m symbols in place.
        #[arg(long)]
        fixed: Option<u64>,
        /// Cross-check through the Master Theorem.
        #[arg(long)]
        via_master: bool,
    },
}

fn u32s(xs: &[u64]) -> Vec<u32> {
    xs.iter().map(|&x| x.min(u32::MAX as u64) as u32).collect()
}

pub fn run(cmd: Cmd, ctx: &Ctx) -> CmdResult {
    let _ = ctx;
    match cmd {
        Cmd::Coeff { matrix, xi, max_degree, redundant, denominator } => {
            let a = arg(parse::matrix(&matrix))?;
            if denominator {
                let v = master_denominator(&a)?;
                return Ok(Report::scalar(v));
            }
            let Some(xi) = xi else {
                return usage("--xi is required unless --denominator is given");
            };
            let xi = u32s(&arg(parse::u64_list(&xi))?);
            let c = master_coefficient(&a, &xi, max_degree)?;
            if !redundant {
                return Ok(Report::scalar(c));
            }
            let r = redundant_coefficient(&a, &xi, max_degree)?;
            Ok(Report::value(
                format!("master     {c}\nredundant  {r}\nagree      {}", c == r),
                json!({ "master": c.to_string(), "redundant": r.to_string(), "agree": c == r }),
            ))
        }
        Cmd::Derange { n, redundant } => {
            let d = derangements(n);
            if !redundant {
                return Ok(Report::scalar(d));
            }
            if n > 10 {
                return Err(crate::Failure::Refused(format!("--redundant expands a determinant in {n} variables; at most 10")));
            }
            let m = derangements_redundant(n);
            Ok(Report::value(
                format!("recurrence  {d}\nmaster      {m}"),
                json!({ "recurrence": num(&d), "master": num(&m) }),
            ))
        }
        Cmd::Rencontres { xi, fixed, via_master } => {
            let xs = arg(parse::u64_list(&xi))?;
            if let Some(m) = fixed {
                let v = generalized_rencontres(m, &xs)?;
                if !via_master {
                    return Ok(Report::scalar(v));
                }
                let w = rencontres_via_master(m, &u32s(&xs))?;
                return Ok(Report::value(
                    format!("table   {v}\nmaster  {w}"),
                    json!({ "table": num(&v), "master": num(&w) }),
                ));
            }
            let dist = rencontres_distribution(&xs)?;
            let mut rows = Vec::new();
            for (m, v) in &dist {
                let mut row = vec![m.to_string(), v.to_string()];
                if via_master {
                    row.push(rencontres_via_master(*m, &u32s(&xs))?.to_string());
                }
                rows.push(row);
            }
            let headers: &[&str] = if via_master { &["fixed", "count", "master"] } else { &["fixed", "count"] };
            Ok(Report::table(headers, rows))
        }
    }
}
