use clap::{Subcommand, ValueEnum};
use combanal::invariants::{self, BinaryQuantic, LinearTransform2};
use combanal::MultiPoly;
use serde_json::json;

use super::{arg, join, num};
use crate::output::Report;
use crate::{parse, usage, work, CmdResult, Ctx};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Conv {
    Binomial,
    Plain,
    Derived,
}

impl From<Conv> for invariants::Convention {
    fn from(c: Conv) -> Self {
        match c {
            Conv::Binomial => invariants::Convention::Binomial,
            Conv::Plain => invariants::Convention::Plain,
            Conv::Derived => invariants::Convention::Derived,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Apply Ω to a polynomial in a0..ap.
    Omega {
        poly: String,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value = "binomial")]
        convention: Conv,
    },
    /// Apply O to a polynomial in a0..ap.
    Oop {
        poly: String,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value = "binomial")]
        convention: Conv,
    },
    /// Covariant generated from a seminvariant seed.
    Covariant {
        seed: String,
        #[arg(long)]
        order: usize,
        /// List the chain O^k(seed)/k! instead of the assembled covariant.
        #[arg(long)]
        chain: bool,
    },
    /// Seminvariants of given degree and weight.
    Basis {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        degree: Option<u32>,
        #[arg(long)]
        weight: Option<u64>,
        /// Hammond's sources up to this weight instead.
        #[arg(long)]
        protomorphs: Option<usize>,
    },
    /// Test a polynomial for invariance under x = lX + mY, y = l′X + m′Y.
    Check {
        poly: Option<String>,
        #[arg(long)]
        order: usize,
        /// l,m,l′,m′
        #[arg(long, allow_hyphen_values = true)]
        transform: Option<String>,
        /// Random-root checks of the non-unitary correspondence instead.
        #[arg(long)]
        roots: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Combinations Σαᵢ·sourceᵢ divisible by a0^k.
    Syzygant {
        /// Polynomials separated by ';'.
        #[arg(long, allow_hyphen_values = true)]
        sources: String,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        power: u32,
    },
}

fn poly(s: &str, vars: &[String]) -> Result<MultiPoly, crate::Failure> {
    arg(parse::polynomial(s, vars))
}

fn poly_report(f: &MultiPoly) -> Report {
    Report::value(f.to_string(), json!(f.to_string()))
}

pub fn run(cmd: Cmd, ctx: &Ctx) -> CmdResult {
    match cmd {
        Cmd::Omega { poly: s, order, convention } => {
            let q = BinaryQuantic::new(order, convention.into())?;
            Ok(poly_report(&q.omega(&poly(&s, &q.coeff_vars())?)))
        }
        Cmd::Oop { poly: s, order, convention } => {
            let q = BinaryQuantic::new(order, convention.into())?;
            Ok(poly_report(&q.oop(&poly(&s, &q.coeff_vars())?)))
        }
        Cmd::Covariant { seed, order, chain } => {
            let f = poly(&seed, &invariants::coeff_vars(order))?;
            if chain {
                let c = invariants::covariant_chain(&f, order)?;
                let items: Vec<String> = c.iter().map(|m| m.to_string()).collect();
                return Ok(Report::list("coefficient", items.clone()).with_json(json!(items)));
            }
            Ok(poly_report(&invariants::covariant_from_seed(&f, order)?))
        }
        Cmd::Basis { order, degree, weight, protomorphs } => {
            if let Some(w) = protomorphs {
                let ps = invariants::protomorphs(order, w)?;
                let rows = ps.iter().map(|(n, f)| vec![n.clone(), f.to_string()]).collect();
                return Ok(Report::table(&["name", "source"], rows));
            }
            let (Some(j), Some(w)) = (degree, weight) else {
                return usage("give --degree and --weight, or --protomorphs");
            };
            let size = invariants::gaussian_count(w, j as u64, order as u64);
            work(ctx, "isobaric monomials", num_traits::ToPrimitive::to_f64(&size).unwrap_or(f64::INFINITY))?;
            let b = invariants::seminvariant_basis(order, j, w);
            let dim = invariants::cayley_sylvester_dimension(order as u64, j as u64, w);
            let items: Vec<String> = b.iter().map(|f| f.to_string()).collect();
            let text = if items.is_empty() {
                format!("dimension {dim}")
            } else {
                format!("dimension {dim}\n{}", items.join("\n"))
            };
            Ok(Report::list("seminvariant", items.clone())
                .with_text(text)
                .with_json(json!({ "dimension": num(&dim), "basis": items })))
        }
        Cmd::Check { poly: s, order, transform, roots, seed } => {
            if let Some(trials) = roots {
                let r = invariants::roots_correspondence_check(order, trials, seed)?;
                let prior = join(&r.prior_products, ",");
                return Ok(Report::value(
                    format!(
                        "trials {}\nq2 agree {}\nc3 agree {}\nresampled {}\nprior products {prior}",
                        r.trials, r.q2_agree, r.c3_agree, r.resampled
                    ),
                    json!({
                        "trials": r.trials, "q2_agree": r.q2_agree, "c3_agree": r.c3_agree,
                        "resampled": r.resampled,
                        "prior_products": r.prior_products.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    }),
                ));
            }
            let (Some(s), Some(t)) = (s, transform) else {
                return usage("give a polynomial and --transform, or --roots");
            };
            let q = BinaryQuantic::binomial(order)?;
            let f = match parse::polynomial(&s, &q.coeff_vars()) {
                Ok(f) => f,
                Err(_) => poly(&s, &q.covariant_vars())?,
            };
            let t = arg(parse::rational_list(&t))?;
            let [l, m, l2, m2] = <[_; 4]>::try_from(t).map_err(|_| crate::Failure::Usage("--transform takes four numbers".into()))?;
            let inv = invariants::invariance_check(&f, &q, &LinearTransform2::new(l, m, l2, m2)?)?;
            let factor = inv.factor.as_ref().map(|c| c.to_string());
            let exponent = inv.exponent.map(|e| e.to_string());
            Ok(Report::value(
                format!(
                    "invariant {}\nfactor {}\nexponent {}",
                    inv.holds,
                    factor.as_deref().unwrap_or("-"),
                    exponent.as_deref().unwrap_or("-")
                ),
                json!({ "invariant": inv.holds, "factor": factor, "exponent": inv.exponent }),
            ))
        }
        Cmd::Syzygant { sources, order, power } => {
            let vars = invariants::coeff_vars(order);
            let src = sources.split(';').map(|s| poly(s, &vars)).collect::<Result<Vec<_>, _>>()?;
            let found = invariants::syzygant_search(&src, power)?;
            let rows = found.iter().map(|z| vec![join(&z.alpha, ","), z.quotient.to_string()]).collect();
            Ok(Report::table(&["alpha", "quotient"], rows))
        }
    }
}
