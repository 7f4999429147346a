use std::path::PathBuf;

use clap::Subcommand;
use combanal::probelect::*;
use serde_json::json;

use super::{arg, num};
use crate::output::Report;
use crate::{parse, usage, work, CmdResult, Ctx, Failure};

#[derive(Subcommand, Debug)]
pub enum BallotCmd {
    /// P(the winner with m votes leads throughout against n).
    Ahead { m: u64, n: u64 },
    /// P(a never falls behind b).
    Neverbehind { a: u64, b: u64 },
    /// P(candidates stay in their final order throughout), votes per
    /// candidate in final order.
    Order { votes: String },
}

#[derive(Subcommand, Debug)]
pub enum ElectionCmd {
    /// Exact sampling probabilities for an electorate of b + c voters.
    Prob {
        #[command(flatten)]
        model: Model,
        /// C_pq for this p (q = n − p).
        #[arg(long)]
        p: Option<u64>,
        /// S_r: the sample within r of the proportional split.
        #[arg(long)]
        r: Option<u64>,
        /// S_0..S_r as a table.
        #[arg(long)]
        profile: bool,
    },
    /// Normal approximation to S_r beside the exact value.
    Approx {
        #[command(flatten)]
        model: Model,
        #[arg(long)]
        r: u64,
    },
    /// Seats from votes by a power law.
    Cubelaw {
        va: f64,
        vb: f64,
        #[arg(long, default_value_t = 100)]
        seats: u64,
        /// Exponent; 3 for the cube law.
        #[arg(long, default_value_t = 3.0)]
        exponent: f64,
        /// Use exponent √3.
        #[arg(long)]
        sqrt3: bool,
    },
    /// Assembly size from the electorate size by the cube-root rule.
    Assembly {
        voters: f64,
        /// Also report ln V / ln S for an assembly of this size.
        #[arg(long)]
        seats: Option<f64>,
    },
    /// Seeded simulation of a first-past-the-post election.
    Simulate {
        /// National vote share of party A.
        #[arg(long)]
        share: f64,
        /// 1 for well-mixed constituencies, 0 for complete segregation.
        #[arg(long, default_value_t = 1.0)]
        mixing: f64,
        /// CSV with a `voters` column, one row per constituency.
        #[arg(long)]
        constituencies: Option<PathBuf>,
        /// count:size constituencies of equal size.
        #[arg(long)]
        uniform: Option<String>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(clap::Args, Debug)]
pub struct Model {
    /// Voters for the first party.
    #[arg(long)]
    blue: u64,
    /// Voters for the second party.
    #[arg(long)]
    red: u64,
    /// Sample size n.
    #[arg(long)]
    sample: u64,
}

impl Model {
    fn build(&self) -> Result<ElectorateModel, Failure> {
        Ok(ElectorateModel::new(self.blue, self.red, self.sample)?)
    }
}

fn prob(x: &combanal::BigRat) -> Report {
    Report::value(
        format!("{x} ≈ {:.6}", to_f64(x)),
        json!({ "exact": x.to_string(), "approx": num(format!("{:.12}", to_f64(x))) }),
    )
}

pub fn run_ballot(cmd: BallotCmd, _ctx: &Ctx) -> CmdResult {
    match cmd {
        BallotCmd::Ahead { m, n } => Ok(prob(&ballot_strictly_ahead(m, n)?)),
        BallotCmd::Neverbehind { a, b } => Ok(prob(&ballot_never_behind(a, b)?)),
        BallotCmd::Order { votes } => {
            let t = VoteTally::new(arg(parse::u64_list(&votes))?)?;
            Ok(prob(&macmahon_order_probability(&t)?))
        }
    }
}

pub fn run_election(cmd: ElectionCmd, ctx: &Ctx) -> CmdResult {
    match cmd {
        ElectionCmd::Prob { model, p, r, profile } => {
            let m = model.build()?;
            match (p, r) {
                (Some(p), None) => Ok(prob(&sample_prob_exact(&m, p, m.n.saturating_sub(p))?)),
                (None, Some(r)) if profile => {
                    work(ctx, "profile terms", r as f64)?;
                    let s = sample_cumulative_profile(&m, r)?;
                    let rows = s
                        .iter()
                        .enumerate()
                        .map(|(k, x)| vec![k.to_string(), x.to_string(), format!("{:.6}", to_f64(x))])
                        .collect();
                    Ok(Report::table(&["r", "exact", "approx"], rows))
                }
                (None, Some(r)) => Ok(prob(&sample_cumulative_exact(&m, r)?)),
                _ => usage("give exactly one of --p and --r"),
            }
        }
        ElectionCmd::Approx { model, r } => {
            let m = model.build()?;
            let a = sample_prob_approx(&m, r)?;
            let exact = to_f64(&sample_cumulative_exact(&m, r)?);
            let f = |x: f64| format!("{x:.6}");
            Ok(Report::value(
                format!(
                    "C0 {}\nmu {}\nerf {}\ntail {}\nS_r {}\nexact {}",
                    f(a.c0), f(a.mu), f(a.erf_term), f(a.tail_term), f(a.s_r), f(exact)
                ),
                json!({
                    "c0": num(f(a.c0)), "mu": num(f(a.mu)), "erf_term": num(f(a.erf_term)),
                    "tail_term": num(f(a.tail_term)), "s_r": num(f(a.s_r)), "exact": num(f(exact)),
                }),
            ))
        }
        ElectionCmd::Cubelaw { va, vb, seats, exponent, sqrt3 } => {
            let (a, b) = if sqrt3 { sqrt3_rule_seats(va, vb, seats)? } else { power_law_seats(va, vb, seats, exponent)? };
            Ok(Report::value(format!("{a} {b}"), json!({ "a": a, "b": b })))
        }
        ElectionCmd::Assembly { voters, seats } => {
            let s = cube_root_seat_rule(voters)?;
            let best = optimal_seats(voters)?;
            let mut text = format!("cube root {s:.3}\nbest {best}");
            let mut json = json!({ "cube_root": num(format!("{s:.6}")), "best": best });
            if let Some(n) = seats {
                let e = taagepera_exponent(voters, n)?;
                text.push_str(&format!("\nexponent {e:.4}"));
                json["exponent"] = num(format!("{e:.6}"));
            }
            Ok(Report::value(text, json))
        }
        ElectionCmd::Simulate { share, mixing, constituencies, uniform, seed } => {
            let sizes = match (constituencies, uniform) {
                (Some(path), None) => read_constituencies(&path)?,
                (None, Some(u)) => {
                    let (c, s) = u.split_once(':').ok_or_else(|| Failure::Usage("--uniform takes count:size".into()))?;
                    let c: u64 = c.trim().parse().map_err(|_| Failure::Usage(format!("bad count {c:?}")))?;
                    let s: u64 = s.trim().parse().map_err(|_| Failure::Usage(format!("bad size {s:?}")))?;
                    vec![s; c as usize]
                }
                _ => return usage("give one of --constituencies FILE and --uniform count:size"),
            };
            work(ctx, "simulated voters", sizes.iter().sum::<u64>() as f64)?;
            let spec = ElectionSpec { share, mixing, constituencies: sizes };
            let r = simulate_election(&spec, seed)?;
            let f = |x: f64| format!("{x:.4}");
            Ok(Report::value(
                format!(
                    "seats {} {}\nties {}\nvote share {}\nseat share {}\ncube law {}",
                    r.seats_a, r.seats_b, r.ties, f(r.vote_share_a), f(r.seat_share_a), f(r.cube_law_share_a)
                ),
                json!({
                    "seats_a": r.seats_a, "seats_b": r.seats_b, "ties": r.ties,
                    "vote_share_a": num(f(r.vote_share_a)), "seat_share_a": num(f(r.seat_share_a)),
                    "cube_law_share_a": num(f(r.cube_law_share_a)),
                }),
            ))
        }
    }
}

fn read_constituencies(path: &PathBuf) -> Result<Vec<u64>, Failure> {
    let mut rd = csv::Reader::from_path(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let headers = rd.headers().map_err(|e| Failure::Usage(e.to_string()))?.clone();
    let col = headers
        .iter()
        .position(|h| h.trim() == "voters")
        .ok_or_else(|| Failure::Usage(format!("{} has no voters column", path.display())))?;
    let mut out = Vec::new();
    for rec in rd.records() {
        let rec = rec.map_err(|e| Failure::Usage(e.to_string()))?;
        let v = rec.get(col).unwrap_or("").trim();
        out.push(v.parse().map_err(|_| Failure::Usage(format!("bad voter count {v:?}")))?);
    }
    Ok(out)
}
