use clap::Subcommand;
use combanal::compositions::*;
use combanal::exactcore::multinomial;
use num_traits::ToPrimitive;
use serde_json::json;

use super::{arg, join};
use crate::output::Report;
use crate::{parse, usage, work, CmdResult, Ctx};

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Compositions of n, or of a multipartite number such as 2,2.
    Enum { number: String },
    /// Conjugate by circled dots (unipartite) or by lines of route
    /// (multipartite, written like (31)(01)(11)).
    Conj {
        composition: String,
        /// Also show the zig-zag graph or the route's nodes.
        #[arg(long)]
        graph: bool,
    },
    /// Conjugate read from the zig-zag graph.
    Zigzag {
        composition: String,
        #[arg(long)]
        graph: bool,
    },
    /// Deal a deck into packs: copies per card value, e.g. 2,1,1.
    Newcomb {
        deck: String,
        /// Packs grow while values do not decrease.
        #[arg(long)]
        ascending: bool,
        /// Deal this one arrangement of card values instead of tallying all.
        #[arg(long)]
        cards: Option<String>,
    },
    /// Count compositions of a bipartite number p,q (or of n).
    Count {
        number: String,
        /// Tally by essential nodes, formula against enumeration.
        #[arg(long)]
        essential: bool,
        /// Combinations of order k of p things.
        #[arg(long)]
        order: Option<u64>,
        /// Rooted tree for a unipartite composition, as leaf counts per branch.
        #[arg(long)]
        tree: Option<String>,
    },
}

fn rule(ascending: bool) -> DealRule {
    if ascending {
        DealRule::Ascending
    } else {
        DealRule::Descending
    }
}

pub fn run(cmd: Cmd, ctx: &Ctx) -> CmdResult {
    match cmd {
        Cmd::Enum { number } => {
            let m = arg(parse::u64_list(&number))?;
            let list = if m.len() == 1 {
                work(ctx, "compositions", 2f64.powi(m[0].saturating_sub(1).min(1000) as i32))?;
                enumerate_compositions(m[0])?
            } else {
                let mp = MultipartiteNumber::new(m.clone())?;
                if m.len() == 2 {
                    let est = bipartite_composition_count_gf(m[0], m[1])?;
                    work(ctx, "compositions", est.to_f64().unwrap_or(f64::INFINITY))?;
                }
                enumerate_multipartite_compositions(&mp, 24)?
            };
            let json = json!(list.iter().map(comp_json).collect::<Vec<_>>());
            Ok(Report::list("composition", list.iter().map(|c| c.to_string()).collect()).with_json(json))
        }
        Cmd::Conj { composition, graph } => {
            let c = arg(parse::composition(&composition))?;
            if c.order() == 1 {
                let d = conjugate_composition(&c)?;
                let mut r = Report::scalar(&d).with_json(json!(d.as_unipartite()));
                if graph {
                    r = r.with_text(format!("{d}\n{}", ZigZagGraph::new(&c)?.render()));
                }
                return Ok(r);
            }
            let d = route_conjugate(&c)?;
            let mut r = Report::scalar(&d).with_json(comp_json(&d));
            if graph {
                let line = LineOfRoute::from_composition(&c)?;
                let nodes: Vec<String> = line
                    .essential_nodes()
                    .iter()
                    .map(|&i| {
                        let (x, y) = line.node(i);
                        format!("({x},{y})")
                    })
                    .collect();
                r = r.with_text(format!("{d}\nessential nodes {}", nodes.join(" ")));
            }
            Ok(r)
        }
        Cmd::Zigzag { composition, graph } => {
            let c = arg(parse::composition(&composition))?;
            let d = zigzag_conjugate(&c)?;
            let mut r = Report::scalar(&d).with_json(json!(d.as_unipartite()));
            if graph {
                r = r.with_text(format!("{d}\n{}", ZigZagGraph::new(&c)?.render()));
            }
            Ok(r)
        }
        Cmd::Newcomb { deck, ascending, cards } => {
            if let Some(cards) = cards {
                let packs = newcomb_deal(&arg(parse::u64_list(&cards))?, rule(ascending));
                return Ok(Report::value(join(&packs, ","), json!(packs)));
            }
            let d = arg(parse::u64_list(&deck))?;
            work(ctx, "arrangements", multinomial(&d).to_f64().unwrap_or(f64::INFINITY))?;
            let dist = newcomb_distribution(&d, rule(ascending), 64)?;
            let rows = dist.by_pack_count.iter().map(|(k, v)| vec![k.to_string(), v.to_string()]).collect();
            Ok(Report::table(&["packs", "arrangements"], rows))
        }
        Cmd::Count { number, essential, order, tree } => {
            if let Some(t) = tree {
                let c = arg(parse::composition(&t))?;
                let tr = composition_tree(&c)?;
                let back = tree_composition(&tr)?;
                return Ok(Report::value(
                    format!("leaves {}\nheight {}\nround trip {}", tr.leaves(), tr.uniform_height().map_or("mixed".into(), |h| h.to_string()), back),
                    json!({ "leaves": tr.leaves(), "height": tr.uniform_height(), "round_trip": back.to_string() }),
                ));
            }
            let m = arg(parse::u64_list(&number))?;
            if let Some(k) = order {
                if m.len() != 1 {
                    return usage("--order takes a single number p");
                }
                return Ok(Report::scalar(combinations_order_k_count(m[0], k)?));
            }
            match m.as_slice() {
                [n] => Ok(Report::scalar(enumerate_compositions_count(*n))),
                [p, q] if essential => {
                    let est = bipartite_composition_count_gf(*p, *q)?;
                    work(ctx, "compositions", est.to_f64().unwrap_or(f64::INFINITY))?;
                    let counts = count_by_essential_nodes(*p, *q, 24)?;
                    let rows = (0..=(*p).min(*q))
                        .map(|s| {
                            let e = counts.get(&(s as usize)).cloned().unwrap_or_default();
                            vec![s.to_string(), essential_node_term(*p, *q, s).to_string(), e.to_string()]
                        })
                        .collect();
                    Ok(Report::table(&["s", "formula", "enumerated"], rows))
                }
                [p, q] => Ok(Report::scalar(bipartite_composition_count_gf(*p, *q)?)),
                _ => usage("give n or p,q"),
            }
        }
    }
}

/// 2^(n−1) compositions of n ≥ 1.
fn enumerate_compositions_count(n: u64) -> combanal::BigInt {
    if n == 0 {
        combanal::BigInt::from(1)
    } else {
        combanal::BigInt::from(2).pow((n - 1) as u32)
    }
}

fn comp_json(c: &Composition) -> serde_json::Value {
    match c.as_unipartite() {
        Some(u) => json!(u),
        None => json!(c.parts()),
    }
}
