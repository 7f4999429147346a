use clap::{Subcommand, ValueEnum};
use combanal::patterns::*;
use serde_json::json;

use super::arg;
use crate::output::Report;
use crate::{parse, CmdResult, Ctx, Failure};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Solid {
    Cube,
    Tetrahedron,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Symmetry class of the edge from (0,0) to (1,0) through the given
    /// interior points, written x:y,x:y.
    Classify {
        #[arg(allow_hyphen_values = true)]
        points: String,
    },
    /// Contact systems of a base polygon, or a repeat tile built on one.
    Tile {
        #[arg(long, default_value = "square")]
        base: String,
        /// Pairs such as {14,23}; the natural system when omitted.
        #[arg(long)]
        contact: Option<String>,
        /// Interior points of each edge in order; "" for straight.
        #[arg(long, allow_hyphen_values = true)]
        profile: Vec<String>,
        /// List the contact systems with whether each fits the lattice.
        #[arg(long)]
        list_contacts: bool,
    },
    /// Group a polygon's angles (multiples of π) into sets summing to π or 2π.
    Angles { angles: String },
    /// Tile the plane and emit the drawing.
    Tiling {
        #[arg(long, default_value = "square")]
        base: String,
        /// The bent-square tile whose copies form the Cairo pattern.
        #[arg(long)]
        cairo: bool,
        #[arg(long, default_value_t = 3)]
        extent: u32,
    },
    /// Vertex deficiencies against edge deficiencies.
    Euler {
        #[arg(long, value_enum, default_value = "cube")]
        solid: Solid,
    },
    /// The tetrahedron cut from a square prism of height 2.
    Tetra,
}

fn base(s: &str) -> Result<Base, Failure> {
    Base::parse(s).ok_or_else(|| Failure::Usage(format!("unknown base {s:?}; use triangle, square or hexagon")))
}

fn profile(s: &str) -> Result<EdgeProfile, Failure> {
    Ok(EdgeProfile::through(arg(parse::points(s))?)?)
}

pub fn run(cmd: Cmd, _ctx: &Ctx) -> CmdResult {
    match cmd {
        Cmd::Classify { points } => {
            let e = profile(&points)?;
            let class = e.classify();
            let excess = e.area_excess();
            Ok(Report::value(
                format!("{class}\narea excess {excess}"),
                json!({ "class": class.to_string(), "area_excess": excess.to_string() }),
            ))
        }
        Cmd::Tile { base: b, contact, profile: profiles, list_contacts } => {
            let b = base(&b)?;
            if list_contacts {
                let rows = contact_systems_for(b)
                    .iter()
                    .map(|c| vec![c.to_string(), contact_realizable(b, c).to_string()])
                    .collect();
                return Ok(Report::table(&["system", "realizable"], rows));
            }
            let cs = match contact {
                Some(s) => arg(parse::contact_system(&s, b.sides()))?,
                None => natural_contact(b),
            };
            let ps = if profiles.is_empty() {
                vec![EdgeProfile::straight(); b.sides()]
            } else {
                profiles.iter().map(|s| profile(s)).collect::<Result<Vec<_>, _>>()?
            };
            let t = build_repeat_tile(b, cs, ps)?;
            let rows = t
                .suffixes()
                .iter()
                .map(|((i, j), s)| {
                    let suffix = match s {
                        ColourSuffix::Same => "1",
                        ColourSuffix::Different => "2",
                    };
                    vec![format!("{i}{j}"), suffix.to_string(), t.profiles[i - 1].classify().to_string()]
                })
                .collect();
            Ok(Report::table(&["pair", "suffix", "class"], rows))
        }
        Cmd::Angles { angles } => {
            let a = arg(parse::rational_list(&angles))?;
            match angle_distribution(&a)? {
                Some(groups) => {
                    let text = groups
                        .iter()
                        .map(|g| g.iter().map(|&i| a[i].to_string()).collect::<Vec<_>>().join("+"))
                        .collect::<Vec<_>>()
                        .join(" | ");
                    Ok(Report::value(text, json!(groups)))
                }
                None => Ok(Report::value("none", json!(null))),
            }
        }
        Cmd::Tiling { base: b, cairo, extent } => {
            let tile = if cairo { cairo_tile() } else { plain_tile(base(&b)?) };
            let t = generate_tiling(&tile, extent)?;
            Ok(Report::value(
                format!("{} copies, {} sample points covered once", t.placements.len(), t.samples_checked),
                json!({ "copies": t.placements.len(), "samples_checked": t.samples_checked }),
            )
            .with_svg(t.to_svg()))
        }
        Cmd::Euler { solid } => {
            let p = match solid {
                Solid::Cube => Polyhedron::cube(),
                Solid::Tetrahedron => Polyhedron::regular_tetrahedron(),
            };
            let r = euler_deficiency_check(&p)?;
            Ok(Report::value(
                format!("vertices {:.9}\nedges {:.9}\nequal {}", r.vertex_sum, r.edge_sum, r.equal),
                json!({
                    "vertex_sum": super::num(format!("{:.9}", r.vertex_sum)),
                    "edge_sum": super::num(format!("{:.9}", r.edge_sum)),
                    "equal": r.equal,
                }),
            ))
        }
        Cmd::Tetra => {
            let t = schoenflies_tetrahedron();
            let edges: Vec<String> = t.squared_edges().iter().map(|((i, j), l)| format!("{i}{j}:{l}")).collect();
            Ok(Report::value(
                format!(
                    "squared edges {}\ncongruent faces {}\nisosceles faces {}\nedge ratio squared {}\nvolume {}",
                    edges.join(" "),
                    t.faces_congruent(),
                    t.faces_isosceles(),
                    t.edge_ratio_squared(),
                    t.volume()
                ),
                json!({
                    "squared_edges": edges,
                    "faces_congruent": t.faces_congruent(),
                    "faces_isosceles": t.faces_isosceles(),
                    "edge_ratio_squared": t.edge_ratio_squared().to_string(),
                    "volume": t.volume().to_string(),
                }),
            ))
        }
    }
}
