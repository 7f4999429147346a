use clap::Subcommand;
use combanal::recreations::*;
use serde_json::json;

use super::{arg, join, num};
use crate::output::Report;
use crate::{parse, usage, work, CmdResult, Ctx, Failure};

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Coloured cubes up to rotation.
    Cubes {
        #[arg(long, default_value_t = 6)]
        colours: u8,
        /// Allow repeated colours on one cube.
        #[arg(long)]
        any: bool,
        /// Pair each cube with its mirror image.
        #[arg(long)]
        pairs: bool,
    },
    /// Build a cube's colour scheme at double size from eight of the thirty.
    Mayblox {
        /// Target faces U,D,F,B,L,R; the first of the thirty when omitted.
        #[arg(long)]
        target: Option<String>,
        /// Forbid the target's mirror image as well.
        #[arg(long)]
        exclude_associate: bool,
    },
    /// Polygons with one coloured compartment per edge.
    Tiles {
        #[arg(long, default_value_t = 3)]
        sides: usize,
        #[arg(long, default_value_t = 3)]
        colours: u8,
        /// Identify mirror images.
        #[arg(long)]
        reflections: bool,
        /// Only the count.
        #[arg(long)]
        count: bool,
    },
    /// Fit the 24 four-colour triangles into a hexagon with one border colour.
    Hexagon {
        /// Border colour, 0..=3.
        #[arg(long, default_value_t = 0)]
        border: u8,
    },
    /// Ways to fold a strip of n stamps.
    Stamps { n: u64 },
    /// Contact systems of n compartments.
    Contacts {
        n: u64,
        #[arg(long)]
        list: bool,
        /// Which systems of the square tile the plane.
        #[arg(long)]
        square: bool,
    },
    /// Latin squares of order n.
    Latin {
        n: usize,
        /// Only those with first row and column in order.
        #[arg(long)]
        reduced: bool,
    },
    /// First k marks of the greedy rod with distinct differences.
    Rod {
        k: usize,
        #[arg(long)]
        segments: bool,
    },
    /// Weights that weigh every load 1..=u in exactly one way.
    Weights {
        u: u64,
        #[arg(long)]
        two_pan: bool,
    },
    /// Non-attacking rooks on the first k rows of an n×n board.
    Rooks { n: u32, k: u32 },
}

fn faces(s: &str) -> Result<Faces, Failure> {
    let v = arg(parse::u64_list(s))?;
    let f: Vec<u8> = v.iter().map(|&x| x.min(255) as u8).collect();
    f.try_into().map_err(|_| Failure::Usage("a cube has six faces".into()))
}

pub fn run(cmd: Cmd, ctx: &Ctx) -> CmdResult {
    match cmd {
        Cmd::Cubes { colours, any, pairs } => {
            let mode = if any { CubeMode::AnyColoring } else { CubeMode::AllDistinct };
            work(ctx, "colourings", (colours as f64).powi(6))?;
            let cubes = generate_cubes(colours, mode)?;
            if pairs {
                let mut rows = Vec::new();
                for (i, c) in cubes.iter().enumerate() {
                    let a = associated_cube(c);
                    let j = cubes.iter().position(|d| *d == a).expect("mirror is in the set");
                    if i <= j {
                        rows.push(vec![c.to_string(), a.to_string()]);
                    }
                }
                return Ok(Report::table(&["cube", "mirror"], rows));
            }
            let json = json!(cubes.iter().map(|c| c.faces().to_vec()).collect::<Vec<_>>());
            Ok(Report::list("cube", cubes.iter().map(|c| c.to_string()).collect()).with_json(json))
        }
        Cmd::Mayblox { target, exclude_associate } => {
            let pool = generate_cubes(6, CubeMode::AllDistinct)?;
            let t = match target {
                Some(s) => ColoredCube::new(faces(&s)?),
                None => pool[0],
            };
            let Some(a) = mayblox_solve(&t, &pool, exclude_associate) else {
                return Ok(Report::value(format!("no assembly for {t}"), json!(null)));
            };
            if !a.verify(&pool, Some(&t.faces())) {
                return Err(Failure::Refused("assembly failed verification".into()));
            }
            let rows = a
                .placements
                .iter()
                .enumerate()
                .map(|(pos, (i, f))| {
                    let (x, y, z) = block_position(pos);
                    vec![format!("{x}{y}{z}"), i.to_string(), ColoredCube::new(*f).to_string(), join(f, ",")]
                })
                .collect();
            Ok(Report::table(&["position", "cube", "scheme", "orientation"], rows))
        }
        Cmd::Tiles { sides, colours, reflections, count } => {
            work(ctx, "colourings", (colours as f64).powi(sides.min(64) as i32))?;
            let tiles = generate_tiles(sides, colours, reflections)?;
            if count {
                return Ok(Report::scalar(tiles.len()));
            }
            let json = json!(tiles.iter().map(|t| t.colors().to_vec()).collect::<Vec<_>>());
            Ok(Report::list("tile", tiles.iter().map(|t| t.to_string()).collect()).with_json(json))
        }
        Cmd::Hexagon { border } => {
            if border > 3 {
                return usage("the triangles use colours 0..=3");
            }
            let tiles = generate_triangles(4)?;
            let Some(p) = hexagon_solve(&tiles, border) else {
                return Ok(Report::value("no arrangement", json!(null)));
            };
            let rows = p
                .iter()
                .enumerate()
                .map(|(cell, &(t, r))| vec![cell.to_string(), tiles[t].to_string(), r.to_string()])
                .collect();
            Ok(Report::table(&["cell", "tile", "turns"], rows))
        }
        Cmd::Stamps { n } => Ok(Report::scalar(stamp_foldings(n)?)),
        Cmd::Contacts { n, list, square } => {
            if square {
                let rows = square_contact_report()
                    .into_iter()
                    .map(|(c, ok)| vec![c.to_string(), ok.to_string()])
                    .collect();
                return Ok(Report::table(&["system", "tiles"], rows));
            }
            if list {
                let all = enumerate_contact_systems(n as usize)?;
                return Ok(Report::list("system", all.iter().map(|c| c.to_string()).collect()));
            }
            Ok(Report::scalar(contact_system_count(n)))
        }
        Cmd::Latin { n, reduced } => {
            let v = if reduced { latin_reduced_count(n)? } else { latin_total_count(n)? };
            Ok(Report::scalar(v))
        }
        Cmd::Rod { k, segments } => {
            let r = measuring_rod(k)?;
            let v = if segments { r.segments() } else { r.marks().to_vec() };
            Ok(Report::value(join(&v, ","), json!(v)))
        }
        Cmd::Weights { u, two_pan } => {
            work(ctx, "perfect partitions", u as f64)?;
            let w = weighing_set(u, if two_pan { Pans::Two } else { Pans::One })?;
            Ok(Report::value(w.to_string(), json!(w.parts())))
        }
        Cmd::Rooks { n, k } => {
            if k > 1000 {
                return usage("k above 1000");
            }
            Ok(Report::scalar(rook_row_counts(n, k)?)).map(|r| {
                let j = num(&r.text);
                r.with_json(j)
            })
        }
    }
}
