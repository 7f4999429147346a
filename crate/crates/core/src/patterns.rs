//! Repeating patterns: edge profiles and their symmetry classes, repeat
//! tiles forced by a contact system, plane tilings with SVG output, the law
//! of angle distribution, the polyhedral deficiency check and the
//! Schoenflies tetrahedron.
//!
//! Profiles live in exact rational coordinates on the unit edge from (0,0)
//! to (1,0), with positive y pointing out of the tile. Tiling geometry and
//! the gap/overlap check are floating point.

use std::collections::{BTreeMap, VecDeque};
use std::f64::consts::PI;
use std::fmt::{self, Write as _};

use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{check_cap, domain};
use crate::exactcore::{rat, BigRat};
use crate::recreations::{enumerate_contact_systems, ContactSystem};
use crate::{Error, Result};

pub type RatPoint = (BigRat, BigRat);
pub type Point = (f64, f64);

// ------------------------------------------------------------- profiles

/// An open polyline from (0,0) to (1,0) with no self-intersections.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeProfile {
    points: Vec<RatPoint>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeClass {
    /// The straight edge, both symmetric and point-symmetric.
    Straight,
    /// Mirror-symmetric about the perpendicular bisector.
    S,
    /// Point-symmetric about the midpoint.
    U,
    /// Neither.
    V,
}

impl fmt::Display for EdgeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeClass::Straight => "straight",
            EdgeClass::S => "S",
            EdgeClass::U => "U",
            EdgeClass::V => "V",
        })
    }
}

fn cross(o: &RatPoint, a: &RatPoint, b: &RatPoint) -> BigRat {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

fn on_segment(p: &RatPoint, a: &RatPoint, b: &RatPoint) -> bool {
    let within = |v: &BigRat, x: &BigRat, y: &BigRat| (v >= x.min(y)) && (v <= x.max(y));
    cross(a, b, p).is_zero() && within(&p.0, &a.0, &b.0) && within(&p.1, &a.1, &b.1)
}

fn segments_meet(a: &RatPoint, b: &RatPoint, c: &RatPoint, d: &RatPoint) -> bool {
    let (d1, d2) = (cross(c, d, a), cross(c, d, b));
    let (d3, d4) = (cross(a, b, c), cross(a, b, d));
    let opposite = |x: &BigRat, y: &BigRat| (x.is_positive() && y.is_negative()) || (x.is_negative() && y.is_positive());
    if opposite(&d1, &d2) && opposite(&d3, &d4) {
        return true;
    }
    on_segment(a, c, d) || on_segment(b, c, d) || on_segment(c, a, b) || on_segment(d, a, b)
}

impl EdgeProfile {
    pub fn new(points: Vec<RatPoint>) -> Result<Self> {
        let origin = (rat(0), rat(0));
        let end = (rat(1), rat(0));
        if points.len() < 2 || points[0] != origin || points[points.len() - 1] != end {
            return domain("profile must run from (0,0) to (1,0)");
        }
        let n = points.len();
        for i in 0..n - 1 {
            if points[i] == points[i + 1] {
                return domain("repeated vertex in profile");
            }
            for j in i + 1..n - 1 {
                let (a, b, c, d) = (&points[i], &points[i + 1], &points[j], &points[j + 1]);
                let meets = if j == i + 1 {
                    // adjacent segments share b only; reject folding back
                    cross(a, b, d).is_zero() && (on_segment(d, a, b) || on_segment(a, c, d))
                } else {
                    segments_meet(a, b, c, d)
                };
                if meets {
                    return domain(format!("profile crosses itself between segments {i} and {j}"));
                }
            }
        }
        Ok(EdgeProfile { points })
    }

    /// Profile through the given interior vertices.
    pub fn through(interior: Vec<RatPoint>) -> Result<Self> {
        let mut p = vec![(rat(0), rat(0))];
        p.extend(interior);
        p.push((rat(1), rat(0)));
        Self::new(p)
    }

    pub fn straight() -> Self {
        EdgeProfile { points: vec![(rat(0), rat(0)), (rat(1), rat(0))] }
    }

    /// One bend at the midpoint, height h.
    pub fn midpoint_bend(h: BigRat) -> Result<Self> {
        Self::through(vec![(BigRat::new(1.into(), 2.into()), h)])
    }

    pub fn points(&self) -> &[RatPoint] {
        &self.points
    }

    fn simplified(points: Vec<RatPoint>) -> Self {
        // drop interior vertices lying on a straight run
        let mut out: Vec<RatPoint> = Vec::with_capacity(points.len());
        for p in points {
            while out.len() >= 2 && cross(&out[out.len() - 2], &out[out.len() - 1], &p).is_zero() {
                out.pop();
            }
            out.push(p);
        }
        EdgeProfile { points: out }
    }

    /// Mirror image I in the perpendicular bisector.
    pub fn mirror(&self) -> Self {
        Self::simplified(self.points.iter().rev().map(|(x, y)| (rat(1) - x, y.clone())).collect())
    }

    /// Point image P by a half turn about the midpoint.
    pub fn point(&self) -> Self {
        Self::simplified(self.points.iter().rev().map(|(x, y)| (rat(1) - x, -y)).collect())
    }

    /// Reflection in the edge line: the same edge seen from the other tile.
    pub fn flip(&self) -> Self {
        Self::simplified(self.points.iter().map(|(x, y)| (x.clone(), -y)).collect())
    }

    fn canonical(&self) -> Self {
        Self::simplified(self.points.clone())
    }

    /// Same curve, ignoring redundant collinear vertices.
    pub fn same_curve(&self, other: &EdgeProfile) -> bool {
        self.canonical() == other.canonical()
    }

    /// Same contact edge: equal, or equal once seen across the edge line.
    pub fn contact_equivalent(&self, other: &EdgeProfile) -> bool {
        self.same_curve(other) || self.same_curve(&other.flip())
    }

    pub fn is_straight(&self) -> bool {
        self.canonical().points.len() == 2
    }

    pub fn classify(&self) -> EdgeClass {
        if self.is_straight() {
            return EdgeClass::Straight;
        }
        if self.same_curve(&self.mirror()) {
            EdgeClass::S
        } else if self.same_curve(&self.point()) {
            EdgeClass::U
        } else {
            EdgeClass::V
        }
    }

    /// Area added outside the tile relative to the straight edge.
    pub fn area_excess(&self) -> BigRat {
        let n = self.points.len();
        let mut twice = BigRat::zero();
        for i in 0..n {
            let (a, b) = (&self.points[i], &self.points[(i + 1) % n]);
            twice += &a.0 * &b.1 - &b.0 * &a.1;
        }
        // the closed loop runs clockwise around an outward bump
        -twice / rat(2)
    }

    pub fn to_f64(&self) -> Vec<Point> {
        self.points.iter().map(|(x, y)| (f(x), f(y))).collect()
    }
}

fn f(x: &BigRat) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

pub fn classify_edge(e: &EdgeProfile) -> EdgeClass {
    e.classify()
}

// ---------------------------------------------------------- repeat tiles

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Base {
    Triangle,
    Square,
    Hexagon,
}

impl Base {
    pub fn sides(&self) -> usize {
        match self {
            Base::Triangle => 3,
            Base::Square => 4,
            Base::Hexagon => 6,
        }
    }

    pub fn area(&self) -> f64 {
        match self {
            Base::Triangle => 3f64.sqrt() / 4.0,
            Base::Square => 1.0,
            Base::Hexagon => 3.0 * 3f64.sqrt() / 2.0,
        }
    }

    /// Unit-edge polygon, clockwise, first edge at slot 0.
    pub fn polygon(&self) -> Vec<Point> {
        let n = self.sides();
        let r = 0.5 / (PI / n as f64).sin();
        (0..n)
            .map(|k| {
                let t = PI / 2.0 + PI / n as f64 - 2.0 * PI * k as f64 / n as f64;
                (r * t.cos(), r * t.sin())
            })
            .collect()
    }

    pub fn parse(s: &str) -> Option<Base> {
        match s {
            "triangle" | "3" => Some(Base::Triangle),
            "square" | "4" => Some(Base::Square),
            "hexagon" | "6" => Some(Base::Hexagon),
            _ => None,
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Base::Triangle => "triangle",
            Base::Square => "square",
            Base::Hexagon => "hexagon",
        })
    }
}

/// Colour suffix on a pairing: 1 when a compartment meets itself (same
/// colour), 2 when two different compartments meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ColourSuffix {
    Same,
    Different,
}

/// A base polygon whose edge k (compartment k, clockwise) carries
/// `profiles[k-1]`, with edges paired by a contact system.
#[derive(Clone, Debug, PartialEq)]
pub struct RepeatTile {
    pub base: Base,
    pub contact: ContactSystem,
    pub profiles: Vec<EdgeProfile>,
}

/// Contact systems available to an n-gon base.
pub fn contact_systems_for(base: Base) -> Vec<ContactSystem> {
    enumerate_contact_systems(base.sides()).expect("at most six sides")
}

/// Validate a repeat tile. Edge j meeting edge i of a neighbour traverses
/// the same curve backwards from the far side, so its profile must be the
/// point image of edge i's; a self-paired edge must therefore be U.
pub fn build_repeat_tile(base: Base, contact: ContactSystem, profiles: Vec<EdgeProfile>) -> Result<RepeatTile> {
    let n = base.sides();
    if contact.size() != n || profiles.len() != n {
        return Err(Error::Dimension(format!(
            "{base} has {n} edges; got a contact system on {} and {} profiles",
            contact.size(),
            profiles.len()
        )));
    }
    for &(i, j) in &contact.pairs {
        let (pi, pj) = (&profiles[i - 1], &profiles[j - 1]);
        if !pj.same_curve(&pi.point()) {
            let why = if i == j {
                format!("self-paired edge needs a U profile, found {}", pi.classify())
            } else {
                "profiles are not point images of each other".to_string()
            };
            return Err(Error::Rejected(format!("edges {i} and {j}: {why}")));
        }
    }
    let tile = RepeatTile { base, contact, profiles };
    let outline = tile.outline(&base.polygon(), 0);
    if let Some((a, b)) = first_crossing(&outline) {
        return Err(Error::Rejected(format!("boundary crosses itself at segments {a} and {b}")));
    }
    Ok(tile)
}

impl RepeatTile {
    /// Colour suffix of each pair of the contact system.
    pub fn suffixes(&self) -> Vec<((usize, usize), ColourSuffix)> {
        self.contact
            .pairs
            .iter()
            .map(|&(i, j)| ((i, j), if i == j { ColourSuffix::Same } else { ColourSuffix::Different }))
            .collect()
    }

    /// Exact area change from all profiles; zero for every legal tile.
    pub fn area_excess(&self) -> BigRat {
        self.profiles.iter().map(|p| p.area_excess()).sum()
    }

    pub fn area(&self) -> f64 {
        self.base.area() + f(&self.area_excess())
    }

    /// Outline on a cell given clockwise, with label 1 at slot `rotation`.
    pub fn outline(&self, cell: &[Point], rotation: usize) -> Vec<Point> {
        let n = cell.len();
        let mut out = Vec::new();
        for s in 0..n {
            let label = (s + n - rotation % n) % n;
            let (a, b) = (cell[s], cell[(s + 1) % n]);
            let (dx, dy) = (b.0 - a.0, b.1 - a.1);
            // outward normal is to the left of a clockwise edge
            let (nx, ny) = (-dy, dx);
            let pts = self.profiles[label].to_f64();
            for (x, y) in &pts[..pts.len() - 1] {
                out.push((a.0 + x * dx + y * nx, a.1 + x * dy + y * ny));
            }
        }
        out
    }
}

/// The square with contact system 1–4, 2–3 and edges bent at their
/// midpoints, outward on edges 1 and 2 and inward on 3 and 4.
pub fn cairo_tile() -> RepeatTile {
    let h = BigRat::new(1.into(), 4.into());
    let out = EdgeProfile::midpoint_bend(h.clone()).expect("valid bend");
    let inward = out.point();
    let contact = ContactSystem::new(4, vec![(1, 4), (2, 3)]).expect("involution");
    build_repeat_tile(Base::Square, contact, vec![out.clone(), out, inward.clone(), inward]).expect("legal tile")
}

/// The system of the plain regular tiling: a half turn across each edge
/// for the triangle, opposite edges (translations) otherwise.
pub fn natural_contact(base: Base) -> ContactSystem {
    let pairs = match base {
        Base::Triangle => vec![(1, 1), (2, 2), (3, 3)],
        Base::Square => vec![(1, 3), (2, 4)],
        Base::Hexagon => vec![(1, 4), (2, 5), (3, 6)],
    };
    ContactSystem::new(base.sides(), pairs).expect("involution")
}

/// Base polygon with straight edges under its natural contact system.
pub fn plain_tile(base: Base) -> RepeatTile {
    let n = base.sides();
    let contact = natural_contact(base);
    build_repeat_tile(base, contact, vec![EdgeProfile::straight(); n]).expect("straight edges")
}

fn seg_cross_f(a: Point, b: Point, c: Point, d: Point) -> bool {
    let o = |p: Point, q: Point, r: Point| (q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0);
    let (d1, d2, d3, d4) = (o(c, d, a), o(c, d, b), o(a, b, c), o(a, b, d));
    let eps = 1e-12;
    ((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps)) && ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps))
}

fn first_crossing(poly: &[Point]) -> Option<(usize, usize)> {
    let n = poly.len();
    for i in 0..n {
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            if seg_cross_f(poly[i], poly[(i + 1) % n], poly[j], poly[(j + 1) % n]) {
                return Some((i, j));
            }
        }
    }
    None
}

// --------------------------------------------------------------- tilings

/// One placed copy: its cell, the slot carrying label 1, the affine map
/// (a, b, c, d, e, f) from the tile's own frame, and the outline.
#[derive(Clone, Debug, PartialEq)]
pub struct Placement {
    pub cell: usize,
    pub rotation: usize,
    pub transform: [f64; 6],
    pub outline: Vec<Point>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Tiling {
    pub base: Base,
    pub extent: u32,
    pub placements: Vec<Placement>,
    /// Sample points tested by the gap/overlap check.
    pub samples_checked: usize,
}

/// Cap on the tiling extent.
pub const TILING_EXTENT_CAP: u64 = 12;

/// Sampling density of the gap/overlap check, per unit area.
pub const SAMPLES_PER_UNIT_AREA: f64 = 64.0;

fn lattice_cells(base: Base, extent: i64) -> Vec<Vec<Point>> {
    let s3 = 3f64.sqrt();
    let mut cells = Vec::new();
    match base {
        Base::Square => {
            for i in -extent..=extent {
                for j in -extent..=extent {
                    let (x, y) = (i as f64 - 0.5, j as f64 - 0.5);
                    cells.push(vec![(x, y), (x, y + 1.0), (x + 1.0, y + 1.0), (x + 1.0, y)]);
                }
            }
        }
        Base::Hexagon => {
            let proto = Base::Hexagon.polygon();
            for q in -extent..=extent {
                for r in -extent..=extent {
                    if (q + r).abs() > extent {
                        continue;
                    }
                    let c = (1.5 * q as f64, s3 * (r as f64 + q as f64 / 2.0));
                    cells.push(proto.iter().map(|&(x, y)| (c.0 + x, c.1 + y)).collect());
                }
            }
        }
        Base::Triangle => {
            let xy = |a: i64, b: i64| (a as f64 + b as f64 / 2.0, b as f64 * s3 / 2.0);
            for a in -extent..=extent {
                for b in -extent..=extent {
                    if (a + b).abs() > extent {
                        continue;
                    }
                    // up triangle, then down triangle, both clockwise
                    cells.push(vec![xy(a, b), xy(a, b + 1), xy(a + 1, b)]);
                    cells.push(vec![xy(a + 1, b), xy(a, b + 1), xy(a + 1, b + 1)]);
                }
            }
        }
    }
    cells
}

fn key(p: Point) -> (i64, i64) {
    ((p.0 * 1e6).round() as i64, (p.1 * 1e6).round() as i64)
}

/// Per cell and slot, the neighbouring (cell, slot).
fn adjacency(cells: &[Vec<Point>]) -> Vec<Vec<Option<(usize, usize)>>> {
    let mut owners: BTreeMap<((i64, i64), (i64, i64)), Vec<(usize, usize)>> = BTreeMap::new();
    for (c, poly) in cells.iter().enumerate() {
        let n = poly.len();
        for s in 0..n {
            let (a, b) = (key(poly[s]), key(poly[(s + 1) % n]));
            owners.entry(if a < b { (a, b) } else { (b, a) }).or_default().push((c, s));
        }
    }
    cells
        .iter()
        .enumerate()
        .map(|(c, poly)| {
            let n = poly.len();
            (0..n)
                .map(|s| {
                    let (a, b) = (key(poly[s]), key(poly[(s + 1) % n]));
                    owners[&if a < b { (a, b) } else { (b, a) }].iter().copied().find(|o| o.0 != c)
                })
                .collect()
        })
        .collect()
}

/// Rotation per cell so every contact obeys the system, starting from
/// each possible rotation of cell 0.
fn assign_rotations(contact: &ContactSystem, adj: &[Vec<Option<(usize, usize)>>], n: usize) -> Option<Vec<usize>> {
    let sigma = contact.image();
    'start: for r0 in 0..n {
        let mut rot: Vec<Option<usize>> = vec![None; adj.len()];
        rot[0] = Some(r0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(c) = queue.pop_front() {
            let r = rot[c].expect("queued cells are assigned");
            for (s, nb) in adj[c].iter().enumerate() {
                let Some((d, sd)) = *nb else { continue };
                let label = (s + n - r) % n + 1;
                let want = sigma[label] - 1;
                let rd = (sd + n - want) % n;
                match rot[d] {
                    None => {
                        rot[d] = Some(rd);
                        queue.push_back(d);
                    }
                    Some(x) if x != rd => continue 'start,
                    _ => {}
                }
            }
        }
        return rot.into_iter().collect();
    }
    None
}

/// Whether a contact system can be realised by rotated copies on the
/// base's regular lattice.
pub fn contact_realizable(base: Base, contact: &ContactSystem) -> bool {
    let cells = lattice_cells(base, 3);
    assign_rotations(contact, &adjacency(&cells), base.sides()).is_some()
}

fn rigid_transform(from: (Point, Point), to: (Point, Point)) -> [f64; 6] {
    let ang = (to.1 .1 - to.0 .1).atan2(to.1 .0 - to.0 .0) - (from.1 .1 - from.0 .1).atan2(from.1 .0 - from.0 .0);
    let (s, c) = ang.sin_cos();
    let e = to.0 .0 - (c * from.0 .0 - s * from.0 .1);
    let f = to.0 .1 - (s * from.0 .0 + c * from.0 .1);
    [c, s, -s, c, e, f]
}

fn point_in(poly: &[Point], p: Point) -> bool {
    let mut inside = false;
    let n = poly.len();
    for i in 0..n {
        let (a, b) = (poly[i], poly[(i + 1) % n]);
        if (a.1 > p.1) != (b.1 > p.1) {
            let x = a.0 + (p.1 - a.1) / (b.1 - a.1) * (b.0 - a.0);
            if p.0 < x {
                inside = !inside;
            }
        }
    }
    inside
}

fn dist_to_boundary(poly: &[Point], p: Point) -> f64 {
    let n = poly.len();
    (0..n)
        .map(|i| {
            let (a, b) = (poly[i], poly[(i + 1) % n]);
            let (dx, dy) = (b.0 - a.0, b.1 - a.1);
            let t = (((p.0 - a.0) * dx + (p.1 - a.1) * dy) / (dx * dx + dy * dy)).clamp(0.0, 1.0);
            ((a.0 + t * dx - p.0).powi(2) + (a.1 + t * dy - p.1).powi(2)).sqrt()
        })
        .fold(f64::INFINITY, f64::min)
}

fn bbox(poly: &[Point]) -> (f64, f64, f64, f64) {
    poly.iter().fold((f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY), |b, &(x, y)| {
        (b.0.min(x), b.1.min(y), b.2.max(x), b.3.max(y))
    })
}

/// Copies of the tile on every lattice cell within `extent`, then a
/// sampling check that cells two steps from the rim are covered exactly
/// once. Sampling is a probabilistic check, not a proof.
pub fn generate_tiling(tile: &RepeatTile, extent: u32) -> Result<Tiling> {
    check_cap("tiling extent", extent as u64, TILING_EXTENT_CAP)?;
    let n = tile.base.sides();
    let cells = lattice_cells(tile.base, extent as i64);
    let adj = adjacency(&cells);
    let rot = assign_rotations(&tile.contact, &adj, n)
        .ok_or_else(|| Error::Rejected(format!("contact system {} cannot be realised on the {} lattice", tile.contact, tile.base)))?;
    let proto = tile.base.polygon();
    let placements: Vec<Placement> = cells
        .iter()
        .enumerate()
        .map(|(c, poly)| {
            let r = rot[c];
            Placement {
                cell: c,
                rotation: r,
                transform: rigid_transform((proto[0], proto[1]), (poly[r], poly[(r + 1) % n])),
                outline: tile.outline(poly, r),
            }
        })
        .collect();
    let samples_checked = verify_cover(&cells, &adj, &placements)?;
    Ok(Tiling { base: tile.base, extent, placements, samples_checked })
}

fn verify_cover(cells: &[Vec<Point>], adj: &[Vec<Option<(usize, usize)>>], placements: &[Placement]) -> Result<usize> {
    let full = |c: usize| adj[c].iter().all(|x| x.is_some());
    let interior: Vec<usize> = (0..cells.len())
        .filter(|&c| full(c) && adj[c].iter().flatten().all(|&(d, _)| full(d)))
        .collect();
    let boxes: Vec<_> = placements.iter().map(|p| bbox(&p.outline)).collect();
    let step = 1.0 / SAMPLES_PER_UNIT_AREA.sqrt();
    let mut checked = 0;
    for &c in &interior {
        let (x0, y0, x1, y1) = bbox(&cells[c]);
        let mut y = y0 + step * 0.3719;
        while y < y1 {
            let mut x = x0 + step * 0.6180;
            while x < x1 {
                let p = (x, y);
                x += step;
                if !point_in(&cells[c], p) {
                    continue;
                }
                let near: Vec<usize> = (0..placements.len())
                    .filter(|&t| {
                        let b = boxes[t];
                        p.0 >= b.0 - 1e-9 && p.0 <= b.2 + 1e-9 && p.1 >= b.1 - 1e-9 && p.1 <= b.3 + 1e-9
                    })
                    .collect();
                if near.iter().any(|&t| dist_to_boundary(&placements[t].outline, p) < 1e-9) {
                    continue;
                }
                let hits: Vec<usize> = near.into_iter().filter(|&t| point_in(&placements[t].outline, p)).collect();
                checked += 1;
                match hits.len() {
                    1 => {}
                    0 => return Err(Error::Rejected(format!("gap at ({:.6}, {:.6})", p.0, p.1))),
                    _ => {
                        return Err(Error::Rejected(format!(
                            "copies {} and {} overlap at ({:.6}, {:.6})",
                            hits[0], hits[1], p.0, p.1
                        )))
                    }
                }
            }
            y += step;
        }
    }
    Ok(checked)
}

/// Units per edge length in SVG output.
pub const SVG_SCALE: f64 = 96.0;

impl Tiling {
    /// One `<path>` per copy, in placement order.
    pub fn to_svg(&self) -> String {
        let all: Vec<Point> = self.placements.iter().flat_map(|p| p.outline.iter().copied()).collect();
        let (x0, y0, x1, y1) = bbox(&all);
        let pad = 0.25;
        let mut s = String::new();
        let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{:.3} {:.3} {:.3} {:.3}">"#,
            (x0 - pad) * SVG_SCALE,
            (-y1 - pad) * SVG_SCALE,
            (x1 - x0 + 2.0 * pad) * SVG_SCALE,
            (y1 - y0 + 2.0 * pad) * SVG_SCALE
        );
        for p in &self.placements {
            let _ = writeln!(
                s,
                r#"<path id="t{}" d="{}" fill="{}" stroke="black" stroke-width="1"/>"#,
                p.cell,
                path_data(&p.outline),
                FILLS[p.rotation % FILLS.len()]
            );
        }
        s.push_str("</svg>\n");
        s
    }
}

const FILLS: [&str; 6] = ["#e8d8b0", "#b0c8e8", "#c8e8b0", "#e8b0c0", "#d0b0e8", "#b0e8e0"];

/// SVG path data with y pointing down.
pub fn path_data(outline: &[Point]) -> String {
    let mut d = String::new();
    for (i, (x, y)) in outline.iter().enumerate() {
        let _ = write!(d, "{}{:.3} {:.3} ", if i == 0 { "M" } else { "L" }, x * SVG_SCALE, -y * SVG_SCALE);
    }
    d.push('Z');
    d
}

// ------------------------------------------------------ angle distribution

/// Groups of 2, 3 or 4 distinct angles each summing to π or 2π, covering
/// every angle once. Angles are rational multiples of π.
pub fn angle_distribution(angles: &[BigRat]) -> Result<Option<Vec<Vec<usize>>>> {
    let n = angles.len();
    if n < 3 {
        return domain("a polygon has at least three angles");
    }
    check_cap("polygon angles", n as u64, 16)?;
    if angles.iter().any(|a| !a.is_positive() || *a >= rat(2)) {
        return domain("angles must lie strictly between 0 and 2π");
    }
    let total: BigRat = angles.iter().sum();
    if total != rat(n as i64 - 2) {
        return domain(format!("angles sum to {total}π, not {}π", n - 2));
    }
    fn rec(angles: &[BigRat], used: &mut Vec<bool>, groups: &mut Vec<Vec<usize>>) -> bool {
        let Some(first) = used.iter().position(|u| !u) else { return true };
        used[first] = true;
        let rest: Vec<usize> = (first + 1..angles.len()).filter(|&i| !used[i]).collect();
        // subsets of the remaining angles of size 1..=3 joining `first`
        let m = rest.len();
        for mask in 1u32..(1 << m) {
            let size = mask.count_ones();
            if size > 3 {
                continue;
            }
            let members: Vec<usize> = (0..m).filter(|b| mask >> b & 1 == 1).map(|b| rest[b]).collect();
            let sum: BigRat = members.iter().map(|&i| &angles[i]).sum::<BigRat>() + &angles[first];
            if sum != rat(1) && sum != rat(2) {
                continue;
            }
            for &i in &members {
                used[i] = true;
            }
            let mut g = vec![first];
            g.extend(&members);
            groups.push(g);
            if rec(angles, used, groups) {
                return true;
            }
            groups.pop();
            for &i in &members {
                used[i] = false;
            }
        }
        used[first] = false;
        false
    }
    let mut groups = Vec::new();
    Ok(rec(angles, &mut vec![false; n], &mut groups).then_some(groups))
}

pub fn angle_distribution_check(angles: &[BigRat]) -> Result<bool> {
    Ok(angle_distribution(angles)?.is_some())
}

// ------------------------------------------------------------ polyhedra

/// A convex polyhedron: faces list vertex indices counterclockwise seen
/// from outside.
#[derive(Clone, Debug, PartialEq)]
pub struct Polyhedron {
    pub vertices: Vec<[f64; 3]>,
    pub faces: Vec<Vec<usize>>,
}

fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}
fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}
fn crs(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}
fn norm(a: [f64; 3]) -> f64 {
    dot(a, a).sqrt()
}

impl Polyhedron {
    pub fn cube() -> Self {
        let v = (0..8).map(|i| [(i & 1) as f64, ((i >> 1) & 1) as f64, ((i >> 2) & 1) as f64]).collect();
        let faces = vec![
            vec![0, 2, 3, 1],
            vec![4, 5, 7, 6],
            vec![0, 1, 5, 4],
            vec![2, 6, 7, 3],
            vec![0, 4, 6, 2],
            vec![1, 3, 7, 5],
        ];
        Polyhedron { vertices: v, faces }
    }

    pub fn regular_tetrahedron() -> Self {
        let vertices = vec![[1.0, 1.0, 1.0], [1.0, -1.0, -1.0], [-1.0, 1.0, -1.0], [-1.0, -1.0, 1.0]];
        let mut p = Polyhedron { vertices, faces: vec![vec![0, 1, 2], vec![0, 3, 1], vec![0, 2, 3], vec![1, 3, 2]] };
        p.orient_faces();
        p
    }

    /// Reorder each face so its normal points away from the centroid.
    pub fn orient_faces(&mut self) {
        let c = self.centroid();
        for face in &mut self.faces {
            let (a, b, d) = (self.vertices[face[0]], self.vertices[face[1]], self.vertices[face[2]]);
            if dot(crs(sub(b, a), sub(d, a)), sub(a, c)) < 0.0 {
                face.reverse();
            }
        }
    }

    fn centroid(&self) -> [f64; 3] {
        let n = self.vertices.len() as f64;
        let s = self.vertices.iter().fold([0.0; 3], |s, v| [s[0] + v[0], s[1] + v[1], s[2] + v[2]]);
        [s[0] / n, s[1] / n, s[2] / n]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = self
            .faces
            .iter()
            .flat_map(|f| (0..f.len()).map(move |i| (f[i].min(f[(i + 1) % f.len()]), f[i].max(f[(i + 1) % f.len()]))))
            .collect();
        e.sort_unstable();
        e.dedup();
        e
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges().len() as i64 + self.faces.len() as i64
    }

    fn normal(&self, face: &[usize]) -> [f64; 3] {
        let (a, b, c) = (self.vertices[face[0]], self.vertices[face[1]], self.vertices[face[2]]);
        let n = crs(sub(b, a), sub(c, a));
        let l = norm(n);
        [n[0] / l, n[1] / l, n[2] / l]
    }

    /// Interior dihedral angle at each edge, from the outward face normals.
    pub fn dihedral_angles(&self) -> Vec<((usize, usize), f64)> {
        self.edges()
            .into_iter()
            .map(|(u, v)| {
                let fs: Vec<&Vec<usize>> = self.faces.iter().filter(|f| f.contains(&u) && f.contains(&v)).collect();
                let (n1, n2) = (self.normal(fs[0]), self.normal(fs[1]));
                ((u, v), PI - dot(n1, n2).clamp(-1.0, 1.0).acos())
            })
            .collect()
    }

    /// Solid angle at each vertex: the cone spanned by its neighbours,
    /// fanned into triangles and summed with the Van Oosterom–Strackee
    /// formula.
    pub fn solid_angles(&self) -> Vec<f64> {
        (0..self.vertices.len())
            .map(|v| {
                // neighbours in cyclic order around v from the incident faces
                let mut next: BTreeMap<usize, usize> = BTreeMap::new();
                for f in self.faces.iter().filter(|f| f.contains(&v)) {
                    let k = f.len();
                    let i = f.iter().position(|&x| x == v).expect("contains v");
                    next.insert(f[(i + k - 1) % k], f[(i + 1) % k]);
                }
                let start = *next.keys().next().expect("vertex on a face");
                let mut ring = vec![start];
                while ring.len() < next.len() {
                    ring.push(next[ring.last().expect("nonempty")]);
                }
                let p = self.vertices[v];
                let dirs: Vec<[f64; 3]> = ring.iter().map(|&u| sub(self.vertices[u], p)).collect();
                let mut total = 0.0;
                for i in 1..dirs.len() - 1 {
                    let (a, b, c) = (dirs[0], dirs[i], dirs[i + 1]);
                    let (la, lb, lc) = (norm(a), norm(b), norm(c));
                    let num = dot(a, crs(b, c)).abs();
                    let den = la * lb * lc + dot(a, b) * lc + dot(a, c) * lb + dot(b, c) * la;
                    total += 2.0 * num.atan2(den);
                }
                total
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DeficiencyReport {
    pub vertex_sum: f64,
    pub edge_sum: f64,
    pub equal: bool,
}

/// Deficiency sums compared within 1e−9.
pub fn deficiency_compare(vertex_deficiencies: &[f64], edge_deficiencies: &[f64]) -> DeficiencyReport {
    let vertex_sum: f64 = vertex_deficiencies.iter().sum();
    let edge_sum: f64 = edge_deficiencies.iter().sum();
    DeficiencyReport { vertex_sum, edge_sum, equal: (vertex_sum - edge_sum).abs() < 1e-9 }
}

/// Σ (2π − Ω) over vertices against Σ (2π − 2θ) over edges.
pub fn euler_deficiency_check(p: &Polyhedron) -> Result<DeficiencyReport> {
    if p.euler_characteristic() != 2 {
        return domain("polyhedron does not satisfy V − E + F = 2");
    }
    let v: Vec<f64> = p.solid_angles().iter().map(|o| 2.0 * PI - o).collect();
    let e: Vec<f64> = p.dihedral_angles().iter().map(|(_, t)| 2.0 * PI - 2.0 * t).collect();
    Ok(deficiency_compare(&v, &e))
}

// ---------------------------------------------------- Schoenflies solid

pub type RatPoint3 = [BigRat; 3];

#[derive(Clone, Debug, PartialEq)]
pub struct Tetrahedron {
    pub vertices: [RatPoint3; 4],
}

fn d2(a: &RatPoint3, b: &RatPoint3) -> BigRat {
    (0..3).map(|i| (&a[i] - &b[i]) * (&a[i] - &b[i])).sum()
}

impl Tetrahedron {
    /// Squared lengths keyed by vertex pair.
    pub fn squared_edges(&self) -> Vec<((usize, usize), BigRat)> {
        let mut out = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                out.push(((i, j), d2(&self.vertices[i], &self.vertices[j])));
            }
        }
        out
    }

    /// Sorted squared side lengths of each face.
    pub fn face_shapes(&self) -> Vec<[BigRat; 3]> {
        (0..4)
            .map(|skip| {
                let v: Vec<usize> = (0..4).filter(|&i| i != skip).collect();
                let mut s = [
                    d2(&self.vertices[v[0]], &self.vertices[v[1]]),
                    d2(&self.vertices[v[0]], &self.vertices[v[2]]),
                    d2(&self.vertices[v[1]], &self.vertices[v[2]]),
                ];
                s.sort();
                s
            })
            .collect()
    }

    pub fn faces_congruent(&self) -> bool {
        let f = self.face_shapes();
        f.iter().all(|s| *s == f[0])
    }

    pub fn faces_isosceles(&self) -> bool {
        self.face_shapes().iter().all(|s| s[0] == s[1] || s[1] == s[2])
    }

    /// (longest edge / shortest edge)², exactly.
    pub fn edge_ratio_squared(&self) -> BigRat {
        let e: Vec<BigRat> = self.squared_edges().into_iter().map(|(_, l)| l).collect();
        let max = e.iter().max().expect("six edges").clone();
        let min = e.iter().min().expect("six edges").clone();
        max / min
    }

    /// |det| / 6.
    pub fn volume(&self) -> BigRat {
        let v = &self.vertices;
        let r: Vec<[BigRat; 3]> = (1..4).map(|i| std::array::from_fn(|k| &v[i][k] - &v[0][k])).collect();
        let det = &r[0][0] * (&r[1][1] * &r[2][2] - &r[1][2] * &r[2][1])
            - &r[0][1] * (&r[1][0] * &r[2][2] - &r[1][2] * &r[2][0])
            + &r[0][2] * (&r[1][0] * &r[2][1] - &r[1][1] * &r[2][0]);
        det.abs() / rat(6)
    }
}

/// Square prism with unit base and height 2; join the centres of the three
/// faces meeting at the origin corner to each other and to that corner.
pub fn schoenflies_tetrahedron() -> Tetrahedron {
    let h = |n: i64, d: i64| BigRat::new(n.into(), d.into());
    Tetrahedron {
        vertices: [
            [rat(0), rat(0), rat(0)],
            [rat(0), h(1, 2), rat(1)],
            [h(1, 2), rat(0), rat(1)],
            [h(1, 2), h(1, 2), rat(0)],
        ],
    }
}
