//! Puzzles: coloured cubes and Mayblox, compartment-coloured tiles and the
//! hexagon puzzle, stamp foldings, contact systems, reduced Latin squares,
//! the measuring rod, weighing sets and rooks by differentiation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{check_cap, domain};
use crate::exactcore::MultiPoly;
use crate::partitions::{enumerate_perfect, enumerate_subperfect, Partition};
use crate::Result;

// ---------------------------------------------------------------- cubes

/// Face positions.
pub const U: usize = 0;
pub const D: usize = 1;
pub const F: usize = 2;
pub const B: usize = 3;
pub const L: usize = 4;
pub const R: usize = 5;
pub const FACE_NAMES: [&str; 6] = ["U", "D", "F", "B", "L", "R"];

/// Face colours in the order U, D, F, B, L, R.
pub type Faces = [u8; 6];

/// A face permutation: `new[i] = old[perm[i]]`.
type Perm = [usize; 6];

fn apply(p: &Perm, f: &Faces) -> Faces {
    std::array::from_fn(|i| f[p[i]])
}

fn compose(a: &Perm, b: &Perm) -> Perm {
    // apply b, then a
    std::array::from_fn(|i| b[a[i]])
}

/// The 24 proper rotations, generated by quarter turns about the vertical
/// and the left–right axes.
pub fn cube_rotations() -> Vec<[usize; 6]> {
    let turn_y: Perm = {
        let mut p = [U, D, F, B, L, R];
        p[R] = F;
        p[B] = R;
        p[L] = B;
        p[F] = L;
        p
    };
    let turn_x: Perm = {
        let mut p = [U, D, F, B, L, R];
        p[U] = F;
        p[B] = U;
        p[D] = B;
        p[F] = D;
        p
    };
    let id: Perm = [0, 1, 2, 3, 4, 5];
    let mut seen: BTreeSet<Perm> = BTreeSet::from([id]);
    let mut frontier = vec![id];
    while let Some(p) = frontier.pop() {
        for g in [&turn_y, &turn_x] {
            let q = compose(g, &p);
            if seen.insert(q) {
                frontier.push(q);
            }
        }
    }
    seen.into_iter().collect()
}

/// A cube with coloured faces, stored in canonical orientation: the
/// lexicographically least face vector over all 24 rotations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredCube {
    faces: Faces,
}

impl ColoredCube {
    pub fn new(faces: Faces) -> Self {
        let faces = cube_rotations()
            .iter()
            .map(|p| apply(p, &faces))
            .min()
            .expect("24 rotations");
        ColoredCube { faces }
    }

    pub fn faces(&self) -> Faces {
        self.faces
    }

    /// Every distinct orientation of this cube.
    pub fn orientations(&self) -> Vec<Faces> {
        let set: BTreeSet<Faces> = cube_rotations().iter().map(|p| apply(p, &self.faces)).collect();
        set.into_iter().collect()
    }

    pub fn is_rotation_of(&self, faces: &Faces) -> bool {
        ColoredCube::new(*faces) == *self
    }
}

impl fmt::Display for ColoredCube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.faces.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}={}", FACE_NAMES[i], c)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CubeMode {
    /// Six different colours chosen from the k available.
    #[default]
    AllDistinct,
    /// Any assignment of the k colours.
    AnyColoring,
}

/// All cubes with colours 1..=k up to rotation, sorted.
pub fn generate_cubes(k: u8, mode: CubeMode) -> Result<Vec<ColoredCube>> {
    if k == 0 {
        return domain("need at least one colour");
    }
    check_cap("cube colours", k as u64, 12)?;
    let mut set = BTreeSet::new();
    let mut f = [1u8; 6];
    loop {
        let distinct = f.iter().collect::<BTreeSet<_>>().len() == 6;
        if mode == CubeMode::AnyColoring || distinct {
            set.insert(ColoredCube::new(f));
        }
        // odometer over k^6
        let mut i = 0;
        loop {
            if i == 6 {
                return Ok(set.into_iter().collect());
            }
            if f[i] < k {
                f[i] += 1;
                break;
            }
            f[i] = 1;
            i += 1;
        }
    }
}

/// The mirror cube: colours of U and D exchanged.
pub fn associated_cube(c: &ColoredCube) -> ColoredCube {
    let mut f = c.faces();
    f.swap(U, D);
    ColoredCube::new(f)
}

/// Position (x, y, z) in the 2×2×2 block: x = 0 left, y = 0 bottom,
/// z = 0 back.
pub fn block_position(i: usize) -> (usize, usize, usize) {
    (i & 1, (i >> 1) & 1, (i >> 2) & 1)
}

/// Faces of position i on the outside of the block.
pub fn exposed_faces(i: usize) -> [usize; 3] {
    let (x, y, z) = block_position(i);
    [if x == 0 { L } else { R }, if y == 0 { D } else { U }, if z == 0 { B } else { F }]
}

/// The 12 touching pairs (position, face, position, face).
pub fn internal_contacts() -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..8 {
        let (x, y, z) = block_position(i);
        if x == 0 {
            out.push((i, R, i | 1, L));
        }
        if y == 0 {
            out.push((i, U, i | 2, D));
        }
        if z == 0 {
            out.push((i, F, i | 4, B));
        }
    }
    out
}

/// Eight (pool index, oriented faces) pairs, one per block position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeAssembly {
    pub placements: Vec<(usize, Faces)>,
}

impl CubeAssembly {
    /// Outer faces show `target` face by face, touching faces agree, cubes
    /// are distinct members of `pool` in valid orientations.
    pub fn verify(&self, pool: &[ColoredCube], target: Option<&Faces>) -> bool {
        if self.placements.len() != 8 {
            return false;
        }
        let used: BTreeSet<usize> = self.placements.iter().map(|p| p.0).collect();
        if used.len() != 8 {
            return false;
        }
        for (idx, faces) in &self.placements {
            match pool.get(*idx) {
                Some(c) if c.is_rotation_of(faces) => {}
                _ => return false,
            }
        }
        if !internal_contacts()
            .iter()
            .all(|&(i, fi, j, fj)| self.placements[i].1[fi] == self.placements[j].1[fj])
        {
            return false;
        }
        // each outer face of the block is one colour, matching the target
        let mut outer: [Option<u8>; 6] = [None; 6];
        for (i, (_, faces)) in self.placements.iter().enumerate() {
            for face in exposed_faces(i) {
                match outer[face] {
                    None => outer[face] = Some(faces[face]),
                    Some(c) if c != faces[face] => return false,
                    _ => {}
                }
            }
        }
        match target {
            Some(t) => (0..6).all(|f| outer[f] == Some(t[f])),
            None => true,
        }
    }

    /// The colour scheme shown on the outside.
    pub fn outer_faces(&self) -> Faces {
        let mut out = [0u8; 6];
        for (i, (_, faces)) in self.placements.iter().enumerate() {
            for face in exposed_faces(i) {
                out[face] = faces[face];
            }
        }
        out
    }
}

fn assemble(pool: &[ColoredCube], allowed: &[bool], target: &Faces) -> Option<CubeAssembly> {
    let orientations: Vec<Vec<Faces>> = pool.iter().map(|c| c.orientations()).collect();
    let mut candidates: Vec<Vec<(usize, Faces)>> = vec![vec![]; 8];
    for (pos, cands) in candidates.iter_mut().enumerate() {
        for (ci, os) in orientations.iter().enumerate() {
            if !allowed[ci] {
                continue;
            }
            for o in os {
                if exposed_faces(pos).iter().all(|&f| o[f] == target[f]) {
                    cands.push((ci, *o));
                }
            }
        }
    }
    let contacts = internal_contacts();
    let mut chosen: Vec<(usize, Faces)> = Vec::with_capacity(8);
    let mut used = vec![false; pool.len()];
    fn rec(
        pos: usize,
        cands: &[Vec<(usize, Faces)>],
        contacts: &[(usize, usize, usize, usize)],
        chosen: &mut Vec<(usize, Faces)>,
        used: &mut [bool],
    ) -> bool {
        if pos == 8 {
            return true;
        }
        for &(ci, o) in &cands[pos] {
            if used[ci] {
                continue;
            }
            let fits = contacts
                .iter()
                .filter(|c| c.2 == pos)
                .all(|&(i, fi, _, fj)| chosen[i].1[fi] == o[fj]);
            if !fits {
                continue;
            }
            used[ci] = true;
            chosen.push((ci, o));
            if rec(pos + 1, cands, contacts, chosen, used) {
                return true;
            }
            chosen.pop();
            used[ci] = false;
        }
        false
    }
    rec(0, &candidates, &contacts, &mut chosen, &mut used).then(|| CubeAssembly { placements: chosen })
}

/// Build the target's colour scheme at double size from eight cubes of
/// `pool`, never using the target itself and, when `exclude_associate` is
/// set, never its mirror. `None` means no assembly exists.
pub fn mayblox_solve(target: &ColoredCube, pool: &[ColoredCube], exclude_associate: bool) -> Option<CubeAssembly> {
    let assoc = associated_cube(target);
    let allowed: Vec<bool> = pool
        .iter()
        .map(|c| c != target && !(exclude_associate && *c == assoc))
        .collect();
    assemble(pool, &allowed, &target.faces())
}

/// Any block with one colour per outer face from eight cubes of `pool`,
/// trying every colour scheme of six distinct colours present in the pool.
pub fn mayblox_untargeted(pool: &[ColoredCube]) -> Option<CubeAssembly> {
    let colours: BTreeSet<u8> = pool.iter().flat_map(|c| c.faces()).collect();
    let colours: Vec<u8> = colours.into_iter().collect();
    if colours.len() < 6 {
        return None;
    }
    let allowed = vec![true; pool.len()];
    let mut schemes = BTreeSet::new();
    let n = colours.len();
    let mut idx = [0usize; 6];
    // every injective assignment of colours to faces, up to rotation
    fn rec(d: usize, n: usize, idx: &mut [usize; 6], out: &mut Vec<[usize; 6]>) {
        if d == 6 {
            out.push(*idx);
            return;
        }
        for v in 0..n {
            if idx[..d].contains(&v) {
                continue;
            }
            idx[d] = v;
            rec(d + 1, n, idx, out);
        }
    }
    let mut all = Vec::new();
    rec(0, n, &mut idx, &mut all);
    for a in all {
        schemes.insert(ColoredCube::new(std::array::from_fn(|i| colours[a[i]])));
    }
    schemes.iter().find_map(|s| assemble(pool, &allowed, &s.faces()))
}

// ---------------------------------------------------------------- tiles

/// A polygon with one coloured compartment per edge, clockwise, stored
/// as the least rotation (and reflection, when asked for).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tile {
    colors: Vec<u8>,
}

impl Tile {
    pub fn new(colors: Vec<u8>, reflections: bool) -> Self {
        let n = colors.len();
        let mut best = colors.clone();
        for r in 0..n {
            let rot: Vec<u8> = (0..n).map(|i| colors[(i + r) % n]).collect();
            if rot < best {
                best = rot.clone();
            }
            if reflections {
                let refl: Vec<u8> = rot.iter().rev().copied().collect();
                if refl < best {
                    best = refl;
                }
            }
        }
        Tile { colors: best }
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn sides(&self) -> usize {
        self.colors.len()
    }

    /// Compartment colours after turning r steps clockwise: the colour on
    /// edge e is `colors[(e + n − r) % n]`.
    pub fn rotated(&self, r: usize) -> Vec<u8> {
        let n = self.colors.len();
        (0..n).map(|e| self.colors[(e + n - r % n) % n]).collect()
    }
}

impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.colors {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// All n-gon tiles with colours 0..k, sorted.
pub fn generate_tiles(sides: usize, k: u8, reflections: bool) -> Result<Vec<Tile>> {
    if k == 0 || sides < 3 {
        return domain("need k ≥ 1 colours and at least three sides");
    }
    check_cap("tile colourings", (k as u64).saturating_pow(sides as u32), 1 << 20)?;
    let mut set = BTreeSet::new();
    let mut c = vec![0u8; sides];
    loop {
        set.insert(Tile::new(c.clone(), reflections));
        let mut i = 0;
        loop {
            if i == sides {
                return Ok(set.into_iter().collect());
            }
            if c[i] + 1 < k {
                c[i] += 1;
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

pub fn generate_triangles(k: u8) -> Result<Vec<Tile>> {
    generate_tiles(3, k, false)
}

pub fn generate_squares(k: u8) -> Result<Vec<Tile>> {
    generate_tiles(4, k, false)
}

/// The side-2 hexagon of 24 unit triangles.
///
/// Lattice points are a·(1, 0) + b·(½, √3/2); cells are triangles whose
/// corners all lie within hex distance 2 of the centre.
#[derive(Clone, Debug, PartialEq)]
pub struct HexBoard {
    /// Per cell, its three edges in clockwise order as sorted corner pairs.
    pub cells: Vec<[[(i32, i32); 2]; 3]>,
    /// Per cell and edge slot, the neighbouring (cell, slot), or `None` on
    /// the perimeter.
    pub neighbours: Vec<[Option<(usize, usize)>; 3]>,
}

impl HexBoard {
    pub fn side_two() -> Self {
        let inside = |a: i32, b: i32| a.abs() <= 2 && b.abs() <= 2 && (a + b).abs() <= 2;
        let mut tris: Vec<[(i32, i32); 3]> = Vec::new();
        for a in -3..=3 {
            for b in -3..=3 {
                let up = [(a, b), (a + 1, b), (a, b + 1)];
                let down = [(a + 1, b), (a + 1, b + 1), (a, b + 1)];
                for t in [up, down] {
                    if t.iter().all(|&(x, y)| inside(x, y)) {
                        tris.push(t);
                    }
                }
            }
        }
        let xy = |(a, b): (i32, i32)| (a as f64 + b as f64 / 2.0, b as f64 * 3f64.sqrt() / 2.0);
        let mut cells = Vec::new();
        for t in &tris {
            // order the corners clockwise (negative signed area)
            let (p, q, r) = (xy(t[0]), xy(t[1]), xy(t[2]));
            let area = (q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0);
            let v = if area < 0.0 { [t[0], t[1], t[2]] } else { [t[0], t[2], t[1]] };
            let edge = |i: usize| {
                let (x, y) = (v[i], v[(i + 1) % 3]);
                if x < y { [x, y] } else { [y, x] }
            };
            cells.push([edge(0), edge(1), edge(2)]);
        }
        let mut owner: BTreeMap<[(i32, i32); 2], Vec<(usize, usize)>> = BTreeMap::new();
        for (ci, c) in cells.iter().enumerate() {
            for (s, e) in c.iter().enumerate() {
                owner.entry(*e).or_default().push((ci, s));
            }
        }
        let neighbours = cells
            .iter()
            .enumerate()
            .map(|(ci, c)| {
                std::array::from_fn(|s| owner[&c[s]].iter().copied().find(|&(o, _)| o != ci))
            })
            .collect();
        HexBoard { cells, neighbours }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn perimeter_edges(&self) -> usize {
        self.neighbours.iter().flatten().filter(|n| n.is_none()).count()
    }
}

/// Per cell, (tile index, clockwise turns).
pub type HexPlacement = Vec<(usize, usize)>;

/// Every tile used once, every touching pair of compartments equal, every
/// perimeter compartment `border`.
pub fn check_hexagon(board: &HexBoard, tiles: &[Tile], placement: &HexPlacement, border: u8) -> bool {
    if placement.len() != board.len() || tiles.len() < board.len() {
        return false;
    }
    let used: BTreeSet<usize> = placement.iter().map(|p| p.0).collect();
    if used.len() != placement.len() || placement.iter().any(|p| p.0 >= tiles.len() || tiles[p.0].sides() != 3) {
        return false;
    }
    let colours: Vec<Vec<u8>> = placement.iter().map(|&(t, r)| tiles[t].rotated(r)).collect();
    for (ci, ns) in board.neighbours.iter().enumerate() {
        for (s, n) in ns.iter().enumerate() {
            let ok = match n {
                None => colours[ci][s] == border,
                Some((cj, sj)) => colours[ci][s] == colours[*cj][*sj],
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Backtracking search for the hexagon puzzle.
pub fn hexagon_solve(tiles: &[Tile], border: u8) -> Option<HexPlacement> {
    let board = HexBoard::side_two();
    if tiles.len() < board.len() {
        return None;
    }
    let n = board.len();
    // perimeter cells first, walking around, then the inner ring
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&c| {
        let outer = board.neighbours[c].iter().any(|x| x.is_none());
        let centre = board.cells[c]
            .iter()
            .flatten()
            .fold((0.0, 0.0), |acc, &(a, b)| (acc.0 + a as f64 + b as f64 / 2.0, acc.1 + b as f64));
        let angle = (centre.1 * 3f64.sqrt() / 2.0).atan2(centre.0);
        (!outer, (angle * 1000.0) as i64)
    });
    let rotations: Vec<Vec<Vec<u8>>> = tiles.iter().map(|t| (0..3).map(|r| t.rotated(r)).collect()).collect();
    let mut placed: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut used = vec![false; tiles.len()];
    fn rec(
        k: usize,
        order: &[usize],
        board: &HexBoard,
        rotations: &[Vec<Vec<u8>>],
        border: u8,
        placed: &mut Vec<Option<(usize, usize)>>,
        used: &mut [bool],
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let cell = order[k];
        for t in 0..rotations.len() {
            if used[t] {
                continue;
            }
            for r in 0..3 {
                let col = &rotations[t][r];
                let fits = (0..3).all(|s| match board.neighbours[cell][s] {
                    None => col[s] == border,
                    Some((cj, sj)) => match placed[cj] {
                        None => true,
                        Some((tj, rj)) => rotations[tj][rj][sj] == col[s],
                    },
                });
                if !fits {
                    continue;
                }
                used[t] = true;
                placed[cell] = Some((t, r));
                if rec(k + 1, order, board, rotations, border, placed, used) {
                    return true;
                }
                placed[cell] = None;
                used[t] = false;
            }
        }
        false
    }
    rec(0, &order, &board, &rotations, border, &mut placed, &mut used)
        .then(|| placed.into_iter().map(|p| p.expect("filled")).collect())
}

// ---------------------------------------------------------------- stamps

/// Default cap on the strip length for `stamp_foldings`.
pub const STAMP_CAP: u64 = 12;

/// Foldings of a strip of n labelled stamps into a pile. Creases between
/// stamps i and i+1 alternate sides; two creases on one side must nest or
/// be disjoint in the pile.
pub fn stamp_foldings(n: u64) -> Result<BigInt> {
    stamp_foldings_capped(n, STAMP_CAP)
}

pub fn stamp_foldings_capped(n: u64, cap: u64) -> Result<BigInt> {
    if n == 0 {
        return domain("need at least one stamp");
    }
    check_cap("stamps", n, cap)?;
    let mut pile = vec![0usize];
    Ok(BigInt::from(fold_rec(&mut pile, n as usize)))
}

fn fold_rec(pile: &mut Vec<usize>, n: usize) -> u64 {
    let k = pile.len();
    if k == n {
        return 1;
    }
    let mut total = 0;
    for pos in 0..=k {
        pile.insert(pos, k);
        if creases_ok(pile, k) {
            total += fold_rec(pile, n);
        }
        pile.remove(pos);
    }
    total
}

/// Whether the newest crease (stamps k−1, k) crosses no crease on its side.
fn creases_ok(pile: &[usize], k: usize) -> bool {
    let mut at = vec![0usize; pile.len()];
    for (i, &s) in pile.iter().enumerate() {
        at[s] = i;
    }
    let span = |i: usize| {
        let (a, b) = (at[i], at[i + 1]);
        (a.min(b), a.max(b))
    };
    let (a, b) = span(k - 1);
    let mut i = (k - 1) % 2;
    while i + 1 < k {
        let (c, d) = span(i);
        if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
            return false;
        }
        i += 2;
    }
    true
}

// ------------------------------------------------------- contact systems

/// An involution on compartments 1..=n, as pairs (a, b) with a ≤ b.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ContactSystem {
    pub pairs: Vec<(usize, usize)>,
}

impl ContactSystem {
    pub fn new(n: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for &(a, b) in &pairs {
            for x in [a, b] {
                if x == 0 || x > n || (seen[x] && a != b) {
                    return domain("pairs must cover 1..=n once each");
                }
                seen[x] = true;
            }
        }
        if seen[1..].iter().any(|&s| !s) {
            return domain("pairs must cover 1..=n once each");
        }
        let mut pairs: Vec<(usize, usize)> = pairs.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        pairs.sort();
        Ok(ContactSystem { pairs })
    }

    pub fn size(&self) -> usize {
        self.pairs.iter().map(|&(a, b)| if a == b { 1 } else { 2 }).sum()
    }

    /// σ as an array indexed 1..=n (slot 0 unused).
    pub fn image(&self) -> Vec<usize> {
        let mut s = vec![0; self.size() + 1];
        for &(a, b) in &self.pairs {
            s[a] = b;
            s[b] = a;
        }
        s
    }
}

impl fmt::Display for ContactSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}{b}")?;
        }
        f.write_str("}")
    }
}

/// I(n) = I(n−1) + (n−1)·I(n−2).
pub fn contact_system_count(n: u64) -> BigInt {
    let (mut a, mut b) = (BigInt::one(), BigInt::one());
    for k in 2..=n {
        let c = &b + &a * (k - 1);
        a = b;
        b = c;
    }
    b
}

/// Every involution on 1..=n.
pub fn enumerate_contact_systems(n: usize) -> Result<Vec<ContactSystem>> {
    check_cap("compartments", n as u64, 12)?;
    fn rec(free: &mut Vec<usize>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some(&a) = free.first() else {
            out.push(cur.clone());
            return;
        };
        free.remove(0);
        cur.push((a, a));
        rec(free, cur, out);
        cur.pop();
        for i in 0..free.len() {
            let b = free.remove(i);
            cur.push((a, b));
            rec(free, cur, out);
            cur.pop();
            free.insert(i, b);
        }
        free.insert(0, a);
    }
    let mut out = Vec::new();
    rec(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
    let mut v: Vec<ContactSystem> = out.into_iter().map(|p| ContactSystem::new(n, p)).collect::<Result<_>>()?;
    v.sort();
    Ok(v)
}

/// Label on side d (0 = N, 1 = E, 2 = S, 3 = W) of a square with
/// compartments 1..4 clockwise from north, turned r quarter turns.
pub fn square_label(d: usize, r: usize) -> usize {
    (d + 4 - r % 4) % 4 + 1
}

/// Whether unreflected squares can tile the plane with every contact
/// obeying the system. The eastern neighbour's turn is forced by the
/// western one (map f) and likewise southwards (map g), so a tiling exists
/// exactly when f and g commute on some orbit. Returns one periodic patch
/// of turns, rows × columns, when achievable.
pub fn square_contact_tiling(cs: &ContactSystem) -> Option<Vec<Vec<usize>>> {
    if cs.size() != 4 {
        return None;
    }
    let s = cs.image();
    let step = |from: usize, to: usize| -> Vec<Option<usize>> {
        (0..4)
            .map(|r| (0..4).find(|&r2| s[square_label(from, r)] == square_label(to, r2)))
            .collect()
    };
    let f = step(1, 3);
    let g = step(2, 0);
    'start: for r0 in 0..4 {
        let mut orbit = BTreeSet::from([r0]);
        let mut stack = vec![r0];
        while let Some(x) = stack.pop() {
            let (Some(fx), Some(gx)) = (f[x], g[x]) else { continue 'start };
            if f[gx] != g[fx] {
                continue 'start;
            }
            for y in [fx, gx] {
                if orbit.insert(y) {
                    stack.push(y);
                }
            }
        }
        // f and g are bijections of a 4-set, so period 4 closes both ways
        let mut rows = Vec::new();
        let mut row_start = r0;
        for _ in 0..4 {
            let mut row = Vec::new();
            let mut x = row_start;
            for _ in 0..4 {
                row.push(x);
                x = f[x].expect("on orbit");
            }
            rows.push(row);
            row_start = g[row_start].expect("on orbit");
        }
        return Some(rows);
    }
    None
}

/// Each system of the square with its achievability.
pub fn square_contact_report() -> Vec<(ContactSystem, bool)> {
    enumerate_contact_systems(4)
        .expect("n = 4 is within the cap")
        .into_iter()
        .map(|c| {
            let ok = square_contact_tiling(&c).is_some();
            (c, ok)
        })
        .collect()
}

// ---------------------------------------------------------- Latin squares

/// Reduced n×n Latin squares (first row and column in order), n ≤ 6.
pub fn latin_reduced_count(n: usize) -> Result<BigInt> {
    if n == 0 {
        return domain("need n ≥ 1");
    }
    check_cap("Latin square order", n as u64, 6)?;
    let mut g = vec![vec![usize::MAX; n]; n];
    for i in 0..n {
        g[0][i] = i;
        g[i][0] = i;
    }
    Ok(BigInt::from(latin_fill(&mut g, n, 1, 1)))
}

/// All n×n Latin squares with no normalisation, by direct search.
pub fn latin_total_count(n: usize) -> Result<BigInt> {
    if n == 0 {
        return domain("need n ≥ 1");
    }
    check_cap("Latin square order", n as u64, 4)?;
    let mut g = vec![vec![usize::MAX; n]; n];
    Ok(BigInt::from(latin_fill(&mut g, n, 0, 0)))
}

fn latin_fill(g: &mut Vec<Vec<usize>>, n: usize, i: usize, j: usize) -> u64 {
    if i == n {
        return 1;
    }
    let (ni, nj) = if j + 1 == n { (i + 1, 0) } else { (i, j + 1) };
    if g[i][j] != usize::MAX {
        return latin_fill(g, n, ni, nj);
    }
    let mut total = 0;
    for v in 0..n {
        if (0..n).any(|k| g[i][k] == v || g[k][j] == v) {
            continue;
        }
        g[i][j] = v;
        total += latin_fill(g, n, ni, nj);
        g[i][j] = usize::MAX;
    }
    total
}

// ------------------------------------------------------------ the rod

/// Integer marks from 0, all pairwise differences distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedRuler {
    marks: Vec<u64>,
}

impl MarkedRuler {
    pub fn new(marks: Vec<u64>) -> Result<Self> {
        if marks.first() != Some(&0) || marks.windows(2).any(|w| w[0] >= w[1]) {
            return domain("marks must start at 0 and increase");
        }
        let mut diffs = BTreeSet::new();
        for (i, a) in marks.iter().enumerate() {
            for b in &marks[i + 1..] {
                if !diffs.insert(b - a) {
                    return domain(format!("difference {} occurs twice", b - a));
                }
            }
        }
        Ok(MarkedRuler { marks })
    }

    pub fn marks(&self) -> &[u64] {
        &self.marks
    }

    /// Lengths between successive marks.
    pub fn segments(&self) -> Vec<u64> {
        self.marks.windows(2).map(|w| w[1] - w[0]).collect()
    }
}

/// The first k marks of the greedy rod: each new mark is the least integer
/// keeping every difference distinct.
pub fn measuring_rod(k: usize) -> Result<MarkedRuler> {
    if k == 0 {
        return domain("need k ≥ 1");
    }
    check_cap("rod marks", k as u64, 2000)?;
    let mut marks = vec![0u64];
    let mut diffs: BTreeSet<u64> = BTreeSet::new();
    let mut next = 1u64;
    while marks.len() < k {
        let ds: Vec<u64> = marks.iter().map(|m| next - m).collect();
        let distinct = ds.iter().collect::<BTreeSet<_>>().len() == ds.len();
        if distinct && ds.iter().all(|d| !diffs.contains(d)) {
            diffs.extend(ds);
            marks.push(next);
        }
        next += 1;
    }
    MarkedRuler::new(marks)
}

// --------------------------------------------------------- weighing sets

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Pans {
    /// Weights in one pan only.
    #[default]
    One,
    /// Weights on either side.
    Two,
}

/// Weights weighing every load 1..=u in exactly one way: a perfect
/// (one pan) or subperfect (two pans) partition of u. Among those, the one
/// with fewest weights, then lexicographically greatest.
pub fn weighing_set(u: u64, pans: Pans) -> Result<Partition> {
    if u == 0 {
        return domain("need u ≥ 1");
    }
    check_cap("load", u, 1_000_000)?;
    let all = match pans {
        Pans::One => enumerate_perfect(u),
        Pans::Two => enumerate_subperfect(u),
    };
    // descending lexicographic order already, so the first minimum wins
    all.into_iter()
        .fold(None::<Partition>, |best, p| match best {
            Some(b) if b.len() <= p.len() => Some(b),
            _ => Some(p),
        })
        .ok_or_else(|| crate::Error::Rejected("no weighing set".into()))
}

// ------------------------------------------------------------- rooks

/// Ways to put k non-attacking rooks on the first k rows of an n×n board:
/// the coefficient left after differentiating xⁿ k times.
pub fn rook_row_counts(n: u32, k: u32) -> Result<BigInt> {
    if k > n {
        return domain("need k ≤ n");
    }
    let mut p = MultiPoly::var(&["x"], "x").pow(n);
    for _ in 0..k {
        p = p.partial(0);
    }
    let c = p.coeff(&[n - k]);
    debug_assert!(c.is_integer());
    Ok(if c.is_zero() { BigInt::zero() } else { c.to_integer() })
}
