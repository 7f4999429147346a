use std::collections::BTreeSet;
use std::time::Instant;

use combanal::partitions::{is_perfect, is_subperfect};
use combanal::recreations::*;
use combanal::{BigInt, Error};
use proptest::prelude::*;

fn big(n: u64) -> BigInt {
    BigInt::from(n)
}

/// Burnside over the rotation group itself: average number of fixed
/// colourings, k^(cycles of the face permutation).
fn burnside_cubes(k: u64) -> u64 {
    let rots = cube_rotations();
    let total: u64 = rots
        .iter()
        .map(|p| {
            let mut seen = [false; 6];
            let mut cycles = 0;
            for s in 0..6 {
                if !seen[s] {
                    cycles += 1;
                    let mut x = s;
                    while !seen[x] {
                        seen[x] = true;
                        x = p[x];
                    }
                }
            }
            k.pow(cycles)
        })
        .sum();
    total / rots.len() as u64
}

#[test]
fn thirty_cubes_in_fifteen_pairs() {
    let cubes = generate_cubes(6, CubeMode::AllDistinct).unwrap();
    assert_eq!(cubes.len(), 30);
    let mut pairs = BTreeSet::new();
    for c in &cubes {
        let a = associated_cube(c);
        assert_ne!(a, *c);
        assert!(cubes.contains(&a));
        assert_eq!(associated_cube(&a), *c);
        pairs.insert(if a < *c { (a, *c) } else { (*c, a) });
    }
    assert_eq!(pairs.len(), 15);
}

#[test]
fn small_cube_counts() {
    assert_eq!(generate_cubes(1, CubeMode::AnyColoring).unwrap().len(), 1);
    assert_eq!(generate_cubes(2, CubeMode::AnyColoring).unwrap().len(), 10);
    assert!(generate_cubes(5, CubeMode::AllDistinct).unwrap().is_empty());
    assert!(matches!(generate_cubes(0, CubeMode::AllDistinct), Err(Error::Domain(_))));
}

#[test]
fn cube_orbit_formula() {
    for k in 1..=4u64 {
        let n = generate_cubes(k as u8, CubeMode::AnyColoring).unwrap().len() as u64;
        assert_eq!(n, (k.pow(6) + 3 * k.pow(4) + 12 * k.pow(3) + 8 * k * k) / 24);
        assert_eq!(n, burnside_cubes(k));
    }
}

#[test]
fn mayblox_every_target() {
    let start = Instant::now();
    let cubes = generate_cubes(6, CubeMode::AllDistinct).unwrap();
    for t in &cubes {
        let sol = mayblox_solve(t, &cubes, true).expect("solvable");
        assert!(sol.verify(&cubes, Some(&t.faces())));
        let used: Vec<ColoredCube> = sol.placements.iter().map(|p| cubes[p.0]).collect();
        assert!(!used.contains(t));
        assert!(!used.contains(&associated_cube(t)));
    }
    assert!(start.elapsed().as_secs() < 60);
}

#[test]
fn assembly_checker_catches_tampering() {
    let cubes = generate_cubes(6, CubeMode::AllDistinct).unwrap();
    let t = cubes[7];
    let mut sol = mayblox_solve(&t, &cubes, true).unwrap();
    assert_eq!(sol.outer_faces(), t.faces());
    let mut wrong = t.faces();
    wrong.swap(U, D);
    assert!(!sol.verify(&cubes, Some(&wrong)));
    // swapping two placed cubes breaks faces or contacts
    sol.placements.swap(0, 7);
    assert!(!sol.verify(&cubes, Some(&t.faces())));
}

#[test]
fn mayblox_without_target() {
    let cubes = generate_cubes(6, CubeMode::AllDistinct).unwrap();
    let sol = mayblox_untargeted(&cubes).expect("solvable");
    assert!(sol.verify(&cubes, None));
    // the eight cubes of a targeted solution suffice on their own
    let t = cubes[3];
    let s = mayblox_solve(&t, &cubes, true).unwrap();
    let eight: Vec<ColoredCube> = s.placements.iter().map(|p| cubes[p.0]).collect();
    let again = mayblox_untargeted(&eight).expect("solvable");
    assert!(again.verify(&eight, None));
}

#[test]
fn tile_counts() {
    let tri = |k: u8| generate_triangles(k).unwrap().len() as u64;
    let sq = |k: u8| generate_squares(k).unwrap().len() as u64;
    assert_eq!(tri(4), 24);
    assert_eq!(tri(5), 45);
    assert_eq!(tri(1), 1);
    assert_eq!(sq(3), 24);
    assert_eq!(sq(2), 6);
    for k in 1..=6u64 {
        assert_eq!(tri(k as u8), (k.pow(3) + 2 * k) / 3);
        assert_eq!(sq(k as u8), (k.pow(4) + k * k + 2 * k) / 4);
    }
    // with reflections, triangles are unchanged and squares drop
    assert_eq!(generate_tiles(3, 4, true).unwrap().len(), 20);
    assert_eq!(generate_tiles(4, 3, true).unwrap().len(), 21);
}

#[test]
fn hexagon_puzzle() {
    let tiles = generate_triangles(4).unwrap();
    let board = HexBoard::side_two();
    let sol = hexagon_solve(&tiles, 0).expect("a solution");
    assert!(check_hexagon(&board, &tiles, &sol, 0));
    assert!(!check_hexagon(&board, &tiles, &sol, 1));
    let mut bad = sol.clone();
    bad[0].1 = (bad[0].1 + 1) % 3;
    let monochrome = tiles[bad[0].0].colors().iter().all(|&c| c == tiles[bad[0].0].colors()[0]);
    assert!(monochrome || !check_hexagon(&board, &tiles, &bad, 0));
    assert!(hexagon_solve(&tiles[1..], 0).is_none());
}

/// Stamps: brute force over every pile order with the crossing rule.
fn stamp_oracle(n: usize) -> u64 {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }
    perms(n)
        .into_iter()
        .filter(|pile| {
            let mut at = vec![0; n];
            for (i, &s) in pile.iter().enumerate() {
                at[s] = i;
            }
            let span = |i: usize| (at[i].min(at[i + 1]), at[i].max(at[i + 1]));
            (0..n.saturating_sub(1)).all(|i| {
                (i + 2..n - 1).step_by(2).all(|j| {
                    let ((a, b), (c, d)) = (span(i), span(j));
                    !((a < c && c < b && b < d) || (c < a && a < d && d < b))
                })
            })
        })
        .count() as u64
}

#[test]
fn stamp_counts() {
    let expected = [1u64, 2, 6, 16, 50, 144, 462, 1392, 4536];
    for (i, e) in expected.iter().enumerate() {
        assert_eq!(stamp_foldings(i as u64 + 1).unwrap(), big(*e));
    }
    for n in 1..=7 {
        assert_eq!(stamp_foldings(n as u64).unwrap(), big(stamp_oracle(n)));
    }
    assert!(matches!(stamp_foldings(13), Err(Error::CapExceeded { .. })));
    assert!(stamp_foldings(0).is_err());
}

#[test]
fn stamp_nine_is_fast() {
    let start = Instant::now();
    assert_eq!(stamp_foldings(9).unwrap(), big(4536));
    assert!(start.elapsed().as_secs() < 5);
}

#[test]
fn contact_system_counts() {
    let expected = [1u64, 2, 4, 10, 26, 76, 232];
    for (i, e) in expected.iter().enumerate() {
        assert_eq!(contact_system_count(i as u64 + 1), big(*e));
    }
    for n in 1..=8 {
        let all = enumerate_contact_systems(n).unwrap();
        assert_eq!(big(all.len() as u64), contact_system_count(n as u64));
        let distinct: BTreeSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), all.len());
        for cs in &all {
            let s = cs.image();
            assert!((1..=n).all(|x| s[s[x]] == x));
        }
    }
    let four = enumerate_contact_systems(4).unwrap();
    assert!(four.iter().any(|c| c.to_string() == "{11,24,33}"));
}

/// Torus oracle: any assignment of turns to an m×n torus obeying the system.
fn torus_tiling(cs: &ContactSystem, m: usize, n: usize) -> bool {
    let s = cs.image();
    fn rec(k: usize, m: usize, n: usize, s: &[usize], g: &mut Vec<usize>) -> bool {
        if k == m * n {
            return (0..m * n).all(|c| {
                let (i, j) = (c / n, c % n);
                let e = i * n + (j + 1) % n;
                let so = ((i + 1) % m) * n + j;
                s[square_label(1, g[c])] == square_label(3, g[e]) && s[square_label(2, g[c])] == square_label(0, g[so])
            });
        }
        let (i, j) = (k / n, k % n);
        for r in 0..4 {
            let west = j > 0 && s[square_label(1, g[k - 1])] != square_label(3, r);
            let north = i > 0 && s[square_label(2, g[k - n])] != square_label(0, r);
            if west || north {
                continue;
            }
            g.push(r);
            if rec(k + 1, m, n, s, g) {
                return true;
            }
            g.pop();
        }
        false
    }
    rec(0, m, n, &s, &mut Vec::new())
}

#[test]
fn square_contact_achievability() {
    let report = square_contact_report();
    assert_eq!(report.len(), 10);
    for (cs, ok) in &report {
        let oracle = (1..=4).any(|m| (1..=4).any(|n| torus_tiling(cs, m, n)));
        assert_eq!(*ok, oracle, "{cs}");
        if let Some(rows) = square_contact_tiling(cs) {
            let s = cs.image();
            for i in 0..4 {
                for j in 0..4 {
                    let r = rows[i][j];
                    assert_eq!(s[square_label(1, r)], square_label(3, rows[i][(j + 1) % 4]));
                    assert_eq!(s[square_label(2, r)], square_label(0, rows[(i + 1) % 4][j]));
                }
            }
        }
    }
    // the identity system is the plain checkerboard of matching edges
    let id = ContactSystem::new(4, vec![(1, 1), (2, 2), (3, 3), (4, 4)]).unwrap();
    assert!(square_contact_tiling(&id).is_some());
}

#[test]
fn contact_system_validation() {
    assert!(ContactSystem::new(3, vec![(1, 2)]).is_err());
    assert!(ContactSystem::new(3, vec![(1, 2), (2, 3)]).is_err());
    assert_eq!(ContactSystem::new(3, vec![(3, 1), (2, 2)]).unwrap().to_string(), "{13,22}");
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

#[test]
fn latin_squares() {
    let expected = [1u64, 1, 1, 4, 56, 9408];
    for (i, e) in expected.iter().enumerate() {
        assert_eq!(latin_reduced_count(i + 1).unwrap(), big(*e));
    }
    assert_ne!(latin_reduced_count(5).unwrap(), big(52));
    for n in 1..=4 {
        let reduced = latin_reduced_count(n).unwrap();
        let total = latin_total_count(n).unwrap();
        assert_eq!(reduced * big(factorial(n) * factorial(n - 1)), total);
    }
    assert!(matches!(latin_reduced_count(7), Err(Error::CapExceeded { .. })));
}

#[test]
fn rod() {
    let r = measuring_rod(8).unwrap();
    assert_eq!(r.marks(), &[0, 1, 3, 7, 12, 20, 30, 44]);
    assert_eq!(r.segments(), vec![1, 2, 4, 5, 8, 10, 14]);
    assert_eq!(measuring_rod(2).unwrap().marks(), &[0, 1]);
    let r12 = measuring_rod(12).unwrap();
    let m = r12.marks();
    let mut diffs = BTreeSet::new();
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            assert!(diffs.insert(m[j] - m[i]));
        }
    }
    assert_eq!(diffs.len(), 66);
    assert!(MarkedRuler::new(vec![0, 1, 2]).is_err());
    assert!(MarkedRuler::new(vec![1, 2]).is_err());
}

/// Loads 1..=u each reachable exactly once. Equal weights are
/// interchangeable, so each distinct weight contributes a net count.
fn unique_weighings(w: &[u64], u: u64, signed: bool) -> bool {
    let mut mult = std::collections::BTreeMap::<u64, i64>::new();
    for &x in w {
        *mult.entry(x).or_default() += 1;
    }
    let mut counts = std::collections::BTreeMap::<i64, u32>::from([(0, 1)]);
    for (&x, &m) in &mult {
        let lo = if signed { -m } else { 0 };
        let mut next = std::collections::BTreeMap::new();
        for (&s, &c) in &counts {
            for k in lo..=m {
                *next.entry(s + k * x as i64).or_default() += c;
            }
        }
        counts = next;
    }
    (1..=u as i64).all(|x| counts.get(&x) == Some(&1))
}

#[test]
fn weighing_sets() {
    assert_eq!(weighing_set(7, Pans::One).unwrap().parts(), &[4, 2, 1]);
    assert_eq!(weighing_set(1, Pans::One).unwrap().parts(), &[1]);
    assert_eq!(weighing_set(4, Pans::Two).unwrap().parts(), &[3, 1]);
    assert_eq!(weighing_set(40, Pans::Two).unwrap().parts(), &[27, 9, 3, 1]);
    for u in 1..=40 {
        let one = weighing_set(u, Pans::One).unwrap();
        assert!(is_perfect(&one));
        assert!(unique_weighings(one.parts(), u, false), "u={u}");
        let two = weighing_set(u, Pans::Two).unwrap();
        let signed: Vec<i64> = two.parts().iter().map(|&x| x as i64).collect();
        assert!(is_subperfect(&signed));
        assert!(unique_weighings(two.parts(), u, true), "u={u}");
    }
}

#[test]
fn rooks() {
    assert_eq!(rook_row_counts(8, 1).unwrap(), big(8));
    assert_eq!(rook_row_counts(8, 2).unwrap(), big(56));
    assert_eq!(rook_row_counts(5, 0).unwrap(), big(1));
    assert_eq!(rook_row_counts(8, 8).unwrap(), big(40320));
    assert!(rook_row_counts(3, 4).is_err());
}

proptest! {
    #[test]
    fn canonical_cube_is_idempotent(f in proptest::array::uniform6(1u8..=4), r in 0usize..24) {
        let c = ColoredCube::new(f);
        prop_assert_eq!(ColoredCube::new(c.faces()), c);
        let p = cube_rotations()[r];
        let turned: [u8; 6] = std::array::from_fn(|i| f[p[i]]);
        prop_assert_eq!(ColoredCube::new(turned), c);
    }

    #[test]
    fn canonical_tile_is_idempotent(c in proptest::collection::vec(0u8..5, 3..7), r in 0usize..6) {
        let t = Tile::new(c.clone(), false);
        prop_assert_eq!(Tile::new(t.colors().to_vec(), false), t.clone());
        prop_assert_eq!(Tile::new(t.rotated(r), false), t);
    }

    #[test]
    fn rod_prefix_stable(k in 1usize..40) {
        let a = measuring_rod(k).unwrap();
        let b = measuring_rod(k + 1).unwrap();
        prop_assert_eq!(a.marks(), &b.marks()[..k]);
    }

    #[test]
    fn rooks_are_falling_factorials(n in 0u32..20, k in 0u32..20) {
        prop_assume!(k <= n);
        let f: u64 = (0..k as u64).map(|i| n as u64 - i).product();
        prop_assert_eq!(rook_row_counts(n, k).unwrap(), big(f));
    }
}
