use std::f64::consts::PI;

use combanal::exactcore::rat;
use combanal::patterns::*;
use combanal::recreations::{contact_system_count, ContactSystem};
use combanal::{BigInt, BigRat, Error};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> BigRat {
    BigRat::new(n.into(), d.into())
}

fn pt(x: (i64, i64), y: (i64, i64)) -> RatPoint {
    (q(x.0, x.1), q(y.0, y.1))
}

fn sawtooth() -> EdgeProfile {
    EdgeProfile::through(vec![pt((1, 4), (1, 4)), pt((3, 4), (-1, 4))]).unwrap()
}

fn two_bumps() -> EdgeProfile {
    EdgeProfile::through(vec![pt((1, 5), (1, 5)), pt((2, 5), (0, 1)), pt((3, 5), (1, 3)), pt((4, 5), (0, 1))]).unwrap()
}

#[test]
fn classification_examples() {
    assert_eq!(classify_edge(&EdgeProfile::straight()), EdgeClass::Straight);
    assert_eq!(classify_edge(&sawtooth()), EdgeClass::U);
    assert_eq!(classify_edge(&EdgeProfile::midpoint_bend(q(1, 4)).unwrap()), EdgeClass::S);
    let v = two_bumps();
    assert_eq!(classify_edge(&v), EdgeClass::V);
    assert!(!v.same_curve(&v.mirror()));
    assert!(v.point().contact_equivalent(&v.mirror()));
    // collinear vertices do not change the class
    let flat = EdgeProfile::through(vec![pt((1, 3), (0, 1)), pt((2, 3), (0, 1))]).unwrap();
    assert_eq!(classify_edge(&flat), EdgeClass::Straight);
}

#[test]
fn invalid_profiles() {
    assert!(EdgeProfile::new(vec![pt((0, 1), (0, 1)), pt((1, 2), (0, 1))]).is_err());
    // a hook doubling back on itself is fine, a crossing is not
    let hook = EdgeProfile::through(vec![pt((1, 2), (1, 2)), pt((1, 4), (1, 1)), pt((3, 4), (1, 1))]);
    assert!(hook.is_ok());
    let crossing = EdgeProfile::through(vec![pt((3, 4), (1, 2)), pt((3, 4), (-1, 2)), pt((1, 4), (1, 2))]);
    assert!(matches!(crossing, Err(Error::Domain(_))));
}

#[test]
fn plain_square_and_contacts() {
    let t = plain_tile(Base::Square);
    assert_eq!(t.area_excess(), rat(0));
    assert!((t.area() - 1.0).abs() < 1e-12);
    let tiling = generate_tiling(&t, 3).unwrap();
    assert_eq!(tiling.placements.len(), 49);
    assert!(tiling.samples_checked > 0);
    for base in [Base::Triangle, Base::Square, Base::Hexagon] {
        assert_eq!(BigInt::from(contact_systems_for(base).len()), contact_system_count(base.sides() as u64));
    }
}

#[test]
fn cairo_tile_tiles() {
    let t = cairo_tile();
    assert_eq!(t.area_excess(), rat(0));
    let tiling = generate_tiling(&t, 2).unwrap();
    assert_eq!(tiling.placements.len(), 25);
    assert!(tiling.samples_checked >= 50);
    // the copies come in four turns
    let turns: std::collections::BTreeSet<usize> = tiling.placements.iter().map(|p| p.rotation).collect();
    assert!(turns.len() > 1);
    let svg = tiling.to_svg();
    assert_eq!(svg.matches("<path").count(), 25);
    assert_eq!(svg, generate_tiling(&t, 2).unwrap().to_svg());
}

#[test]
fn regular_bases_tile() {
    for base in [Base::Triangle, Base::Square, Base::Hexagon] {
        for extent in [2, 3, 5] {
            let tiling = generate_tiling(&plain_tile(base), extent).unwrap();
            assert!(tiling.samples_checked > 0, "{base} {extent}");
        }
    }
    let hex = generate_tiling(&plain_tile(Base::Hexagon), 2).unwrap();
    assert_eq!(hex.placements.len(), 19);
    // half turns across every edge cannot close around a hexagon vertex
    let id = ContactSystem::new(6, (1..=6).map(|k| (k, k)).collect()).unwrap();
    assert!(!contact_realizable(Base::Hexagon, &id));
}

#[test]
fn illegal_pairings_are_rejected() {
    let bend = EdgeProfile::midpoint_bend(q(1, 4)).unwrap();
    let id = ContactSystem::new(4, vec![(1, 1), (2, 2), (3, 3), (4, 4)]).unwrap();
    let s = EdgeProfile::straight();
    let err = build_repeat_tile(Base::Square, id, vec![bend.clone(), s.clone(), s.clone(), s.clone()]).unwrap_err();
    assert!(matches!(&err, Error::Rejected(m) if m.contains("edges 1 and 1")));
    let pairs = ContactSystem::new(4, vec![(1, 3), (2, 4)]).unwrap();
    let err = build_repeat_tile(Base::Square, pairs.clone(), vec![bend.clone(), s.clone(), bend.clone(), s.clone()]).unwrap_err();
    assert!(matches!(&err, Error::Rejected(m) if m.contains("edges 1 and 3")));
    let ok = build_repeat_tile(Base::Square, pairs, vec![bend.clone(), s.clone(), bend.point(), s.clone()]).unwrap();
    assert_eq!(ok.area_excess(), rat(0));
    // U edges may pair with themselves
    let id = ContactSystem::new(3, vec![(1, 1), (2, 2), (3, 3)]).unwrap();
    let tri = build_repeat_tile(Base::Triangle, id, vec![sawtooth(), sawtooth(), EdgeProfile::straight()]).unwrap();
    generate_tiling(&tri, 3).unwrap();
    let wrong = ContactSystem::new(3, vec![(1, 1), (2, 3)]).unwrap();
    assert!(matches!(build_repeat_tile(Base::Square, wrong, vec![s; 4]), Err(Error::Dimension(_))));
}

#[test]
fn profiled_tiles_verify_or_diagnose() {
    // square, opposite edges paired, profiled edges: a genuine translation tile
    let v = two_bumps();
    let c = ContactSystem::new(4, vec![(1, 3), (2, 4)]).unwrap();
    let t = build_repeat_tile(Base::Square, c.clone(), vec![v.clone(), sawtooth(), v.point(), sawtooth().point()]).unwrap();
    assert_eq!(t.area_excess(), rat(0));
    generate_tiling(&t, 3).unwrap();
    // hexagon, opposite edges paired
    let c = ContactSystem::new(6, vec![(1, 4), (2, 5), (3, 6)]).unwrap();
    let b = EdgeProfile::midpoint_bend(q(1, 5)).unwrap();
    let s = EdgeProfile::straight();
    let hex = build_repeat_tile(Base::Hexagon, c, vec![b.clone(), s.clone(), v.clone(), b.point(), s, v.point()]).unwrap();
    generate_tiling(&hex, 3).unwrap();
}

#[test]
fn realizability_matches_square_report() {
    let report = combanal::recreations::square_contact_report();
    for (cs, ok) in report {
        assert_eq!(contact_realizable(Base::Square, &cs), ok, "{cs}");
    }
}

#[test]
fn angle_law() {
    let tri = [q(1, 2), q(1, 3), q(1, 6)];
    assert!(angle_distribution_check(&tri).unwrap());
    assert!(angle_distribution_check(&vec![q(1, 2); 4]).unwrap());
    // a concave quadrilateral
    assert!(angle_distribution_check(&[q(3, 2), q(1, 6), q(1, 6), q(1, 6)]).unwrap());
    assert!(!angle_distribution_check(&vec![q(3, 5); 5]).unwrap());
    assert!(angle_distribution_check(&vec![q(2, 3); 6]).unwrap());
    // pentagon with a triple summing to π and a pair to 2π
    let groups = angle_distribution(&[q(1, 2), q(1, 4), q(1, 4), q(1, 1), q(1, 1)]).unwrap().unwrap();
    assert_eq!(groups.len(), 2);
    assert!(angle_distribution_check(&[q(1, 2), q(1, 2)]).is_err());
    assert!(angle_distribution_check(&[q(1, 2), q(1, 2), q(1, 2)]).is_err());
}

#[test]
fn deficiency_equality() {
    let cube = euler_deficiency_check(&Polyhedron::cube()).unwrap();
    assert!(cube.equal);
    assert!((cube.vertex_sum - 12.0 * PI).abs() < 1e-9);
    let tet = euler_deficiency_check(&Polyhedron::regular_tetrahedron()).unwrap();
    assert!(tet.equal);
    assert!((tet.vertex_sum - 22.93).abs() < 0.01);
    let omega = (23.0f64 / 27.0).acos();
    assert!((tet.vertex_sum - 4.0 * (2.0 * PI - omega)).abs() < 1e-9);
    let theta = (1.0f64 / 3.0).acos();
    assert!((tet.edge_sum - 6.0 * (2.0 * PI - 2.0 * theta)).abs() < 1e-9);
    // doubling the vertex deficiencies alone breaks it
    let p = Polyhedron::cube();
    let v: Vec<f64> = p.solid_angles().iter().map(|o| 2.0 * (2.0 * PI - o)).collect();
    let e: Vec<f64> = p.dihedral_angles().iter().map(|(_, t)| 2.0 * PI - 2.0 * t).collect();
    assert!(!deficiency_compare(&v, &e).equal);
    let broken = Polyhedron { vertices: p.vertices.clone(), faces: p.faces[..5].to_vec() };
    assert!(euler_deficiency_check(&broken).is_err());
}

#[test]
fn schoenflies_solid() {
    let t = schoenflies_tetrahedron();
    assert!(t.faces_congruent());
    assert!(t.faces_isosceles());
    assert!(t.volume() > rat(0));
    assert_eq!(t.volume(), q(1, 12));
    let lengths: Vec<BigRat> = t.squared_edges().into_iter().map(|(_, l)| l).collect();
    assert_eq!(lengths.iter().filter(|l| **l == q(5, 4)).count(), 4);
    assert_eq!(lengths.iter().filter(|l| **l == q(1, 2)).count(), 2);
    // the construction as stated gives ratio² 5/2
    assert_eq!(t.edge_ratio_squared(), q(5, 2));
}

fn symmetrize(points: Vec<(i64, i64)>, kind: u8) -> EdgeProfile {
    // x in (0, 1/2) on a grid of 1/1000; build an x-monotone path
    let mut half: Vec<RatPoint> = points.into_iter().map(|(x, y)| (q(x, 1000), q(y, 100))).collect();
    half.sort_by(|a, b| a.0.cmp(&b.0));
    half.dedup_by(|a, b| a.0 == b.0);
    let mut all = half.clone();
    match kind {
        0 => {
            all.push((q(1, 2), q(1, 7)));
            all.extend(half.iter().rev().map(|(x, y)| (rat(1) - x, y.clone())));
        }
        1 => {
            all.push((q(1, 2), rat(0)));
            all.extend(half.iter().rev().map(|(x, y)| (rat(1) - x, -y)));
        }
        _ => {
            all.push((q(1, 2), q(3, 11)));
            all.extend(half.iter().rev().map(|(x, y)| (rat(1) - x + q(1, 997), y.clone() * rat(2))));
        }
    }
    EdgeProfile::through(all).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]
    #[test]
    fn operator_identities(pts in proptest::collection::vec((1i64..499, -30i64..30), 1..5), kind in 0u8..3) {
        let e = symmetrize(pts, kind);
        prop_assert!(e.mirror().mirror().same_curve(&e));
        prop_assert!(e.point().point().same_curve(&e));
        match e.classify() {
            EdgeClass::S => prop_assert!(e.mirror().same_curve(&e)),
            EdgeClass::U => prop_assert!(e.point().same_curve(&e)),
            EdgeClass::V => {
                prop_assert!(e.point().contact_equivalent(&e.mirror()));
                prop_assert!(!e.mirror().same_curve(&e));
            }
            EdgeClass::Straight => prop_assert!(e.mirror().same_curve(&e) && e.point().same_curve(&e)),
        }
        if kind == 0 { prop_assert!(matches!(e.classify(), EdgeClass::S)); }
        // the point image carries the opposite area
        prop_assert_eq!(e.point().area_excess(), -e.area_excess());
    }
}
