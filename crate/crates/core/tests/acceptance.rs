//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Built without the libtest harness so the lines always reach stdout. The
//! process exits non-zero if any criterion outside `KNOWN_DEVIATIONS` fails,
//! or if a known deviation unexpectedly starts passing.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use combanal::compositions::*;
use combanal::divisors::*;
use combanal::exactcore::{rat, series_inverse, BigRat, MultiPoly};
use combanal::invariants::*;
use combanal::masterthm::*;
use combanal::partitions::*;
use combanal::patterns::*;
use combanal::probelect::*;
use combanal::recreations::*;
use combanal::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Criteria whose literal statement does not hold for the implemented
/// mathematics; they print FAIL with the measured value.
const KNOWN_DEVIATIONS: [u32; 2] = [4, 11];

/// Failures collected while running one criterion.
#[derive(Default)]
struct Check {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Check {
    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, got: T, want: T, what: &str) {
        if got != want {
            self.failures.push(format!("{what}: got {got:?}, want {want:?}"));
        }
    }

    fn within(&mut self, start: Instant, limit: Duration, what: &str) {
        let t = start.elapsed();
        self.notes.push(format!("{what} {:.2}s", t.as_secs_f64()));
        self.expect(t < limit, format!("{what} took {:.2}s (limit {}s)", t.as_secs_f64(), limit.as_secs()));
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn q(n: i64, d: i64) -> BigRat {
    BigRat::new(n.into(), d.into())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut r = p.clone();
            r.insert(i, n - 1);
            out.push(r);
        }
    }
    out
}

fn brute_partition_count(n: u64) -> u64 {
    fn rec(n: u64, max: u64) -> u64 {
        if n == 0 {
            return 1;
        }
        (1..=max.min(n)).map(|k| rec(n - k, k)).sum()
    }
    rec(n, n)
}

// 1
fn partition_table_criterion(c: &mut Check) {
    c.eq(count_partitions(27), big(3010), "p(27)");
    c.eq(count_partitions(30), big(5604), "p(30)");
    c.eq(count_partitions(38), big(26015), "p(38)");
    let start = Instant::now();
    let t = partition_table(200);
    c.within(start, Duration::from_secs(1), "p(0..=200)");
    c.eq(t[200].to_string(), "3972999029388".to_string(), "p(200)");
    for n in 0..=40u64 {
        let e = enumerate_partitions(n, &PartitionConstraint::none()).len() as u64;
        c.eq(e, brute_partition_count(n), &format!("enumeration vs brute at {n}"));
        c.eq(t[n as usize].clone(), BigInt::from(e), &format!("p({n}) vs enumeration"));
    }
}

// 2
fn appendix_suite(c: &mut Check) {
    c.eq(demorgan_u(10, 3), big(8), "u_{10,3}");
    // printed rows; u_{8,4} is printed as 4 but the recurrence and the row
    // sum p(8) = 22 both force 5
    let printed: [&[i64]; 10] = [
        &[1],
        &[1, 1],
        &[1, 1, 1],
        &[1, 2, 1, 1],
        &[1, 2, 2, 1, 1],
        &[1, 3, 3, 2, 1, 1],
        &[1, 3, 4, 3, 2, 1, 1],
        &[1, 4, 5, 4, 3, 2, 1, 1],
        &[1, 4, 7, 6, 5, 3, 2, 1, 1],
        &[1, 5, 8, 9, 7, 5, 3, 2, 1, 1],
    ];
    let t = demorgan_table(10);
    let mut misprints = Vec::new();
    for (i, row) in printed.iter().enumerate() {
        let x = i + 1;
        for (j, &v) in row.iter().enumerate() {
            if t[x][j + 1] != big(v) {
                misprints.push((x, j + 1, v, t[x][j + 1].clone()));
            }
        }
        let sum: BigInt = t[x][1..=x].iter().sum();
        c.eq(sum, count_partitions(x as u64), &format!("row {x} sums to p({x})"));
    }
    c.eq(misprints.len(), 1, "table cells differing from print");
    if let Some((x, y, v, got)) = misprints.first() {
        c.eq((*x, *y), (8, 4), "location of the differing cell");
        c.note(format!("u_{{{x},{y}}} printed {v}, recurrence and row sum give {got}"));
    }
    for x in 2..=200u64 {
        c.eq(closed_form_u2(x).unwrap(), demorgan_u(x, 2), &format!("u2({x})"));
        if x >= 3 {
            c.eq(closed_form_u3(x).unwrap(), demorgan_u(x, 3), &format!("u3({x})"));
        }
    }
    c.eq(warburton_route1(31, 5, 3), big(101), "[31,5_3] route 1");
    c.eq(warburton_route2(31, 5, 3), big(101), "[31,5_3] route 2");
    let row12: Vec<BigInt> = (1..=12).map(|k| warburton_count(12, k, 1)).collect();
    c.eq(row12.clone(), [1, 6, 12, 15, 13, 11, 7, 5, 3, 2, 1, 1].map(big).to_vec(), "row 12");
    c.eq(row12.iter().sum::<BigInt>(), big(77), "row 12 sum");
    // Euler: partitions with greatest part y equal partitions into exactly y parts
    let t20 = demorgan_table(20);
    for x in 1..=20u64 {
        for y in 1..=x {
            c.eq(t20[x as usize][y as usize].clone(), warburton_count(x, y, 1), &format!("duality {x},{y}"));
        }
    }
}

/// Coefficient of x^ξ in ∏(1 − sᵢXᵢ)⁻¹ at s^ξ, by expanding every factor.
fn product_coefficient(a: &[Vec<BigRat>], xi: &[u32]) -> BigRat {
    let n = a.len();
    let vars = master_vars(n);
    let mut svars = vars.clone();
    svars.extend((1..=n).map(|i| format!("s{i}")));
    let sone = MultiPoly::one(&svars);
    let total: u32 = 2 * xi.iter().sum::<u32>();
    let mut prod = sone.clone();
    for i in 0..n {
        let mut x = sone.zero_like();
        for j in 0..n {
            x = &x + &sone.monomial_like(j, 1).scale(&a[i][j]);
        }
        let si = sone.monomial_like(n + i, 1);
        let inv = series_inverse(&(&sone - &(&si * &x)), total).unwrap();
        prod = (&prod * inv.poly()).filter_terms(|e| e.iter().map(|&k| k as u64).sum::<u64>() <= total as u64);
    }
    let mut exps = xi.to_vec();
    exps.extend_from_slice(xi);
    prod.coeff(&exps)
}

// 3
fn master_theorem_criterion(c: &mut Check) {
    let a = derangement_matrix(4);
    c.eq(master_coefficient(&a, &[1, 1, 1, 1], 10).unwrap(), rat(9), "determinant and series inversion");
    c.eq(derangements(4), big(9), "recurrence");
    let brute = permutations(4).iter().filter(|p| p.iter().enumerate().all(|(i, &x)| i != x)).count();
    c.eq(brute, 9, "brute force");
    let mut rng = ChaCha8Rng::seed_from_u64(1915);
    let mut expanded = 0;
    for _ in 0..40 {
        let n = rng.gen_range(1..=3usize);
        let a: Vec<Vec<BigRat>> = (0..n).map(|_| (0..n).map(|_| rat(rng.gen_range(-3..=3))).collect()).collect();
        let mut xi: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
        while xi.iter().sum::<u32>() > 5 {
            let k = xi.iter().position(|&x| x > 0).unwrap();
            xi[k] -= 1;
        }
        let m = master_coefficient(&a, &xi, 5).unwrap();
        c.eq(m.clone(), redundant_coefficient(&a, &xi, 5).unwrap(), &format!("{a:?} ξ={xi:?}"));
        if n <= 2 || xi.iter().sum::<u32>() <= 3 {
            c.eq(m, product_coefficient(&a, &xi), &format!("expanded product {a:?} ξ={xi:?}"));
            expanded += 1;
        }
    }
    c.note(format!("40 random matrices, {expanded} also against the expanded product"));
}

fn poly(p: usize, terms: &[(i64, &str)]) -> MultiPoly {
    let vars = coeff_vars(p);
    let one = MultiPoly::one(&vars);
    let mut f = one.zero_like();
    for &(k, mono) in terms {
        let mut e = vec![0u32; p + 1];
        for factor in mono.split_whitespace() {
            let (name, pow) = factor.split_once('^').map_or((factor, 1), |(n, k)| (n, k.parse().unwrap()));
            e[name[1..].parse::<usize>().unwrap()] += pow;
        }
        f = &f + &one.term_like(e, rat(k));
    }
    f
}

// 4
fn invariants_criterion(c: &mut Check) {
    let start = Instant::now();
    let seed = poly(4, &[(1, "a0 a2"), (-1, "a1^2")]);
    let chain = covariant_chain(&seed, 4).unwrap();
    let want = [
        seed.clone(),
        poly(4, &[(2, "a0 a3"), (-2, "a1 a2")]),
        poly(4, &[(1, "a0 a4"), (2, "a1 a3"), (-3, "a2^2")]),
        poly(4, &[(2, "a1 a4"), (-2, "a2 a3")]),
        poly(4, &[(1, "a2 a4"), (-1, "a3^2")]),
    ];
    c.eq(chain.len(), 5, "chain length");
    for (k, w) in want.iter().enumerate() {
        c.expect(chain.get(k) == Some(w), format!("Hessian chain line {k}"));
    }
    let j = poly(4, &[(1, "a0 a2 a4"), (-1, "a0 a3^2"), (-1, "a2^3"), (2, "a1 a2 a3"), (-1, "a1^2 a4")]);
    c.expect(seminvariant_basis(4, 3, 6).contains(&j), "basis(4,3,6) contains J");

    // dimension of the basis against the Cayley–Sylvester difference, and
    // against the literal partition count (parts ≤ j, no unit, j a part)
    let mut literal_misses = Vec::new();
    for p in 1..=6usize {
        for jj in 1..=4u32 {
            for w in 0..=10u64 {
                let dim = seminvariant_basis(p, jj, w).len();
                c.eq(cayley_sylvester_dimension(p as u64, jj as u64, w), BigInt::from(dim), &format!("dim p={p} j={jj} w={w}"));
                if w > 0 && nonunitary_partitions(w, jj as u64, true) != BigInt::from(dim) {
                    literal_misses.push((p, jj, w));
                }
            }
        }
    }
    c.note(format!("basis dimension = Cayley–Sylvester count for all {} triples", 6 * 4 * 11));
    if !literal_misses.is_empty() {
        c.failures.push(format!(
            "literal partition-count reading differs in {} of {} triples, e.g. (p,j,w) = {:?}, {:?}",
            literal_misses.len(),
            6 * 4 * 10,
            literal_misses[0],
            literal_misses.iter().find(|t| t.0 == 4).unwrap_or(&literal_misses[0]),
        ));
    }

    let u = poly(3, &[(1, "a0")]);
    let h = poly(3, &[(1, "a0 a2"), (-1, "a1^2")]);
    let c3 = poly(3, &[(1, "a0^2 a3"), (-3, "a0 a1 a2"), (2, "a1^3")]);
    let d1 = poly(3, &[(1, "a0 a3"), (-1, "a1 a2")]);
    let d2 = poly(3, &[(1, "a1 a3"), (-1, "a2^2")]);
    let delta = &(&d1 * &d1) - &(&h * &d2).scale(&rat(4));
    let syz = &(&(&u * &u) * &delta) - &(&h.pow(3).scale(&rat(4)) + &(&c3 * &c3));
    c.expect(syz.is_zero(), "cubic syzygant U²Δ − 4H³ − C₃² expands to zero");
    c.within(start, Duration::from_secs(10), "runtime");
}

fn parse_bi(s: &str) -> Composition {
    let parts = s
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(")(")
        .map(|p| p.chars().map(|ch| ch.to_digit(10).unwrap() as u64).collect())
        .collect();
    Composition::multipartite(parts).unwrap()
}

// 5
fn compositions_criterion(c: &mut Check) {
    const LISTED: [&str; 26] = [
        "(22)", "(11)(11)", "(21)(01)", "(01)(21)", "(12)(10)", "(10)(12)", "(20)(02)", "(02)(20)",
        "(20)(01)(01)", "(01)(20)(01)", "(01)(01)(20)", "(11)(01)(10)", "(11)(10)(01)", "(01)(11)(10)",
        "(10)(11)(01)", "(01)(10)(11)", "(10)(01)(11)", "(02)(10)(10)", "(10)(02)(10)", "(10)(10)(02)",
        "(01)(10)(01)(10)", "(01)(01)(10)(10)", "(01)(10)(10)(01)", "(10)(10)(01)(01)", "(10)(01)(10)(01)",
        "(10)(01)(01)(10)",
    ];
    let two_two = MultipartiteNumber::new(vec![2, 2]).unwrap();
    let got: BTreeSet<Composition> = enumerate_multipartite_compositions(&two_two, 20).unwrap().into_iter().collect();
    let want: BTreeSet<Composition> = LISTED.iter().map(|s| parse_bi(s)).collect();
    c.eq(got.len(), 26, "count for (2,2)");
    c.expect(got == want, "(2,2) compositions equal the listed 26");
    for p in 0..=7u64 {
        for qq in 0..=(7 - p) {
            if p + qq == 0 {
                continue;
            }
            let m = MultipartiteNumber::new(vec![p, qq]).unwrap();
            let n = enumerate_multipartite_compositions(&m, 20).unwrap().len();
            c.eq(bipartite_composition_count_gf(p, qq).unwrap(), BigInt::from(n), &format!("GF ({p},{qq})"));
        }
    }
    let uni = |v: &[u64]| Composition::unipartite(v.to_vec()).unwrap();
    c.eq(conjugate_composition(&uni(&[2, 1, 4])).unwrap(), uni(&[1, 3, 1, 1, 1]), "(214) conjugate");
    c.eq(conjugate_composition(&uni(&[1, 3, 1, 1, 1])).unwrap(), uni(&[2, 1, 4]), "(13111) conjugate");
    c.eq(zigzag_conjugate(&uni(&[3, 3, 2, 1])).unwrap(), uni(&[1, 1, 2, 1, 2, 2]), "(3321) conjugate");
    c.eq(zigzag_conjugate(&uni(&[1, 1, 2, 1, 2, 2])).unwrap(), uni(&[3, 3, 2, 1]), "(112122) conjugate");
    for p in 1..=4u64 {
        for qq in 1..=4u64 {
            let counts = count_by_essential_nodes(p, qq, 20).unwrap();
            for s in 0..=p.min(qq) {
                let got = counts.get(&(s as usize)).cloned().unwrap_or_default();
                c.eq(got, essential_node_term(p, qq, s), &format!("essential nodes ({p},{qq}) s={s}"));
            }
        }
    }
}

fn ballot_fraction(a: u64, b: u64, strict: bool) -> BigRat {
    // count lattice paths by dynamic programming over (A so far, B so far)
    let ok = |x: u64, y: u64| if strict { x > y } else { x >= y };
    let mut ways = vec![vec![BigInt::zero(); b as usize + 1]; a as usize + 1];
    let mut all = vec![vec![BigInt::zero(); b as usize + 1]; a as usize + 1];
    ways[0][0] = big(1);
    all[0][0] = big(1);
    for x in 0..=a as usize {
        for y in 0..=b as usize {
            if x + y == 0 {
                continue;
            }
            let mut w = BigInt::zero();
            let mut t = BigInt::zero();
            if x > 0 {
                w += &ways[x - 1][y];
                t += &all[x - 1][y];
            }
            if y > 0 {
                w += &ways[x][y - 1];
                t += &all[x][y - 1];
            }
            ways[x][y] = if ok(x as u64, y as u64) { w } else { BigInt::zero() };
            all[x][y] = t;
        }
    }
    BigRat::new(ways[a as usize][b as usize].clone(), all[a as usize][b as usize].clone())
}

// 6
fn elections_criterion(c: &mut Check) {
    for total in 1..=12u64 {
        for b in 0..=total / 2 {
            let a = total - b;
            if a > b {
                c.eq(ballot_strictly_ahead(a, b).unwrap(), ballot_fraction(a, b, true), &format!("strict {a},{b}"));
            }
            c.eq(ballot_never_behind(a, b).unwrap(), ballot_fraction(a, b, false), &format!("weak {a},{b}"));
        }
    }
    let m = ElectorateModel::new(5000, 5000, 5000).unwrap();
    let exact = to_f64(&sample_prob_exact(&m, 2500, 2500).unwrap());
    let approx = sample_prob_approx(&m, 0).unwrap();
    c.expect((approx.c0 - exact).abs() / exact < 0.01, format!("C0 {} vs exact {exact}", approx.c0));
    c.expect((approx.c0 - 0.01596).abs() < 5e-6, format!("C0 {} vs 0.01596", approx.c0));
    c.note(format!("C0 = {:.5}, exact {:.5}", approx.c0, exact));
    let profile = sample_cumulative_profile(&m, 40).unwrap();
    let mut worst = 0.0f64;
    for r in 0..=40u64 {
        let e = to_f64(&profile[r as usize]);
        let s = sample_prob_approx(&m, r).unwrap().s_r;
        worst = worst.max((s - e).abs() / e);
    }
    c.expect(worst < 0.02, format!("S_r relative error {worst:.4}"));
    c.note(format!("worst S_r error {:.3}%", 100.0 * worst));
    c.eq(cube_law_seats(53.0, 47.0, 100).unwrap(), (59, 41), "cube law 53:47 over 100");
}

// 7
fn recreations_criterion(c: &mut Check) {
    let cubes = generate_cubes(6, CubeMode::AllDistinct).unwrap();
    c.eq(cubes.len(), 30, "cubes");
    let pairs: BTreeSet<_> = cubes
        .iter()
        .map(|x| {
            let a = associated_cube(x);
            if a < *x { (a, *x) } else { (*x, a) }
        })
        .collect();
    c.eq(pairs.len(), 15, "associated pairs");
    let start = Instant::now();
    let mut solved = 0;
    for t in &cubes {
        match mayblox_solve(t, &cubes, true) {
            Some(sol) => {
                let used: Vec<ColoredCube> = sol.placements.iter().map(|p| cubes[p.0]).collect();
                let ok = sol.verify(&cubes, Some(&t.faces())) && !used.contains(t) && !used.contains(&associated_cube(t));
                c.expect(ok, format!("Mayblox solution for {:?} fails re-verification", t.faces()));
                solved += ok as usize;
            }
            None => c.failures.push(format!("no Mayblox solution for {:?}", t.faces())),
        }
    }
    c.eq(solved, 30, "Mayblox targets solved");
    c.within(start, Duration::from_secs(60), "Mayblox");
    c.eq(generate_triangles(4).unwrap().len(), 24, "triangles k=4");
    c.eq(generate_triangles(5).unwrap().len(), 45, "triangles k=5");
    c.eq(generate_squares(3).unwrap().len(), 24, "squares k=3");
    let start = Instant::now();
    c.eq(stamp_foldings(9).unwrap(), big(4536), "stamp foldings n=9");
    c.within(start, Duration::from_secs(5), "stamps");
    let contacts: Vec<BigInt> = (1..=6).map(contact_system_count).collect();
    c.eq(contacts, [1, 2, 4, 10, 26, 76].map(big).to_vec(), "contact systems");
    c.eq((latin_reduced_count(4).unwrap(), latin_reduced_count(5).unwrap()), (big(4), big(56)), "reduced Latin squares");
    c.eq(measuring_rod(8).unwrap().marks().to_vec(), vec![0, 1, 3, 7, 12, 20, 30, 44], "rod marks");
}

// 8
fn plane_modular_parity(c: &mut Check) {
    c.eq(enumerate_plane_partitions(4).len(), 13, "plane partitions of 4");
    let gf = plane_partition_gf(15);
    for n in 0..=15u32 {
        let e = enumerate_plane_partitions(n as u64).len() as i64;
        c.eq(gf.coeff(&[n]).unwrap().to_integer(), big(e), &format!("plane GF at {n}"));
    }
    let want = [
        "11111111 / 11111 / 11 / 1",
        "2222 / 221 / 2 / 1",
        "332 / 32 / 2 / 1",
        "44 / 41 / 2 / 1",
        "53 / 5 / 2 / 1",
        "62 / 5 / 2 / 1",
        "71 / 5 / 2 / 1",
        "8 / 5 / 2 / 1",
    ];
    let p8521 = Partition::new(vec![8, 5, 2, 1]).unwrap();
    for (m, w) in (1..=8).zip(want) {
        c.eq(format_modular_rows(&modular_partition(&p8521, m).unwrap()), w.to_string(), &format!("modulus {m}"));
    }
    c.eq(macmahon_digits(20), "10111110000111011101".to_string(), "MacMahon number bits");
    let start = Instant::now();
    c.eq(parity_p(1000), Parity::Odd, "parity of p(1000)");
    c.within(start, Duration::from_secs(1), "parity");
    let t = partition_table(705);
    for n in 0..=100 {
        c.expect((&t[5 * n + 4] % 5u32).is_zero(), format!("5 | p({})", 5 * n + 4));
        c.expect((&t[7 * n + 5] % 7u32).is_zero(), format!("7 | p({})", 7 * n + 5));
        if 11 * n + 6 < t.len() {
            c.expect((&t[11 * n + 6] % 11u32).is_zero(), format!("11 | p({})", 11 * n + 6));
        }
    }
}

// 9
fn xy_symmetric_criterion(c: &mut Check) {
    let display = [1, 2, 1, 2, 3, 4, 4, 5, 5, 7, 5, 6, 6, 7, 5, 5, 4, 5, 3, 3, 2, 2, 1, 1, 1, 1];
    let got = xy_symmetric_two_layer_coeffs(4);
    c.expect(got[..7].iter().all(Zero::is_zero), "no terms below x^7");
    c.eq(got[7..].to_vec(), display.map(big).to_vec(), "coefficients x^7..x^32");
    // cell oracle: two stacked self-conjugate layers, the lower reaching 4
    let cons = PartitionConstraint::none().max_part(4).max_parts(4);
    let shapes: Vec<Partition> = (0..=16).flat_map(|n| enumerate_partitions(n, &cons)).filter(|s| conjugate(s) == *s).collect();
    let inside = |outer: &Partition, inner: &Partition| {
        inner.len() <= outer.len() && inner.parts().iter().zip(outer.parts()).all(|(a, b)| a <= b)
    };
    let mut counts = vec![0i64; 33];
    for lower in shapes.iter().filter(|s| s.largest() == Some(4)) {
        for upper in shapes.iter().filter(|s| inside(lower, s)) {
            counts[(lower.weight() + upper.weight()) as usize] += 1;
        }
    }
    c.eq(got, counts.into_iter().map(big).collect(), "cell enumeration");
}

// 10
fn divisors_criterion(c: &mut Check) {
    for n in 1..=100u64 {
        let direct: u64 = (1..=n).filter(|d| n % d == 0).sum();
        c.eq(divisor_series_coeff(DivisorSeriesKind::A, n, 1).unwrap(), BigInt::from(direct), &format!("σ({n})"));
    }
    let s2 = sigma2_from_plane_partitions(60).unwrap();
    for n in 1..=60u64 {
        let direct: u64 = (1..=n).filter(|d| n % d == 0).map(|d| d * d).sum();
        c.eq(s2[n as usize - 1].clone(), BigInt::from(direct), &format!("σ₂({n}) via plane partitions"));
    }
    c.eq((potency(33).unwrap(), multiplicity(33).unwrap()), (14, 2), "potency and multiplicity of 33");
    for nu in 0..=20u64 {
        let bound = 3u64.pow(nu as u32 / 3 + 1);
        let direct = (1..=bound).filter(|&n| potency(n).unwrap() == nu).count();
        c.eq(potency_count(nu).unwrap(), BigInt::from(direct), &format!("potency count {nu}"));
    }
    for n in 1..=30u64 {
        c.eq(factorizations(n + 1, true).unwrap(), BigInt::from(enumerate_perfect(n).len()), &format!("perfect partitions of {n}"));
    }
}

/// A random x-monotone profile with one of the three symmetries built in.
fn random_profile(rng: &mut ChaCha8Rng, kind: u8) -> EdgeProfile {
    let k = rng.gen_range(1..5);
    let mut half: Vec<(BigRat, BigRat)> =
        (0..k).map(|_| (q(rng.gen_range(1..499), 1000), q(rng.gen_range(-30..30), 100))).collect();
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

// 11
fn patterns_criterion(c: &mut Check) {
    let mut rng = ChaCha8Rng::seed_from_u64(1921);
    let mut classes = [0usize; 4];
    for i in 0..200 {
        let e = random_profile(&mut rng, (i % 3) as u8);
        let cls = e.classify();
        let ok = e.mirror().mirror().same_curve(&e)
            && e.point().point().same_curve(&e)
            && e.point().area_excess() == -e.area_excess()
            && match cls {
                EdgeClass::S => e.mirror().same_curve(&e),
                EdgeClass::U => e.point().same_curve(&e),
                EdgeClass::V => e.point().contact_equivalent(&e.mirror()) && !e.mirror().same_curve(&e),
                EdgeClass::Straight => e.mirror().same_curve(&e) && e.point().same_curve(&e),
            };
        c.expect(ok, format!("operator identities on profile {i}"));
        classes[cls as usize] += 1;
    }
    c.note(format!("200 profiles, classes {classes:?}"));
    match generate_tiling(&cairo_tile(), 2) {
        Ok(t) => c.note(format!("Cairo tiling {} tiles, {} samples", t.placements.len(), t.samples_checked)),
        Err(e) => c.failures.push(format!("Cairo tiling: {e}")),
    }
    for (name, p) in [("cube", Polyhedron::cube()), ("tetrahedron", Polyhedron::regular_tetrahedron())] {
        match euler_deficiency_check(&p) {
            Ok(r) => c.expect(r.equal && (r.vertex_sum - r.edge_sum).abs() < 1e-9, format!("{name} deficiency")),
            Err(e) => c.failures.push(format!("{name}: {e}")),
        }
    }
    let t = schoenflies_tetrahedron();
    c.expect(t.faces_congruent() && t.faces_isosceles(), "Schoenflies faces congruent and isosceles");
    let r = t.edge_ratio_squared();
    if r != q(4, 3) {
        c.failures.push(format!(
            "Schoenflies edge ratio² is {r} (≈{:.4}), not 4/3",
            r.numer().to_f64().unwrap() / r.denom().to_f64().unwrap()
        ));
    }
}

fn main() {
    let criteria: [(u32, &str, fn(&mut Check)); 11] = [
        (1, "partition table", partition_table_criterion),
        (2, "English partition suite", appendix_suite),
        (3, "Master Theorem", master_theorem_criterion),
        (4, "invariant theory", invariants_criterion),
        (5, "compositions", compositions_criterion),
        (6, "probability and elections", elections_criterion),
        (7, "recreations", recreations_criterion),
        (8, "plane, modular, parity", plane_modular_parity),
        (9, "xy-symmetric graphs", xy_symmetric_criterion),
        (10, "divisors", divisors_criterion),
        (11, "patterns", patterns_criterion),
    ];
    let mut unexpected = Vec::new();
    for (n, name, run) in criteria {
        let mut c = Check::default();
        let start = Instant::now();
        run(&mut c);
        let pass = c.failures.is_empty();
        let known = KNOWN_DEVIATIONS.contains(&n);
        let mut line = format!("{} criterion {n:>2} {name} ({:.2}s)", if pass { "PASS" } else { "FAIL" }, start.elapsed().as_secs_f64());
        if !c.notes.is_empty() {
            line += &format!(" [{}]", c.notes.join("; "));
        }
        if known && !pass {
            line += " (known deviation)";
        }
        println!("{line}");
        for f in c.failures.iter().take(5) {
            println!("     - {f}");
        }
        if c.failures.len() > 5 {
            println!("     - ... {} more", c.failures.len() - 5);
        }
        if pass == known {
            unexpected.push(n);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
