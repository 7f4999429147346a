//! Text forms of the command-line operands.

use combanal::compositions::Composition;
use combanal::exactcore::BigRat;
use combanal::partitions::Partition;
use combanal::patterns::RatPoint;
use combanal::recreations::ContactSystem;
use combanal::{BigInt, MultiPoly};

pub type Parsed<T> = std::result::Result<T, String>;

/// "3,2,2" with optional surrounding parentheses.
pub fn u64_list(s: &str) -> Parsed<Vec<u64>> {
    let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    if t.trim().is_empty() {
        return Ok(Vec::new());
    }
    t.split(',').map(|x| x.trim().parse::<u64>().map_err(|_| format!("not a non-negative integer: {x:?}"))).collect()
}

/// Parts in any order.
pub fn partition(s: &str) -> Parsed<Partition> {
    let parts = u64_list(s)?;
    if parts.contains(&0) {
        return Err("partition parts must be positive".into());
    }
    Ok(Partition::from_unsorted(parts))
}

/// Unipartite "2,1,4" (or "214" when every part is a digit); multipartite
/// "(31)(01)(11)" or "(3,1)(0,1)(1,1)".
pub fn composition(s: &str) -> Parsed<Composition> {
    let s = s.trim();
    if s.starts_with('(') {
        let groups: Vec<&str> = s.trim_start_matches('(').trim_end_matches(')').split(")(").collect();
        let parts = groups.iter().map(|g| digits_or_list(g)).collect::<Parsed<Vec<_>>>()?;
        return Composition::multipartite(parts).map_err(|e| e.to_string());
    }
    Composition::unipartite(digits_or_list(s)?).map_err(|e| e.to_string())
}

fn digits_or_list(g: &str) -> Parsed<Vec<u64>> {
    if g.contains(',') {
        return u64_list(g);
    }
    g.chars().map(|c| c.to_digit(10).map(u64::from).ok_or_else(|| format!("not a digit: {c:?}"))).collect()
}

pub fn rational(s: &str) -> Parsed<BigRat> {
    let s = s.trim();
    let bad = || format!("not a rational number: {s:?}");
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d == BigInt::from(0) {
            return Err("zero denominator".into());
        }
        return Ok(BigRat::new(n, d));
    }
    if let Some((a, b)) = s.split_once('.') {
        let neg = a.starts_with('-');
        let whole: BigInt = if a == "-" || a.is_empty() { BigInt::from(0) } else { a.parse().map_err(|_| bad())? };
        let frac: BigInt = b.parse().map_err(|_| bad())?;
        let den = BigInt::from(10).pow(b.len() as u32);
        let f = BigRat::new(frac, den);
        let w = BigRat::from_integer(whole);
        return Ok(if neg { w - f } else { w + f });
    }
    s.parse::<BigInt>().map(BigRat::from_integer).map_err(|_| bad())
}

pub fn rational_list(s: &str) -> Parsed<Vec<BigRat>> {
    s.split(',').map(rational).collect()
}

/// Rows separated by ';', entries by ','.
pub fn matrix(s: &str) -> Parsed<Vec<Vec<BigRat>>> {
    s.split(';').map(rational_list).collect()
}

/// "x:y" points separated by ','; coordinates rational.
pub fn points(s: &str) -> Parsed<Vec<RatPoint>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            let (x, y) = p.split_once(':').ok_or_else(|| format!("expected x:y, got {p:?}"))?;
            Ok((rational(x)?, rational(y)?))
        })
        .collect()
}

/// "{13,24}" or "13,24": each pair of compartment labels written as two
/// digits, or as "a-b" for labels above 9.
pub fn contact_system(s: &str, n: usize) -> Parsed<ContactSystem> {
    let t = s.trim().trim_start_matches('{').trim_end_matches('}');
    let pairs = t
        .split(',')
        .map(|p| {
            let p = p.trim();
            let (a, b) = match p.split_once('-') {
                Some((a, b)) => (a.parse::<usize>(), b.parse::<usize>()),
                None if p.len() == 2 => (p[..1].parse(), p[1..].parse()),
                None => return Err(format!("bad contact pair {p:?}")),
            };
            Ok((a.map_err(|_| format!("bad contact pair {p:?}"))?, b.map_err(|_| format!("bad contact pair {p:?}"))?))
        })
        .collect::<Parsed<Vec<_>>>()?;
    ContactSystem::new(n, pairs).map_err(|e| e.to_string())
}

/// A polynomial such as "a0*a2 - a1^2" or "2 a1 a3 - 3/2*a2^2" over `vars`.
pub fn polynomial(s: &str, vars: &[String]) -> Parsed<MultiPoly> {
    let tokens = tokenize(s)?;
    let one = MultiPoly::one(vars);
    let mut total = one.zero_like();
    let mut i = 0;
    let mut first = true;
    loop {
        let mut sign = 1i64;
        let mut signs = 0;
        while let Some(Tok::Sign(c)) = tokens.get(i) {
            sign *= if *c == '-' { -1 } else { 1 };
            signs += 1;
            i += 1;
        }
        if !first && signs == 0 {
            return Err(format!("expected + or - in {s:?}"));
        }
        let mut coeff = BigRat::from_integer(BigInt::from(sign));
        let mut exps = vec![0u32; vars.len()];
        let mut factors = 0;
        loop {
            match tokens.get(i) {
                Some(Tok::Num(n)) => coeff *= n.clone(),
                Some(Tok::Var(name, k)) => {
                    let idx = vars.iter().position(|v| v == name).ok_or_else(|| {
                        format!("unknown variable {name:?}; expected one of {}", vars.join(", "))
                    })?;
                    exps[idx] += k;
                }
                _ => break,
            }
            i += 1;
            factors += 1;
            if let Some(Tok::Times) = tokens.get(i) {
                i += 1;
            }
        }
        if factors == 0 {
            return Err(format!("empty term in {s:?}"));
        }
        total = &total + &one.term_like(exps, coeff);
        first = false;
        if i == tokens.len() {
            break;
        }
    }
    Ok(total)
}

#[derive(Debug)]
enum Tok {
    Num(BigRat),
    Var(String, u32),
    Sign(char),
    Times,
}

fn tokenize(s: &str) -> Parsed<Vec<Tok>> {
    let c: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let take = |i: &mut usize, f: fn(char) -> bool| {
        let start = *i;
        while *i < c.len() && f(c[*i]) {
            *i += 1;
        }
        c[start..*i].iter().collect::<String>()
    };
    while i < c.len() {
        match c[i] {
            ' ' | '\t' => i += 1,
            '+' | '-' => {
                out.push(Tok::Sign(c[i]));
                i += 1;
            }
            '*' => {
                out.push(Tok::Times);
                i += 1;
            }
            ch if ch.is_ascii_digit() => {
                let mut num = take(&mut i, |ch| ch.is_ascii_digit());
                if i < c.len() && c[i] == '/' {
                    i += 1;
                    num.push('/');
                    num.push_str(&take(&mut i, |ch| ch.is_ascii_digit()));
                }
                out.push(Tok::Num(rational(&num)?));
            }
            ch if ch.is_ascii_alphabetic() => {
                let name = take(&mut i, |ch| ch.is_ascii_alphanumeric() || ch == '_');
                let mut k = 1;
                if i < c.len() && c[i] == '^' {
                    i += 1;
                    let e = take(&mut i, |ch| ch.is_ascii_digit());
                    k = e.parse().map_err(|_| format!("bad exponent after {name}"))?;
                }
                out.push(Tok::Var(name, k));
            }
            ch => return Err(format!("unexpected character {ch:?}")),
        }
    }
    Ok(out)
}
