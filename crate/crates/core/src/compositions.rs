//! Compositions of unipartite and multipartite numbers.
//!
//! A unipartite composition of n is a subset of the n − 1 gaps between n
//! units. A bipartite composition of (p, q) is a monotone lattice route from
//! the origin to (p, q) with some nodes marked; each part runs horizontally
//! then vertically, so every vertical-to-horizontal turn of the route is
//! forced to be a marked node. Those forced nodes are the essential ones.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{check_cap, domain};
use crate::exactcore::{binomial, multinomial, series_inverse, MultiPoly};
use crate::{Error, Result};

/// A vector of non-negative integers, not all zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultipartiteNumber(Vec<u64>);

impl MultipartiteNumber {
    pub fn new(components: Vec<u64>) -> Result<Self> {
        if components.is_empty() || components.iter().all(|&c| c == 0) {
            return domain("a multipartite number needs a positive component");
        }
        Ok(MultipartiteNumber(components))
    }

    pub fn components(&self) -> &[u64] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }
}

/// An ordered sequence of nonzero parts, each a vector of a fixed order.
/// Unipartite compositions have order 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    order: usize,
    parts: Vec<Vec<u64>>,
}

impl Composition {
    pub fn unipartite(parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return domain("unipartite parts must be positive");
        }
        Ok(Composition {
            order: 1,
            parts: parts.into_iter().map(|p| vec![p]).collect(),
        })
    }

    pub fn multipartite(parts: Vec<Vec<u64>>) -> Result<Self> {
        let Some(order) = parts.first().map(|p| p.len()) else {
            return domain("a composition needs at least one part");
        };
        if order == 0 || parts.iter().any(|p| p.len() != order) {
            return domain("parts must share one positive order");
        }
        if parts.iter().any(|p| p.iter().all(|&x| x == 0)) {
            return domain("zero part");
        }
        Ok(Composition { order, parts })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn parts(&self) -> &[Vec<u64>] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Componentwise sum.
    pub fn total(&self) -> Vec<u64> {
        let mut t = vec![0; self.order];
        for p in &self.parts {
            for (a, b) in t.iter_mut().zip(p) {
                *a += b;
            }
        }
        t
    }

    /// The plain list of parts when the order is 1.
    pub fn as_unipartite(&self) -> Option<Vec<u64>> {
        (self.order == 1).then(|| self.parts.iter().map(|p| p[0]).collect())
    }
}

/// Unipartite: `(2,1,4)`. Higher orders: `(31)(01)(11)`, with commas inside
/// a part once any entry has more than one digit.
impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(u) = self.as_unipartite() {
            let s: Vec<String> = u.iter().map(|x| x.to_string()).collect();
            return write!(f, "({})", s.join(","));
        }
        let compact = self.parts.iter().flatten().all(|&x| x < 10);
        for p in &self.parts {
            let s: Vec<String> = p.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", s.join(if compact { "" } else { "," }))?;
        }
        Ok(())
    }
}

fn uni_parts(c: &Composition) -> Result<Vec<u64>> {
    c.as_unipartite()
        .ok_or_else(|| Error::Domain("expected a unipartite composition".into()))
}

/// Gap set of a unipartite composition: the partial sums short of n.
fn cuts(parts: &[u64]) -> (u64, BTreeSet<u64>) {
    let mut acc = 0;
    let mut set = BTreeSet::new();
    for &p in &parts[..parts.len() - 1] {
        acc += p;
        set.insert(acc);
    }
    (acc + parts[parts.len() - 1], set)
}

fn from_cuts(n: u64, set: &BTreeSet<u64>) -> Vec<u64> {
    let mut out = Vec::with_capacity(set.len() + 1);
    let mut prev = 0;
    for &c in set.iter().chain(std::iter::once(&n)) {
        out.push(c - prev);
        prev = c;
    }
    out
}

/// All 2^{n−1} compositions of `n`, ordered by gap bitmask: bit i set means
/// the gap after unit i + 1 stays blank (so the first is (n), the last 1^n).
pub fn enumerate_compositions(n: u64) -> Result<Vec<Composition>> {
    if n == 0 {
        return domain("compositions need n ≥ 1");
    }
    check_cap("composition gaps", n - 1, 30)?;
    let gaps = n - 1;
    Ok((0u64..(1 << gaps))
        .map(|mask| {
            let set: BTreeSet<u64> = (0..gaps).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect();
            Composition::unipartite(from_cuts(n, &set)).expect("parts are positive")
        })
        .collect())
}

/// Swap circled and uncircled dots: the gaps used by one composition are
/// exactly the gaps left blank by its conjugate.
pub fn conjugate_composition(c: &Composition) -> Result<Composition> {
    let parts = uni_parts(c)?;
    let (n, set) = cuts(&parts);
    let comp: BTreeSet<u64> = (1..n).filter(|g| !set.contains(g)).collect();
    Composition::unipartite(from_cuts(n, &comp))
}

/// Zig-zag graph: each row starts directly under the last dot of the row
/// above.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZigZagGraph {
    rows: Vec<u64>,
}

impl ZigZagGraph {
    pub fn new(c: &Composition) -> Result<Self> {
        Ok(ZigZagGraph { rows: uni_parts(c)? })
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Starting column of each row.
    fn offsets(&self) -> Vec<u64> {
        let mut start = 0;
        self.rows
            .iter()
            .map(|&r| {
                let s = start;
                start += r - 1;
                s
            })
            .collect()
    }

    /// Dot counts of each column, left to right.
    pub fn columns(&self) -> Vec<u64> {
        let offs = self.offsets();
        let width = offs.last().map_or(0, |o| o + self.rows.last().unwrap());
        let mut cols = vec![0u64; width as usize];
        for (&o, &r) in offs.iter().zip(&self.rows) {
            for c in o..o + r {
                cols[c as usize] += 1;
            }
        }
        cols
    }

    pub fn render(&self) -> String {
        self.offsets()
            .iter()
            .zip(&self.rows)
            .map(|(&o, &r)| {
                let mut line = "  ".repeat(o as usize);
                line.push_str(&vec!["•"; r as usize].join(" "));
                line
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Read the zig-zag graph by columns.
pub fn zigzag_conjugate(c: &Composition) -> Result<Composition> {
    Composition::unipartite(ZigZagGraph::new(c)?.columns())
}

/// Every ordered sequence of nonzero vectors summing to `m`. Refuses when
/// the component sum exceeds `cap`.
pub fn enumerate_multipartite_compositions(m: &MultipartiteNumber, cap: u64) -> Result<Vec<Composition>> {
    let total: u64 = m.components().iter().sum();
    check_cap("component sum", total, cap)?;
    let mut out = Vec::new();
    multi_rec(m.components(), &mut Vec::new(), &mut out);
    Ok(out)
}

fn multi_rec(rest: &[u64], cur: &mut Vec<Vec<u64>>, out: &mut Vec<Composition>) {
    if rest.iter().all(|&x| x == 0) {
        out.push(Composition {
            order: rest.len(),
            parts: cur.clone(),
        });
        return;
    }
    // parts in descending lexicographic order, largest first
    let mut part = rest.to_vec();
    loop {
        if part.iter().any(|&x| x > 0) {
            let next: Vec<u64> = rest.iter().zip(&part).map(|(a, b)| a - b).collect();
            cur.push(part.clone());
            multi_rec(&next, cur, out);
            cur.pop();
        }
        // decrement `part` as a mixed-radix counter bounded by `rest`
        let mut i = part.len();
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if part[i] > 0 {
                part[i] -= 1;
                for j in i + 1..part.len() {
                    part[j] = rest[j];
                }
                break;
            }
        }
    }
}

/// ½ · [x^p y^q] (1 − 2(x + y − xy))⁻¹.
///
/// The unhalved coefficient double counts: setting y = 0 gives 2ⁿ where the
/// compositions of n number 2^{n−1}.
pub fn bipartite_composition_count_gf(p: u64, q: u64) -> Result<BigInt> {
    if p == 0 && q == 0 {
        return domain("(0, 0) has no compositions");
    }
    let vars = ["x", "y"];
    let x = MultiPoly::var(&vars, "x");
    let y = MultiPoly::var(&vars, "y");
    let one = MultiPoly::one(&vars);
    let two = MultiPoly::constant(&vars, crate::exactcore::rat(2));
    let denom = &one - &(&two * &(&(&x + &y) - &(&x * &y)));
    let bound = u32::try_from(p + q).map_err(|_| Error::ExponentOverflow)?;
    let s = series_inverse(&denom, bound)?;
    let c = s.coeff(&[p as u32, q as u32])?;
    Ok((c / crate::exactcore::rat(2)).to_integer())
}

/// Unit step of a line of route.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    /// One unit of the first component.
    Horizontal,
    /// One unit of the second component.
    Vertical,
}

/// A monotone route from (0, 0) with marked nodes. Node `i` is the point
/// reached after `i` steps; the final node is always marked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineOfRoute {
    steps: Vec<Step>,
    marked: BTreeSet<usize>,
}

impl LineOfRoute {
    /// Each part (a, b) contributes a horizontal steps then b vertical steps.
    pub fn from_composition(c: &Composition) -> Result<Self> {
        if c.order() != 2 {
            return domain("lines of route need a bipartite composition");
        }
        let mut steps = Vec::new();
        let mut marked = BTreeSet::new();
        for p in c.parts() {
            steps.extend(std::iter::repeat_n(Step::Horizontal, p[0] as usize));
            steps.extend(std::iter::repeat_n(Step::Vertical, p[1] as usize));
            marked.insert(steps.len());
        }
        Ok(LineOfRoute { steps, marked })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn marked(&self) -> &BTreeSet<usize> {
        &self.marked
    }

    /// Lattice point of node `i`.
    pub fn node(&self, i: usize) -> (u64, u64) {
        let h = self.steps[..i].iter().filter(|&&s| s == Step::Horizontal).count() as u64;
        (h, i as u64 - h)
    }

    /// Nodes where the route turns from vertical to horizontal.
    pub fn essential_nodes(&self) -> BTreeSet<usize> {
        (1..self.steps.len())
            .filter(|&i| self.steps[i - 1] == Step::Vertical && self.steps[i] == Step::Horizontal)
            .collect()
    }

    pub fn to_composition(&self) -> Composition {
        let mut parts = Vec::new();
        let mut prev = 0;
        for &m in &self.marked {
            let (a, b) = self.node(m);
            let (pa, pb) = self.node(prev);
            parts.push(vec![a - pa, b - pb]);
            prev = m;
        }
        Composition { order: 2, parts }
    }
}

/// Conjugate along the line of route: keep the essential nodes, drop the
/// other marked nodes and mark every interior node not marked before.
pub fn route_conjugate(c: &Composition) -> Result<Composition> {
    let route = LineOfRoute::from_composition(c)?;
    let n = route.steps.len();
    let essential = route.essential_nodes();
    let marked: BTreeSet<usize> = (1..n)
        .filter(|i| essential.contains(i) || !route.marked.contains(i))
        .chain(std::iter::once(n))
        .collect();
    Ok(LineOfRoute {
        steps: route.steps,
        marked,
    }
    .to_composition())
}

/// Number of essential nodes on the route of a bipartite composition.
pub fn essential_node_count(c: &Composition) -> Result<usize> {
    Ok(LineOfRoute::from_composition(c)?.essential_nodes().len())
}

/// Compositions of (p, q) tallied by number of essential nodes, by
/// enumeration.
pub fn count_by_essential_nodes(p: u64, q: u64, cap: u64) -> Result<BTreeMap<usize, BigInt>> {
    if p == 0 || q == 0 {
        return domain("essential-node counts need p, q ≥ 1");
    }
    let m = MultipartiteNumber::new(vec![p, q])?;
    let mut out = BTreeMap::new();
    for c in enumerate_multipartite_compositions(&m, cap)? {
        *out.entry(essential_node_count(&c)?).or_insert_with(BigInt::zero) += 1;
    }
    Ok(out)
}

/// C(p, s)·C(q, s)·2^{p+q−s−1}: routes with s vertical-to-horizontal turns
/// times free choices on the remaining interior nodes.
pub fn essential_node_term(p: u64, q: u64, s: u64) -> BigInt {
    if p + q == 0 || s + 1 > p + q {
        return BigInt::zero();
    }
    binomial(p, s) * binomial(q, s) * (BigInt::one() << (p + q - s - 1))
}

/// Height-2 rooted tree for a composition, and its inverse.
///
/// The tree is ordered: the root has one child per part and child i has
/// aᵢ leaves. Height-k trees with every leaf at depth k and p leaves give
/// the combinations of order k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    pub children: Vec<RootedTree>,
}

impl RootedTree {
    pub fn leaf() -> Self {
        RootedTree { children: vec![] }
    }

    pub fn leaves(&self) -> usize {
        if self.children.is_empty() {
            1
        } else {
            self.children.iter().map(RootedTree::leaves).sum()
        }
    }

    /// Depth of every leaf if they agree.
    pub fn uniform_height(&self) -> Option<usize> {
        if self.children.is_empty() {
            return Some(0);
        }
        let hs: Vec<Option<usize>> = self.children.iter().map(RootedTree::uniform_height).collect();
        let h = hs[0]?;
        hs.iter().all(|&x| x == Some(h)).then_some(h + 1)
    }
}

pub fn composition_tree(c: &Composition) -> Result<RootedTree> {
    let parts = uni_parts(c)?;
    Ok(RootedTree {
        children: parts
            .iter()
            .map(|&a| RootedTree {
                children: vec![RootedTree::leaf(); a as usize],
            })
            .collect(),
    })
}

pub fn tree_composition(t: &RootedTree) -> Result<Composition> {
    if t.uniform_height() != Some(2) {
        return Err(Error::Rejected("tree must have every leaf at height 2".into()));
    }
    Composition::unipartite(t.children.iter().map(|c| c.children.len() as u64).collect())
}

/// k^{p−1}: each of the p − 1 gaps takes one of k symbols.
pub fn combinations_order_k_count(p: u64, k: u64) -> Result<BigInt> {
    if p == 0 || k == 0 {
        return domain("need p ≥ 1 and k ≥ 1");
    }
    Ok(num_traits::pow(BigInt::from(k), (p - 1) as usize))
}

/// Deal direction for Newcomb's problem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DealRule {
    /// A card joins the pack while values do not increase.
    #[default]
    Descending,
    /// A card joins the pack while values do not decrease.
    Ascending,
}

/// Result of dealing every arrangement of a deck.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewcombDistribution {
    /// Pack sizes, in dealing order, to number of arrangements.
    pub by_composition: BTreeMap<Vec<u64>, BigInt>,
    /// Number of packs to number of arrangements.
    pub by_pack_count: BTreeMap<usize, BigInt>,
}

/// Deal one arrangement into packs.
pub fn newcomb_deal(cards: &[u64], rule: DealRule) -> Vec<u64> {
    let mut packs = Vec::new();
    let mut run = 0u64;
    for (i, &c) in cards.iter().enumerate() {
        let joins = i > 0
            && match rule {
                DealRule::Descending => c <= cards[i - 1],
                DealRule::Ascending => c >= cards[i - 1],
            };
        if !joins && run > 0 {
            packs.push(run);
            run = 0;
        }
        run += 1;
    }
    if run > 0 {
        packs.push(run);
    }
    packs
}

/// `deck[v]` copies of card value v + 1. Every distinct arrangement is dealt
/// and tallied; decks larger than `cap` cards are refused.
pub fn newcomb_distribution(deck: &[u64], rule: DealRule, cap: u64) -> Result<NewcombDistribution> {
    let total: u64 = deck.iter().sum();
    check_cap("deck size", total, cap)?;
    if total == 0 {
        return domain("empty deck");
    }
    let mut dist = NewcombDistribution {
        by_composition: BTreeMap::new(),
        by_pack_count: BTreeMap::new(),
    };
    let mut left = deck.to_vec();
    let mut cur = Vec::with_capacity(total as usize);
    deal_rec(&mut left, &mut cur, total as usize, rule, &mut dist);
    debug_assert_eq!(
        dist.by_pack_count.values().sum::<BigInt>(),
        multinomial(deck)
    );
    Ok(dist)
}

fn deal_rec(left: &mut [u64], cur: &mut Vec<u64>, total: usize, rule: DealRule, dist: &mut NewcombDistribution) {
    if cur.len() == total {
        let packs = newcomb_deal(cur, rule);
        *dist.by_pack_count.entry(packs.len()).or_insert_with(BigInt::zero) += 1;
        *dist.by_composition.entry(packs).or_insert_with(BigInt::zero) += 1;
        return;
    }
    for v in 0..left.len() {
        if left[v] > 0 {
            left[v] -= 1;
            cur.push(v as u64 + 1);
            deal_rec(left, cur, total, rule, dist);
            cur.pop();
            left[v] += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uni(p: &[u64]) -> Composition {
        Composition::unipartite(p.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_of_214() {
        assert_eq!(conjugate_composition(&uni(&[2, 1, 4])).unwrap(), uni(&[1, 3, 1, 1, 1]));
    }

    #[test]
    fn route_of_31_01_11() {
        let c = Composition::multipartite(vec![vec![3, 1], vec![0, 1], vec![1, 1]]).unwrap();
        let r = LineOfRoute::from_composition(&c).unwrap();
        assert_eq!(r.essential_nodes().iter().map(|&i| r.node(i)).collect::<Vec<_>>(), vec![(3, 2)]);
        assert_eq!(route_conjugate(&c).unwrap().to_string(), "(10)(10)(10)(02)(10)(01)");
    }

    #[test]
    fn zigzag_render() {
        let g = ZigZagGraph::new(&uni(&[3, 2])).unwrap();
        assert_eq!(g.render(), "• • •\n    • •");
    }
}
