//! Exact counts of unlabelled copies `N(H, G)`.
//!
//! Three independent routes:
//! * cliques, by candidate-set intersection over the twin quotient of `G`;
//! * complete bipartite graphs, by enumerating one side and choosing the
//!   other from the common neighbourhood;
//! * arbitrary `H`, as labelled embeddings divided by `|Aut(H)|`.
//!
//! Arithmetic runs in `u128` and is redone in arbitrary precision if any
//! intermediate value overflows.

use std::fmt;
use std::iter::Sum;
use std::ops::Add;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bitset::{VSet, WideSet, NARROW_LIMIT};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A non-negative exact count.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CopyCount(BigUint);

impl CopyCount {
    pub fn zero() -> Self {
        CopyCount(<BigUint as num_traits::Zero>::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_u128(&self) -> Option<u128> {
        self.0.to_u128()
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    /// Exact quotient; `None` when `d` is zero or does not divide `self`.
    pub fn checked_div_exact(&self, d: &CopyCount) -> Option<CopyCount> {
        if d.is_zero() {
            return None;
        }
        let q = &self.0 / &d.0;
        (&q * &d.0 == self.0).then_some(CopyCount(q))
    }
}

impl From<u64> for CopyCount {
    fn from(x: u64) -> Self {
        CopyCount(BigUint::from(x))
    }
}

impl From<u128> for CopyCount {
    fn from(x: u128) -> Self {
        CopyCount(BigUint::from(x))
    }
}

impl From<usize> for CopyCount {
    fn from(x: usize) -> Self {
        CopyCount(BigUint::from(x))
    }
}

impl From<BigUint> for CopyCount {
    fn from(x: BigUint) -> Self {
        CopyCount(x)
    }
}

impl PartialEq<u64> for CopyCount {
    fn eq(&self, other: &u64) -> bool {
        self.to_u64() == Some(*other)
    }
}

impl Add for CopyCount {
    type Output = CopyCount;
    fn add(self, rhs: CopyCount) -> CopyCount {
        CopyCount(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a CopyCount> for &'a CopyCount {
    type Output = CopyCount;
    fn add(self, rhs: &CopyCount) -> CopyCount {
        CopyCount(&self.0 + &rhs.0)
    }
}

impl Sum for CopyCount {
    fn sum<I: Iterator<Item = CopyCount>>(iter: I) -> Self {
        iter.fold(CopyCount::zero(), |a, b| a + b)
    }
}

impl fmt::Display for CopyCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for CopyCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for CopyCount {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BigUint::from_str(s)
            .map(CopyCount)
            .map_err(|e| Error::parse(0, format!("invalid count {s:?}: {e}")))
    }
}

impl Serialize for CopyCount {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for CopyCount {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Arithmetic used inside the counting recursions.
pub(crate) trait Tally: Clone + Send + Sync {
    fn zero() -> Self;
    fn from_u64(x: u64) -> Self;
    fn add(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn div_small(&self, d: u64) -> Self;
}

impl Tally for u128 {
    fn zero() -> Self {
        0
    }
    fn from_u64(x: u64) -> Self {
        x as u128
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn div_small(&self, d: u64) -> Self {
        self / d as u128
    }
}

impl Tally for BigUint {
    fn zero() -> Self {
        <BigUint as num_traits::Zero>::zero()
    }
    fn from_u64(x: u64) -> Self {
        BigUint::from(x)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div_small(&self, d: u64) -> Self {
        self / d
    }
}

/// Runs a computation in `u128`, falling back to arbitrary precision on overflow.
pub(crate) fn exact<F, G>(small: F, big: G) -> CopyCount
where
    F: FnOnce() -> Option<u128>,
    G: FnOnce() -> BigUint,
{
    match small() {
        Some(x) => x.into(),
        None => CopyCount(big()),
    }
}

pub(crate) fn binomial<T: Tally>(n: u64, k: u64) -> Option<T> {
    if k > n {
        return Some(T::zero());
    }
    let k = k.min(n - k);
    let mut acc = T::from_u64(1);
    for i in 0..k {
        acc = acc.mul(&T::from_u64(n - i))?.div_small(i + 1);
    }
    Some(acc)
}

pub fn binomial_count(n: u64, k: u64) -> CopyCount {
    exact(
        || binomial::<u128>(n, k),
        || binomial::<BigUint>(n, k).expect("bigint never overflows"),
    )
}

// ---------------------------------------------------------------------------
// Cliques
// ---------------------------------------------------------------------------

/// Twin-class quotient: each class is a module that is either an
/// independent set (open twins) or a clique (closed twins).
struct Quotient {
    sizes: Vec<u64>,
    is_clique: Vec<bool>,
    adj: Vec<Vec<usize>>,
}

impl Quotient {
    fn of(g: &Graph) -> Self {
        let n = g.n();
        let mut class = vec![usize::MAX; n];
        let mut reps: Vec<usize> = Vec::new();
        let mut sizes: Vec<u64> = Vec::new();
        let mut is_clique: Vec<bool> = Vec::new();
        for v in 0..n {
            if class[v] != usize::MAX {
                continue;
            }
            let id = reps.len();
            class[v] = id;
            reps.push(v);
            sizes.push(1);
            is_clique.push(true);
            let row_v: WideSet = g.row(v);
            let mut closed_v = row_v.clone();
            closed_v.insert(v);
            #[allow(clippy::needless_range_loop)]
            for u in v + 1..n {
                if class[u] != usize::MAX {
                    continue;
                }
                let row_u: WideSet = g.row(u);
                let twin = if g.has_edge(u, v) {
                    let mut closed_u = row_u;
                    closed_u.insert(u);
                    closed_u == closed_v
                } else {
                    row_u == row_v
                };
                if twin {
                    class[u] = id;
                    sizes[id] += 1;
                    is_clique[id] = g.has_edge(u, v);
                }
            }
        }
        let adj = reps
            .iter()
            .map(|&a| {
                reps.iter()
                    .enumerate()
                    .filter(|(_, &b)| g.has_edge(a, b))
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        Quotient {
            sizes,
            is_clique,
            adj,
        }
    }

    fn rows<S: VSet>(&self) -> Vec<S> {
        let m = self.sizes.len();
        self.adj
            .iter()
            .map(|nb| {
                let mut s = S::empty(m);
                for &j in nb {
                    s.insert(j);
                }
                s
            })
            .collect()
    }
}

fn quotient_cliques<S: VSet, T: Tally>(q: &Quotient, k: usize) -> Option<T> {
    let rows: Vec<S> = q.rows();
    let m = q.sizes.len();
    // weights[c][j] = ways to take j vertices from class c
    let mut weights: Vec<Vec<T>> = Vec::with_capacity(m);
    for c in 0..m {
        let top = if q.is_clique[c] {
            (q.sizes[c] as usize).min(k)
        } else {
            1
        };
        let mut w = vec![T::zero()];
        for j in 1..=top {
            w.push(if q.is_clique[c] {
                binomial::<T>(q.sizes[c], j as u64)?
            } else {
                T::from_u64(q.sizes[c])
            });
        }
        weights.push(w);
    }
    clique_rec(&rows, &weights, S::full(m), k)
}

fn clique_rec<S: VSet, T: Tally>(
    rows: &[S],
    weights: &[Vec<T>],
    cand: S,
    need: usize,
) -> Option<T> {
    if need == 0 {
        return Some(T::from_u64(1));
    }
    let mut total = T::zero();
    let mut rest = cand;
    while let Some(c) = rest.first() {
        rest.remove(c);
        let next = rest.and(&rows[c]);
        for (j, w) in weights[c].iter().enumerate().skip(1).take(need) {
            let sub = if j == need {
                T::from_u64(1)
            } else if next.is_empty() {
                continue;
            } else {
                clique_rec(rows, weights, next.clone(), need - j)?
            };
            total = total.add(&w.mul(&sub)?)?;
        }
    }
    Some(total)
}

/// Number of `k`-vertex subsets of `g` that induce a complete graph.
pub fn count_cliques(g: &Graph, k: usize) -> CopyCount {
    if k == 0 {
        return 1u64.into();
    }
    if k == 1 {
        return g.n().into();
    }
    let q = Quotient::of(g);
    if q.sizes.len() <= NARROW_LIMIT {
        exact(
            || quotient_cliques::<u64, u128>(&q, k),
            || quotient_cliques::<u64, BigUint>(&q, k).expect("bigint"),
        )
    } else {
        exact(
            || quotient_cliques::<WideSet, u128>(&q, k),
            || quotient_cliques::<WideSet, BigUint>(&q, k).expect("bigint"),
        )
    }
}

/// Sum of `count_cliques` over a family of clique sizes.
pub fn count_family(g: &Graph, sizes: &[usize]) -> Result<CopyCount> {
    if sizes.is_empty() {
        return Err(Error::arg("clique-size family must be non-empty"));
    }
    Ok(sizes.iter().map(|&k| count_cliques(g, k)).sum())
}

// ---------------------------------------------------------------------------
// Complete bipartite graphs
// ---------------------------------------------------------------------------

fn biclique_rec<S: VSet, T: Tally>(
    rows: &[S],
    cand: S,
    common: S,
    need_a: usize,
    b: u64,
) -> Option<T> {
    if (common.len() as u64) < b {
        return Some(T::zero());
    }
    if need_a == 0 {
        return binomial::<T>(common.len() as u64, b);
    }
    let mut total = T::zero();
    let mut rest = cand;
    while let Some(v) = rest.first() {
        if rest.len() < need_a {
            break;
        }
        rest.remove(v);
        let sub = biclique_rec(rows, rest.clone(), common.and(&rows[v]), need_a - 1, b)?;
        total = total.add(&sub)?;
    }
    Some(total)
}

fn bicliques_with<S: VSet, T: Tally>(g: &Graph, a: usize, b: usize) -> Option<T> {
    let rows: Vec<S> = g.rows();
    let full = S::full(g.n());
    let total = biclique_rec::<S, T>(&rows, full.clone(), full, a, b as u64)?;
    Some(if a == b { total.div_small(2) } else { total })
}

/// `N(K_{a,b}, g)`: enumerate the `a`-side, choose the `b`-side from its
/// common neighbourhood; halved when `a == b`.
pub fn count_bicliques(g: &Graph, a: usize, b: usize) -> CopyCount {
    let (a, b) = (a.min(b), a.max(b));
    if a == 0 {
        return binomial_count(g.n() as u64, b as u64);
    }
    if g.is_narrow() {
        exact(
            || bicliques_with::<u64, u128>(g, a, b),
            || bicliques_with::<u64, BigUint>(g, a, b).expect("bigint"),
        )
    } else {
        exact(
            || bicliques_with::<WideSet, u128>(g, a, b),
            || bicliques_with::<WideSet, BigUint>(g, a, b).expect("bigint"),
        )
    }
}

// ---------------------------------------------------------------------------
// Generic embeddings
// ---------------------------------------------------------------------------

/// Matching order for the vertices of `h`: connected-first, each next vertex
/// maximizing the number of already-placed neighbours (ties: larger degree,
/// then smaller index).
pub(crate) struct Plan {
    pub order: Vec<usize>,
    /// For each position, earlier positions adjacent in `h`.
    pub back: Vec<Vec<usize>>,
    pub degree: Vec<usize>,
}

impl Plan {
    pub(crate) fn new(h: &Graph, start: Option<usize>) -> Self {
        let k = h.n();
        let mut placed = vec![false; k];
        let mut order = Vec::with_capacity(k);
        for step in 0..k {
            let pick = if let (0, Some(first)) = (step, start) {
                first
            } else {
                (0..k)
                    .filter(|&x| !placed[x])
                    .max_by_key(|&x| {
                        let back = order.iter().filter(|&&y| h.has_edge(x, y)).count();
                        (back, h.degree(x), std::cmp::Reverse(x))
                    })
                    .expect("unplaced vertex remains")
            };
            placed[pick] = true;
            order.push(pick);
        }
        let back = (0..k)
            .map(|i| (0..i).filter(|&j| h.has_edge(order[i], order[j])).collect())
            .collect();
        let degree = order.iter().map(|&x| h.degree(x)).collect();
        Plan {
            order,
            back,
            degree,
        }
    }
}

struct Embedder<'a, S: VSet> {
    rows: &'a [S],
    plan: &'a Plan,
    /// Vertices of `g` with degree at least that required at each position.
    allowed: Vec<S>,
    mapped: Vec<usize>,
}

impl<'a, S: VSet> Embedder<'a, S> {
    fn new(g: &Graph, rows: &'a [S], plan: &'a Plan, pin: Option<usize>) -> Self {
        let n = g.n();
        let allowed = plan
            .degree
            .iter()
            .enumerate()
            .map(|(pos, &d)| {
                let mut s = S::empty(n);
                for v in 0..n {
                    if g.degree(v) >= d && (pos != 0 || pin.is_none_or(|p| p == v)) {
                        s.insert(v);
                    }
                }
                s
            })
            .collect();
        Embedder {
            rows,
            plan,
            allowed,
            mapped: Vec::with_capacity(plan.order.len()),
        }
    }

    fn candidates(&self, pos: usize, used: &S) -> S {
        let mut cand = self.allowed[pos].and_not(used);
        for &j in &self.plan.back[pos] {
            cand = cand.and(&self.rows[self.mapped[j]]);
        }
        cand
    }

    fn count<T: Tally>(&mut self, pos: usize, used: &S) -> Option<T> {
        let k = self.plan.order.len();
        if pos == k {
            return Some(T::from_u64(1));
        }
        let cand = self.candidates(pos, used);
        if pos + 1 == k {
            return Some(T::from_u64(cand.len() as u64));
        }
        let mut total = T::zero();
        let mut rest = cand;
        while let Some(v) = rest.first() {
            rest.remove(v);
            let mut next = used.clone();
            next.insert(v);
            self.mapped.push(v);
            let sub = self.count::<T>(pos + 1, &next);
            self.mapped.pop();
            total = total.add(&sub?)?;
        }
        Some(total)
    }

    fn find(&mut self, pos: usize, used: &S) -> bool {
        if pos == self.plan.order.len() {
            return true;
        }
        let mut rest = self.candidates(pos, used);
        while let Some(v) = rest.first() {
            rest.remove(v);
            let mut next = used.clone();
            next.insert(v);
            self.mapped.push(v);
            if self.find(pos + 1, &next) {
                return true;
            }
            self.mapped.pop();
        }
        false
    }
}

fn embeddings_with<S: VSet>(g: &Graph, h: &Graph, start: Option<(usize, usize)>) -> CopyCount {
    let rows: Vec<S> = g.rows();
    let plan = Plan::new(h, start.map(|(x, _)| x));
    let pin = start.map(|(_, v)| v);
    let empty = S::empty(g.n());
    exact(
        || Embedder::new(g, &rows, &plan, pin).count::<u128>(0, &empty),
        || {
            Embedder::new(g, &rows, &plan, pin)
                .count::<BigUint>(0, &empty)
                .expect("bigint")
        },
    )
}

fn embeddings_pinned(g: &Graph, h: &Graph, start: Option<(usize, usize)>) -> CopyCount {
    if h.n() > g.n() {
        return CopyCount::zero();
    }
    if h.n() == 0 {
        return 1u64.into();
    }
    if g.is_narrow() {
        embeddings_with::<u64>(g, h, start)
    } else {
        embeddings_with::<WideSet>(g, h, start)
    }
}

/// Injective maps `V(h) -> V(g)` sending edges of `h` to edges of `g`.
pub fn count_embeddings(g: &Graph, h: &Graph) -> CopyCount {
    embeddings_pinned(g, h, None)
}

pub fn automorphism_count(h: &Graph) -> CopyCount {
    count_embeddings(h, h)
}

/// One embedding of `h` into `g` as `map[x] = image of x`, if any.
pub fn find_embedding(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if h.n() > g.n() {
        return None;
    }
    fn go<S: VSet>(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
        let rows: Vec<S> = g.rows();
        let plan = Plan::new(h, None);
        let mut e = Embedder::new(g, &rows, &plan, None);
        if !e.find(0, &S::empty(g.n())) {
            return None;
        }
        let mut map = vec![0; h.n()];
        for (pos, &x) in plan.order.iter().enumerate() {
            map[x] = e.mapped[pos];
        }
        Some(map)
    }
    if g.is_narrow() {
        go::<u64>(g, h)
    } else {
        go::<WideSet>(g, h)
    }
}

/// `N(h, g)` = embeddings / automorphisms.
///
/// Panics if the division is inexact, which would indicate a bug in the
/// embedding search.
pub fn count_copies(g: &Graph, h: &Graph) -> CopyCount {
    let emb = count_embeddings(g, h);
    let aut = automorphism_count(h);
    emb.checked_div_exact(&aut).unwrap_or_else(|| {
        panic!("embedding count {emb} not divisible by |Aut(H)| = {aut} for H = {h:?}")
    })
}

/// `N(h, g)` through the fastest applicable route: the clique or biclique
/// kernels when `h` is complete or connected complete bipartite, otherwise
/// [`count_copies`].
pub fn count_target(g: &Graph, h: &Graph) -> CopyCount {
    let k = h.n();
    if h.edge_count() == k * k.saturating_sub(1) / 2 {
        return count_cliques(g, k);
    }
    if k >= 2 && h.is_complete_multipartite() {
        let a = (0..k).filter(|&v| !h.has_edge(0, v)).count();
        if h.edge_count() == a * (k - a) {
            return count_bicliques(g, a, k - a);
        }
    }
    count_copies(g, h)
}

/// Number of copies of `h` in `g` whose vertex set contains `v`.
pub fn copies_at_vertex(g: &Graph, h: &Graph, v: usize) -> Result<CopyCount> {
    if v >= g.n() {
        return Err(Error::arg(format!(
            "vertex {v} out of range for {} vertices",
            g.n()
        )));
    }
    let pinned: CopyCount = (0..h.n())
        .map(|x| embeddings_pinned(g, h, Some((x, v))))
        .sum();
    let aut = automorphism_count(h);
    Ok(pinned.checked_div_exact(&aut).unwrap_or_else(|| {
        panic!("pinned embedding count {pinned} not divisible by |Aut(H)| = {aut}")
    }))
}

/// Per-vertex copy counts for every vertex of `g`.
pub fn copies_per_vertex(g: &Graph, h: &Graph) -> Vec<CopyCount> {
    (0..g.n())
        .map(|v| copies_at_vertex(g, h, v).expect("vertex in range"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{book, complete_bipartite, turan};

    #[test]
    fn clique_examples() {
        assert_eq!(count_cliques(&Graph::complete(5), 3), 10);
        assert_eq!(count_cliques(&turan(6, 3).unwrap(), 3), 8);
        assert_eq!(count_cliques(&Graph::cycle(5), 3), 0);
        assert_eq!(count_cliques(&Graph::cycle(5), 0), 1);
        assert_eq!(count_cliques(&Graph::cycle(5), 1), 5);
        assert_eq!(count_cliques(&Graph::complete(5), 6), 0);
    }

    #[test]
    fn clique_count_on_wide_graph() {
        let g = Graph::complete(100);
        assert_eq!(count_cliques(&g, 3), 161_700);
        let t = turan(200, 4).unwrap();
        assert_eq!(count_cliques(&t, 4), 50u64.pow(4));
    }

    #[test]
    fn clique_count_promotes_past_u128() {
        // C(2000, 20) is about 4e47
        let g = Graph::complete(2_000);
        let got = count_cliques(&g, 20);
        assert!(got.to_u128().is_none());
        assert_eq!(got, binomial_count(2_000, 20));
    }

    #[test]
    fn embedding_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(count_embeddings(&k3, &k3), 6);
        assert_eq!(count_embeddings(&k3, &Graph::path(3)), 6);
        let c4 = complete_bipartite(2, 2);
        assert_eq!(count_embeddings(&c4, &c4), 8);
        assert_eq!(count_embeddings(&k3, &Graph::empty(0)), 1);
        assert_eq!(count_embeddings(&k3, &Graph::empty(4)), 0);
    }

    #[test]
    fn copy_examples() {
        assert_eq!(count_copies(&Graph::complete(3), &Graph::path(3)), 3);
        assert_eq!(
            count_copies(&complete_bipartite(3, 3), &complete_bipartite(2, 2)),
            9
        );
        let g = Graph::cycle(7);
        assert_eq!(count_copies(&g, &Graph::complete(1)), 7);
    }

    #[test]
    fn biclique_fast_path_matches_generic() {
        let g = crate::construct::turan_plus(8, 2).unwrap();
        for (a, b) in [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3), (3, 3)] {
            assert_eq!(
                count_bicliques(&g, a, b),
                count_copies(&g, &complete_bipartite(a, b)),
                "K_{{{a},{b}}}"
            );
        }
        assert_eq!(count_bicliques(&Graph::empty(5), 0, 2), 10);
    }

    #[test]
    fn target_dispatch_agrees() {
        let g = crate::construct::turan_plus(7, 3).unwrap();
        let hs = [
            Graph::complete(3),
            complete_bipartite(2, 2),
            complete_bipartite(1, 3),
            Graph::path(4),
            Graph::empty(3),
            book(3, 1).unwrap(),
        ];
        for h in &hs {
            assert_eq!(count_target(&g, h), count_copies(&g, h), "{h:?}");
        }
    }

    #[test]
    fn per_vertex_examples() {
        let bowtie = book(3, 1).unwrap();
        let k3 = Graph::complete(3);
        assert_eq!(copies_at_vertex(&bowtie, &k3, 0).unwrap(), 2);
        for v in 0..4 {
            assert_eq!(copies_at_vertex(&Graph::complete(4), &k3, v).unwrap(), 3);
        }
        for v in 0..5 {
            assert_eq!(
                copies_at_vertex(&Graph::cycle(5), &Graph::complete(2), v).unwrap(),
                2
            );
        }
        assert!(copies_at_vertex(&bowtie, &k3, 5).is_err());
    }

    #[test]
    fn family_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(count_family(&k4, &[3, 4]).unwrap(), 5);
        let apex = Graph::complete(1).join(&turan(6, 2).unwrap()).unwrap();
        assert_eq!(count_family(&apex, &[3, 4, 5]).unwrap(), 9);
        assert_eq!(count_family(&apex, &[3]).unwrap(), count_cliques(&apex, 3));
        assert!(count_family(&apex, &[]).is_err());
    }

    #[test]
    fn find_embedding_maps_edges() {
        let g = Graph::cycle(6);
        let map = find_embedding(&g, &Graph::path(4)).unwrap();
        for (x, y) in Graph::path(4).edges() {
            assert!(g.has_edge(map[x], map[y]));
        }
        assert!(find_embedding(&g, &Graph::complete(3)).is_none());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial_count(5, 2), 10);
        assert_eq!(binomial_count(2, 5), 0);
        assert_eq!(binomial_count(0, 0), 1);
    }
}
