//! Independent reference implementations used as test oracles.

#![allow(dead_code)]

use gturan::Graph;
use proptest::prelude::*;

/// Graph on `n` vertices from one bit per pair `(u, v)`, `u < v`, in
/// column order.
pub fn from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for v in 0..n {
        for u in 0..v {
            if bits[i] {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| from_bits(n, &bits))
    })
}

pub fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

fn next_perm(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn subsets(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            go(v + 1, n, k, cur, f);
            cur.pop();
        }
    }
    go(0, n, k, &mut Vec::new(), f);
}

/// Bijections `V(h) -> set` preserving edges of `h`.
fn maps_onto(g: &Graph, h: &Graph, set: &[usize]) -> u64 {
    let mut p: Vec<usize> = (0..set.len()).collect();
    let mut total = 0;
    loop {
        if h.edges()
            .iter()
            .all(|&(a, b)| g.has_edge(set[p[a]], set[p[b]]))
        {
            total += 1;
        }
        if !next_perm(&mut p) {
            return total;
        }
    }
}

/// Copies of `h` in `g`, by trying every `|V(h)|`-subset and every
/// bijection, divided by the automorphisms found the same way.
pub fn naive_copies(g: &Graph, h: &Graph) -> u64 {
    let k = h.n();
    if k > g.n() {
        return 0;
    }
    let aut = maps_onto(h, h, &(0..k).collect::<Vec<_>>());
    let mut total = 0;
    subsets(g.n(), k, &mut |s| total += maps_onto(g, h, s));
    assert_eq!(total % aut, 0);
    total / aut
}

/// Copies of `h` through vertex `v`, the same way.
pub fn naive_copies_at(g: &Graph, h: &Graph, v: usize) -> u64 {
    let k = h.n();
    if k > g.n() {
        return 0;
    }
    let aut = maps_onto(h, h, &(0..k).collect::<Vec<_>>());
    let mut total = 0;
    subsets(g.n(), k, &mut |s| {
        if s.contains(&v) {
            total += maps_onto(g, h, s);
        }
    });
    total / aut
}

/// True iff `g` contains `f`, by checking every injective map.
pub fn naive_contains(g: &Graph, f: &Graph) -> bool {
    let k = f.n();
    if k > g.n() {
        return false;
    }
    let mut hit = false;
    subsets(g.n(), k, &mut |s| {
        if !hit && maps_onto(g, f, s) > 0 {
            hit = true;
        }
    });
    hit
}

/// Isomorphism by brute force over all permutations.
pub fn naive_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut p: Vec<usize> = (0..a.n()).collect();
    loop {
        if a.edges().iter().all(|&(x, y)| b.has_edge(p[x], p[y])) {
            return true;
        }
        if !next_perm(&mut p) {
            return false;
        }
    }
}

/// `binomial(n, k)` in `u128`.
pub fn choose(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}
