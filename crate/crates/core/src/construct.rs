//! Named graph families.
//!
//! Vertex layout is deterministic: parts of multipartite graphs occupy
//! consecutive index ranges with larger parts first, and book rootlets come
//! before the two pages.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Part sizes of a complete multipartite graph, all positive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartSizes(Vec<usize>);

impl PartSizes {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if let Some(i) = sizes.iter().position(|&s| s == 0) {
            return Err(Error::arg(format!("part {i} has size 0")));
        }
        Ok(PartSizes(sizes))
    }

    /// Balanced sizes for `T(n, r)`, non-increasing, empty parts dropped
    /// (so `r >= n` gives `n` singleton parts).
    pub fn balanced(n: usize, r: usize) -> Result<Self> {
        if r == 0 {
            return if n == 0 {
                Ok(PartSizes(Vec::new()))
            } else {
                Err(Error::arg(
                    "Turán graph with 0 parts on a non-empty vertex set",
                ))
            };
        }
        let (q, rem) = (n / r, n % r);
        let sizes = (0..r)
            .map(|i| q + usize::from(i < rem))
            .filter(|&s| s > 0)
            .collect();
        Ok(PartSizes(sizes))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph> {
    let parts = PartSizes::new(sizes.to_vec())?;
    Ok(multipartite_unchecked(parts.as_slice()))
}

fn multipartite_unchecked(sizes: &[usize]) -> Graph {
    let n = sizes.iter().sum();
    let mut part = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, s));
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] {
                g.set_edge(u, v, true);
            }
        }
    }
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    multipartite_unchecked(&[a, b])
}

/// `T(n, r)`: complete `r`-partite graph with balanced parts.
pub fn turan(n: usize, r: usize) -> Result<Graph> {
    let parts = PartSizes::balanced(n, r)?;
    Graph::try_empty(n)?;
    Ok(multipartite_unchecked(parts.as_slice()))
}

/// `T⁺(n, r)`: `T(n, r)` plus an edge joining the two lowest-indexed
/// vertices of the last part. When the smallest parts are singletons, the
/// edge goes into the last part that has at least two vertices.
pub fn turan_plus(n: usize, r: usize) -> Result<Graph> {
    let parts = PartSizes::balanced(n, r)?;
    let sizes = parts.as_slice();
    let Some(host) = sizes.iter().rposition(|&s| s >= 2) else {
        return Err(Error::Infeasible(format!(
            "T({n},{r}) has no part with two vertices to join"
        )));
    };
    let first: usize = sizes[..host].iter().sum();
    let g = multipartite_unchecked(sizes);
    g.with_edge(first, first + 1)
}

/// `B_{r,s}`: two `r`-cliques sharing exactly `s` vertices.
/// Rootlets are `0..s`, the first page `s..r`, the second page `r..2r-s`.
pub fn book(r: usize, s: usize) -> Result<Graph> {
    if s > r {
        return Err(Error::arg(format!("book overlap s={s} exceeds r={r}")));
    }
    let n = 2 * r - s;
    let mut g = Graph::try_empty(n)?;
    let first: Vec<usize> = (0..r).collect();
    let second: Vec<usize> = (0..s).chain(r..n).collect();
    for clique in [first, second] {
        for (i, &u) in clique.iter().enumerate() {
            for &v in &clique[i + 1..] {
                g.set_edge(u, v, true);
            }
        }
    }
    Ok(g)
}

/// `K_m ∨ T(n - m, q)`.
pub fn clique_join_turan(m: usize, q: usize, n: usize) -> Result<Graph> {
    if n < m {
        return Err(Error::arg(format!(
            "apex clique of size {m} does not fit in {n} vertices"
        )));
    }
    if q == 0 {
        return Err(Error::arg("clique_join_turan needs at least one part"));
    }
    Graph::complete(m).join(&turan(n - m, q)?)
}

/// `kK_r`: `k` vertex-disjoint copies of `K_r`.
pub fn disjoint_cliques(k: usize, r: usize) -> Result<Graph> {
    (0..k).try_fold(Graph::empty(0), |acc, _| {
        acc.disjoint_union(&Graph::complete(r))
    })
}
