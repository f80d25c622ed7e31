//! The simple-graph value type and its builders.

use std::fmt;

use crate::bitset::{word_count, VSet, WideSet, NARROW_LIMIT};
use crate::error::{Error, Result};

/// Largest vertex count any graph may have. The adjacency matrix is stored
/// densely, so this bounds memory at `MAX_VERTICES² / 8` bytes.
pub const MAX_VERTICES: usize = 1 << 14;

/// An undirected simple graph on vertices `0..n`.
///
/// Adjacency rows are packed bit masks; row `v` holds the neighbours of `v`.
/// Values are immutable: every builder returns a fresh graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

fn check_capacity(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::Capacity(format!(
            "{n} vertices exceeds the limit of {MAX_VERTICES}"
        )))
    } else {
        Ok(())
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    ///
    /// Panics if `n` exceeds [`MAX_VERTICES`]; use [`Graph::try_empty`] to get
    /// an error instead.
    pub fn empty(n: usize) -> Self {
        Self::try_empty(n).expect("vertex count within capacity")
    }

    pub fn try_empty(n: usize) -> Result<Self> {
        check_capacity(n)?;
        let words = word_count(n);
        Ok(Graph {
            n,
            words,
            bits: vec![0; n * words],
        })
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set_edge(u, v, true);
            }
        }
        g
    }

    /// The cycle `0-1-..-(n-1)-0`. For `n < 3` this is the path on `n` vertices.
    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.set_edge(0, n - 1, true);
        }
        g
    }

    /// The path `0-1-..-(n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.set_edge(v - 1, v, true);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::try_empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::arg(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::arg(format!("self-loop at vertex {u}")));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// Builds a graph from its packed adjacency rows.
    pub fn from_rows<S: VSet>(n: usize, rows: &[S]) -> Self {
        let mut g = Self::empty(n);
        for (u, row) in rows.iter().enumerate() {
            for v in row.to_vec() {
                if v > u && v < n {
                    g.set_edge(u, v, true);
                }
            }
        }
        g
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, on: bool) {
        debug_assert!(u != v && u < self.n && v < self.n);
        let (ru, rv) = (u * self.words, v * self.words);
        if on {
            self.bits[ru + v / 64] |= 1u64 << (v % 64);
            self.bits[rv + u / 64] |= 1u64 << (u % 64);
        } else {
            self.bits[ru + v / 64] &= !(1u64 << (v % 64));
            self.bits[rv + u / 64] &= !(1u64 << (u % 64));
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// True when the `u64` kernels apply.
    pub fn is_narrow(&self) -> bool {
        self.n <= NARROW_LIMIT
    }

    pub(crate) fn row_words(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// Neighbourhood of `v` as a vertex set.
    pub fn row<S: VSet>(&self, v: usize) -> S {
        S::from_words(self.row_words(v))
    }

    /// All adjacency rows in the requested set representation.
    ///
    /// `u64` rows are only meaningful for narrow graphs.
    pub fn rows<S: VSet>(&self) -> Vec<S> {
        debug_assert!(
            std::any::TypeId::of::<S>() != std::any::TypeId::of::<u64>() || self.is_narrow()
        );
        (0..self.n).map(|v| self.row(v)).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.bits[u * self.words + v / 64] >> (v % 64)) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row_words(v)
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.row::<WideSet>(v).to_vec()
    }

    /// Open neighbourhoods of `u` and `v` coincide.
    pub fn same_neighborhood(&self, u: usize, v: usize) -> bool {
        self.row_words(u) == self.row_words(v)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.toggled(u, v, true)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.toggled(u, v, false)
    }

    fn toggled(&self, u: usize, v: usize, on: bool) -> Result<Self> {
        if u >= self.n || v >= self.n || u == v {
            return Err(Error::arg(format!(
                "invalid vertex pair ({u},{v}) for {} vertices",
                self.n
            )));
        }
        let mut g = self.clone();
        g.set_edge(u, v, on);
        Ok(g)
    }

    /// Vertex-disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let mut g = Self::try_empty(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.set_edge(u, v, true);
        }
        for (u, v) in other.edges() {
            g.set_edge(u + self.n, v + self.n, true);
        }
        Ok(g)
    }

    /// Disjoint union plus every edge between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Result<Self> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in 0..other.n {
                g.set_edge(u, self.n + v, true);
            }
        }
        Ok(g)
    }

    /// Subgraph induced by `set`, relabelled in increasing vertex order.
    /// Duplicates in `set` are ignored.
    pub fn induced(&self, set: &[usize]) -> Result<Self> {
        let mut verts = set.to_vec();
        verts.sort_unstable();
        verts.dedup();
        if let Some(&bad) = verts.iter().find(|&&v| v >= self.n) {
            return Err(Error::arg(format!(
                "vertex {bad} out of range for {} vertices",
                self.n
            )));
        }
        let mut g = Self::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j, true);
                }
            }
        }
        Ok(g)
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    ///
    /// Panics unless `perm` is a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut seen = vec![false; self.n];
        for &p in perm {
            assert!(p < self.n && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let mut g = Self::empty(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v], true);
        }
        g
    }

    pub fn complement(&self) -> Self {
        let mut g = Self::complete(self.n);
        for (u, v) in self.edges() {
            g.set_edge(u, v, false);
        }
        g
    }

    /// Every pair of non-adjacent vertices has identical neighbourhoods,
    /// i.e. the graph is complete multipartite (edgeless counts as one part).
    pub fn is_complete_multipartite(&self) -> bool {
        (0..self.n)
            .all(|u| (u + 1..self.n).all(|v| self.has_edge(u, v) || self.same_neighborhood(u, v)))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
