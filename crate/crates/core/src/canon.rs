//! Canonical labelling.
//!
//! The vertex set is refined to the coarsest equitable ordered partition
//! (cells split by neighbour counts into earlier cells), then the search
//! individualizes each vertex of the first smallest non-singleton cell in
//! turn and recurses. Every discrete leaf yields an ordering; the canonical
//! ordering is the one whose column-major upper-triangle adjacency string is
//! lexicographically smallest.
//!
//! Twins (equal open or equal closed neighbourhoods, same colour) are
//! interchangeable by a transposition that fixes the current branch, so only
//! one vertex per twin class of a target cell is explored. This keeps
//! empty, complete and complete multipartite graphs linear-depth.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::{VSet, WideSet};
use crate::graph::Graph;
use crate::graph6;

/// Isomorphism-class key. Two graphs receive equal keys iff they are
/// isomorphic; keys are totally ordered.
///
/// For uncoloured graphs the key is the graph6 string of the canonically
/// relabelled graph.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    /// The canonical representative. Only meaningful for uncoloured keys.
    pub fn to_graph(&self) -> Graph {
        graph6::decode(&self.0).expect("canonical form holds valid graph6")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.0)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Result of canonical labelling.
#[derive(Clone, Debug)]
pub struct Labeling {
    pub form: CanonicalForm,
    /// `order[i]` is the vertex placed at canonical position `i`.
    pub order: Vec<usize>,
}

impl Labeling {
    /// Inverse of `order`: `perm[v]` is the canonical position of `v`,
    /// suitable for [`Graph::relabel`].
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm = vec![0; self.order.len()];
        for (pos, &v) in self.order.iter().enumerate() {
            perm[v] = pos;
        }
        perm
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).form
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    canonical_labeling_colored(g, &vec![0; g.n()])
}

/// The canonically relabelled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let lab = canonical_labeling(g);
    g.relabel(&lab.permutation())
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

/// Canonical labelling of a vertex-coloured graph. Isomorphisms must map
/// each colour class onto the same colour class.
pub fn canonical_labeling_colored(g: &Graph, colors: &[u32]) -> Labeling {
    assert_eq!(colors.len(), g.n(), "one colour per vertex");
    if g.is_narrow() {
        Search::<u64>::new(g, colors).run()
    } else {
        Search::<WideSet>::new(g, colors).run()
    }
}

/// True iff some automorphism of `g` maps `x` to `y`.
pub fn same_orbit(g: &Graph, x: usize, y: usize) -> bool {
    if x == y {
        return true;
    }
    if g.degree(x) != g.degree(y) {
        return false;
    }
    let mark = |v: usize| {
        let mut c = vec![0u32; g.n()];
        c[v] = 1;
        c
    };
    canonical_labeling_colored(g, &mark(x)).form == canonical_labeling_colored(g, &mark(y)).form
}

struct Search<'a, S: VSet> {
    g: &'a Graph,
    rows: Vec<S>,
    n: usize,
    twin_class: Vec<usize>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    colors: &'a [u32],
}

impl<'a, S: VSet> Search<'a, S> {
    fn new(g: &'a Graph, colors: &'a [u32]) -> Self {
        let n = g.n();
        let rows: Vec<S> = g.rows();
        let twin_class = twin_classes(&rows, colors);
        Search {
            g,
            rows,
            n,
            twin_class,
            best: None,
            colors,
        }
    }

    fn run(mut self) -> Labeling {
        let mut by_color: Vec<(u32, usize)> = self.colors.iter().copied().zip(0..self.n).collect();
        by_color.sort_unstable();
        let mut cells: Vec<Vec<usize>> = Vec::new();
        for (c, v) in &by_color {
            match cells.last_mut() {
                Some(cell) if self.colors[cell[0]] == *c => cell.push(*v),
                _ => cells.push(vec![*v]),
            }
        }
        self.descend(cells);
        let (_, order) = self.best.take().unwrap_or_default();
        let relabelled = self.g.relabel(&{
            let mut perm = vec![0; self.n];
            for (pos, &v) in order.iter().enumerate() {
                perm[v] = pos;
            }
            perm
        });
        let mut key = graph6::encode(&relabelled);
        if self.colors.iter().any(|&c| c != self.colors[0]) {
            key.push('|');
            for v in &order {
                key.push_str(&self.colors[*v].to_string());
                key.push(',');
            }
        }
        Labeling {
            form: CanonicalForm(key),
            order,
        }
    }

    fn descend(&mut self, mut cells: Vec<Vec<usize>>) {
        refine(&self.rows, self.n, &mut cells);
        if cells.len() == self.n {
            let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            let cert = self.certificate(&order);
            if self.best.as_ref().is_none_or(|(b, _)| cert < *b) {
                self.best = Some((cert, order));
            }
            return;
        }
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
            .expect("non-discrete partition has a non-singleton cell");
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target].clone() {
            let class = self.twin_class[v];
            if tried.contains(&class) {
                continue;
            }
            tried.push(class);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cells[target].iter().copied().filter(|&u| u != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            self.descend(child);
        }
    }

    fn certificate(&self, order: &[usize]) -> Vec<u64> {
        let nbits = self.n * self.n.saturating_sub(1) / 2;
        let mut out = vec![0u64; nbits.div_ceil(64)];
        let mut k = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.rows[order[i]].contains(order[j]) {
                    out[k / 64] |= 1u64 << (63 - k % 64);
                }
                k += 1;
            }
        }
        out
    }
}

/// Twin-class id per vertex. Open twins and closed twins never overlap in a
/// non-trivial way, so one pass over each suffices.
fn twin_classes<S: VSet>(rows: &[S], colors: &[u32]) -> Vec<usize> {
    let n = rows.len();
    let mut class: Vec<usize> = (0..n).collect();
    let mut open: HashMap<(u32, &S), usize> = HashMap::new();
    for v in 0..n {
        let rep = *open.entry((colors[v], &rows[v])).or_insert(v);
        class[v] = rep;
    }
    let mut closed: HashMap<(u32, S), usize> = HashMap::new();
    for v in 0..n {
        if class[v] != v || (v + 1..n).any(|u| class[u] == v) {
            continue;
        }
        let mut row = rows[v].clone();
        row.insert(v);
        let rep = *closed.entry((colors[v], row)).or_insert(v);
        class[v] = rep;
    }
    class
}

/// Refines `cells` to the coarsest equitable partition that refines it.
/// Split pieces are ordered by increasing neighbour count, which keeps the
/// procedure equivariant under relabelling.
fn refine<S: VSet>(rows: &[S], n: usize, cells: &mut Vec<Vec<usize>>) {
    'restart: loop {
        if cells.len() == n {
            return;
        }
        for w in 0..cells.len() {
            let mut splitter = S::empty(n);
            for &v in &cells[w] {
                splitter.insert(v);
            }
            for x in 0..cells.len() {
                if cells[x].len() == 1 {
                    continue;
                }
                let counts: Vec<usize> = cells[x]
                    .iter()
                    .map(|&v| rows[v].and(&splitter).len())
                    .collect();
                if counts.iter().all(|&c| c == counts[0]) {
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> =
                    counts.into_iter().zip(cells[x].iter().copied()).collect();
                keyed.sort_unstable();
                let mut pieces: Vec<Vec<usize>> = Vec::new();
                let mut last = usize::MAX;
                for (c, v) in keyed {
                    if c != last {
                        pieces.push(Vec::new());
                        last = c;
                    }
                    pieces.last_mut().expect("piece pushed").push(v);
                }
                cells.splice(x..=x, pieces);
                continue 'restart;
            }
        }
        return;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelled_cycle_matches() {
        let c5 = Graph::cycle(5);
        // the cycle 2-0-4-1-3-2
        let other = Graph::from_edges(5, &[(2, 0), (0, 4), (4, 1), (1, 3), (3, 2)]).unwrap();
        assert_eq!(canonical_form(&c5), canonical_form(&other));
    }

    #[test]
    fn path_and_triangle_differ() {
        assert_ne!(
            canonical_form(&Graph::path(3)),
            canonical_form(&Graph::complete(3))
        );
    }

    #[test]
    fn canonical_graph_is_fixed() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (0, 5)]).unwrap();
        let c = canonical_graph(&g);
        assert_eq!(canonical_graph(&c), c);
        assert_eq!(canonical_form(&g).to_graph(), c);
    }

    #[test]
    fn symmetric_graphs_are_fast() {
        // 20! orderings without twin pruning
        for g in [Graph::empty(20), Graph::complete(20)] {
            let lab = canonical_labeling(&g);
            assert_eq!(lab.order.len(), 20);
        }
        let big = Graph::empty(40).join(&Graph::empty(30)).unwrap();
        assert_eq!(canonical_form(&big).to_graph().edge_count(), 1200);
    }

    #[test]
    fn orbits() {
        let p = Graph::path(4);
        assert!(same_orbit(&p, 0, 3));
        assert!(same_orbit(&p, 1, 2));
        assert!(!same_orbit(&p, 0, 1));
        let star_plus = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
        assert!(same_orbit(&star_plus, 1, 2));
        assert!(!same_orbit(&star_plus, 1, 3));
    }

    #[test]
    fn colored_forms_respect_colors() {
        let p = Graph::path(3);
        let a = canonical_labeling_colored(&p, &[1, 0, 0]).form;
        let b = canonical_labeling_colored(&p, &[0, 0, 1]).form;
        let c = canonical_labeling_colored(&p, &[0, 1, 0]).form;
        assert_eq!(a, b);
        assert_ne!(a, c);
    }
}
