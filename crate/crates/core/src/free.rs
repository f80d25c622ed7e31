//! Subgraph containment for forbidden patterns.

use std::fmt;
use std::ops::ControlFlow;

use crate::bitset::{VSet, WideSet};
use crate::canon::canonical_form;
use crate::cliques::{common_neighbors, find_clique, find_disjoint_cliques, for_each_clique};
use crate::count::find_embedding;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A forbidden subgraph `F`. Containment is always as a (not necessarily
/// induced) subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ForbiddenPattern {
    /// `K_r`.
    Clique(usize),
    /// `B_{r,s}`, two `r`-cliques sharing exactly `s` vertices.
    Book {
        r: usize,
        s: usize,
    },
    /// `kK_r`.
    DisjointCliques {
        k: usize,
        r: usize,
    },
    /// `G_1 + G_2`, vertex-disjoint copies of both graphs.
    UnionPair(Graph, Graph),
    Explicit(Graph),
    /// Matches no graph; every graph is free of it.
    Nothing,
}

/// Normal form used for dispatch and for cache keys.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Shape {
    /// Pairwise disjoint cliques of these sizes, non-increasing.
    Cliques(Vec<usize>),
    /// `B_{r,s}` with `0 < s < r`.
    Book(usize, usize),
    Graph(Graph),
    Nothing,
}

fn clique_sizes(g: &Graph) -> Option<Vec<usize>> {
    // components that are all complete
    let n = g.n();
    let mut seen = vec![false; n];
    let mut sizes = Vec::new();
    for v in 0..n {
        if seen[v] {
            continue;
        }
        let mut comp = vec![v];
        seen[v] = true;
        for u in g.neighbors(v) {
            seen[u] = true;
            comp.push(u);
        }
        let k = comp.len();
        if comp.iter().any(|&u| g.degree(u) != k - 1)
            || comp
                .iter()
                .any(|&u| comp.iter().any(|&w| u != w && !g.has_edge(u, w)))
        {
            return None;
        }
        sizes.push(k);
    }
    Some(sizes)
}

impl ForbiddenPattern {
    fn shape(&self) -> Shape {
        let cliques = |mut v: Vec<usize>| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Shape::Cliques(v)
        };
        match self {
            ForbiddenPattern::Clique(r) => cliques(vec![*r]),
            ForbiddenPattern::Book { r, s } if s >= r => cliques(vec![*r]),
            ForbiddenPattern::Book { r, s: 0 } => cliques(vec![*r, *r]),
            ForbiddenPattern::Book { r, s } => Shape::Book(*r, *s),
            ForbiddenPattern::DisjointCliques { k, r } => cliques(vec![*r; *k]),
            ForbiddenPattern::UnionPair(a, b) => match (clique_sizes(a), clique_sizes(b)) {
                (Some(x), Some(y)) => cliques([x, y].concat()),
                _ => Shape::Graph(a.disjoint_union(b).expect("pattern within capacity")),
            },
            ForbiddenPattern::Explicit(g) => match clique_sizes(g) {
                Some(sizes) if g.n() > 0 => cliques(sizes),
                _ => Shape::Graph(g.clone()),
            },
            ForbiddenPattern::Nothing => Shape::Nothing,
        }
    }

    /// Relabelling-invariant description; equal keys mean the same pattern.
    pub fn key(&self) -> String {
        match self.shape() {
            Shape::Cliques(sizes) => format!(
                "cliques:{}",
                sizes
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            Shape::Book(r, s) => format!("book:{r},{s}"),
            Shape::Graph(g) => format!("g6:{}", canonical_form(&g)),
            Shape::Nothing => "nothing".to_string(),
        }
    }

    /// The pattern as a graph, or `None` for [`ForbiddenPattern::Nothing`].
    pub fn to_graph(&self) -> Result<Option<Graph>> {
        Ok(match self {
            ForbiddenPattern::Clique(r) => Some(Graph::complete(*r)),
            ForbiddenPattern::Book { r, s } => Some(crate::construct::book(*r, (*s).min(*r))?),
            ForbiddenPattern::DisjointCliques { k, r } => {
                Some(crate::construct::disjoint_cliques(*k, *r)?)
            }
            ForbiddenPattern::UnionPair(a, b) => Some(a.disjoint_union(b)?),
            ForbiddenPattern::Explicit(g) => Some(g.clone()),
            ForbiddenPattern::Nothing => None,
        })
    }
}

impl fmt::Display for ForbiddenPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

/// True iff `g` has a subgraph isomorphic to `f`.
pub fn contains(g: &Graph, f: &ForbiddenPattern) -> bool {
    find_witness(g, f).is_some()
}

/// The vertex set (sorted) of one copy of `f` in `g`, if any.
pub fn find_witness(g: &Graph, f: &ForbiddenPattern) -> Option<Vec<usize>> {
    let mut found = match f.shape() {
        Shape::Nothing => None,
        Shape::Graph(h) => find_embedding(g, &h),
        Shape::Cliques(sizes) => {
            if g.is_narrow() {
                disjoint_cliques_in::<u64>(g, &sizes)
            } else {
                disjoint_cliques_in::<WideSet>(g, &sizes)
            }
        }
        Shape::Book(r, s) => {
            if g.is_narrow() {
                find_book::<u64>(g, r, s)
            } else {
                find_book::<WideSet>(g, r, s)
            }
        }
    }?;
    found.sort_unstable();
    Some(found)
}

fn disjoint_cliques_in<S: VSet>(g: &Graph, sizes: &[usize]) -> Option<Vec<usize>> {
    let rows: Vec<S> = g.rows();
    let region = S::full(g.n());
    if let [k] = sizes {
        return find_clique(&rows, &region, *k);
    }
    find_disjoint_cliques(&rows, &region, sizes, g.n()).map(|cs| cs.concat())
}

/// Vertices that can lie in an `r`-clique: degree at least `r - 1`.
fn clique_capable<S: VSet>(g: &Graph, r: usize) -> S {
    let mut s = S::empty(g.n());
    for v in 0..g.n() {
        if g.degree(v) + 1 >= r {
            s.insert(v);
        }
    }
    s
}

fn find_book<S: VSet>(g: &Graph, r: usize, s: usize) -> Option<Vec<usize>> {
    let rows: Vec<S> = g.rows();
    let region = clique_capable::<S>(g, r);
    let page = r - s;
    let mut hit = None;
    let _ = for_each_clique(&rows, &region, s, &mut |root| match book_pages(
        &rows,
        &region,
        root,
        page,
        g.n(),
    ) {
        Some(pages) => {
            hit = Some([root.to_vec(), pages].concat());
            ControlFlow::Break(())
        }
        None => ControlFlow::Continue(()),
    });
    hit
}

/// Two disjoint `page`-cliques in the common neighbourhood of `root`.
fn book_pages<S: VSet>(
    rows: &[S],
    region: &S,
    root: &[usize],
    page: usize,
    n: usize,
) -> Option<Vec<usize>> {
    let common = common_neighbors(rows, region, root);
    if common.len() < 2 * page {
        return None;
    }
    find_disjoint_cliques(rows, &common, &[page, page], n).map(|p| p.concat())
}

/// True iff `g` contains no `B_{r,s}`. Requires `s < r`.
///
/// For every `s`-clique `R`, the common neighbourhood of `R` is searched for
/// two vertex-disjoint `(r - s)`-cliques.
pub fn is_book_free(g: &Graph, r: usize, s: usize) -> Result<bool> {
    if s >= r {
        return Err(Error::arg(format!(
            "book overlap s={s} must be below r={r}"
        )));
    }
    Ok(!contains(g, &ForbiddenPattern::Book { r, s }))
}

/// True iff some copy of `B_{r,s}` in `g` has `v` among its `s` shared
/// vertices. Requires `1 <= s <= r`.
pub fn is_rootlet(g: &Graph, v: usize, r: usize, s: usize) -> Result<bool> {
    if v >= g.n() {
        return Err(Error::arg(format!(
            "vertex {v} out of range for {} vertices",
            g.n()
        )));
    }
    if s == 0 || s > r {
        return Err(Error::arg(format!(
            "rootlet query needs 1 <= s <= r, got s={s}, r={r}"
        )));
    }
    Ok(if g.is_narrow() {
        rootlet_with::<u64>(g, v, r, s)
    } else {
        rootlet_with::<WideSet>(g, v, r, s)
    })
}

fn rootlet_with<S: VSet>(g: &Graph, v: usize, r: usize, s: usize) -> bool {
    if g.degree(v) + 1 < r {
        return false;
    }
    let rows: Vec<S> = g.rows();
    let region = clique_capable::<S>(g, r);
    let page = r - s;
    let around = rows[v].and(&region);
    for_each_clique(&rows, &around, s - 1, &mut |rest| {
        let mut root = Vec::with_capacity(s);
        root.push(v);
        root.extend_from_slice(rest);
        if book_pages(&rows, &region, &root, page, g.n()).is_some() {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })
    .is_break()
}

/// Rootlet status of every vertex for `B_{r,s}`.
pub fn rootlet_vertices(g: &Graph, r: usize, s: usize) -> Result<Vec<bool>> {
    (0..g.n()).map(|v| is_rootlet(g, v, r, s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{book, clique_join_turan, turan, turan_plus};

    #[test]
    fn contains_examples() {
        assert!(contains(
            &Graph::complete(5),
            &ForbiddenPattern::Book { r: 3, s: 1 }
        ));
        assert!(!contains(
            &turan(10, 2).unwrap(),
            &ForbiddenPattern::Clique(3)
        ));
        assert!(contains(
            &book(3, 1).unwrap(),
            &ForbiddenPattern::Book { r: 3, s: 1 }
        ));
        assert!(!contains(&Graph::complete(9), &ForbiddenPattern::Nothing));
        assert!(contains(&Graph::empty(0), &ForbiddenPattern::Clique(0)));
    }

    #[test]
    fn book_free_examples() {
        assert!(is_book_free(&turan_plus(7, 2).unwrap(), 3, 1).unwrap());
        assert!(!is_book_free(&Graph::complete(6), 3, 1).unwrap());
        assert!(is_book_free(&clique_join_turan(4, 2, 12).unwrap(), 5, 1).unwrap());
        assert!(is_book_free(&Graph::complete(5), 3, 0).unwrap());
        assert!(!is_book_free(&Graph::complete(6), 3, 0).unwrap());
        assert!(is_book_free(&Graph::complete(3), 3, 3).is_err());
    }

    #[test]
    fn witnesses_are_copies() {
        let g = Graph::complete(7);
        let w = find_witness(&g, &ForbiddenPattern::Book { r: 4, s: 2 }).unwrap();
        assert_eq!(w.len(), 6);
        let w = find_witness(&g, &ForbiddenPattern::DisjointCliques { k: 3, r: 2 }).unwrap();
        assert_eq!(w.len(), 6);
        let w = find_witness(
            &Graph::cycle(6),
            &ForbiddenPattern::Explicit(Graph::path(4)),
        )
        .unwrap();
        assert_eq!(w.len(), 4);
    }

    #[test]
    fn rootlet_examples() {
        for v in 0..4 {
            assert!(is_rootlet(&Graph::complete(4), v, 3, 2).unwrap());
            assert!(!is_rootlet(&Graph::cycle(5), v, 3, 2).unwrap());
        }
        let bowtie = book(3, 1).unwrap();
        assert!(!is_rootlet(&bowtie, 0, 3, 2).unwrap());
        assert!(is_rootlet(&bowtie, 0, 3, 1).unwrap());
        assert!(!is_rootlet(&bowtie, 1, 3, 1).unwrap());
        assert!(is_rootlet(&bowtie, 9, 3, 1).is_err());
        assert!(is_rootlet(&bowtie, 0, 3, 0).is_err());
        // s = r: rootlets of K_r are the clique vertices
        assert!(is_rootlet(&bowtie, 1, 3, 3).unwrap());
    }

    #[test]
    fn pattern_normal_forms() {
        assert_eq!(
            ForbiddenPattern::Book { r: 4, s: 0 }.key(),
            ForbiddenPattern::DisjointCliques { k: 2, r: 4 }.key()
        );
        assert_eq!(
            ForbiddenPattern::Book { r: 4, s: 4 }.key(),
            ForbiddenPattern::Clique(4).key()
        );
        assert_eq!(
            ForbiddenPattern::UnionPair(Graph::complete(2), Graph::complete(3)).key(),
            "cliques:3,2"
        );
        assert_eq!(
            ForbiddenPattern::Explicit(Graph::path(3)).key(),
            ForbiddenPattern::Explicit(Graph::path(3).relabel(&[2, 0, 1])).key()
        );
    }

    #[test]
    fn wide_graph_freeness() {
        let g = clique_join_turan(2, 2, 80).unwrap();
        assert!(!g.is_narrow());
        assert!(is_book_free(&g, 4, 1).unwrap());
        assert!(!is_book_free(&g, 3, 1).unwrap());
        assert!(contains(&g, &ForbiddenPattern::Clique(4)));
        assert!(!contains(&g, &ForbiddenPattern::Clique(5)));
        assert!(!is_rootlet(&g, 79, 4, 1).unwrap());
    }
}
