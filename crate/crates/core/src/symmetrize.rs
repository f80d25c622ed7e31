//! Zykov symmetrization and its rootlet-restricted variant.
//!
//! Symmetrizing `u` to `v` replaces the neighbourhood of `u` by that of `v`
//! (for non-adjacent `u`, `v`). The restricted variant only allows targets
//! `v` that are not rootlets of any `B_{r,s+1}`, which keeps a
//! `B_{r,s}`-free graph `B_{r,s}`-free.

use serde::{Deserialize, Serialize};

use crate::count::{copies_per_vertex, count_target, CopyCount};
use crate::error::{Error, Result};
use crate::free::{contains, find_witness, is_rootlet, ForbiddenPattern};
use crate::graph::Graph;

/// Replaces the neighbourhood of `u` by the neighbourhood of `v`.
pub fn symmetrize(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    let n = g.n();
    if u >= n || v >= n {
        return Err(Error::arg(format!("vertex out of range for {n} vertices")));
    }
    if u == v {
        return Err(Error::arg(format!("cannot symmetrize {u} to itself")));
    }
    if g.has_edge(u, v) {
        return Err(Error::arg(format!("{u} and {v} are adjacent")));
    }
    let mut out = g.clone();
    for w in 0..n {
        if w != u {
            out.set_edge(u, w, g.has_edge(v, w));
        }
    }
    Ok(out)
}

/// True iff `u` may be symmetrized to `v` in restricted mode for `B_{r,s}`:
/// `u`, `v` are non-adjacent and `v` is not a rootlet of any `B_{r,s+1}`.
pub fn restricted_step_allowed(g: &Graph, u: usize, v: usize, r: usize, s: usize) -> bool {
    if u == v || g.has_edge(u, v) || u >= g.n() || v >= g.n() {
        return false;
    }
    !is_rootlet(g, v, r, s + 1).unwrap_or(false)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum Mode {
    Plain,
    Restricted { r: usize, s: usize },
}

/// One applied step: `source` took the neighbourhood of `target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub source: usize,
    pub target: usize,
    /// Copies of `H` at `source` and at `target` before the step.
    pub d_source: CopyCount,
    pub d_target: CopyCount,
    pub count_before: CopyCount,
    pub count_after: CopyCount,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Termination {
    FixedPoint,
    CapReached,
}

#[derive(Clone, Debug)]
pub struct SymmetrizationTrace {
    pub initial: Graph,
    pub steps: Vec<Step>,
    pub graphs: Vec<Graph>,
    pub terminated: Termination,
}

impl SymmetrizationTrace {
    pub fn final_graph(&self) -> &Graph {
        self.graphs.last().unwrap_or(&self.initial)
    }
}

pub fn default_cap(n: usize) -> usize {
    10 * n * n
}

/// Per-round data: copies of `h` at each vertex and which vertices may be
/// used as targets.
struct Round {
    d: Vec<CopyCount>,
    target_ok: Vec<bool>,
}

impl Round {
    fn of(g: &Graph, h: &Graph, mode: Mode) -> Self {
        let target_ok = match mode {
            Mode::Plain => vec![true; g.n()],
            Mode::Restricted { r, s } => (0..g.n())
                .map(|v| !is_rootlet(g, v, r, s + 1).unwrap_or(false))
                .collect(),
        };
        Round {
            d: copies_per_vertex(g, h),
            target_ok,
        }
    }

    /// Direction for the non-adjacent pair `u < v`: the vertex with fewer
    /// copies moves to the one with more, ties move the higher index to
    /// the lower; only eligible targets count.
    fn direction(&self, u: usize, v: usize) -> Option<(usize, usize)> {
        match (self.target_ok[v], self.target_ok[u]) {
            (true, true) if self.d[v] > self.d[u] => Some((u, v)),
            (true, true) => Some((v, u)),
            (true, false) => Some((u, v)),
            (false, true) => Some((v, u)),
            (false, false) => None,
        }
    }

    /// True iff the gap `d[t1] - d[s1]` exceeds `d[t2] - d[s2]`.
    fn wider(&self, (s1, t1): (usize, usize), (s2, t2): (usize, usize)) -> bool {
        &self.d[t1] + &self.d[s2] > &self.d[t2] + &self.d[s1]
    }
}

/// Symmetrizes until no allowed pair has distinct neighbourhoods or `cap`
/// steps were taken.
///
/// Each round applies, among the non-adjacent pairs with distinct
/// neighbourhoods and an eligible direction, the one whose target exceeds
/// its source by the most copies of `h`; ties go to the lexicographically
/// first pair.
pub fn run(
    g: &Graph,
    h: &Graph,
    constraint: &ForbiddenPattern,
    mode: Mode,
    cap: Option<usize>,
) -> Result<SymmetrizationTrace> {
    if let Some(w) = find_witness(g, constraint) {
        return Err(Error::arg(format!(
            "input graph contains {constraint} on vertices {w:?}"
        )));
    }
    let cap = cap.unwrap_or_else(|| default_cap(g.n()));
    let n = g.n();
    let mut cur = g.clone();
    let mut count = count_target(&cur, h);
    let mut steps = Vec::new();
    let mut graphs = Vec::new();
    loop {
        let round = Round::of(&cur, h, mode);
        let mut best: Option<(usize, usize)> = None;
        for u in 0..n {
            for v in u + 1..n {
                if cur.has_edge(u, v) || cur.same_neighborhood(u, v) {
                    continue;
                }
                if let Some(dir) = round.direction(u, v) {
                    if best.is_none_or(|b| round.wider(dir, b)) {
                        best = Some(dir);
                    }
                }
            }
        }
        let Some((source, target)) = best else {
            return Ok(SymmetrizationTrace {
                initial: g.clone(),
                steps,
                graphs,
                terminated: Termination::FixedPoint,
            });
        };
        if steps.len() >= cap {
            return Ok(SymmetrizationTrace {
                initial: g.clone(),
                steps,
                graphs,
                terminated: Termination::CapReached,
            });
        }
        let next = symmetrize(&cur, source, target)?;
        if contains(&next, constraint) {
            return Err(Error::Consistency(format!(
                "symmetrizing {source} to {target} created {constraint}"
            )));
        }
        let after = count_target(&next, h);
        steps.push(Step {
            source,
            target,
            d_source: round.d[source].clone(),
            d_target: round.d[target].clone(),
            count_before: count,
            count_after: after.clone(),
        });
        count = after;
        graphs.push(next.clone());
        cur = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{complete_bipartite, complete_multipartite};

    fn two_k2() -> Graph {
        Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()
    }

    #[test]
    fn single_steps() {
        let g = symmetrize(&two_k2(), 0, 2).unwrap();
        assert_eq!(g.edges(), vec![(0, 3), (2, 3)]);
        let c5 = symmetrize(&Graph::cycle(5), 1, 3).unwrap();
        assert_eq!(
            c5,
            Graph::from_edges(5, &[(1, 2), (1, 4), (2, 3), (3, 4), (4, 0)]).unwrap()
        );
        let k22 = complete_bipartite(2, 2);
        assert_eq!(symmetrize(&k22, 0, 1).unwrap(), k22);
        assert!(symmetrize(&k22, 0, 2).is_err());
        assert!(symmetrize(&k22, 1, 1).is_err());
    }

    #[test]
    fn restricted_examples() {
        let c5 = Graph::cycle(5);
        for u in 0..5 {
            for v in 0..5 {
                if u != v && !c5.has_edge(u, v) {
                    assert!(restricted_step_allowed(&c5, u, v, 3, 1));
                }
            }
        }
        let g = Graph::complete(4).disjoint_union(&Graph::empty(1)).unwrap();
        assert!(!restricted_step_allowed(&g, 4, 0, 3, 1));
        assert!(!restricted_step_allowed(&g, 0, 1, 3, 1));
    }

    #[test]
    fn plain_run_reaches_complete_bipartite() {
        let k2 = Graph::complete(2);
        let t = run(
            &two_k2(),
            &k2,
            &ForbiddenPattern::Clique(3),
            Mode::Plain,
            Some(100),
        )
        .unwrap();
        assert_eq!(t.terminated, Termination::FixedPoint);
        assert_eq!(t.final_graph().edge_count(), 4);
        assert!(crate::canon::are_isomorphic(
            t.final_graph(),
            &complete_bipartite(2, 2)
        ));

        let k22 = complete_multipartite(&[2, 2]).unwrap();
        let t = run(
            &k22,
            &k2,
            &ForbiddenPattern::Clique(3),
            Mode::Plain,
            Some(100),
        )
        .unwrap();
        assert!(t.steps.is_empty());
        assert_eq!(t.terminated, Termination::FixedPoint);
    }

    #[test]
    fn rejects_bad_input_and_respects_cap() {
        let k3 = Graph::complete(3);
        assert!(run(&k3, &k3, &ForbiddenPattern::Clique(3), Mode::Plain, None).is_err());
        let t = run(
            &two_k2(),
            &Graph::complete(2),
            &ForbiddenPattern::Clique(3),
            Mode::Plain,
            Some(1),
        )
        .unwrap();
        assert_eq!(t.steps.len(), 1);
        assert_eq!(t.terminated, Termination::CapReached);
    }
}
