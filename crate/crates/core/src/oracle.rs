//! Exhaustive `ex(n, H, F)` for small `n`.
//!
//! `F`-free graphs are generated one isomorphism class at a time by
//! canonical augmentation: a child adds vertex `k` with some neighbourhood
//! to a parent on `k` vertices, and is kept only if the new vertex lies in
//! the automorphism orbit of the last vertex of the child's canonical
//! order. Children of one parent are deduplicated by canonical form.
//! `F`-freeness is hereditary, so children containing `F` are dropped with
//! their whole subtree.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, canonical_labeling, same_orbit, CanonicalForm};
use crate::count::{count_target, CopyCount};
use crate::error::{Error, Result};
use crate::free::{contains, ForbiddenPattern};
use crate::graph::Graph;
use crate::graph6;

pub const DEFAULT_LIMIT: usize = 10;
pub const DEFAULT_WITNESS_CAP: usize = 10;
/// Largest `n` accepted by the labelled generator (`2^21` labelled graphs).
pub const LABELED_LIMIT: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    pub value: CopyCount,
    /// Canonical graph6 strings of graphs attaining `value`, sorted, capped.
    pub witnesses: Vec<String>,
    /// Number of graphs attaining `value`, including those beyond the cap.
    pub witness_total: u64,
    pub graphs_enumerated: u64,
    #[serde(with = "secs")]
    pub elapsed: Duration,
}

mod secs {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        Ok(Duration::from_secs_f64(f64::deserialize(d)?))
    }
}

/// Limits for exhaustive search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    pub limit: usize,
    pub witness_cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            limit: DEFAULT_LIMIT,
            witness_cap: DEFAULT_WITNESS_CAP,
        }
    }
}

impl Oracle {
    fn check(&self, n: usize) -> Result<()> {
        if n > self.limit {
            return Err(Error::Capacity(format!(
                "exhaustive search limited to n <= {}, got n={n}",
                self.limit
            )));
        }
        Ok(())
    }

    /// One canonical representative per isomorphism class of `F`-free
    /// graphs on `n` vertices, sorted by canonical form.
    pub fn enumerate_free(&self, n: usize, f: &ForbiddenPattern) -> Result<Vec<Graph>> {
        self.check(n)?;
        let mut level = vec![Graph::empty(0)];
        if contains(&level[0], f) {
            return Ok(Vec::new());
        }
        for _ in 0..n {
            level = augment(&level, f)?;
        }
        Ok(level)
    }

    pub fn ex(&self, n: usize, h: &Graph, f: &ForbiddenPattern) -> Result<OracleResult> {
        self.ex_family(n, std::slice::from_ref(h), f)
    }

    /// Maximum of `sum_{H in hs} N(H, G)` over `F`-free `G` on `n` vertices.
    pub fn ex_family(&self, n: usize, hs: &[Graph], f: &ForbiddenPattern) -> Result<OracleResult> {
        if hs.is_empty() {
            return Err(Error::arg("target family must be non-empty"));
        }
        let start = Instant::now();
        let graphs = self.enumerate_free(n, f)?;
        let mut out = maximize(&graphs, hs, self.witness_cap)
            .ok_or_else(|| Error::Infeasible(format!("no {n}-vertex graph avoids {f}")))?;
        out.elapsed = start.elapsed();
        Ok(out)
    }
}

/// Maximum of the summed target counts over `graphs`, with the first
/// `witness_cap` attaining graphs (in the given order) as graph6.
/// `None` when `graphs` is empty.
pub fn maximize(graphs: &[Graph], hs: &[Graph], witness_cap: usize) -> Option<OracleResult> {
    let start = Instant::now();
    let scored: Vec<CopyCount> = graphs
        .par_iter()
        .map(|g| hs.iter().map(|h| count_target(g, h)).sum())
        .collect();
    let value = scored.iter().max().cloned()?;
    let mut witnesses = Vec::new();
    let mut witness_total = 0;
    for (g, c) in graphs.iter().zip(&scored) {
        if *c == value {
            witness_total += 1;
            if witnesses.len() < witness_cap {
                witnesses.push(graph6::encode(g));
            }
        }
    }
    Some(OracleResult {
        value,
        witnesses,
        witness_total,
        graphs_enumerated: graphs.len() as u64,
        elapsed: start.elapsed(),
    })
}

/// One level of canonical augmentation. Parents and children are
/// canonically labelled graphs.
fn augment(parents: &[Graph], f: &ForbiddenPattern) -> Result<Vec<Graph>> {
    let per_parent: Vec<BTreeMap<CanonicalForm, Graph>> =
        parents.par_iter().map(|p| children(p, f)).collect();
    let mut merged: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for kids in per_parent {
        for (key, g) in kids {
            if merged.insert(key.clone(), g).is_some() {
                return Err(Error::Consistency(format!(
                    "class {key} generated from two different parents"
                )));
            }
        }
    }
    Ok(merged.into_values().collect())
}

fn children(parent: &Graph, f: &ForbiddenPattern) -> BTreeMap<CanonicalForm, Graph> {
    let k = parent.n();
    let mut kids = BTreeMap::new();
    for mask in 0u64..(1u64 << k) {
        let mut g = parent.disjoint_union(&Graph::empty(1)).expect("small");
        for u in 0..k {
            if mask >> u & 1 == 1 {
                g.set_edge(u, k, true);
            }
        }
        let lab = canonical_labeling(&g);
        if kids.contains_key(&lab.form) {
            continue;
        }
        let last = lab.order[k];
        if !same_orbit(&g, k, last) {
            continue;
        }
        if contains(&g, f) {
            continue;
        }
        let canon = g.relabel(&lab.permutation());
        kids.insert(lab.form, canon);
    }
    kids
}

/// Independent generator: all labelled graphs on `n` vertices, filtered and
/// deduplicated by canonical form. Sorted by canonical form.
pub fn enumerate_free_labeled(n: usize, f: &ForbiddenPattern) -> Result<Vec<Graph>> {
    if n > LABELED_LIMIT {
        return Err(Error::Capacity(format!(
            "labelled enumeration limited to n <= {LABELED_LIMIT}, got n={n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let found: Vec<(CanonicalForm, Graph)> = (0u64..(1u64 << pairs.len()))
        .into_par_iter()
        .filter_map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(n, &edges).expect("valid edges");
            if contains(&g, f) {
                None
            } else {
                let key = canonical_form(&g);
                let canon = key.to_graph();
                Some((key, canon))
            }
        })
        .collect();
    let unique: BTreeMap<CanonicalForm, Graph> = found.into_iter().collect();
    Ok(unique.into_values().collect())
}

pub fn enumerate_free(n: usize, f: &ForbiddenPattern) -> Result<Vec<Graph>> {
    Oracle::default().enumerate_free(n, f)
}

pub fn ex_oracle(n: usize, h: &Graph, f: &ForbiddenPattern) -> Result<OracleResult> {
    Oracle::default().ex(n, h, f)
}

pub fn ex_family_oracle(n: usize, hs: &[Graph], f: &ForbiddenPattern) -> Result<OracleResult> {
    Oracle::default().ex_family(n, hs, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::book;

    #[test]
    fn small_class_counts() {
        let counts: Vec<usize> = (0..=5)
            .map(|n| enumerate_free(n, &ForbiddenPattern::Nothing).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34]);
        assert_eq!(
            enumerate_free(4, &ForbiddenPattern::Clique(3))
                .unwrap()
                .len(),
            7
        );
    }

    #[test]
    fn matches_labeled_generator() {
        for f in [ForbiddenPattern::Nothing, ForbiddenPattern::Clique(3)] {
            for n in 0..=5 {
                let a = enumerate_free(n, &f).unwrap();
                let b = enumerate_free_labeled(n, &f).unwrap();
                assert_eq!(a, b, "n={n} f={f}");
            }
        }
    }

    #[test]
    fn oracle_examples() {
        let r = ex_oracle(5, &Graph::complete(3), &ForbiddenPattern::Clique(4)).unwrap();
        assert_eq!(r.value, 4);
        let w = graph6::decode(&r.witnesses[0]).unwrap();
        assert!(!contains(&w, &ForbiddenPattern::Clique(4)));
        // K_3 ∨ 3K_1 (12 edges) beats K_1 ∨ T(5,2) (11 edges) at n = 6
        let r = ex_oracle(
            6,
            &Graph::complete(2),
            &ForbiddenPattern::Book { r: 3, s: 0 },
        )
        .unwrap();
        assert_eq!(r.value, 12);
        let k3_join = Graph::complete(3).join(&Graph::empty(3)).unwrap();
        assert_eq!(r.witnesses, vec![canonical_form(&k3_join).to_string()]);
        let r = ex_oracle(5, &Graph::complete(1), &ForbiddenPattern::Clique(3)).unwrap();
        assert_eq!(r.value, 5);
        let r = ex_family_oracle(5, &[Graph::complete(6)], &ForbiddenPattern::Nothing).unwrap();
        assert_eq!(r.value, 0);
        assert!(ex_family_oracle(5, &[], &ForbiddenPattern::Nothing).is_err());
    }

    #[test]
    fn limits() {
        let o = Oracle {
            limit: 4,
            witness_cap: 2,
        };
        assert!(matches!(
            o.enumerate_free(5, &ForbiddenPattern::Nothing),
            Err(Error::Capacity(_))
        ));
        let r = o
            .ex(4, &Graph::complete(2), &ForbiddenPattern::Nothing)
            .unwrap();
        assert_eq!((r.value.clone(), r.witnesses.len()), (6u64.into(), 1));
        let r = o
            .ex(4, &Graph::complete(1), &ForbiddenPattern::Nothing)
            .unwrap();
        assert_eq!((r.witnesses.len(), r.witness_total), (2, 11));
        assert!(enumerate_free_labeled(8, &ForbiddenPattern::Nothing).is_err());
    }

    #[test]
    fn pattern_on_empty_graph() {
        // K_0 is contained in every graph, including the empty one
        assert!(enumerate_free(3, &ForbiddenPattern::Clique(0))
            .unwrap()
            .is_empty());
        let bowtie = book(3, 1).unwrap();
        let f = ForbiddenPattern::Explicit(bowtie);
        let free = enumerate_free(5, &f).unwrap();
        assert_eq!(free, enumerate_free_labeled(5, &f).unwrap());
        assert!(free.len() < 34);
    }
}
