//! Predicted extremal values.
//!
//! Every prediction is computed by building the extremal construction and
//! counting the target on it. [`cliques_in_turan`] and [`f_value`] are the
//! only closed forms and serve as cross-checks.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::construct::{clique_join_turan, complete_bipartite, turan, turan_plus, PartSizes};
use crate::count::{count_target, exact, CopyCount, Tally};
use crate::error::{Error, Result};
use crate::free::ForbiddenPattern;
use crate::graph::Graph;

/// Elementary symmetric polynomial of degree `k` in `parts`.
fn elementary<T: Tally>(parts: &[usize], k: usize) -> Option<T> {
    let mut e = vec![T::zero(); k + 1];
    e[0] = T::from_u64(1);
    for &p in parts {
        let p = T::from_u64(p as u64);
        for j in (1..=k).rev() {
            e[j] = e[j].add(&e[j - 1].mul(&p)?)?;
        }
    }
    Some(e.swap_remove(k))
}

/// `N(K_k, T(n, r))`: sum over `k`-sets of parts of the product of part
/// sizes.
pub fn cliques_in_turan(n: usize, r: usize, k: usize) -> Result<CopyCount> {
    let parts = PartSizes::balanced(n, r)?;
    let parts = parts.as_slice();
    Ok(exact(
        || elementary::<u128>(parts, k),
        || elementary::<BigUint>(parts, k).expect("bigint"),
    ))
}

/// `f_{r,s,t}(n) = prod_{i=0}^{r-s-t-2} floor((n-s-2t-1+i)/(r-s-t-1))`,
/// the number of `K_{r+t}` in `K_{s+2t+1} ∨ T(n-s-2t-1, r-s-t-1)`.
pub fn f_value(n: usize, r: usize, s: usize, t: usize) -> Result<CopyCount> {
    if r <= s + t + 1 {
        return Err(Error::arg(format!(
            "f needs r > s + t + 1, got r={r}, s={s}, t={t}"
        )));
    }
    if n <= 2 * t + s + 1 {
        return Err(Error::arg(format!(
            "f needs n > 2t + s + 1, got n={n}, s={s}, t={t}"
        )));
    }
    let q = r - s - t - 1;
    let base = n - s - 2 * t - 1;
    let factors: Vec<u64> = (0..q).map(|i| ((base + i) / q) as u64).collect();
    let prod = |acc: Option<u128>, x: &u64| acc?.checked_mul(*x as u128);
    Ok(exact(
        || factors.iter().fold(Some(1u128), prod),
        || factors.iter().fold(BigUint::from(1u8), |acc, &x| acc * x),
    ))
}

/// A statement whose right-hand side can be evaluated on a construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "id")]
pub enum TheoremCase {
    /// `ex(n, K_k, 2K_r) = N(K_k, K_1 ∨ T(n-1, r-1))` for `k < r`.
    #[serde(rename = "THM1_I")]
    Thm1I { n: usize, k: usize, r: usize },
    /// `ex(n, {K_k..K_{2r-1}}, 2K_r) = N(K_k, K_{2k-2r+1} ∨ T(n-2k+2r-1, 2r-k-1))`
    /// for `r <= k < 2r`.
    #[serde(rename = "THM1_II")]
    Thm1Ii { n: usize, k: usize, r: usize },
    /// Lower-bound construction `K_{s+2t+1} ∨ T(n-s-2t-1, r-s-t-1)` for
    /// `K_{r+t}` in `B_{r,s}`-free graphs.
    #[serde(rename = "THM2_LOWER")]
    Thm2Lower {
        n: usize,
        r: usize,
        s: usize,
        t: usize,
    },
    /// `ex(n, K_{r+t}, B_{r,1}) = N(K_{r+t}, K_{2t+2} ∨ T(n-2t-2, r-t-2))`.
    #[serde(rename = "THM2_III")]
    Thm2Iii { n: usize, r: usize, t: usize },
    /// `ex(n, K_k, B_{r,1}) = N(K_k, T⁺(n, r-1))` for `k < r`.
    #[serde(rename = "THM3")]
    Thm3 { n: usize, k: usize, r: usize },
    /// `ex(n, K_{a,b}, B_{3,1})`, best complete bipartite graph plus an edge.
    #[serde(rename = "THM4")]
    Thm4 { n: usize, a: usize, b: usize },
    /// `ex(n, K_k, K_r) = N(K_k, T(n, r-1))`.
    #[serde(rename = "ZYKOV")]
    Zykov { n: usize, k: usize, r: usize },
    /// `ex(n, kK_r) = |E(K_{k-1} ∨ T(n-k+1, r-1))|`.
    #[serde(rename = "MOON_EDGES")]
    MoonEdges { n: usize, k: usize, r: usize },
    /// `ex(n, K_{r-1}, K_r + K_{r-1}) = N(K_{r-1}, T(n, r-1))`.
    #[serde(rename = "PROP_KRR1")]
    PropKrr1 { n: usize, r: usize },
    /// `ex(n, B_{r,1}) = |E(T(n, r-1))| + 1`.
    #[serde(rename = "B_R1_EDGES")]
    BR1Edges { n: usize, r: usize },
}

fn need(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::arg(format!("parameter constraint violated: {what}")))
    }
}

/// `K_m ∨ T(n - m, q)`; with `q = 0` the remaining vertices are isolated.
fn apex_construction(m: usize, q: usize, n: usize) -> Result<Graph> {
    if q == 0 {
        if n < m {
            return Err(Error::arg(format!("clique of size {m} exceeds n={n}")));
        }
        Graph::complete(m).disjoint_union(&Graph::try_empty(n - m)?)
    } else {
        clique_join_turan(m, q, n)
    }
}

impl TheoremCase {
    pub fn id(&self) -> &'static str {
        match self {
            TheoremCase::Thm1I { .. } => "THM1_I",
            TheoremCase::Thm1Ii { .. } => "THM1_II",
            TheoremCase::Thm2Lower { .. } => "THM2_LOWER",
            TheoremCase::Thm2Iii { .. } => "THM2_III",
            TheoremCase::Thm3 { .. } => "THM3",
            TheoremCase::Thm4 { .. } => "THM4",
            TheoremCase::Zykov { .. } => "ZYKOV",
            TheoremCase::MoonEdges { .. } => "MOON_EDGES",
            TheoremCase::PropKrr1 { .. } => "PROP_KRR1",
            TheoremCase::BR1Edges { .. } => "B_R1_EDGES",
        }
    }

    pub fn n(&self) -> usize {
        match *self {
            TheoremCase::Thm1I { n, .. }
            | TheoremCase::Thm1Ii { n, .. }
            | TheoremCase::Thm2Lower { n, .. }
            | TheoremCase::Thm2Iii { n, .. }
            | TheoremCase::Thm3 { n, .. }
            | TheoremCase::Thm4 { n, .. }
            | TheoremCase::Zykov { n, .. }
            | TheoremCase::MoonEdges { n, .. }
            | TheoremCase::PropKrr1 { n, .. }
            | TheoremCase::BR1Edges { n, .. } => n,
        }
    }

    /// Checks the parameter constraints of the statement.
    pub fn validate(&self) -> Result<()> {
        match *self {
            TheoremCase::Thm1I { n, k, r } => {
                need(k >= 1 && k < r, "THM1_I needs 1 <= k < r")?;
                need(n >= 1, "THM1_I needs n >= 1")
            }
            TheoremCase::Thm1Ii { n, k, r } => {
                need(r >= 1 && r <= k && k < 2 * r, "THM1_II needs r <= k < 2r")?;
                need(n + 2 * r > 2 * k, "THM1_II needs n >= 2k - 2r + 1")
            }
            TheoremCase::Thm2Lower { n, r, s, t } => {
                need(r >= 3, "THM2_LOWER needs r >= 3")?;
                need(s >= 1 && s < r, "THM2_LOWER needs 1 <= s <= r - 1")?;
                need(t >= 1 && t + s < r, "THM2_LOWER needs 1 <= t < r - s")?;
                need(n > s + 2 * t, "THM2_LOWER needs n >= s + 2t + 1")
            }
            TheoremCase::Thm2Iii { n, r, t } => {
                need(t >= 1 && t + 3 < r, "THM2_III needs t >= 1 and t + 3 < r")?;
                need(n >= 2 * t + 2, "THM2_III needs n >= 2t + 2")
            }
            TheoremCase::Thm3 { n, k, r } => {
                need(k >= 1 && k < r, "THM3 needs 1 <= k < r")?;
                need(r >= 3, "THM3 needs r >= 3")?;
                need(
                    n >= r,
                    "THM3 needs n >= r so that T(n, r-1) has a part of size 2",
                )
            }
            TheoremCase::Thm4 { n, a, b } => {
                need(a >= 1 && a <= b, "THM4 needs 1 <= a <= b")?;
                need(n >= a + b, "THM4 needs n >= a + b")
            }
            TheoremCase::Zykov { k, r, .. } => need(k >= 1 && k < r, "ZYKOV needs 1 <= k < r"),
            TheoremCase::MoonEdges { n, k, r } => {
                need(k >= 1, "MOON_EDGES needs k >= 1")?;
                need(r >= 2, "MOON_EDGES needs r >= 2")?;
                need(n + 1 >= k, "MOON_EDGES needs n >= k - 1")
            }
            TheoremCase::PropKrr1 { r, .. } => need(r >= 3, "PROP_KRR1 needs r >= 3"),
            TheoremCase::BR1Edges { n, r } => {
                need(r >= 3, "B_R1_EDGES needs r >= 3")?;
                need(n >= r, "B_R1_EDGES needs n >= r")
            }
        }
    }

    /// The forbidden pattern `F` of the statement.
    pub fn forbidden(&self) -> ForbiddenPattern {
        match *self {
            TheoremCase::Thm1I { r, .. } | TheoremCase::Thm1Ii { r, .. } => {
                ForbiddenPattern::Book { r, s: 0 }
            }
            TheoremCase::Thm2Lower { r, s, .. } => ForbiddenPattern::Book { r, s },
            TheoremCase::Thm2Iii { r, .. }
            | TheoremCase::Thm3 { r, .. }
            | TheoremCase::BR1Edges { r, .. } => ForbiddenPattern::Book { r, s: 1 },
            TheoremCase::Thm4 { .. } => ForbiddenPattern::Book { r: 3, s: 1 },
            TheoremCase::Zykov { r, .. } => ForbiddenPattern::Clique(r),
            TheoremCase::MoonEdges { k, r, .. } => ForbiddenPattern::DisjointCliques { k, r },
            TheoremCase::PropKrr1 { r, .. } => {
                ForbiddenPattern::UnionPair(Graph::complete(r), Graph::complete(r - 1))
            }
        }
    }

    /// The counted graphs; the prediction is the sum of their counts.
    pub fn targets(&self) -> Vec<Graph> {
        match *self {
            TheoremCase::Thm1I { k, .. }
            | TheoremCase::Thm3 { k, .. }
            | TheoremCase::Zykov { k, .. } => vec![Graph::complete(k)],
            TheoremCase::Thm1Ii { k, r, .. } => (k..2 * r).map(Graph::complete).collect(),
            TheoremCase::Thm2Lower { r, t, .. } | TheoremCase::Thm2Iii { r, t, .. } => {
                vec![Graph::complete(r + t)]
            }
            TheoremCase::Thm4 { a, b, .. } => vec![complete_bipartite(a, b)],
            TheoremCase::MoonEdges { .. } | TheoremCase::BR1Edges { .. } => {
                vec![Graph::complete(2)]
            }
            TheoremCase::PropKrr1 { r, .. } => vec![Graph::complete(r - 1)],
        }
    }

    /// The extremal construction on `n` vertices.
    pub fn construction(&self) -> Result<Graph> {
        self.validate()?;
        match *self {
            TheoremCase::Thm1I { n, r, .. } => clique_join_turan(1, r - 1, n),
            TheoremCase::Thm1Ii { n, k, r } => {
                apex_construction(2 * k - 2 * r + 1, 2 * r - k - 1, n)
            }
            TheoremCase::Thm2Lower { n, r, s, t } => {
                apex_construction(s + 2 * t + 1, r - s - t - 1, n)
            }
            TheoremCase::Thm2Iii { n, r, t } => clique_join_turan(2 * t + 2, r - t - 2, n),
            TheoremCase::Thm3 { n, r, .. } | TheoremCase::BR1Edges { n, r } => turan_plus(n, r - 1),
            TheoremCase::Thm4 { n, a, b } => Ok(best_bipartite_plus_edge(n, a, b)?.graph()),
            TheoremCase::Zykov { n, r, .. } | TheoremCase::PropKrr1 { n, r } => turan(n, r - 1),
            TheoremCase::MoonEdges { n, k, r } => clique_join_turan(k - 1, r - 1, n),
        }
    }
}

/// A construction-backed prediction.
#[derive(Clone, Debug)]
pub struct Prediction {
    pub case: TheoremCase,
    pub value: CopyCount,
    pub construction: Graph,
    pub forbidden: ForbiddenPattern,
    pub targets: Vec<Graph>,
}

/// Builds the construction of `case` and counts its targets on it.
pub fn predicted_ex(case: TheoremCase) -> Result<Prediction> {
    let construction = case.construction()?;
    let targets = case.targets();
    let value = targets.iter().map(|h| count_target(&construction, h)).sum();
    Ok(Prediction {
        case,
        value,
        construction,
        forbidden: case.forbidden(),
        targets,
    })
}

/// Which part of `K_{m, n-m}` receives the extra edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    First,
    Second,
}

/// Outcome of [`best_bipartite_plus_edge`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteChoice {
    pub n: usize,
    pub m: usize,
    pub side: Side,
    pub value: CopyCount,
}

impl BipartiteChoice {
    /// `K_{m, n-m}` with the extra edge on the two lowest vertices of the
    /// chosen part.
    pub fn graph(&self) -> Graph {
        let (u, v) = match self.side {
            Side::First => (0, 1),
            Side::Second => (self.m, self.m + 1),
        };
        complete_bipartite(self.m, self.n - self.m)
            .with_edge(u, v)
            .expect("chosen part has two vertices")
    }
}

/// Maximizes `N(K_{a,b}, K_{m,n-m} + e)` over `m` in `1..n` and the part
/// hosting `e`. Ties go to the smallest `m`, then to the first part.
pub fn best_bipartite_plus_edge(n: usize, a: usize, b: usize) -> Result<BipartiteChoice> {
    if a == 0 || a > b {
        return Err(Error::arg(format!("need 1 <= a <= b, got a={a}, b={b}")));
    }
    if n < a + b {
        return Err(Error::Infeasible(format!(
            "K_{{{a},{b}}} does not fit in {n} vertices"
        )));
    }
    let h = complete_bipartite(a, b);
    let mut options: Vec<(usize, Side)> = Vec::new();
    for m in 1..n {
        if m >= 2 {
            options.push((m, Side::First));
        }
        if n - m >= 2 {
            options.push((m, Side::Second));
        }
    }
    let scored: Vec<BipartiteChoice> = options
        .into_par_iter()
        .map(|(m, side)| {
            let mut c = BipartiteChoice {
                n,
                m,
                side,
                value: CopyCount::zero(),
            };
            c.value = count_target(&c.graph(), &h);
            c
        })
        .collect();
    // options are in (m, side) order, so the first maximum wins ties
    scored
        .into_iter()
        .reduce(|best, c| if c.value > best.value { c } else { best })
        .ok_or_else(|| Error::Infeasible(format!("no bipartite split of {n} vertices")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::count_cliques;
    use crate::free::contains;

    #[test]
    fn turan_clique_examples() {
        assert_eq!(cliques_in_turan(6, 3, 3).unwrap(), 8);
        assert_eq!(cliques_in_turan(5, 2, 2).unwrap(), 6);
        assert_eq!(cliques_in_turan(9, 3, 4).unwrap(), 0);
        assert_eq!(cliques_in_turan(9, 3, 0).unwrap(), 1);
        assert!(cliques_in_turan(3, 0, 1).is_err());
    }

    #[test]
    fn f_examples() {
        assert_eq!(f_value(10, 5, 1, 1).unwrap(), 9);
        assert_eq!(f_value(10, 4, 1, 1).unwrap(), 6);
        let err = f_value(10, 3, 1, 1).unwrap_err().to_string();
        assert!(err.contains("r > s + t + 1"), "{err}");
        let err = f_value(4, 6, 1, 1).unwrap_err().to_string();
        assert!(err.contains("n > 2t + s + 1"), "{err}");
    }

    #[test]
    fn f_matches_construction() {
        for r in 3..=7 {
            for s in 0..r {
                for t in 0..r {
                    if r <= s + t + 1 {
                        continue;
                    }
                    for n in (2 * t + s + 2)..=(2 * t + s + 14) {
                        let g = clique_join_turan(s + 2 * t + 1, r - s - t - 1, n).unwrap();
                        assert_eq!(
                            count_cliques(&g, r + t),
                            f_value(n, r, s, t).unwrap(),
                            "n={n} r={r} s={s} t={t}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn prediction_examples() {
        let v = |c| predicted_ex(c).unwrap().value;
        assert_eq!(v(TheoremCase::Thm1I { n: 7, k: 2, r: 3 }), 15);
        assert_eq!(v(TheoremCase::Thm3 { n: 7, k: 2, r: 3 }), 13);
        assert_eq!(v(TheoremCase::Thm2Iii { n: 10, r: 5, t: 1 }), 9);
        assert_eq!(v(TheoremCase::Thm1Ii { n: 7, k: 3, r: 3 }), 9);
        assert_eq!(v(TheoremCase::Zykov { n: 6, k: 3, r: 4 }), 8);
        assert_eq!(v(TheoremCase::MoonEdges { n: 7, k: 2, r: 3 }), 15);
        assert_eq!(v(TheoremCase::BR1Edges { n: 7, r: 3 }), 13);
        assert_eq!(v(TheoremCase::PropKrr1 { n: 7, r: 3 }), 12);
        assert!(predicted_ex(TheoremCase::Thm1I { n: 7, k: 3, r: 3 }).is_err());
        assert!(predicted_ex(TheoremCase::Thm2Iii { n: 10, r: 4, t: 1 }).is_err());
    }

    #[test]
    fn constructions_avoid_their_pattern() {
        let cases = [
            TheoremCase::Thm1I { n: 9, k: 2, r: 3 },
            TheoremCase::Thm1Ii { n: 9, k: 4, r: 3 },
            TheoremCase::Thm1Ii { n: 9, k: 5, r: 3 },
            TheoremCase::Thm2Lower {
                n: 12,
                r: 5,
                s: 2,
                t: 1,
            },
            TheoremCase::Thm2Lower {
                n: 12,
                r: 5,
                s: 2,
                t: 2,
            },
            TheoremCase::Thm2Iii { n: 12, r: 5, t: 1 },
            TheoremCase::Thm3 { n: 9, k: 3, r: 4 },
            TheoremCase::Thm4 { n: 9, a: 2, b: 3 },
            TheoremCase::Zykov { n: 9, k: 2, r: 4 },
            TheoremCase::MoonEdges { n: 9, k: 3, r: 3 },
            TheoremCase::PropKrr1 { n: 9, r: 4 },
            TheoremCase::BR1Edges { n: 9, r: 4 },
        ];
        for c in cases {
            let p = predicted_ex(c).unwrap();
            assert_eq!(p.construction.n(), c.n());
            assert!(!contains(&p.construction, &p.forbidden), "{c:?}");
        }
    }

    #[test]
    fn zykov_is_turan_cliques() {
        for n in 0..15 {
            for r in 2..6 {
                for k in 1..r {
                    assert_eq!(
                        predicted_ex(TheoremCase::Zykov { n, k, r }).unwrap().value,
                        cliques_in_turan(n, r - 1, k).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn bipartite_examples() {
        let c = best_bipartite_plus_edge(8, 2, 2).unwrap();
        assert_eq!((c.m, c.value.clone()), (4, 36u64.into()));
        let c = best_bipartite_plus_edge(6, 1, 1).unwrap();
        assert_eq!(
            (c.m, c.side, c.value.clone()),
            (3, Side::First, 10u64.into())
        );
        let c = best_bipartite_plus_edge(8, 1, 2).unwrap();
        assert_eq!((c.m, c.value.clone()), (4, 56u64.into()));
        assert!(matches!(
            best_bipartite_plus_edge(3, 2, 2),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn case_json_uses_ids() {
        let c = TheoremCase::Thm2Iii { n: 10, r: 5, t: 1 };
        let j = serde_json::to_string(&c).unwrap();
        assert_eq!(j, r#"{"id":"THM2_III","n":10,"r":5,"t":1}"#);
        assert_eq!(serde_json::from_str::<TheoremCase>(&j).unwrap(), c);
    }
}
