//! Theorem verification grids.
//!
//! For each grid point the construction is built and checked against its
//! forbidden pattern, the prediction is evaluated, and for `n` within the
//! oracle limit the exhaustive maximum is compared with it. A prediction
//! above the oracle maximum, or a construction containing its pattern, is an
//! internal inconsistency and aborts the run.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::count::CopyCount;
use crate::error::{Error, Result};
use crate::formula::{f_value, predicted_ex, TheoremCase};
use crate::free::find_witness;
use crate::graph::Graph;
use crate::graph6;
use crate::oracle::{maximize, Oracle, DEFAULT_WITNESS_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Zykov,
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    Krr1,
    FProps,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Zykov,
        Suite::Thm1,
        Suite::Thm2,
        Suite::Thm3,
        Suite::Thm4,
        Suite::Krr1,
        Suite::FProps,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Zykov => "zykov",
            Suite::Thm1 => "thm1",
            Suite::Thm2 => "thm2",
            Suite::Thm3 => "thm3",
            Suite::Thm4 => "thm4",
            Suite::Krr1 => "krr1",
            Suite::FProps => "f_props",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                Error::arg(format!(
                    "unknown suite `{s}`; expected one of zykov, thm1, thm2, thm3, thm4, krr1, f_props"
                ))
            })
    }
}

/// Grid and limits for one verification run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub suite: Suite,
    pub n_min: usize,
    pub n_max: usize,
    pub r_max: usize,
    pub oracle_limit: usize,
    pub witness_cap: usize,
}

impl VerifyConfig {
    /// The default grid of a suite.
    pub fn for_suite(suite: Suite) -> Self {
        let (n_min, n_max, r_max) = match suite {
            Suite::Zykov => (5, 8, 5),
            Suite::Thm1 => (5, 8, 4),
            Suite::Thm2 => (5, 8, 5),
            Suite::Thm3 => (5, 8, 4),
            Suite::Thm4 => (5, 8, 3),
            Suite::Krr1 => (6, 8, 4),
            Suite::FProps => (1, 30, 7),
        };
        VerifyConfig {
            suite,
            n_min,
            n_max,
            r_max,
            oracle_limit: 8,
            witness_cap: DEFAULT_WITNESS_CAP,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n_min > self.n_max {
            return Err(Error::arg(format!(
                "empty n range {}..={}",
                self.n_min, self.n_max
            )));
        }
        if self.r_max < 3 {
            return Err(Error::arg("r_max must be at least 3"));
        }
        Ok(())
    }

    /// Grid points in report order.
    pub fn cases(&self) -> Vec<TheoremCase> {
        let ns = self.n_min..=self.n_max;
        let rs = 3..=self.r_max;
        let mut out = Vec::new();
        match self.suite {
            Suite::Zykov => {
                for r in rs {
                    for k in 2..r {
                        out.extend(ns.clone().map(|n| TheoremCase::Zykov { n, k, r }));
                    }
                }
            }
            Suite::Thm1 => {
                for r in rs {
                    for k in 2..r {
                        out.extend(ns.clone().map(|n| TheoremCase::Thm1I { n, k, r }));
                    }
                    for k in r..2 * r {
                        out.extend(ns.clone().map(|n| TheoremCase::Thm1Ii { n, k, r }));
                    }
                    out.extend(ns.clone().map(|n| TheoremCase::MoonEdges { n, k: 2, r }));
                }
            }
            Suite::Thm2 => {
                for r in rs {
                    for s in 1..r {
                        for t in (1..).take_while(|t| t + s < r) {
                            out.extend(ns.clone().map(|n| TheoremCase::Thm2Lower { n, r, s, t }));
                        }
                    }
                    for t in (1..).take_while(|t| t + 3 < r) {
                        out.extend(ns.clone().map(|n| TheoremCase::Thm2Iii { n, r, t }));
                    }
                }
            }
            Suite::Thm3 => {
                for r in rs {
                    for k in 2..r {
                        out.extend(ns.clone().map(|n| TheoremCase::Thm3 { n, k, r }));
                    }
                    out.extend(ns.clone().map(|n| TheoremCase::BR1Edges { n, r }));
                }
            }
            Suite::Thm4 => {
                for b in 1..=self.r_max {
                    for a in 1..=b {
                        out.extend(ns.clone().map(|n| TheoremCase::Thm4 { n, a, b }));
                    }
                }
            }
            Suite::Krr1 => {
                for r in rs {
                    out.extend(ns.clone().map(|n| TheoremCase::PropKrr1 { n, r }));
                }
            }
            Suite::FProps => {}
        }
        out.retain(|c| c.validate().is_ok());
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Equal,
    OracleGreater,
    PredictedGreater,
    OracleSkipped,
}

impl Relation {
    pub fn name(&self) -> &'static str {
        match self {
            Relation::Equal => "equal",
            Relation::OracleGreater => "oracle_greater",
            Relation::PredictedGreater => "predicted_greater",
            Relation::OracleSkipped => "oracle_skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub case: TheoremCase,
    pub forbidden: String,
    pub construction: String,
    pub predicted: CopyCount,
    pub oracle: Option<CopyCount>,
    pub relation: Relation,
    pub witnesses: Vec<String>,
    pub graphs_enumerated: Option<u64>,
}

/// One superadditivity check `f(n1) + f(n2) <= f(n1 + n2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropRow {
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub n1: usize,
    pub n2: usize,
    pub f_n1: CopyCount,
    pub f_n2: CopyCount,
    pub f_sum: CopyCount,
    pub holds: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub rows: usize,
    pub equal: usize,
    pub oracle_greater: usize,
    pub predicted_greater: usize,
    pub oracle_skipped: usize,
    pub props_checked: usize,
    pub props_failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub rows: Vec<Row>,
    pub props: Vec<PropRow>,
    pub summary: Summary,
}

/// Runs one suite. Deterministic: the report depends only on `config`.
pub fn verify(config: &VerifyConfig) -> Result<VerifyReport> {
    config.validate()?;
    let oracle = Oracle {
        limit: config.oracle_limit,
        witness_cap: config.witness_cap,
    };
    // enumerations shared by rows with the same n and pattern
    let mut classes: BTreeMap<(usize, String), Vec<Graph>> = BTreeMap::new();
    let mut rows = Vec::new();
    for case in config.cases() {
        let p = predicted_ex(case)?;
        let construction = graph6::encode(&p.construction);
        if let Some(w) = find_witness(&p.construction, &p.forbidden) {
            return Err(Error::Consistency(format!(
                "construction for {} contains {} on {w:?}; case {}, graph {construction}",
                case.id(),
                p.forbidden,
                serde_json::to_string(&case).unwrap_or_default()
            )));
        }
        let n = case.n();
        let mut row = Row {
            case,
            forbidden: p.forbidden.key(),
            construction,
            predicted: p.value.clone(),
            oracle: None,
            relation: Relation::OracleSkipped,
            witnesses: Vec::new(),
            graphs_enumerated: None,
        };
        if n <= config.oracle_limit {
            let key = (n, p.forbidden.key());
            if !classes.contains_key(&key) {
                classes.insert(key.clone(), oracle.enumerate_free(n, &p.forbidden)?);
            }
            let graphs = &classes[&key];
            let best = maximize(graphs, &p.targets, config.witness_cap).ok_or_else(|| {
                Error::Consistency(format!("no {n}-vertex graph avoids {}", p.forbidden))
            })?;
            row.relation = match p.value.cmp(&best.value) {
                std::cmp::Ordering::Equal => Relation::Equal,
                std::cmp::Ordering::Less => Relation::OracleGreater,
                std::cmp::Ordering::Greater => {
                    return Err(Error::Consistency(format!(
                        "predicted {} exceeds exhaustive maximum {} for case {}; construction {}",
                        p.value,
                        best.value,
                        serde_json::to_string(&case).unwrap_or_default(),
                        row.construction
                    )))
                }
            };
            row.oracle = Some(best.value);
            row.witnesses = best.witnesses;
            row.graphs_enumerated = Some(best.graphs_enumerated);
        }
        rows.push(row);
    }
    let props = if config.suite == Suite::FProps {
        superadditivity(config.r_max, config.n_max)?
    } else {
        Vec::new()
    };
    let mut summary = Summary {
        rows: rows.len(),
        props_checked: props.len(),
        props_failed: props.iter().filter(|p| !p.holds).count(),
        ..Summary::default()
    };
    for r in &rows {
        match r.relation {
            Relation::Equal => summary.equal += 1,
            Relation::OracleGreater => summary.oracle_greater += 1,
            Relation::PredictedGreater => summary.predicted_greater += 1,
            Relation::OracleSkipped => summary.oracle_skipped += 1,
        }
    }
    Ok(VerifyReport {
        config: config.clone(),
        rows,
        props,
        summary,
    })
}

/// `f(n1) + f(n2) <= f(n1 + n2)` for `r <= r_max`, `s + t + 1 < r` and all
/// valid `n1 <= n2 <= n_max`.
pub fn superadditivity(r_max: usize, n_max: usize) -> Result<Vec<PropRow>> {
    let mut out = Vec::new();
    for r in 3..=r_max {
        for s in 0..r {
            for t in 0..r {
                if s + t + 1 >= r {
                    continue;
                }
                let lo = 2 * t + s + 2;
                for n1 in lo..=n_max {
                    for n2 in n1..=n_max {
                        let f_n1 = f_value(n1, r, s, t)?;
                        let f_n2 = f_value(n2, r, s, t)?;
                        let f_sum = f_value(n1 + n2, r, s, t)?;
                        let holds = &f_n1 + &f_n2 <= f_sum;
                        out.push(PropRow {
                            r,
                            s,
                            t,
                            n1,
                            n2,
                            f_n1,
                            f_n2,
                            f_sum,
                            holds,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `k=v` pairs of a case, without its id.
pub fn case_params(c: &TheoremCase) -> String {
    let v = serde_json::to_value(c).unwrap_or_default();
    let mut parts = Vec::new();
    if let Some(obj) = v.as_object() {
        for (k, x) in obj {
            if k != "id" {
                parts.push(format!("{k}={x}"));
            }
        }
    }
    parts.join(" ")
}

impl VerifyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# Verification: {}\n", self.config.suite.name());
        if !self.rows.is_empty() {
            s.push_str("| case | params | forbidden | predicted | oracle | relation | witness |\n");
            s.push_str("|---|---|---|---|---|---|---|\n");
            for r in &self.rows {
                let _ = writeln!(
                    s,
                    "| {} | {} | {} | {} | {} | {} | {} |",
                    r.case.id(),
                    case_params(&r.case),
                    r.forbidden,
                    r.predicted,
                    r.oracle.as_ref().map_or("-".to_string(), |o| o.to_string()),
                    r.relation.name(),
                    r.witnesses.first().map_or("-", String::as_str)
                );
            }
        }
        if !self.props.is_empty() {
            let _ = writeln!(
                s,
                "Superadditivity: {} checks, {} failures.",
                self.props.len(),
                self.summary.props_failed
            );
            for p in self.props.iter().filter(|p| !p.holds) {
                let _ = writeln!(
                    s,
                    "- fails at r={} s={} t={} n1={} n2={}",
                    p.r, p.s, p.t, p.n1, p.n2
                );
            }
        }
        let m = &self.summary;
        let _ = writeln!(
            s,
            "\nrows: {}, equal: {}, oracle_greater: {}, predicted_greater: {}, oracle_skipped: {}",
            m.rows, m.equal, m.oracle_greater, m.predicted_greater, m.oracle_skipped
        );
        s
    }
}
