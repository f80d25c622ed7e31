//! Text specifications of graphs and forbidden patterns.
//!
//! Graphs: `clique:k`, `empty:n`, `path:n`, `cycle:n`, `biclique:a,b`,
//! `multipartite:a,b,..`, `turan:n,r`, `turan-plus:n,r`, `book:r,s`,
//! `kcliques:k,r`, `join-turan:m,q,n`, `edges:n:u-v,u-v,..`, `g6:<graph6>`.
//! A string without a recognised prefix is read as graph6.
//!
//! Patterns: `clique:r`, `book:r,s`, `kcliques:k,r`, `union:<graph>+<graph>`,
//! `nothing`; any other graph spec is an explicit pattern.

use crate::construct::{
    book, clique_join_turan, complete_bipartite, complete_multipartite, disjoint_cliques, turan,
    turan_plus,
};
use crate::error::{Error, Result};
use crate::free::ForbiddenPattern;
use crate::graph::Graph;
use crate::graph6;

fn numbers(s: &str, want: usize, what: &str) -> Result<Vec<usize>> {
    let out: Vec<usize> = s
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| Error::arg(format!("`{x}` is not a count in `{what}`")))
        })
        .collect::<Result<_>>()?;
    if want > 0 && out.len() != want {
        return Err(Error::arg(format!(
            "`{what}` needs {want} comma-separated values"
        )));
    }
    Ok(out)
}

fn edge_list(n: &str, list: &str) -> Result<Graph> {
    let n: usize = n
        .trim()
        .parse()
        .map_err(|_| Error::arg(format!("`{n}` is not a vertex count")))?;
    let mut edges = Vec::new();
    for e in list.split(',').map(str::trim).filter(|e| !e.is_empty()) {
        let (u, v) = e
            .split_once('-')
            .ok_or_else(|| Error::arg(format!("edge `{e}` is not of the form u-v")))?;
        let parse = |x: &str| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| Error::arg(format!("`{x}` is not a vertex")))
        };
        edges.push((parse(u)?, parse(v)?));
    }
    Graph::from_edges(n, &edges)
}

/// Parses a graph specification.
pub fn parse_graph(spec: &str) -> Result<Graph> {
    let spec = spec.trim();
    let Some((kind, args)) = spec.split_once(':') else {
        return graph6::decode(spec);
    };
    let one = |what| numbers(args, 1, what).map(|v| v[0]);
    let two = |what| numbers(args, 2, what).map(|v| (v[0], v[1]));
    match kind {
        "g6" => graph6::decode(args),
        "clique" | "K" => Ok(Graph::complete(one(spec)?)),
        "empty" => Graph::try_empty(one(spec)?),
        "path" => Ok(Graph::path(one(spec)?)),
        "cycle" => Ok(Graph::cycle(one(spec)?)),
        "biclique" => {
            let (a, b) = two(spec)?;
            Ok(complete_bipartite(a, b))
        }
        "multipartite" => complete_multipartite(&numbers(args, 0, spec)?),
        "turan" => {
            let (n, r) = two(spec)?;
            turan(n, r)
        }
        "turan-plus" => {
            let (n, r) = two(spec)?;
            turan_plus(n, r)
        }
        "book" => {
            let (r, s) = two(spec)?;
            book(r, s)
        }
        "kcliques" => {
            let (k, r) = two(spec)?;
            disjoint_cliques(k, r)
        }
        "join-turan" => {
            let v = numbers(args, 3, spec)?;
            clique_join_turan(v[0], v[1], v[2])
        }
        "edges" => {
            let (n, list) = args.split_once(':').unwrap_or((args, ""));
            edge_list(n, list)
        }
        _ => graph6::decode(spec),
    }
}

/// Parses a forbidden-pattern specification.
pub fn parse_pattern(spec: &str) -> Result<ForbiddenPattern> {
    let spec = spec.trim();
    if spec == "nothing" {
        return Ok(ForbiddenPattern::Nothing);
    }
    let (kind, args) = spec.split_once(':').unwrap_or((spec, ""));
    match kind {
        "clique" | "K" => Ok(ForbiddenPattern::Clique(numbers(args, 1, spec)?[0])),
        "book" => {
            let v = numbers(args, 2, spec)?;
            Ok(ForbiddenPattern::Book { r: v[0], s: v[1] })
        }
        "kcliques" => {
            let v = numbers(args, 2, spec)?;
            Ok(ForbiddenPattern::DisjointCliques { k: v[0], r: v[1] })
        }
        "union" => {
            let (a, b) = args
                .split_once('+')
                .ok_or_else(|| Error::arg(format!("`{spec}` needs two graphs joined by `+`")))?;
            Ok(ForbiddenPattern::UnionPair(
                parse_graph(a)?,
                parse_graph(b)?,
            ))
        }
        _ => Ok(ForbiddenPattern::Explicit(parse_graph(spec)?)),
    }
}

/// Graph specs separated by `;`.
pub fn parse_graph_list(spec: &str) -> Result<Vec<Graph>> {
    spec.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(parse_graph)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graphs() {
        assert_eq!(parse_graph("clique:4").unwrap(), Graph::complete(4));
        assert_eq!(parse_graph("Bw").unwrap(), Graph::complete(3));
        assert_eq!(parse_graph("g6:Bw").unwrap(), Graph::complete(3));
        assert_eq!(parse_graph("turan:6,3").unwrap().edge_count(), 12);
        assert_eq!(parse_graph("book:3,1").unwrap().edge_count(), 6);
        assert_eq!(parse_graph("join-turan:1,2,7").unwrap().edge_count(), 15);
        assert_eq!(parse_graph("multipartite:1,2,3").unwrap().edge_count(), 11);
        assert_eq!(
            parse_graph("edges:4:0-1,2-3").unwrap(),
            Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()
        );
        assert_eq!(parse_graph("edges:3").unwrap(), Graph::empty(3));
        assert!(parse_graph("turan:6").is_err());
        assert!(parse_graph("clique:x").is_err());
        assert!(parse_graph("edges:3:0-5").is_err());
    }

    #[test]
    fn patterns() {
        assert_eq!(
            parse_pattern("clique:3").unwrap(),
            ForbiddenPattern::Clique(3)
        );
        assert_eq!(
            parse_pattern("book:3,1").unwrap(),
            ForbiddenPattern::Book { r: 3, s: 1 }
        );
        assert_eq!(parse_pattern("nothing").unwrap(), ForbiddenPattern::Nothing);
        let u = parse_pattern("union:clique:3+clique:2").unwrap();
        assert_eq!(u.key(), "cliques:3,2");
        assert!(parse_pattern("cycle:5").unwrap().key().starts_with("g6:"));
        assert_eq!(parse_graph_list("clique:3; clique:4").unwrap().len(), 2);
    }
}
