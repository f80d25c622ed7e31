mod common;

use common::{from_bits, naive_contains, naive_copies};
use gturan::construct::complete_bipartite;
use gturan::free::ForbiddenPattern;
use gturan::oracle::{ex_family_oracle, ex_oracle, Oracle};
use gturan::Graph;

/// max over all labeled `f`-free graphs on `n` vertices of the copies of `h`.
fn brute_ex(n: usize, h: &Graph, f: &Graph) -> u64 {
    let m = n * n.saturating_sub(1) / 2;
    (0u32..1 << m)
        .map(|mask| from_bits(n, &(0..m).map(|i| mask >> i & 1 == 1).collect::<Vec<_>>()))
        .filter(|g| !naive_contains(g, f))
        .map(|g| naive_copies(&g, h))
        .max()
        .unwrap()
}

#[test]
fn oracle_matches_labeled_brute_force() {
    let cases = [
        (Graph::complete(2), ForbiddenPattern::Clique(3)),
        (Graph::complete(3), ForbiddenPattern::Clique(4)),
        (Graph::path(3), ForbiddenPattern::Clique(3)),
        (Graph::complete(2), ForbiddenPattern::Book { r: 3, s: 1 }),
        (Graph::complete(3), ForbiddenPattern::Book { r: 3, s: 1 }),
        (
            complete_bipartite(2, 2),
            ForbiddenPattern::Book { r: 3, s: 1 },
        ),
        (
            Graph::complete(2),
            ForbiddenPattern::Explicit(Graph::cycle(4)),
        ),
    ];
    for n in 1..=5 {
        for (h, f) in &cases {
            let fg = f.to_graph().unwrap().unwrap();
            let got = ex_oracle(n, h, f).unwrap().value;
            assert_eq!(got, brute_ex(n, h, &fg), "n={n} h={h:?} f={f}");
        }
    }
}

#[test]
fn witnesses_attain_the_value() {
    let f = ForbiddenPattern::Book { r: 3, s: 1 };
    let h = Graph::complete(2);
    let res = ex_oracle(7, &h, &f).unwrap();
    assert!(!res.witnesses.is_empty());
    assert!(res.witness_total >= res.witnesses.len() as u64);
    for w in &res.witnesses {
        let g = gturan::graph6::decode(w).unwrap();
        assert_eq!(g.n(), 7);
        assert!(!gturan::contains(&g, &f));
        assert_eq!(gturan::count_copies(&g, &h), res.value);
    }
}

#[test]
fn repeated_runs_agree() {
    let hs = [Graph::complete(3), Graph::complete(4)];
    let f = ForbiddenPattern::DisjointCliques { k: 2, r: 3 };
    let a = ex_family_oracle(7, &hs, &f).unwrap();
    let b = ex_family_oracle(7, &hs, &f).unwrap();
    assert_eq!(a.value, b.value);
    assert_eq!(a.witnesses, b.witnesses);
    assert_eq!(a.graphs_enumerated, b.graphs_enumerated);
}

#[test]
fn limits_are_enforced() {
    let small = Oracle {
        limit: 5,
        ..Oracle::default()
    };
    let err = small
        .ex(6, &Graph::complete(2), &ForbiddenPattern::Clique(3))
        .unwrap_err();
    assert!(matches!(err, gturan::Error::Capacity(_)));
    let capped = Oracle {
        witness_cap: 1,
        ..Oracle::default()
    };
    let res = capped
        .ex(6, &Graph::complete(2), &ForbiddenPattern::Clique(3))
        .unwrap();
    assert_eq!(res.witnesses.len(), 1);
}
