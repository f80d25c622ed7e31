//! Clique search kernels shared by the counting and freeness modules.

use std::ops::ControlFlow;

use crate::bitset::VSet;

/// Lower bound on the chromatic number of `cand`, computed greedily and
/// capped at `need` (the caller only cares whether it reaches `need`).
fn greedy_colors<S: VSet>(rows: &[S], cand: &S, need: usize) -> usize {
    let mut uncolored = cand.clone();
    let mut colors = 0;
    while !uncolored.is_empty() {
        colors += 1;
        if colors >= need {
            return colors;
        }
        let mut avail = uncolored.clone();
        while let Some(v) = avail.first() {
            avail.remove(v);
            avail = avail.and_not(&rows[v]);
            uncolored.remove(v);
        }
    }
    colors
}

/// Some clique of exactly `k` vertices inside `cand`, if one exists.
pub(crate) fn find_clique<S: VSet>(rows: &[S], cand: &S, k: usize) -> Option<Vec<usize>> {
    let mut stack = Vec::with_capacity(k);
    if extend(rows, cand.clone(), k, &mut stack) {
        Some(stack)
    } else {
        None
    }
}

fn extend<S: VSet>(rows: &[S], cand: S, need: usize, stack: &mut Vec<usize>) -> bool {
    if need == 0 {
        return true;
    }
    if cand.len() < need {
        return false;
    }
    if need == 1 {
        stack.push(cand.first().expect("non-empty"));
        return true;
    }
    if greedy_colors(rows, &cand, need) < need {
        return false;
    }
    let mut rest = cand;
    while let Some(v) = rest.first() {
        if rest.len() < need {
            return false;
        }
        rest.remove(v);
        stack.push(v);
        if extend(rows, rest.and(&rows[v]), need - 1, stack) {
            return true;
        }
        stack.pop();
    }
    false
}

/// Calls `visit` on every `k`-clique inside `cand`, in lexicographic order,
/// until it returns `Break`.
pub(crate) fn for_each_clique<S: VSet, B>(
    rows: &[S],
    cand: &S,
    k: usize,
    visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let mut stack = Vec::with_capacity(k);
    walk(rows, cand.clone(), k, &mut stack, visit)
}

fn walk<S: VSet, B>(
    rows: &[S],
    cand: S,
    need: usize,
    stack: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    if need == 0 {
        return visit(stack);
    }
    let mut rest = cand;
    while let Some(v) = rest.first() {
        if rest.len() < need {
            break;
        }
        rest.remove(v);
        stack.push(v);
        let flow = walk(rows, rest.and(&rows[v]), need - 1, stack, visit);
        stack.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// Common neighbourhood of `verts` restricted to `within`.
pub(crate) fn common_neighbors<S: VSet>(rows: &[S], within: &S, verts: &[usize]) -> S {
    verts
        .iter()
        .fold(within.clone(), |acc, &v| acc.and(&rows[v]))
}

/// Pairwise vertex-disjoint cliques of the given sizes inside `region`.
///
/// Greedy placement is tried first. When clique `i` cannot be placed, any
/// solution extending the current prefixes must put into clique `i` a
/// vertex that the greedy pass used for an earlier clique, so the search
/// branches on that vertex. Each branch grows a prefix, bounding the depth
/// by the total size; the search is complete.
pub(crate) fn find_disjoint_cliques<S: VSet>(
    rows: &[S],
    region: &S,
    sizes: &[usize],
    n: usize,
) -> Option<Vec<Vec<usize>>> {
    let mut prefixes = vec![Vec::new(); sizes.len()];
    pack(rows, region, sizes, &mut prefixes, n)
}

fn pack<S: VSet>(
    rows: &[S],
    region: &S,
    sizes: &[usize],
    prefixes: &mut Vec<Vec<usize>>,
    n: usize,
) -> Option<Vec<Vec<usize>>> {
    let mut all_prefix = S::empty(n);
    for p in prefixes.iter() {
        for &v in p {
            all_prefix.insert(v);
        }
    }
    let mut used = S::empty(n);
    let mut found: Vec<Vec<usize>> = Vec::with_capacity(sizes.len());
    for i in 0..sizes.len() {
        let mut own = S::empty(n);
        for &v in &prefixes[i] {
            own.insert(v);
        }
        let others = all_prefix.and_not(&own);
        let cand = common_neighbors(rows, &region.and_not(&used).and_not(&others), &prefixes[i]);
        let need = sizes[i] - prefixes[i].len();
        if let Some(rest) = find_clique(rows, &cand, need) {
            let mut clique = prefixes[i].clone();
            clique.extend(rest);
            for &v in &clique {
                used.insert(v);
            }
            found.push(clique);
            continue;
        }
        if prefixes[i].len() >= sizes[i] {
            return None;
        }
        let mut pivots = S::empty(n);
        for (j, c) in found.iter().enumerate() {
            for &v in c {
                if !prefixes[j].contains(&v) {
                    pivots.insert(v);
                }
            }
        }
        let pivots = common_neighbors(rows, &pivots, &prefixes[i]);
        for y in pivots.to_vec() {
            prefixes[i].push(y);
            let hit = pack(rows, region, sizes, prefixes, n);
            prefixes[i].pop();
            if hit.is_some() {
                return hit;
            }
        }
        return None;
    }
    Some(found)
}
