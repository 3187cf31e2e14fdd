//! Independent reference implementations shared by the integration tests.
//! Nothing here calls into the library's checking code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use antimagic::graph::{self, Graph};
use antimagic::labeling::EdgeLabeling;
use proptest::prelude::*;

/// Label matrix built by hand: `m[u][v] = label`, 0 for non-edges.
pub fn label_matrix(order: usize, triples: impl IntoIterator<Item = (usize, usize, u64)>) -> Vec<Vec<u64>> {
    let mut m = vec![vec![0; order]; order];
    for (u, v, l) in triples {
        m[u][v] = l;
        m[v][u] = l;
    }
    m
}

/// Vertex sums as plain row sums of the label matrix.
pub fn oracle_sums(l: &EdgeLabeling) -> Vec<u64> {
    label_matrix(l.graph().order(), l.triples()).iter().map(|r| r.iter().sum()).collect()
}

/// `(local antimagic?, number of colors)` by a double loop over all vertex
/// pairs, comparing sums whenever the pair is adjacent.
pub fn oracle_scan(l: &EdgeLabeling) -> (bool, usize) {
    let n = l.graph().order();
    let m = label_matrix(n, l.triples());
    let sums: Vec<u64> = m.iter().map(|r| r.iter().sum()).collect();
    let mut distinct_labels = BTreeSet::new();
    let mut ok = l.labels().iter().all(|&x| x > 0 && distinct_labels.insert(x));
    for u in 0..n {
        for v in 0..n {
            if u != v && m[u][v] != 0 && sums[u] == sums[v] {
                ok = false;
            }
        }
    }
    (ok, sums.iter().collect::<BTreeSet<_>>().len())
}

/// Every graph the generators produce with at most `max_order` vertices.
pub fn small_generated(max_order: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.push((format!("null({n})"), graph::null(n).unwrap()));
        out.push((format!("path({n})"), graph::path(n).unwrap()));
        out.push((format!("complete({n})"), graph::complete(n).unwrap()));
        if n >= 3 {
            out.push((format!("cycle({n})"), graph::cycle(n).unwrap()));
        }
        if 2 * n <= max_order && n >= 3 {
            out.push((format!("prism({n})"), graph::prism(n).unwrap()));
        }
        for a in 1..n {
            if a <= n - a {
                out.push((format!("K({a},{})", n - a), graph::complete_bipartite(a, n - a).unwrap()));
            }
        }
    }
    if max_order >= 6 {
        out.push(("octahedron".into(), graph::octahedron()));
    }
    out
}

/// Graph on `1..=max_order` vertices with an arbitrary edge subset.
pub fn arb_graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |mask| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, pairs.zip(mask).filter(|(_, keep)| *keep).map(|(e, _)| e)).unwrap()
        })
    })
}

/// A graph with a uniformly shuffled bijective labeling.
pub fn arb_labeling(max_order: usize) -> impl Strategy<Value = EdgeLabeling> {
    arb_graph(max_order).prop_flat_map(|g| {
        let q = g.size() as u64;
        Just((1..=q).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(move |labels| EdgeLabeling::new(g.clone(), labels).unwrap())
    })
}

/// All permutations of `items`, in lexicographic order of positions.
pub fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}
