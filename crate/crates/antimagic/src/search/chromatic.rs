use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex limit for [`chromatic_number`].
pub const CHROMATIC_LIMIT: usize = 64;

/// Exact chromatic number for graphs up to [`CHROMATIC_LIMIT`] vertices.
///
/// ```
/// use antimagic::{graph, search::chromatic_number};
/// assert_eq!(chromatic_number(&graph::cycle(5).unwrap()).unwrap(), 3);
/// assert_eq!(chromatic_number(&graph::octahedron()).unwrap(), 3);
/// ```
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    chromatic_number_with_limit(g, CHROMATIC_LIMIT)
}

/// Branch and bound: a greedy clique gives the lower bound, a DSATUR coloring
/// the upper bound, and each `k` in between is settled by backtracking.
pub fn chromatic_number_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    let n = g.order();
    if n > limit {
        return Err(Error::SizeLimit { what: "vertex count", actual: n, limit });
    }
    if n == 0 {
        return Ok(0);
    }
    if g.size() == 0 {
        return Ok(1);
    }
    let adj = g.adjacency_lists();
    let lower = greedy_clique(&adj);
    let upper = dsatur_greedy(&adj);
    for k in lower..upper {
        let mut colors = vec![usize::MAX; n];
        if colorable(&adj, k, &mut colors, 0) {
            return Ok(k);
        }
    }
    Ok(upper)
}

/// Size of a clique grown greedily from each vertex; the best one wins.
fn greedy_clique(adj: &[Vec<usize>]) -> usize {
    let mut best = 1;
    for s in 0..adj.len() {
        let mut clique = vec![s];
        let mut cand: Vec<usize> = adj[s].clone();
        cand.sort_by_key(|&v| std::cmp::Reverse(adj[v].len()));
        for v in cand {
            if clique.iter().all(|&c| adj[v].binary_search(&c).is_ok()) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

fn saturation(adj: &[Vec<usize>], colors: &[usize], v: usize) -> usize {
    let mut seen: Vec<usize> = adj[v].iter().map(|&w| colors[w]).filter(|&c| c != usize::MAX).collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

fn pick(adj: &[Vec<usize>], colors: &[usize]) -> Option<usize> {
    (0..adj.len())
        .filter(|&v| colors[v] == usize::MAX)
        .max_by_key(|&v| (saturation(adj, colors, v), adj[v].len(), std::cmp::Reverse(v)))
}

fn dsatur_greedy(adj: &[Vec<usize>]) -> usize {
    let mut colors = vec![usize::MAX; adj.len()];
    let mut used = 0;
    while let Some(v) = pick(adj, &colors) {
        let c = (0..).find(|&c| adj[v].iter().all(|&w| colors[w] != c)).expect("some color is free");
        colors[v] = c;
        used = used.max(c + 1);
    }
    used
}

fn colorable(adj: &[Vec<usize>], k: usize, colors: &mut [usize], used: usize) -> bool {
    let Some(v) = pick(adj, colors) else { return true };
    // New colors are interchangeable, so only one fresh color is tried.
    for c in 0..k.min(used + 1) {
        if adj[v].iter().all(|&w| colors[w] != c) {
            colors[v] = c;
            if colorable(adj, k, colors, used.max(c + 1)) {
                return true;
            }
            colors[v] = usize::MAX;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;

    #[test]
    fn small_families() {
        assert_eq!(chromatic_number(&graph::cycle(6).unwrap()).unwrap(), 2);
        assert_eq!(chromatic_number(&graph::complete(5).unwrap()).unwrap(), 5);
        assert_eq!(chromatic_number(&graph::null(4).unwrap()).unwrap(), 1);
        assert_eq!(chromatic_number(&graph::prism(3).unwrap()).unwrap(), 3);
    }

    #[test]
    fn limit_is_enforced() {
        let g = graph::null(5).unwrap();
        assert!(matches!(chromatic_number_with_limit(&g, 4), Err(Error::SizeLimit { .. })));
    }
}
