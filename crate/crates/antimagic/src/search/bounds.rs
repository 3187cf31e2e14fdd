use std::collections::VecDeque;

use super::chromatic::chromatic_number;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Length of a shortest odd cycle, or `None` for bipartite graphs.
///
/// A breadth-first layering from each vertex; an edge inside one layer at
/// depth `d` closes an odd walk of length `2d+1`, and the shortest odd cycle
/// shows up as such an edge from one of its own vertices.
///
/// ```
/// use antimagic::{graph, search::odd_girth};
/// assert_eq!(odd_girth(&graph::cycle(9).unwrap()), Some(9));
/// assert_eq!(odd_girth(&graph::cycle(6).unwrap()), None);
/// ```
pub fn odd_girth(g: &Graph) -> Option<usize> {
    let adj = g.adjacency_lists();
    let mut best: Option<usize> = None;
    for s in 0..g.order() {
        let mut dist = vec![usize::MAX; g.order()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                } else if dist[y] == dist[x] {
                    let len = 2 * dist[x] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Chromatic data for `G[H]` and the lower bound `2χ(H) + ⌈χ(H)/k⌉` where
/// `2k+1` is the odd girth of `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub chi_g: usize,
    pub chi_h: usize,
    pub odd_girth: Option<usize>,
    pub lower: usize,
    /// Color count of a certificate, when one is attached.
    pub upper: Option<usize>,
}

impl BoundReport {
    pub fn with_upper(self, upper: usize) -> Self {
        BoundReport { upper: Some(upper), ..self }
    }

    /// `key=value` lines in key order.
    pub fn to_key_values(&self) -> String {
        let opt = |o: Option<usize>| o.map_or_else(|| "none".to_string(), |v| v.to_string());
        format!(
            "chi_g={}\nchi_h={}\nlower={}\nodd_girth={}\nupper={}\n",
            self.chi_g,
            self.chi_h,
            self.lower,
            opt(self.odd_girth),
            opt(self.upper)
        )
    }
}

/// Lower bound on `χ(G[H])`, hence on `χ_la(G[H])`, for non-bipartite `G`.
/// With a triangle in `G` this is `3χ(H)`.
///
/// ```
/// use antimagic::{graph, search::lexi_lower_bound};
/// let b = lexi_lower_bound(&graph::prism(3).unwrap(), &graph::octahedron()).unwrap();
/// assert_eq!(b.lower, 9);
/// ```
pub fn lexi_lower_bound(g: &Graph, h: &Graph) -> Result<BoundReport> {
    let girth = odd_girth(g)
        .ok_or_else(|| Error::NotApplicable("the outer graph is bipartite".into()))?;
    let k = (girth - 1) / 2;
    let chi_h = chromatic_number(h)?;
    Ok(BoundReport {
        chi_g: chromatic_number(g)?,
        chi_h,
        odd_girth: Some(girth),
        lower: 2 * chi_h + chi_h.div_ceil(k),
        upper: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;

    #[test]
    fn bipartite_outer_graph_is_rejected() {
        let r = lexi_lower_bound(&graph::cycle(4).unwrap(), &graph::complete(3).unwrap());
        assert!(matches!(r, Err(Error::NotApplicable(_))));
    }

    #[test]
    fn pentagon_over_triangle() {
        let b = lexi_lower_bound(&graph::cycle(5).unwrap(), &graph::complete(3).unwrap()).unwrap();
        assert_eq!((b.odd_girth, b.lower), (Some(5), 8));
    }
}
