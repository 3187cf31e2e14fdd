//! Simple undirected graphs with an explicit vertex list, the generators used
//! throughout the crate, and the composition operators (join, one-point
//! union, disjoint copies, lexicographic product).

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..order`.
///
/// Edges are kept in insertion order with each pair normalized to `u < v`;
/// the position of an edge in [`Graph::edges`] is its identity for labelings.
/// The vertex list fixes the row/column order of every matrix view and is
/// carried along with the graph rather than derived from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
    vertex_list: Vec<usize>,
}

/// The graph families understood by [`generate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cycle(usize),
    Null(usize),
    Path(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// Cartesian product `C_n □ K_2`.
    Prism(usize),
    /// `K_{2,2,2}`.
    Octahedron,
}

impl Graph {
    /// Builds a graph with the identity vertex list.
    pub fn new(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::InvalidVertex { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::InvalidGraph(format!("duplicate edge {} {}", e.0, e.1)));
            }
            out.push(e);
        }
        Ok(Graph {
            order,
            edges: out,
            vertex_list: (0..order).collect(),
        })
    }

    /// Returns a copy with `list` as the vertex list. Vertex indices and edges
    /// are unchanged; only matrix layouts follow the new list.
    pub fn with_vertex_list(mut self, list: Vec<usize>) -> Result<Self> {
        let mut hit = vec![false; self.order];
        if list.len() != self.order {
            return Err(Error::InvalidGraph(format!(
                "vertex list has {} entries, expected {}",
                list.len(),
                self.order
            )));
        }
        for &v in &list {
            if v >= self.order {
                return Err(Error::InvalidVertex { vertex: v, order: self.order });
            }
            if std::mem::replace(&mut hit[v], true) {
                return Err(Error::InvalidGraph(format!("vertex {v} listed twice")));
            }
        }
        self.vertex_list = list;
        Ok(self)
    }

    /// Relabels vertices so that the `i`-th listed vertex becomes vertex `i`.
    pub fn reorder(&self) -> Graph {
        let mut pos = vec![0; self.order];
        for (i, &v) in self.vertex_list.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self.edges.iter().map(|&(u, v)| {
            let (a, b) = (pos[u], pos[v]);
            (a.min(b), a.max(b))
        });
        Graph {
            order: self.order,
            edges: edges.collect(),
            vertex_list: (0..self.order).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_list(&self) -> &[usize] {
        &self.vertex_list
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.order];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degrees();
        d.windows(2).all(|w| w[0] == w[1])
    }

    /// Neighbor lists, each sorted ascending.
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.order];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// 0/1 adjacency matrix indexed by vertex number (not by vertex list).
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let mut a = vec![vec![0; self.order]; self.order];
        for &(u, v) in &self.edges {
            a[u][v] = 1;
            a[v][u] = 1;
        }
        a
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let e = (u.min(v), u.max(v));
        self.edges.contains(&e)
    }

    /// Map from normalized edge to its index in [`Graph::edges`].
    pub fn edge_index(&self) -> HashMap<(usize, usize), usize> {
        self.edges.iter().enumerate().map(|(i, &e)| (e, i)).collect()
    }

    pub fn component_count(&self) -> usize {
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.order];
        let mut count = 0;
        for s in 0..self.order {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        count
    }

    /// Edge sets compared as sets (ignores edge order and vertex list).
    pub fn same_edge_set(&self, other: &Graph) -> bool {
        if self.order != other.order || self.size() != other.size() {
            return false;
        }
        let a: HashSet<_> = self.edges.iter().collect();
        other.edges.iter().all(|e| a.contains(e))
    }
}

/// Builds a member of one of the standard families with its canonical order.
///
/// * `Cycle(n)`: edges `(i, i+1 mod n)` in order, so edge `i` joins the
///   `i`-th and `(i+1)`-th vertex.
/// * `CompleteBipartite(a, b)`: parts `0..a` and `a..a+b`.
/// * `Prism(n)`: outer cycle `0..n`, inner cycle `n..2n`, rungs `(i, n+i)`.
/// * `Octahedron`: antipodal pairs `(0,1)`, `(2,3)`, `(4,5)` are the non-edges.
pub fn generate(family: Family) -> Result<Graph> {
    let bad = |what: &str| Err(Error::InvalidParameter(what.to_string()));
    match family {
        Family::Cycle(n) => {
            if n < 3 {
                return bad("cycle needs n >= 3");
            }
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Null(n) => {
            if n < 1 {
                return bad("null graph needs n >= 1");
            }
            Graph::new(n, [])
        }
        Family::Path(n) => {
            if n < 1 {
                return bad("path needs n >= 1");
            }
            Graph::new(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Complete(n) => {
            if n < 1 {
                return bad("complete graph needs n >= 1");
            }
            Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        Family::CompleteBipartite(a, b) => {
            if a < 1 || b < 1 {
                return bad("complete bipartite needs a, b >= 1");
            }
            Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        }
        Family::Prism(n) => {
            if n < 3 {
                return bad("prism needs n >= 3");
            }
            let outer = (0..n).map(|i| (i, (i + 1) % n));
            let inner = (0..n).map(|i| (n + i, n + (i + 1) % n));
            let rungs = (0..n).map(|i| (i, n + i));
            Graph::new(2 * n, outer.chain(inner).chain(rungs))
        }
        Family::Octahedron => {
            let edges = (0..6)
                .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
                .filter(|&(u, v)| u / 2 != v / 2);
            Graph::new(6, edges)
        }
    }
}

pub fn cycle(n: usize) -> Result<Graph> {
    generate(Family::Cycle(n))
}

pub fn null(n: usize) -> Result<Graph> {
    generate(Family::Null(n))
}

pub fn path(n: usize) -> Result<Graph> {
    generate(Family::Path(n))
}

pub fn complete(n: usize) -> Result<Graph> {
    generate(Family::Complete(n))
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    generate(Family::CompleteBipartite(a, b))
}

pub fn prism(n: usize) -> Result<Graph> {
    generate(Family::Prism(n))
}

pub fn octahedron() -> Graph {
    generate(Family::Octahedron).expect("fixed parameters")
}

/// Glues vertex `b` of `h` onto vertex `a` of `g`.
///
/// Vertices of `g` keep their numbers; the remaining vertices of `h` follow
/// in their original order, skipping `b`.
pub fn one_point_union(g: &Graph, h: &Graph, a: usize, b: usize) -> Result<Graph> {
    if a >= g.order {
        return Err(Error::InvalidVertex { vertex: a, order: g.order });
    }
    if b >= h.order {
        return Err(Error::InvalidVertex { vertex: b, order: h.order });
    }
    let map = |x: usize| match x.cmp(&b) {
        std::cmp::Ordering::Equal => a,
        std::cmp::Ordering::Less => g.order + x,
        std::cmp::Ordering::Greater => g.order + x - 1,
    };
    let edges = g.edges.iter().copied().chain(h.edges.iter().map(|&(u, v)| (map(u), map(v))));
    Graph::new(g.order + h.order - 1, edges)
}

/// Disjoint union of `g` and `h` plus every edge between them. Vertices of
/// `h` are shifted by `|V(g)|`; the vertex list is `g`'s followed by `h`'s.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let n = g.order;
    let edges = g
        .edges
        .iter()
        .copied()
        .chain(h.edges.iter().map(|&(u, v)| (u + n, v + n)))
        .chain((0..g.order).flat_map(|u| (0..h.order).map(move |v| (u, n + v))));
    let list = g
        .vertex_list
        .iter()
        .copied()
        .chain(h.vertex_list.iter().map(|&v| v + n))
        .collect();
    Graph::new(n + h.order, edges)
        .and_then(|j| j.with_vertex_list(list))
        .expect("join of valid graphs is valid")
}

/// `p` disjoint copies of `h`, copy-major: vertex `x` of copy `i` is `i·n + x`.
pub fn disjoint_copies(h: &Graph, p: usize) -> Result<Graph> {
    if p == 0 {
        return Err(Error::InvalidParameter("need at least one copy".into()));
    }
    let n = h.order;
    let edges = (0..p).flat_map(|i| h.edges.iter().map(move |&(u, v)| (i * n + u, i * n + v)));
    let list = (0..p)
        .flat_map(|i| h.vertex_list.iter().map(move |&x| i * n + x))
        .collect();
    Graph::new(p * n, edges)?.with_vertex_list(list)
}

/// Lexicographic product `G[H]`: vertex `(u, x)` is `u·|V(H)| + x`.
///
/// Edge order is all copies of `H` first (copy `u` for `u = 0, 1, …`), then
/// for each edge `uv` of `G` the complete bipartite block between the fibers
/// of `u` and `v`, row-major in `x` then `y`. The vertex list is the
/// `G`-list-major expansion of both vertex lists.
pub fn lexicographic(g: &Graph, h: &Graph) -> Graph {
    let n = h.order;
    let copies = (0..g.order).flat_map(|u| h.edges.iter().map(move |&(x, y)| (u * n + x, u * n + y)));
    let fibers = g
        .edges
        .iter()
        .flat_map(|&(u, v)| (0..n).flat_map(move |x| (0..n).map(move |y| (u * n + x, v * n + y))));
    let list = g
        .vertex_list
        .iter()
        .flat_map(|&u| h.vertex_list.iter().map(move |&x| u * n + x))
        .collect();
    Graph::new(g.order * n, copies.chain(fibers))
        .and_then(|gh| gh.with_vertex_list(list))
        .expect("lexicographic product of valid graphs is valid")
}
