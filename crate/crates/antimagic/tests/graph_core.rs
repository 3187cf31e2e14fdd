mod common;

use std::collections::BTreeSet;

use antimagic::graph::{self, generate, Family, Graph};
use antimagic::Error;
use common::{arb_graph, small_generated};
use proptest::prelude::*;

fn edge_set(g: &Graph) -> BTreeSet<(usize, usize)> {
    g.edges().iter().copied().collect()
}

fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let mut a = vec![vec![false; g.order()]; g.order()];
    for &(u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Union-find component count.
fn components(g: &Graph) -> usize {
    let mut parent: Vec<usize> = (0..g.order()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for &(u, v) in g.edges() {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
    }
    (0..g.order()).filter(|&x| find(&mut parent, x) == x).count()
}

#[test]
fn family_shapes() {
    let c4 = graph::cycle(4).unwrap();
    assert_eq!((c4.order(), c4.size()), (4, 4));
    assert!(c4.degrees().iter().all(|&d| d == 2));

    let oct = graph::octahedron();
    assert_eq!((oct.order(), oct.size()), (6, 12));
    assert!(oct.degrees().iter().all(|&d| d == 4));

    let pr = graph::prism(3).unwrap();
    assert_eq!((pr.order(), pr.size()), (6, 9));
    assert!(pr.is_regular() && pr.degree(0) == 3);
}

#[test]
fn prism_contains_a_triangle() {
    let a = adjacency(&graph::prism(3).unwrap());
    let mut triangles = 0;
    for x in 0..6 {
        for y in x + 1..6 {
            for z in y + 1..6 {
                if a[x][y] && a[y][z] && a[x][z] {
                    triangles += 1;
                }
            }
        }
    }
    assert_eq!(triangles, 2);
}

#[test]
fn generator_parameter_floors() {
    for bad in [Family::Cycle(2), Family::Null(0), Family::CompleteBipartite(0, 3), Family::Prism(2)] {
        assert!(matches!(generate(bad), Err(Error::InvalidParameter(_))), "{bad:?}");
    }
}

#[test]
fn one_point_unions() {
    let c4 = graph::cycle(4).unwrap();
    let c3 = graph::cycle(3).unwrap();
    let g = graph::one_point_union(&c4, &c4, 0, 0).unwrap();
    assert_eq!((g.order(), g.size()), (7, 8));
    let h = graph::one_point_union(&c3, &c3, 0, 0).unwrap();
    assert_eq!((h.order(), h.size()), (5, 6));

    let k2 = graph::complete(2).unwrap();
    let p3 = graph::one_point_union(&k2, &k2, 1, 0).unwrap();
    assert_eq!(p3.degrees(), vec![1, 2, 1]);
    assert_eq!(components(&p3), 1);

    assert!(matches!(graph::one_point_union(&c4, &c3, 4, 0), Err(Error::InvalidVertex { .. })));
    assert!(matches!(graph::one_point_union(&c4, &c3, 0, 3), Err(Error::InvalidVertex { .. })));
}

#[test]
fn joins() {
    let j = graph::join(&graph::cycle(4).unwrap(), &graph::null(2).unwrap());
    assert_eq!((j.order(), j.size()), (6, 12));
    let j = graph::join(&graph::cycle(8).unwrap(), &graph::null(6).unwrap());
    assert_eq!(j.size(), 56);
    let k2 = graph::join(&graph::null(1).unwrap(), &graph::null(1).unwrap());
    assert_eq!(edge_set(&k2), edge_set(&graph::complete(2).unwrap()));
}

#[test]
fn copies() {
    let h = graph::one_point_union(&graph::cycle(3).unwrap(), &graph::cycle(3).unwrap(), 0, 0).unwrap();
    let seven = graph::disjoint_copies(&h, 7).unwrap();
    assert_eq!((seven.order(), seven.size()), (35, 42));
    assert_eq!(edge_set(&graph::disjoint_copies(&h, 1).unwrap()), edge_set(&h));
    let m = graph::disjoint_copies(&graph::complete(2).unwrap(), 3).unwrap();
    assert_eq!(edge_set(&m), BTreeSet::from([(0, 1), (2, 3), (4, 5)]));
    assert!(matches!(graph::disjoint_copies(&h, 0), Err(Error::InvalidParameter(_))));
}

#[test]
fn lexicographic_examples() {
    let c4 = graph::cycle(4).unwrap();
    let c3 = graph::cycle(3).unwrap();
    let g = graph::one_point_union(&c4, &c4, 0, 0).unwrap();
    let h = graph::one_point_union(&c3, &c3, 0, 0).unwrap();
    let gh = graph::lexicographic(&g, &h);
    assert_eq!((gh.order(), gh.size()), (35, 242));

    let same = graph::lexicographic(&g, &graph::null(1).unwrap());
    assert_eq!(edge_set(&same), edge_set(&g));

    for n in 1..=6 {
        let kn = graph::lexicographic(&graph::complete(2).unwrap(), &graph::null(n).unwrap());
        assert_eq!(edge_set(&kn), edge_set(&graph::complete_bipartite(n, n).unwrap()), "n={n}");
    }
}

/// Size law and the Kronecker form `A_G ⊗ J_n + I_p ⊗ A_H`, for every pair
/// of generated graphs with at most 8 vertices.
#[test]
fn lexicographic_matches_kronecker_form() {
    let gens = small_generated(8);
    for (gn, g) in &gens {
        let ag = adjacency(g);
        for (hn, h) in &gens {
            let ah = adjacency(h);
            let (p, n) = (g.order(), h.order());
            let prod = graph::lexicographic(g, h);
            assert_eq!(prod.size(), p * h.size() + g.size() * n * n, "{gn}[{hn}]");
            let a = adjacency(&prod);
            for u in 0..p {
                for x in 0..n {
                    for v in 0..p {
                        for y in 0..n {
                            let want = ag[u][v] || (u == v && ah[x][y]);
                            assert_eq!(a[u * n + x][v * n + y], want, "{gn}[{hn}] ({u},{x})~({v},{y})");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn reorder_relabels_along_the_vertex_list() {
    let g = graph::path(4).unwrap().with_vertex_list(vec![3, 1, 0, 2]).unwrap();
    let r = g.reorder();
    assert_eq!(r.vertex_list(), &[0, 1, 2, 3]);
    // path 0-1-2-3 with 3→0, 1→1, 0→2, 2→3 becomes 2-1-3-0
    assert_eq!(edge_set(&r), BTreeSet::from([(1, 2), (1, 3), (0, 3)]));
    assert!(graph::cycle(3).unwrap().with_vertex_list(vec![0, 0, 1]).is_err());
}

#[test]
fn invalid_graphs_are_rejected() {
    assert!(Graph::new(3, [(0, 0)]).is_err());
    assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
    assert!(matches!(Graph::new(3, [(0, 3)]), Err(Error::InvalidVertex { vertex: 3, order: 3 })));
}

proptest! {
    #[test]
    fn join_degree_law(g in arb_graph(7), h in arb_graph(7)) {
        let j = graph::join(&g, &h);
        prop_assert_eq!(j.size(), g.size() + h.size() + g.order() * h.order());
        for v in 0..g.order() {
            prop_assert_eq!(j.degree(v), g.degree(v) + h.order());
        }
        for w in 0..h.order() {
            prop_assert_eq!(j.degree(g.order() + w), h.degree(w) + g.order());
        }
    }

    #[test]
    fn copies_multiply_components(h in arb_graph(7), p in 1usize..5) {
        let c = graph::disjoint_copies(&h, p).unwrap();
        prop_assert_eq!(components(&c), p * components(&h));
        prop_assert_eq!(c.component_count(), components(&c));
    }

    #[test]
    fn lexicographic_size_law(g in arb_graph(6), h in arb_graph(6)) {
        let prod = graph::lexicographic(&g, &h);
        let n = h.order();
        prop_assert_eq!(prod.size(), g.order() * h.size() + g.size() * n * n);
    }

    #[test]
    fn one_point_union_counts(g in arb_graph(6), h in arb_graph(6), a in 0usize..6, b in 0usize..6) {
        prop_assume!(a < g.order() && b < h.order());
        let u = graph::one_point_union(&g, &h, a, b).unwrap();
        prop_assert_eq!(u.order(), g.order() + h.order() - 1);
        prop_assert_eq!(u.size(), g.size() + h.size());
    }
}
