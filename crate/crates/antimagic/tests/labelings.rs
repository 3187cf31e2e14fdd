mod common;

use antimagic::fixtures::{two_squares_labeling, two_triangles_labeling};
use antimagic::graph::{self, Graph};
use antimagic::labeling::{guide_of, EdgeLabeling};
use antimagic::sequences::Direction;
use antimagic::{Condition, Error};
use common::{arb_labeling, oracle_scan, oracle_sums, permutations};
use proptest::prelude::*;

/// `M_g` as printed, `0` for `*`.
const M_G: [[u64; 7]; 7] = [
    [0, 0, 0, 0, 8, 0, 1],
    [0, 0, 0, 0, 2, 0, 7],
    [0, 0, 0, 0, 0, 6, 3],
    [0, 0, 0, 0, 0, 4, 5],
    [8, 2, 0, 0, 0, 0, 0],
    [0, 0, 6, 4, 0, 0, 0],
    [1, 7, 3, 5, 0, 0, 0],
];

const M_H: [[u64; 5]; 5] = [
    [0, 0, 6, 0, 1],
    [0, 0, 0, 5, 2],
    [6, 0, 0, 0, 3],
    [0, 5, 0, 0, 4],
    [1, 2, 3, 4, 0],
];

fn matrix_as_zeros(l: &EdgeLabeling) -> Vec<Vec<u64>> {
    let m = l.to_matrix(None).unwrap();
    (0..m.order()).map(|i| (0..m.order()).map(|j| m.get(i, j).unwrap_or(0)).collect()).collect()
}

#[test]
fn fixture_matrices_match_the_printed_ones() {
    let g = matrix_as_zeros(&two_squares_labeling());
    assert_eq!(g, M_G.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
    let h = matrix_as_zeros(&two_triangles_labeling());
    assert_eq!(h, M_H.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
}

#[test]
fn induced_sums_examples() {
    let h = two_triangles_labeling();
    assert_eq!(h.induced_sums(), vec![6 + 1, 5 + 2, 6 + 3, 5 + 4, 1 + 2 + 3 + 4]);
    let g = two_squares_labeling();
    assert_eq!(g.to_matrix(None).unwrap().row_sums(), vec![9, 9, 9, 9, 10, 10, 16]);

    let c3 = EdgeLabeling::new(graph::cycle(3).unwrap(), vec![1, 2, 3]).unwrap();
    let mut s = c3.induced_sums();
    s.sort();
    assert_eq!(s, vec![3, 4, 5]);
}

/// Labeling edge `u_i u_{i+1}` of `C_2m` with `i` gives `f⁺(u_1) = 2m+1`
/// and `f⁺(u_i) = 2i−1` otherwise.
#[test]
fn natural_cycle_labeling_sums() {
    for m in 2..=10u64 {
        let l = EdgeLabeling::new(graph::cycle(2 * m as usize).unwrap(), (1..=2 * m).collect()).unwrap();
        let s = l.induced_sums();
        assert_eq!(s[0], 2 * m + 1);
        for i in 2..=2 * m {
            assert_eq!(s[i as usize - 1], 2 * i - 1);
        }
    }
}

#[test]
fn verify_examples() {
    let r = two_triangles_labeling().verify();
    assert!(r.is_local_antimagic && r.is_injective && r.is_bijective && r.parity_balanced);
    assert_eq!((r.color_count, r.colors.clone()), (3, vec![7, 9, 10]));

    let c4 = EdgeLabeling::new(graph::cycle(4).unwrap(), vec![1, 2, 3, 4]).unwrap();
    let r = c4.verify();
    assert_eq!(oracle_sums(&c4), vec![1 + 4, 1 + 2, 2 + 3, 3 + 4]);
    assert_eq!(oracle_scan(&c4), (true, 3));
    assert!(r.is_local_antimagic && r.color_count == 3);

    let p3 = EdgeLabeling::new(graph::path(3).unwrap(), vec![1, 2]).unwrap();
    let r = p3.verify();
    assert_eq!(p3.induced_sums(), vec![1, 3, 2]);
    assert!(r.is_local_antimagic && !r.parity_balanced);
    assert_eq!(r.color_count, 3);

    let dup = EdgeLabeling::new(graph::path(3).unwrap(), vec![2, 2]).unwrap();
    let r = dup.verify();
    assert!(!r.is_injective && !r.is_local_antimagic);
}

#[test]
fn report_serialization() {
    let r = EdgeLabeling::new(graph::cycle(3).unwrap(), vec![1, 1, 2]).unwrap().verify();
    assert_eq!(
        r.to_key_values(),
        "bijective=false\ncolor_count=2\ncolors=2,3\ninjective=false\n\
         is_local_antimagic=false\nparity_balanced=false\nviolations=0-2\n"
    );
}

#[test]
fn guide_signs() {
    let m = two_triangles_labeling().to_matrix(None).unwrap();
    let guide = guide_of(&m);
    let six = guide.get(0, 2).unwrap();
    assert_eq!((six.magnitude, six.direction), (6, Direction::Descending));
    assert_eq!(six.to_string(), "-6");
    let one = guide.get(0, 4).unwrap();
    assert_eq!((one.magnitude, one.direction), (1, Direction::Ascending));
    assert_eq!(one.to_string(), "+1");
    assert!(guide.get(0, 0).is_none());

    let null = EdgeLabeling::new(graph::null(4).unwrap(), vec![]).unwrap();
    let m = null.to_matrix(None).unwrap();
    assert!((0..4).all(|i| (0..4).all(|j| m.get(i, j).is_none())));
    assert_eq!(m.to_string(), "* * * *\n".repeat(4));
}

#[test]
fn matrix_follows_the_vertex_list() {
    let l = two_triangles_labeling();
    let m = l.to_matrix(Some(&[4, 3, 2, 1, 0])).unwrap();
    assert_eq!(m.get(0, 1), Some(4));
    assert_eq!(m.row_sums(), vec![10, 9, 9, 7, 7]);
    assert!(l.to_matrix(Some(&[0, 1, 2, 3])).is_err());
    assert!(l.to_matrix(Some(&[0, 1, 2, 3, 3])).is_err());
}

#[test]
fn copy_conditions() {
    let h = two_triangles_labeling();
    let c = h.check_copy_conditions(7);
    assert!(c.holds());
    assert_eq!(c.transformed(), [43, 43, 57, 57, 58].map(Some).to_vec());

    // 2-regular and balanced: (b) and (c) come for free for every p.
    let c4 = EdgeLabeling::new(graph::cycle(4).unwrap(), vec![1, 2, 3, 4]).unwrap();
    for p in 1..=20 {
        assert!(c4.check_copy_conditions(p).holds(), "p={p}");
    }

    let star = EdgeLabeling::new(graph::complete_bipartite(1, 2).unwrap(), vec![1, 2]).unwrap();
    let c = star.check_copy_conditions(3);
    assert_eq!(c.parity_failures, vec![1, 2]);
    assert_eq!(c.violation(), Some(Error::ConditionViolation { condition: Condition::A, witness: vec![1, 2] }));
}

#[test]
fn copy_condition_b_and_c() {
    // Center of a 4-star sums to 1+2+3+4 = 10; vertex 4 also reaches 10
    // with degree 2.
    let g = Graph::new(7, [(0, 1), (0, 2), (0, 3), (0, 4), (4, 5), (5, 6)]).unwrap();
    let l = EdgeLabeling::new(g, vec![1, 2, 3, 4, 6, 7]).unwrap();
    let c = l.check_copy_conditions(3);
    assert_eq!(c.degree_mismatch, Some((0, 4)));
    assert!(matches!(c.violation(), Some(Error::ConditionViolation { condition: Condition::A, .. })));

    // For p = 2 the transform is 2s − deg/2: a degree-6 vertex with sum 21
    // and a degree-2 vertex with sum 20 both land on 39.
    let mut edges: Vec<(usize, usize)> = (1..=6).map(|v| (0, v)).collect();
    edges.push((6, 7));
    let l = EdgeLabeling::new(Graph::new(8, edges).unwrap(), vec![1, 2, 3, 4, 5, 6, 14]).unwrap();
    let c = l.check_copy_conditions(2);
    assert_eq!(l.induced_sums()[0], 21);
    assert_eq!(l.induced_sums()[6], 20);
    assert_eq!(c.degree_mismatch, None);
    let (u, v) = c.collision.expect("collision");
    assert_eq!((u.min(v), u.max(v)), (0, 6));
    assert_eq!(c.transformed()[0], Some(39));
    assert_eq!(c.transformed()[6], Some(39));
}

#[test]
fn product_conditions() {
    let g = two_squares_labeling();
    let c = g.check_product_conditions(5);
    assert!(c.holds());
    let vals = c.values();
    assert_eq!(vals, vec![1005, 1005, 1005, 1005, 1130, 1130, 1760]);
    assert_eq!(9 * 125 - 120, 1005);
    assert_eq!(16 * 125 - 240, 1760);
    // the golden sum: 1005 + 420 + 43
    assert_eq!(vals[0] + 420 + 43, 1468);

    let c1 = g.check_product_conditions(1);
    assert_eq!(c1.values(), g.induced_sums().iter().map(|&s| s as i64).collect::<Vec<_>>());

    // Regular graphs: both conditions hold whatever the labels.
    for labels in [(1..=12).collect::<Vec<u64>>(), (1..=12).rev().collect()] {
        let l = EdgeLabeling::new(graph::octahedron(), labels).unwrap();
        for n in 1..=6 {
            assert!(l.check_product_conditions(n).holds());
        }
    }
}

/// Every labeling of every graph on at most 4 vertices against the
/// double-loop oracle.
#[test]
fn verify_matches_oracle_exhaustively() {
    for n in 1..=4usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::new(n, edges.iter().copied()).unwrap();
            let q = g.size() as u64;
            for labels in permutations(&(1..=q).collect::<Vec<_>>()) {
                let l = EdgeLabeling::new(g.clone(), labels).unwrap();
                let r = l.verify();
                assert_eq!((r.is_local_antimagic, r.color_count), oracle_scan(&l), "{:?}", l.triples().collect::<Vec<_>>());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn verify_matches_oracle(l in arb_labeling(8)) {
        let r = l.verify();
        prop_assert_eq!((r.is_local_antimagic, r.color_count), oracle_scan(&l));
        prop_assert_eq!(r.is_local_antimagic, r.violations.is_empty());
        prop_assert_eq!(r.color_count, r.colors.len());
        prop_assert!(r.is_bijective);
    }

    #[test]
    fn handshake(l in arb_labeling(10)) {
        prop_assert_eq!(l.induced_sums().iter().sum::<u64>(), 2 * l.labels().iter().sum::<u64>());
        prop_assert_eq!(l.induced_sums(), oracle_sums(&l));
    }

    #[test]
    fn matrix_rows_are_sums(l in arb_labeling(10), seed in any::<u64>()) {
        let n = l.graph().order();
        let mut list: Vec<usize> = (0..n).collect();
        // cheap deterministic shuffle
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            list.swap(i, (s >> 33) as usize % (i + 1));
        }
        let m = l.to_matrix(Some(&list)).unwrap();
        let sums = l.induced_sums();
        for (i, &v) in list.iter().enumerate() {
            prop_assert_eq!(m.row_sums()[i], sums[v]);
            for (j, &w) in list.iter().enumerate() {
                prop_assert_eq!(m.get(i, j), m.get(j, i));
                prop_assert_eq!(m.get(i, j), l.label_of(v, w));
            }
        }
    }

    #[test]
    fn guide_round_trips_at_p_one(l in arb_labeling(9)) {
        let m = l.to_matrix(None).unwrap();
        let back = guide_of(&m).copy_block(1, 1);
        let n = m.order();
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(back[i * n + j], m.get(i, j));
            }
        }
    }
}
