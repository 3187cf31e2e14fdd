//! Published reference data, stored verbatim.
//!
//! These are the hand-made objects the construction tests are measured
//! against. Vertex numbering is 0-based; the comments give the 1-based names
//! the data is usually quoted with.

use crate::graph::Graph;
use crate::labeling::EdgeLabeling;
use crate::magic::MagicRectangle;

/// Two 4-cycles sharing `u7` (vertex 6): `u1 u5 u2 u7` and `u3 u6 u4 u7`.
/// Induced sums `9, 9, 9, 9, 10, 10, 16`.
pub fn two_squares_labeling() -> EdgeLabeling {
    let edges = [(0, 4, 8), (0, 6, 1), (1, 4, 2), (1, 6, 7), (2, 5, 6), (2, 6, 3), (3, 5, 4), (3, 6, 5)];
    build(7, &edges)
}

/// Two triangles sharing `x5` (vertex 4): `x1 x3 x5` and `x2 x4 x5`.
/// Induced sums `7, 7, 9, 9, 10`; parity balanced at every vertex.
pub fn two_triangles_labeling() -> EdgeLabeling {
    let edges = [(0, 2, 6), (0, 4, 1), (1, 3, 5), (1, 4, 2), (2, 4, 3), (3, 4, 4)];
    build(5, &edges)
}

fn build(order: usize, edges: &[(usize, usize, u64)]) -> EdgeLabeling {
    let g = Graph::new(order, edges.iter().map(|&(u, v, _)| (u, v))).expect("fixture graph");
    EdgeLabeling::new(g, edges.iter().map(|e| e.2).collect()).expect("fixture labeling")
}

/// An 8×6 magic rectangle (row sum 147, column sum 196).
pub fn magic_8x6() -> MagicRectangle {
    MagicRectangle::from_rows(&[
        vec![1, 44, 9, 36, 29, 28],
        vec![2, 43, 10, 35, 30, 27],
        vec![3, 42, 11, 34, 31, 26],
        vec![4, 41, 12, 33, 32, 25],
        vec![45, 8, 37, 16, 17, 24],
        vec![46, 7, 38, 15, 18, 23],
        vec![47, 6, 39, 14, 19, 22],
        vec![48, 5, 40, 13, 20, 21],
    ])
    .expect("fixture shape")
}

/// Labels of the 8-cycle edges `u1u2, u2u3, …, u8u1` in the hand-built
/// 3-coloring of `C8 ∨ O6`.
pub const JOIN_8_6_CYCLE_LABELS: [u64; 8] = [1, 8, 3, 2, 5, 4, 7, 6];

/// Cycle vertices (0-based) owning the rows of [`join_8_6_block`]:
/// `u1, u3, u5, u7, u2, u6, u8, u4`.
pub const JOIN_8_6_ROW_VERTICES: [usize; 8] = [0, 2, 4, 6, 1, 5, 7, 3];

/// The cycle-to-null block of the hand-built `C8 ∨ O6` labeling: the 8×6
/// rectangle above shifted by 8 with a few in-column swaps. Columns are
/// `v1..v6`.
pub fn join_8_6_block() -> MagicRectangle {
    MagicRectangle::from_rows(&[
        vec![9, 52, 17, 44, 37, 36],
        vec![10, 51, 18, 43, 38, 31],
        vec![11, 50, 19, 42, 39, 34],
        vec![12, 49, 20, 41, 40, 29],
        vec![53, 16, 45, 24, 27, 32],
        vec![54, 15, 46, 23, 26, 33],
        vec![55, 14, 47, 22, 25, 30],
        vec![56, 13, 48, 21, 28, 35],
    ])
    .expect("fixture shape")
}
