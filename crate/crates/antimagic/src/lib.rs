//! Local antimagic labelings of graphs.
//!
//! A labeling numbers the `q` edges of a graph with `1..=q`; each vertex is
//! then colored by the sum of the labels around it. The labeling is *local
//! antimagic* when adjacent vertices always get different sums. This crate
//! builds such labelings for disjoint copies, lexicographic products and
//! cycle/null joins, checks them, and searches for them on small graphs.
//!
//! | module | contents |
//! |---|---|
//! | [`graph`] | graphs, generators, join / union / copies / product |
//! | [`sequences`] | the interval traversals every block construction uses |
//! | [`magic`] | magic squares and rectangles |
//! | [`labeling`] | labelings, verification, matrix views, side conditions |
//! | [`construct`] | the constructions, each returning a checked certificate |
//! | [`search`] | chromatic number, odd girth, bounds, backtracking search |
//! | [`format`] | text formats for graphs, labelings and matrices |
//!
//! ```
//! use antimagic::{construct::compose_lexi, fixtures};
//! let g = fixtures::two_squares_labeling();
//! let h = fixtures::two_triangles_labeling();
//! let cert = compose_lexi(&g, &h).unwrap();
//! assert!(cert.report.is_local_antimagic);
//! assert_eq!(cert.report.color_count, 9);
//! ```

pub mod construct;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod graph;
pub mod labeling;
pub mod magic;
pub mod search;
pub mod sequences;

pub use error::{Condition, Error, Result};

/// The guide's chapters, compiled as doc tests so the snippets stay honest.
#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    pub mod graphs {}
    #[doc = include_str!("../../../book/src/intervals.md")]
    pub mod intervals {}
    #[doc = include_str!("../../../book/src/magic.md")]
    pub mod magic {}
    #[doc = include_str!("../../../book/src/labelings.md")]
    pub mod labelings {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    pub mod constructions {}
    #[doc = include_str!("../../../book/src/search.md")]
    pub mod search {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
