//! Exact search and bounds: chromatic number, odd girth, the lower bound for
//! lexicographic products, and backtracking search for local antimagic
//! labelings.

mod bounds;
mod chromatic;
mod local;

pub use bounds::{lexi_lower_bound, odd_girth, BoundReport};
pub use chromatic::{chromatic_number, chromatic_number_with_limit, CHROMATIC_LIMIT};
pub use local::{
    chi_la_exact, chi_la_exact_with, search_local_antimagic, search_with_progress, ChiLa, Mode, Progress,
    SearchConfig, SearchOutcome, SearchResult, CHI_LA_EDGE_LIMIT, EXHAUSTIVE_EDGE_LIMIT,
};
