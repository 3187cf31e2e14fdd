//! Constructions that turn small labelings into labelings of bigger graphs:
//! disjoint copies, products with a null graph, full lexicographic products,
//! and a direct 3-coloring of cycle/null joins.
//!
//! Every construction predicts its vertex sums from closed forms, then
//! recomputes them from the assembled labeling and verifies the result. A
//! mismatch is reported as [`Error::ConstructionUnsound`] rather than
//! trusted.

mod copies;
mod join;
mod lexi;

pub use copies::expand_copies;
pub use join::{join_guide, label_join_cycle_null};
pub use lexi::{compose_lexi, expand_null_fiber, fiber_square};

use crate::error::{Error, Result};
use crate::labeling::{EdgeLabeling, VerificationReport};

/// Where a label in a constructed labeling came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Origin {
    /// Copy `copy` (1-based) of an edge labeled `source` in the small graph.
    Copy { copy: u64, source: u64 },
    /// Block `block` (1-based) of the offset magic squares.
    Fiber { block: u64 },
    /// The cycle part of a join.
    Cycle,
    /// Column `column` (0-based) of the join guide matrix.
    GuideColumn { column: usize },
    /// Stored reference data.
    Fixture,
}

/// A constructed labeling with its provenance, the sums the construction
/// promised, and the verification report of the assembled result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionCertificate {
    pub labeling: EdgeLabeling,
    /// One entry per edge, aligned with the labeling's edge order.
    pub origins: Vec<Origin>,
    /// Predicted `f⁺`, indexed by vertex number.
    pub predicted_sums: Vec<u64>,
    pub report: VerificationReport,
}

impl ConstructionCertificate {
    /// Checks the assembled labeling against the prediction and the local
    /// antimagic predicate. `range` is the label interval that must be hit
    /// exactly once per value.
    fn seal(
        labeling: EdgeLabeling,
        origins: Vec<Origin>,
        predicted_sums: Vec<u64>,
        range: (u64, u64),
    ) -> Result<Self> {
        debug_assert_eq!(origins.len(), labeling.labels().len());
        let mut labels = labeling.labels().to_vec();
        labels.sort_unstable();
        if labels.iter().copied().ne(range.0..=range.1) {
            return Err(Error::ConstructionUnsound(format!(
                "labels do not cover {}..={} exactly once",
                range.0, range.1
            )));
        }
        let actual = labeling.induced_sums();
        if let Some(v) = (0..actual.len()).find(|&v| actual[v] != predicted_sums[v]) {
            return Err(Error::ConstructionUnsound(format!(
                "vertex {v}: predicted sum {} but got {}",
                predicted_sums[v], actual[v]
            )));
        }
        let report = labeling.verify();
        if let Some(&(u, v)) = report.violations.first() {
            return Err(Error::ConstructionUnsound(format!(
                "adjacent vertices {u} and {v} share the sum {}",
                actual[u]
            )));
        }
        Ok(ConstructionCertificate { labeling, origins, predicted_sums, report })
    }

    /// `(color, number of vertices with that color)`, ascending by color.
    pub fn color_counts(&self) -> Vec<(u64, usize)> {
        let mut map = std::collections::BTreeMap::new();
        for s in self.labeling.induced_sums() {
            *map.entry(s).or_insert(0) += 1;
        }
        map.into_iter().collect()
    }
}

fn require_bijective(l: &EdgeLabeling, what: &str) -> Result<()> {
    if l.is_bijective() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{what} labeling must use 1..=q exactly once")))
    }
}
