use std::fmt;

use thiserror::Error;

/// The side conditions a labeling must meet before a block construction can
/// be trusted.
///
/// `A`–`C` apply to the labeling that gets copied (one block per copy);
/// `D` and `E` apply to the labeling that gets blown up into a product with a
/// null graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    /// Every vertex sees as many odd labels as even ones.
    A,
    /// Equal induced sums only occur at vertices of equal degree.
    B,
    /// Distinct induced sums stay distinct after the copy transform.
    C,
    /// Equal induced sums only occur at vertices of equal degree (outer graph).
    D,
    /// Distinct induced sums stay distinct after the fiber transform.
    E,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Condition::A => "parity balance",
            Condition::B => "equal sums imply equal degrees",
            Condition::C => "copy transform keeps distinct sums apart",
            Condition::D => "equal sums imply equal degrees (outer graph)",
            Condition::E => "fiber transform keeps distinct sums apart",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} out of range for a graph of order {order}")]
    InvalidVertex { vertex: usize, order: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: u64, len: u64 },

    #[error("no such object: {0}")]
    NoSuchObject(String),

    #[error("condition violated ({condition}) at vertices {witness:?}")]
    ConditionViolation {
        condition: Condition,
        witness: Vec<usize>,
    },

    #[error("construction unsound: {0}")]
    ConstructionUnsound(String),

    #[error("size limit exceeded: {what} is {actual}, limit {limit}")]
    SizeLimit {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("budget exhausted after {nodes} nodes")]
    Budget { nodes: u64 },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
