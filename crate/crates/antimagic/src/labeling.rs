//! Edge labelings, their induced vertex sums, the local antimagic predicate,
//! and the matrix views used by the block constructions.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use crate::error::{Condition, Error, Result};
use crate::graph::Graph;
use crate::sequences::{term_unchecked, Direction};

/// A graph together with one positive label per edge, aligned with
/// [`Graph::edges`].
///
/// The baseline case is a bijection onto `1..=q`. Composed labelings may use
/// any set of distinct positive labels; the type accepts both and leaves the
/// judgement to [`EdgeLabeling::verify`]. Even duplicate labels are accepted
/// so that a broken certificate can still be loaded and reported on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLabeling {
    graph: Graph,
    labels: Vec<u64>,
}

impl EdgeLabeling {
    pub fn new(graph: Graph, labels: Vec<u64>) -> Result<Self> {
        if labels.len() != graph.size() {
            return Err(Error::InvalidParameter(format!(
                "{} labels for {} edges",
                labels.len(),
                graph.size()
            )));
        }
        Ok(EdgeLabeling { graph, labels })
    }

    /// Labels edges from `(u, v, label)` triples; the edge order is the
    /// order of the triples.
    pub fn from_triples(order: usize, triples: &[(usize, usize, u64)]) -> Result<Self> {
        let g = Graph::new(order, triples.iter().map(|&(u, v, _)| (u, v)))?;
        Self::new(g, triples.iter().map(|t| t.2).collect())
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    /// Replaces the graph's vertex list (edges and labels are untouched).
    pub fn with_vertex_list(self, list: Vec<usize>) -> Result<Self> {
        Ok(EdgeLabeling { graph: self.graph.with_vertex_list(list)?, labels: self.labels })
    }

    pub fn label_of(&self, u: usize, v: usize) -> Option<u64> {
        let e = (u.min(v), u.max(v));
        self.graph.edges().iter().position(|&x| x == e).map(|i| self.labels[i])
    }

    /// `(u, v, label)` for every edge, in edge order.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.graph.edges().iter().zip(&self.labels).map(|(&(u, v), &l)| (u, v, l))
    }

    /// `f⁺(v)`: the sum of labels on edges at `v`, indexed by vertex number.
    ///
    /// ```
    /// use antimagic::{graph, labeling::EdgeLabeling};
    /// let c3 = EdgeLabeling::new(graph::cycle(3).unwrap(), vec![1, 2, 3]).unwrap();
    /// assert_eq!(c3.induced_sums(), vec![4, 3, 5]);
    /// ```
    pub fn induced_sums(&self) -> Vec<u64> {
        let mut s = vec![0; self.graph.order()];
        for (u, v, l) in self.triples() {
            s[u] += l;
            s[v] += l;
        }
        s
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.labels.len());
        self.labels.iter().all(|l| seen.insert(*l))
    }

    /// Labels are exactly `1..=q`.
    pub fn is_bijective(&self) -> bool {
        let q = self.labels.len() as u64;
        let mut hit = vec![false; self.labels.len()];
        self.labels.iter().all(|&l| {
            (1..=q).contains(&l) && !std::mem::replace(&mut hit[(l - 1) as usize], true)
        })
    }

    /// Whether every vertex sees as many odd labels as even ones.
    pub fn parity_balance_failures(&self) -> Vec<usize> {
        let mut bal = vec![0i64; self.graph.order()];
        for (u, v, l) in self.triples() {
            let d = if l % 2 == 1 { 1 } else { -1 };
            bal[u] += d;
            bal[v] += d;
        }
        (0..bal.len()).filter(|&v| bal[v] != 0).collect()
    }

    pub fn verify(&self) -> VerificationReport {
        let sums = self.induced_sums();
        debug_assert_eq!(sums.iter().sum::<u64>(), 2 * self.labels.iter().sum::<u64>());
        let violations: Vec<(usize, usize)> = self
            .graph
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| sums[u] == sums[v])
            .collect();
        let colors: Vec<u64> = sums.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        let is_injective = self.is_injective();
        let positive = self.labels.iter().all(|&l| l > 0);
        VerificationReport {
            is_injective,
            is_bijective: self.is_bijective(),
            is_local_antimagic: is_injective && positive && violations.is_empty(),
            color_count: colors.len(),
            colors,
            parity_balanced: self.parity_balance_failures().is_empty(),
            violations,
        }
    }

    /// Labeling matrix in the order of `vertex_list` (defaults to the graph's
    /// own vertex list).
    pub fn to_matrix(&self, vertex_list: Option<&[usize]>) -> Result<LabelingMatrix> {
        let list = match vertex_list {
            Some(l) => self.graph.clone().with_vertex_list(l.to_vec())?.vertex_list().to_vec(),
            None => self.graph.vertex_list().to_vec(),
        };
        let n = list.len();
        let mut pos = vec![0; n];
        for (i, &v) in list.iter().enumerate() {
            pos[v] = i;
        }
        let mut entries = vec![None; n * n];
        for (u, v, l) in self.triples() {
            entries[pos[u] * n + pos[v]] = Some(l);
            entries[pos[v] * n + pos[u]] = Some(l);
        }
        Ok(LabelingMatrix { vertex_list: list, entries })
    }

    /// Checks the three conditions under which `p` copies of this labeling
    /// can be expanded into a labeling of `pH` with the same colors.
    pub fn check_copy_conditions(&self, p: u64) -> CopyConditions {
        let sums = self.induced_sums();
        let deg = self.graph.degrees();
        let doubled: Vec<i128> = (0..sums.len())
            .map(|v| 2 * p as i128 * sums[v] as i128 - deg[v] as i128 * (p as i128 - 1))
            .collect();
        let n = sums.len();
        let mut degree_mismatch = None;
        let mut collision = None;
        for u in 0..n {
            for v in u + 1..n {
                if sums[u] == sums[v] {
                    if deg[u] != deg[v] && degree_mismatch.is_none() {
                        degree_mismatch = Some((u, v));
                    }
                } else if doubled[u] == doubled[v] && collision.is_none() {
                    collision = Some((u, v));
                }
            }
        }
        CopyConditions {
            p,
            doubled,
            parity_failures: self.parity_balance_failures(),
            degree_mismatch,
            collision,
        }
    }

    /// Checks the two conditions under which this labeling of `G` can be
    /// expanded into a labeling of `G[O_n]`.
    pub fn check_product_conditions(&self, n: u64) -> ProductConditions {
        let sums = self.induced_sums();
        let deg = self.graph.degrees();
        let n3 = (n as i128).pow(3);
        let values: Vec<i128> = (0..sums.len())
            .map(|v| sums[v] as i128 * n3 - (n3 - n as i128) * deg[v] as i128 / 2)
            .collect();
        let mut degree_mismatch = None;
        let mut collision = None;
        for u in 0..sums.len() {
            for v in u + 1..sums.len() {
                if sums[u] == sums[v] {
                    if deg[u] != deg[v] && degree_mismatch.is_none() {
                        degree_mismatch = Some((u, v));
                    }
                } else if values[u] == values[v] && collision.is_none() {
                    collision = Some((u, v));
                }
            }
        }
        ProductConditions { n, values, degree_mismatch, collision }
    }
}

/// Result of [`EdgeLabeling::verify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub is_injective: bool,
    /// Labels are exactly `1..=q`.
    pub is_bijective: bool,
    pub is_local_antimagic: bool,
    pub color_count: usize,
    /// Distinct induced sums, ascending. The sums themselves are the colors.
    pub colors: Vec<u64>,
    pub parity_balanced: bool,
    /// Edges whose endpoints have equal sums.
    pub violations: Vec<(usize, usize)>,
}

impl VerificationReport {
    /// `key=value` lines in key order.
    pub fn to_key_values(&self) -> String {
        let join = |v: Vec<String>| v.join(",");
        let mut kv = BTreeMap::new();
        kv.insert("bijective", self.is_bijective.to_string());
        kv.insert("color_count", self.color_count.to_string());
        kv.insert("colors", join(self.colors.iter().map(u64::to_string).collect()));
        kv.insert("injective", self.is_injective.to_string());
        kv.insert("is_local_antimagic", self.is_local_antimagic.to_string());
        kv.insert("parity_balanced", self.parity_balanced.to_string());
        kv.insert(
            "violations",
            join(self.violations.iter().map(|(u, v)| format!("{u}-{v}")).collect()),
        );
        kv.iter().map(|(k, v)| format!("{k}={v}\n")).collect()
    }
}

/// Symmetric vertex-by-vertex matrix of labels, `None` for non-edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelingMatrix {
    vertex_list: Vec<usize>,
    entries: Vec<Option<u64>>,
}

impl LabelingMatrix {
    pub fn order(&self) -> usize {
        self.vertex_list.len()
    }

    pub fn vertex_list(&self) -> &[usize] {
        &self.vertex_list
    }

    /// Entry at row `i`, column `j` (positions in the vertex list).
    pub fn get(&self, i: usize, j: usize) -> Option<u64> {
        self.entries[i * self.order() + j]
    }

    /// Row sums with `⋆` read as 0; row `i` belongs to `vertex_list[i]`.
    pub fn row_sums(&self) -> Vec<u64> {
        let n = self.order();
        (0..n).map(|i| (0..n).filter_map(|j| self.get(i, j)).sum()).collect()
    }

    pub fn guide(&self) -> GuideMatrix {
        guide_of(self)
    }
}

impl fmt::Display for LabelingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.order();
        for i in 0..n {
            let row: Vec<String> = (0..n)
                .map(|j| self.get(i, j).map_or_else(|| "*".to_string(), |x| x.to_string()))
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// A magnitude annotated with a traversal direction and an offset.
///
/// In copy mode the offset is always 0 and the direction comes from the
/// parity of the source label. In join mode an offset of −1 marks an entry
/// that expands to odd labels (`2·term − 1`) and 0 one that expands to even
/// labels (`2·term`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GuideEntry {
    pub magnitude: u64,
    pub direction: Direction,
    pub offset: i8,
}

impl GuideEntry {
    pub fn plus(magnitude: u64) -> Self {
        GuideEntry { magnitude, direction: Direction::Ascending, offset: 0 }
    }

    pub fn minus(magnitude: u64) -> Self {
        GuideEntry { magnitude, direction: Direction::Descending, offset: 0 }
    }

    /// Same entry marked as expanding to odd labels.
    pub fn odd(self) -> Self {
        GuideEntry { offset: -1, ..self }
    }

    /// Copy-mode value: the `i`-th term of `S_p(magnitude)`.
    pub fn copy_value(&self, p: u64, i: u64) -> u64 {
        term_unchecked(p, self.magnitude, self.direction, i)
    }

    /// Join-mode value: `2·term + offset`.
    pub fn join_value(&self, m: u64, i: u64) -> u64 {
        (2 * term_unchecked(m, self.magnitude, self.direction, i) as i64 + self.offset as i64) as u64
    }
}

impl fmt::Display for GuideEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.direction {
            Direction::Ascending => '+',
            Direction::Descending => '-',
        };
        if self.offset == 0 {
            write!(f, "{sign}{}", self.magnitude)
        } else {
            write!(f, "{sign}({})", self.magnitude)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GuideMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Option<GuideEntry>>,
}

impl GuideMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Option<GuideEntry>>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidParameter("guide entries do not fill the shape".into()));
        }
        Ok(GuideMatrix { rows, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Option<GuideEntry> {
        self.entries[i * self.cols + j]
    }

    /// The `i`-th of `p` copy blocks (`1 <= i <= p`): every entry `±a` is
    /// replaced by the `i`-th term of the matching traversal of `S_p(a)`.
    pub fn copy_block(&self, p: u64, i: u64) -> Vec<Option<u64>> {
        self.entries.iter().map(|e| e.map(|e| e.copy_value(p, i))).collect()
    }
}

/// Marks odd labels ascending and even labels descending.
pub fn guide_of(m: &LabelingMatrix) -> GuideMatrix {
    let entries = m
        .entries
        .iter()
        .map(|e| {
            e.map(|a| GuideEntry { magnitude: a, direction: Direction::of_label(a), offset: 0 })
        })
        .collect();
    GuideMatrix { rows: m.order(), cols: m.order(), entries }
}

/// Outcome of [`EdgeLabeling::check_copy_conditions`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CopyConditions {
    pub p: u64,
    doubled: Vec<i128>,
    /// Vertices without parity balance.
    pub parity_failures: Vec<usize>,
    /// Two vertices with equal sums but different degrees.
    pub degree_mismatch: Option<(usize, usize)>,
    /// Two vertices with different sums whose transformed sums coincide.
    pub collision: Option<(usize, usize)>,
}

impl CopyConditions {
    /// `p·f⁺(v) − deg(v)(p−1)/2` per vertex; `None` where it is not an
    /// integer (which needs an odd degree, so parity balance already fails).
    pub fn transformed(&self) -> Vec<Option<i64>> {
        self.doubled.iter().map(|&d| (d % 2 == 0).then_some((d / 2) as i64)).collect()
    }

    pub fn holds(&self) -> bool {
        self.violation().is_none()
    }

    /// The first failing condition as an error, in the order a, b, c.
    pub fn violation(&self) -> Option<Error> {
        if !self.parity_failures.is_empty() {
            return Some(Error::ConditionViolation {
                condition: Condition::A,
                witness: self.parity_failures.clone(),
            });
        }
        if let Some((u, v)) = self.degree_mismatch {
            return Some(Error::ConditionViolation { condition: Condition::B, witness: vec![u, v] });
        }
        self.collision
            .map(|(u, v)| Error::ConditionViolation { condition: Condition::C, witness: vec![u, v] })
    }
}

/// Outcome of [`EdgeLabeling::check_product_conditions`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductConditions {
    pub n: u64,
    values: Vec<i128>,
    pub degree_mismatch: Option<(usize, usize)>,
    pub collision: Option<(usize, usize)>,
}

impl ProductConditions {
    /// `g⁺(v)·n³ − (n³−n)·deg(v)/2` per vertex.
    pub fn values(&self) -> Vec<i64> {
        self.values.iter().map(|&v| v as i64).collect()
    }

    pub fn holds(&self) -> bool {
        self.violation().is_none()
    }

    pub fn violation(&self) -> Option<Error> {
        if let Some((u, v)) = self.degree_mismatch {
            return Some(Error::ConditionViolation { condition: Condition::D, witness: vec![u, v] });
        }
        self.collision
            .map(|(u, v)| Error::ConditionViolation { condition: Condition::E, witness: vec![u, v] })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;

    #[test]
    fn duplicate_labels_are_reported_not_rejected() {
        let l = EdgeLabeling::new(graph::path(3).unwrap(), vec![1, 1]).unwrap();
        let r = l.verify();
        assert!(!r.is_injective && !r.is_local_antimagic && !r.is_bijective);
        assert!(r.to_key_values().contains("injective=false\n"));
    }

    #[test]
    fn report_keys_are_sorted() {
        let l = EdgeLabeling::new(graph::cycle(3).unwrap(), vec![1, 2, 3]).unwrap();
        let keys: Vec<String> = l
            .verify()
            .to_key_values()
            .lines()
            .map(|s| s.split('=').next().unwrap().to_string())
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn wrong_label_count_is_rejected() {
        assert!(EdgeLabeling::new(graph::cycle(3).unwrap(), vec![1, 2]).is_err());
    }

    #[test]
    fn matrix_display_marks_non_edges() {
        let l = EdgeLabeling::new(graph::path(3).unwrap(), vec![1, 2]).unwrap();
        assert_eq!(l.to_matrix(None).unwrap().to_string(), "* 1 *\n1 * 2\n* 2 *\n");
    }

    #[test]
    fn guide_entry_display() {
        assert_eq!(GuideEntry::minus(6).to_string(), "-6");
        assert_eq!(GuideEntry::plus(3).odd().to_string(), "+(3)");
    }
}
