//! Plain-text formats for graphs, labelings, certificates and matrices.
//!
//! Graph: a `p q` header, then `q` lines `u v` (0-based). Lines starting
//! with `#` are comments. An optional `order i0 i1 …` line sets the vertex
//! list.
//!
//! Labeling: the same, with a third column holding the label. A certificate
//! is a labeling followed by a `sums` section of `color=<value> count=<k>`
//! lines and, optionally, a `matrix` section with the labeling matrix
//! (`*` for non-edges). Readers stop at the first section header.

use std::fmt::Write as _;

use crate::construct::ConstructionCertificate;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::EdgeLabeling;
use crate::magic::MagicRectangle;

const SECTIONS: [&str; 2] = ["sums", "matrix"];

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn numbers<T: std::str::FromStr>(line: usize, s: &str) -> Result<Vec<T>> {
    s.split_whitespace()
        .map(|t| t.parse().map_err(|_| perr(line, format!("not a number: {t:?}"))))
        .collect()
}

struct Parsed {
    order: usize,
    rows: Vec<Vec<u64>>,
    vertex_list: Option<Vec<usize>>,
}

fn parse_records(text: &str, width: usize) -> Result<Parsed> {
    let mut header: Option<(usize, usize)> = None;
    let mut rows = Vec::new();
    let mut vertex_list = None;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        if SECTIONS.contains(&s) {
            break;
        }
        if let Some(rest) = s.strip_prefix("order") {
            if vertex_list.is_some() {
                return Err(perr(line, "second order line"));
            }
            vertex_list = Some(numbers(line, rest)?);
            continue;
        }
        match header {
            None => match numbers::<usize>(line, s)?.as_slice() {
                &[p, q] => header = Some((p, q)),
                _ => return Err(perr(line, "expected header `p q`")),
            },
            Some((_, q)) => {
                let r: Vec<u64> = numbers(line, s)?;
                if r.len() != width {
                    return Err(perr(line, format!("expected {width} fields")));
                }
                if rows.len() == q {
                    return Err(perr(line, format!("more than the declared {q} edges")));
                }
                rows.push(r);
            }
        }
    }
    let (order, q) = header.ok_or_else(|| perr(0, "missing header"))?;
    if rows.len() != q {
        return Err(perr(0, format!("declared {q} edges, found {}", rows.len())));
    }
    Ok(Parsed { order, rows, vertex_list })
}

fn build_graph(p: &Parsed) -> Result<Graph> {
    let g = Graph::new(p.order, p.rows.iter().map(|r| (r[0] as usize, r[1] as usize)))?;
    match &p.vertex_list {
        Some(list) => g.with_vertex_list(list.clone()),
        None => Ok(g),
    }
}

/// ```
/// let g = antimagic::format::parse_graph("# a triangle\n3 3\n0 1\n1 2\n0 2\n").unwrap();
/// assert_eq!(g.size(), 3);
/// ```
pub fn parse_graph(text: &str) -> Result<Graph> {
    build_graph(&parse_records(text, 2)?)
}

pub fn parse_labeling(text: &str) -> Result<EdgeLabeling> {
    let p = parse_records(text, 3)?;
    let g = build_graph(&p)?;
    EdgeLabeling::new(g, p.rows.iter().map(|r| r[2]).collect())
}

fn order_line(out: &mut String, g: &Graph) {
    if g.vertex_list().iter().enumerate().any(|(i, &v)| i != v) {
        let list: Vec<String> = g.vertex_list().iter().map(usize::to_string).collect();
        let _ = writeln!(out, "order {}", list.join(" "));
    }
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    order_line(&mut out, g);
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_labeling(l: &EdgeLabeling) -> String {
    let g = l.graph();
    let mut out = format!("{} {}\n", g.order(), g.size());
    order_line(&mut out, g);
    for (u, v, a) in l.triples() {
        let _ = writeln!(out, "{u} {v} {a}");
    }
    out
}

/// `color=<value> count=<k>` lines, ascending by color.
pub fn write_sums(l: &EdgeLabeling) -> String {
    let mut counts = std::collections::BTreeMap::new();
    for s in l.induced_sums() {
        *counts.entry(s).or_insert(0usize) += 1;
    }
    counts.iter().map(|(c, k)| format!("color={c} count={k}\n")).collect()
}

/// A labeling with its `sums` section and, if asked, its `matrix` section.
pub fn write_certificate(l: &EdgeLabeling, emit_matrix: bool) -> String {
    let mut out = write_labeling(l);
    out.push_str("sums\n");
    out.push_str(&write_sums(l));
    if emit_matrix {
        out.push_str("matrix\n");
        let m = l.to_matrix(None).expect("own vertex list is valid");
        out.push_str(&m.to_string());
    }
    out
}

pub fn write_construction(c: &ConstructionCertificate, emit_matrix: bool) -> String {
    write_certificate(&c.labeling, emit_matrix)
}

/// One line per row, entries separated by single spaces.
pub fn write_matrix(m: &MagicRectangle) -> String {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(u64::to_string).collect::<Vec<_>>().join(" ") + "\n")
        .collect()
}

pub fn parse_matrix(text: &str) -> Result<MagicRectangle> {
    let mut rows = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        rows.push(numbers::<u64>(k + 1, s)?);
    }
    MagicRectangle::from_rows(&rows)
}
