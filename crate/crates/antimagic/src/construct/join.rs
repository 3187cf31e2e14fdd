use super::{ConstructionCertificate, Origin};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::graph::{cycle, join, null};
use crate::labeling::{EdgeLabeling, GuideEntry, GuideMatrix};

/// The two-row guide for the cycle-to-null part of `C_2m ∨ O_2n`.
///
/// Each entry expands to a column of `m` labels: `2·S_m(a)` walked in the
/// entry's direction, minus one for entries marked odd (shown in
/// parentheses). The odd entries use every magnitude in `2..=2n+1` once, and
/// so do the even ones, so the expansion fills `2m+1..=2m+4mn` exactly.
pub fn join_guide(n: u64) -> GuideMatrix {
    use GuideEntry as G;
    if n == 1 {
        // The general first column pair alone would give the odd rows two odd
        // labels each; swapping the second column's flavours restores parity
        // balance and keeps the same three sums.
        let top = [G::minus(2).odd(), G::minus(2)];
        let bottom = [G::minus(3), G::minus(3).odd()];
        return GuideMatrix::new(2, 2, top.into_iter().chain(bottom).map(Some).collect()).expect("2x2");
    }
    let mut top = vec![G::minus(2).odd(), G::minus(3).odd()];
    let mut bottom = vec![G::minus(2 * n + 1), G::minus(2 * n)];
    top.extend([G::plus(2), G::minus(2 * n - 1)]);
    bottom.extend([G::minus(2 * n + 1).odd(), G::plus(4).odd()]);
    for i in 1..n - 1 {
        top.extend([G::plus(2 * i + 1), G::minus(2 * n + 1 - 2 * i).odd()]);
        bottom.extend([G::minus(2 * n + 2 - 2 * i).odd(), G::plus(2 * i + 2)]);
    }
    let cols = top.len();
    GuideMatrix::new(2, cols, top.into_iter().chain(bottom).map(Some).collect())
        .expect("two full rows")
}

/// A local antimagic 3-coloring of `C_2m ∨ O_2n` with parity balance at
/// every vertex.
///
/// Vertex numbering: cycle vertices `u1..u2m` are `0..2m`, null vertices
/// `v1..v2n` follow. The cycle edge `u_i u_{i+1}` is labeled `i`; the rest
/// comes from expanding [`join_guide`] column by column (rows `u1, u3, …`
/// from the top guide row, rows `u2, u4, …` from the bottom one), followed
/// by a rotation of the first column of the odd rows that evens out their
/// sums.
///
/// The three colors are `4mn²−2mn+6m+n+1` on odd-indexed cycle vertices,
/// `4mn²+10mn−2m+n+1` on even-indexed ones and `(4mn+4m+1)m` on the null
/// side. For `(m, n) = (4, 3)` the last two coincide, so that case uses
/// stored reference data (sums 202, 206, 260).
pub fn label_join_cycle_null(m: u64, n: u64) -> Result<ConstructionCertificate> {
    if m < 2 || n < 1 {
        return Err(Error::InvalidParameter(format!("need m >= 2 and n >= 1 (got m={m}, n={n})")));
    }
    if (m, n) == (4, 3) {
        return patched_8_6();
    }
    let (mu, nu) = (m as usize, n as usize);
    let cycle_len = 2 * mu;
    let guide = join_guide(n);
    // b[r][c]: r < m is u_{2r+1}, r >= m is u_{2(r-m)+2}
    let mut b = vec![vec![0u64; 2 * nu]; cycle_len];
    for (r, row) in b.iter_mut().enumerate() {
        let (g_row, i) = if r < mu { (0, r) } else { (1, r - mu) };
        for (c, cell) in row.iter_mut().enumerate() {
            *cell = guide.get(g_row, c).expect("full guide").join_value(m, i as u64 + 1);
        }
    }
    // Rotate the first column of the odd block down by one.
    b[0][0] -= 2 * (m - 1);
    for row in b.iter_mut().take(mu).skip(1) {
        row[0] += 2;
    }

    let row_vertex: Vec<usize> = (0..cycle_len).map(|r| if r < mu { 2 * r } else { 2 * (r - mu) + 1 }).collect();
    let odd = 4 * m * n * n - 2 * m * n + 6 * m + n + 1;
    let even = 4 * m * n * n + 10 * m * n - 2 * m + n + 1;
    let null_side = (4 * m * n + 4 * m + 1) * m;
    let cycle_labels: Vec<u64> = (1..=2 * m).collect();
    assemble(m, n, &cycle_labels, &row_vertex, &b, [odd, even, null_side], |c| Origin::GuideColumn { column: c })
}

fn patched_8_6() -> Result<ConstructionCertificate> {
    let b = fixtures::join_8_6_block().to_rows();
    let rows = fixtures::JOIN_8_6_ROW_VERTICES;
    assemble(4, 3, &fixtures::JOIN_8_6_CYCLE_LABELS, &rows, &b, [202, 206, 260], |_| Origin::Fixture)
}

fn assemble(
    m: u64,
    n: u64,
    cycle_labels: &[u64],
    row_vertex: &[usize],
    b: &[Vec<u64>],
    [odd, even, null_side]: [u64; 3],
    origin: impl Fn(usize) -> Origin,
) -> Result<ConstructionCertificate> {
    let (cycle_len, null_len) = (2 * m as usize, 2 * n as usize);
    let list: Vec<usize> = row_vertex
        .iter()
        .copied()
        .chain((0..null_len).map(|v| cycle_len + v))
        .collect();
    let graph = join(&cycle(cycle_len)?, &null(null_len)?).with_vertex_list(list)?;
    let mut row_of = vec![0; cycle_len];
    for (r, &u) in row_vertex.iter().enumerate() {
        row_of[u] = r;
    }
    let fixed = cycle_len;
    let mut labels = Vec::with_capacity(graph.size());
    let mut origins = Vec::with_capacity(graph.size());
    for (k, &(u, v)) in graph.edges().iter().enumerate() {
        if k < fixed {
            labels.push(cycle_labels[k]);
            origins.push(Origin::Cycle);
        } else {
            let c = v - cycle_len;
            labels.push(b[row_of[u]][c]);
            origins.push(origin(c));
        }
    }
    let predicted = (0..cycle_len + null_len)
        .map(|v| match v {
            _ if v >= cycle_len => null_side,
            _ if v % 2 == 0 => odd,
            _ => even,
        })
        .collect();
    let labeling = EdgeLabeling::new(graph, labels)?;
    let q = labeling.labels().len() as u64;
    let cert = ConstructionCertificate::seal(labeling, origins, predicted, (1, q))?;
    if !cert.report.parity_balanced {
        return Err(Error::ConstructionUnsound("parity balance fails".into()));
    }
    Ok(cert)
}
