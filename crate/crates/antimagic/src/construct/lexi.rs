use super::{require_bijective, ConstructionCertificate, Origin};
use crate::error::{Error, Result};
use crate::graph::{lexicographic, null};
use crate::labeling::EdgeLabeling;
use crate::magic::{magic_square, MagicRectangle};
use crate::sequences::Direction;

/// The order-`n` square used for fiber blocks.
///
/// For `n = 2`, where no magic square exists, this is `((1, 4), (3, 2))`:
/// equal row sums but unequal column sums. The sums then depend on which side
/// of each block a vertex sits, so results for `n = 2` are only as good as
/// their final verification.
pub fn fiber_square(n: usize) -> Result<MagicRectangle> {
    if n == 2 {
        MagicRectangle::from_rows(&[vec![1, 4], vec![3, 2]])
    } else {
        magic_square(n)
    }
}

struct Fibers {
    labels: Vec<u64>,
    origins: Vec<Origin>,
    /// Sum contributed to `(u, x)`, indexed `u·n + x`.
    sums: Vec<u64>,
}

/// Labels of `G[O_n]` in [`lexicographic`] edge order, every label raised by
/// `shift`.
///
/// The edge of `G` labeled `i` becomes the block `Ω + (i−1)n²`, read as is
/// when the first endpoint comes first in `G`'s vertex list and transposed
/// otherwise.
fn fibers(g: &EdgeLabeling, n: usize, shift: u64) -> Result<Fibers> {
    let omega = fiber_square(n)?;
    let gg = g.graph();
    let mut pos = vec![0; gg.order()];
    for (i, &v) in gg.vertex_list().iter().enumerate() {
        pos[v] = i;
    }
    let step = (n * n) as u64;
    let (rows, cols) = (omega.row_sums(), omega.col_sums());
    let mut labels = Vec::with_capacity(gg.size() * n * n);
    let mut origins = Vec::with_capacity(gg.size() * n * n);
    let mut sums = vec![0u64; gg.order() * n];
    for (u, v, i) in g.triples() {
        let base = (i - 1) * step + shift;
        let upper = pos[u] < pos[v];
        for x in 0..n {
            for y in 0..n {
                let raw = if upper { omega.get(x, y) } else { omega.get(y, x) };
                labels.push(raw + base);
                origins.push(Origin::Fiber { block: i });
            }
        }
        // Row x of the block belongs to (upper endpoint, x).
        let n64 = n as u64;
        for x in 0..n {
            let (su, sv) = if upper { (rows[x], cols[x]) } else { (cols[x], rows[x]) };
            sums[u * n + x] += su + n64 * base;
            sums[v * n + x] += sv + n64 * base;
        }
    }
    Ok(Fibers { labels, origins, sums })
}

fn check_fiber_order(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidParameter("fiber order must be positive".into()))
    } else {
        Ok(())
    }
}

/// Labels `G[O_n]` from a labeling `g` of `G`, using labels `1..=q(G)·n²`.
///
/// Vertex `(u, x)` gets `g⁺(u)·n³ − (n³−n)·deg(u)/2` for every `x`.
///
/// ```
/// use antimagic::{construct::expand_null_fiber, graph, labeling::EdgeLabeling};
/// let p3 = EdgeLabeling::new(graph::path(3).unwrap(), vec![1, 2]).unwrap();
/// let cert = expand_null_fiber(&p3, 3).unwrap();
/// assert_eq!(cert.report.colors, vec![15, 42, 57]);
/// ```
pub fn expand_null_fiber(g: &EdgeLabeling, n: usize) -> Result<ConstructionCertificate> {
    check_fiber_order(n)?;
    require_bijective(g, "outer")?;
    let cond = g.check_product_conditions(n as u64);
    if let Some(e) = cond.violation() {
        return Err(e);
    }
    let f = fibers(g, n, 0)?;
    let predicted = if n == 2 {
        f.sums.clone()
    } else {
        let values = cond.values();
        (0..g.graph().order() * n).map(|k| values[k / n] as u64).collect()
    };
    let graph = lexicographic(g.graph(), &null(n)?);
    let labeling = EdgeLabeling::new(graph, f.labels)?;
    let q = labeling.labels().len() as u64;
    ConstructionCertificate::seal(labeling, f.origins, predicted, (1, q))
}

/// Labels `G[H]` from labelings `g` of `G` and `h` of `H`.
///
/// The copies of `H` take labels `1..=p·q(H)` (copy `l` sits on the `l`-th
/// vertex of `G`'s list); the fiber blocks take the rest, each raised by
/// `p·q(H)`. That raise adds `deg_G(u)·n·p·q(H)` to the sum at `(u, x)`:
/// it grows with the degree, so it can in principle undo the separation the
/// preconditions guarantee. The assembled labeling is therefore always
/// verified, and a collision comes back as [`Error::ConstructionUnsound`].
pub fn compose_lexi(g: &EdgeLabeling, h: &EdgeLabeling) -> Result<ConstructionCertificate> {
    require_bijective(g, "outer")?;
    require_bijective(h, "inner")?;
    let (gg, hg) = (g.graph(), h.graph());
    let (p, n) = (gg.order(), hg.order());
    let copy_cond = h.check_copy_conditions(p as u64);
    if let Some(e) = copy_cond.violation() {
        return Err(e);
    }
    let prod_cond = g.check_product_conditions(n as u64);
    if let Some(e) = prod_cond.violation() {
        return Err(e);
    }

    let copies = p as u64 * hg.size() as u64;
    let h_guide = h.to_matrix(None)?.guide();
    let mut hpos = vec![0; n];
    for (i, &x) in hg.vertex_list().iter().enumerate() {
        hpos[x] = i;
    }
    let mut labels = Vec::with_capacity(copies as usize + gg.size() * n * n);
    let mut origins = Vec::with_capacity(labels.capacity());
    let mut gpos = vec![0; p];
    for (l, &u) in gg.vertex_list().iter().enumerate() {
        gpos[u] = l;
    }
    // lexicographic() lists the copy on vertex u = 0, 1, … first
    for &l in &gpos {
        let copy = (l + 1) as u64;
        for (x, y, a) in h.triples() {
            let entry = h_guide.get(hpos[x], hpos[y]).expect("edge has a guide entry");
            debug_assert_eq!(entry.direction, Direction::of_label(a));
            labels.push(entry.copy_value(p as u64, copy));
            origins.push(Origin::Copy { copy, source: a });
        }
    }

    let f = fibers(g, n, copies)?;
    labels.extend(f.labels);
    origins.extend(f.origins);

    let per_copy = copy_cond.transformed();
    let predicted: Vec<u64> = if n == 2 {
        (0..p * n).map(|k| per_copy[k % n].expect("integral") as u64 + f.sums[k]).collect()
    } else {
        let values = prod_cond.values();
        let deg = gg.degrees();
        (0..p * n)
            .map(|k| {
                let (u, x) = (k / n, k % n);
                per_copy[x].expect("integral") as u64
                    + values[u] as u64
                    + deg[u] as u64 * n as u64 * copies
            })
            .collect()
    };

    let graph = lexicographic(gg, hg);
    let labeling = EdgeLabeling::new(graph, labels)?;
    let q = labeling.labels().len() as u64;
    ConstructionCertificate::seal(labeling, origins, predicted, (1, q))
}
