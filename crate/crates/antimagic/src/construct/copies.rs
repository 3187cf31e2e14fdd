use super::{require_bijective, ConstructionCertificate, Origin};
use crate::error::{Error, Result};
use crate::graph::disjoint_copies;
use crate::labeling::EdgeLabeling;

/// Labels `p` disjoint copies of `H` from one labeling `h` of `H`.
///
/// Copy `i` replaces each label `a` by the `i`-th term of `S_p(a)`, walked
/// upward for odd `a` and downward for even `a`. With parity balance every
/// vertex pairs its upward and downward walks, so its sum,
/// `p·h⁺(x) − deg(x)(p−1)/2`, is the same in every copy.
///
/// ```
/// use antimagic::{construct::expand_copies, fixtures};
/// let cert = expand_copies(&fixtures::two_triangles_labeling(), 7).unwrap();
/// assert_eq!(&cert.predicted_sums[..5], &[43, 43, 57, 57, 58]);
/// ```
pub fn expand_copies(h: &EdgeLabeling, p: u64) -> Result<ConstructionCertificate> {
    if p == 0 {
        return Err(Error::InvalidParameter("need at least one copy".into()));
    }
    require_bijective(h, "copied")?;
    let cond = h.check_copy_conditions(p);
    if let Some(e) = cond.violation() {
        return Err(e);
    }
    let base = h.graph();
    let graph = disjoint_copies(base, p as usize)?;
    let guide = h.to_matrix(None)?.guide();
    let n = base.order();
    let mut pos = vec![0; n];
    for (i, &v) in base.vertex_list().iter().enumerate() {
        pos[v] = i;
    }
    let mut labels = Vec::with_capacity(graph.size());
    let mut origins = Vec::with_capacity(graph.size());
    for copy in 1..=p {
        for (x, y, a) in h.triples() {
            let entry = guide.get(pos[x], pos[y]).expect("edge has a guide entry");
            labels.push(entry.copy_value(p, copy));
            origins.push(Origin::Copy { copy, source: a });
        }
    }
    let per_copy: Vec<u64> = cond.transformed().into_iter().map(|t| t.expect("integral under parity balance") as u64).collect();
    let predicted = (0..p as usize).flat_map(|_| per_copy.iter().copied()).collect();
    let labeling = EdgeLabeling::new(graph, labels)?;
    let q = labeling.labels().len() as u64;
    ConstructionCertificate::seal(labeling, origins, predicted, (1, q))
}
