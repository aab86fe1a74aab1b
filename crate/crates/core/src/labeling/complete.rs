//! MAT-labelings of complete graphs: the height labeling, extension from a
//! subclique, and merging two overlapping cliques.

use std::collections::BTreeMap;

use crate::chordal::VertexOrdering;
use crate::graph::{Edge, Graph, GraphError, Vertex, VertexSet};

use super::{find_mat_peo, verify_mat_labeling, EdgeLabeling, LabelingError};

fn require_complete(lab: &EdgeLabeling) -> Result<(), LabelingError> {
    let n = lab.graph().vertex_count();
    if lab.graph().edge_count() != n * n.saturating_sub(1) / 2 {
        return Err(LabelingError::NotComplete);
    }
    Ok(())
}

fn require_valid(lab: &EdgeLabeling) -> Result<(), LabelingError> {
    require_complete(lab)?;
    verify_mat_labeling(lab).map_err(LabelingError::Invalid)
}

/// `λ(v_i v_j) = j - i` on the complete graph over `order`.
pub fn height_labeling(order: &[Vertex]) -> Result<EdgeLabeling, LabelingError> {
    let mut labels = BTreeMap::new();
    for (i, &u) in order.iter().enumerate() {
        for (j, &v) in order.iter().enumerate().skip(i + 1) {
            labels.insert(Edge::new(u, v)?, (j - i) as u32);
        }
    }
    EdgeLabeling::new(Graph::complete(order.iter().copied()), labels)
}

/// Height labeling of `K_l` on vertices `1..=l`, `l >= 1`.
pub fn height_labeling_complete(l: u32) -> Result<EdgeLabeling, LabelingError> {
    if l == 0 {
        return Err(LabelingError::InvalidArgument(
            "K_0 has no height labeling".into(),
        ));
    }
    height_labeling(&(1..=l).collect::<Vec<_>>())
}

/// Extends an MAT-PEO `w_peo` of the clique `W` to an MAT-PEO of the whole
/// complete graph under `lab`.
///
/// The top-labeled edge of a MAT-labeled complete graph has an MAT-simplicial
/// endpoint outside any proper subclique, so peeling that endpoint off
/// repeatedly reaches `W`.
pub fn extend_mat_peo(
    lab: &EdgeLabeling,
    w: &VertexSet,
    w_peo: &VertexOrdering,
) -> Result<VertexOrdering, LabelingError> {
    require_complete(lab)?;
    if let Some(&v) = w.iter().find(|&&v| !lab.graph().has_vertex(v)) {
        return Err(GraphError::UnknownVertex(v).into());
    }
    let mut current = lab.graph().vertex_set();
    let mut tail = Vec::new();
    while current.len() > w.len() {
        let top = lab
            .iter()
            .filter(|(e, _)| current.contains(&e.lo()) && current.contains(&e.hi()))
            .max_by(|(e, l), (f, m)| l.cmp(m).then(f.cmp(e)));
        let v = match top {
            Some((e, _)) if !w.contains(&e.lo()) => e.lo(),
            Some((e, _)) if !w.contains(&e.hi()) => e.hi(),
            Some((e, _)) => {
                return Err(LabelingError::Internal(format!(
                    "top edge {e} lies inside the subclique"
                )));
            }
            None => *current.difference(w).next().unwrap(),
        };
        tail.push(v);
        current.remove(&v);
    }
    let mut order = w_peo.0.clone();
    order.extend(tail.into_iter().rev());
    Ok(VertexOrdering(order))
}

/// Extends a MAT-labeling of the clique `W` to the complete graph on
/// `target ⊇ W`. New vertices are added in ascending order; each new `v`
/// gets `λ(v_i v) = i` along an MAT-PEO `v_1, v_2, ...` of what is built so far.
pub fn extend_labeling_complete(
    target: &VertexSet,
    lab_w: &EdgeLabeling,
) -> Result<EdgeLabeling, LabelingError> {
    require_valid(lab_w)?;
    if let Some(v) = lab_w.graph().vertices().find(|v| !target.contains(v)) {
        return Err(GraphError::UnknownVertex(v).into());
    }
    let mut cur = lab_w.clone();
    for &v in target.iter().filter(|&&v| !lab_w.graph().has_vertex(v)) {
        let peo = find_mat_peo(&cur)
            .ok_or_else(|| LabelingError::Internal("no MAT-PEO while extending".into()))?;
        let mut labels = cur.labels.clone();
        for (i, &u) in peo.as_slice().iter().enumerate() {
            labels.insert(Edge::new(u, v)?, i as u32 + 1);
        }
        let graph = Graph::complete(cur.graph().vertices().chain([v]));
        cur = EdgeLabeling::new(graph, labels)?;
    }
    Ok(cur)
}

/// Merges MAT-labelings of cliques `A` and `B` that agree on `A ∩ B` into a
/// MAT-labeling of the complete graph on `A ∪ B`.
///
/// With an MAT-PEO `a_1..a_p` of `A ∩ B` extended to `a_1..a_{p+q}` on `A` and
/// to `a_1..a_p, b_1..b_r` on `B`, the cross edge `a_{p+i} b_j` gets
/// `p + i + j - 1`.
pub fn merge_complete(
    lab_a: &EdgeLabeling,
    lab_b: &EdgeLabeling,
) -> Result<EdgeLabeling, LabelingError> {
    require_valid(lab_a)?;
    require_valid(lab_b)?;
    let a = lab_a.graph().vertex_set();
    let b = lab_b.graph().vertex_set();
    let c: VertexSet = a.intersection(&b).copied().collect();
    let lab_c = lab_a.restrict(&c)?;
    if let Some((e, _)) = lab_b
        .restrict(&c)?
        .iter()
        .find(|&(e, l)| lab_c.label(e) != Some(l))
    {
        return Err(LabelingError::Disagree(e));
    }
    let peo_c = find_mat_peo(&lab_c)
        .ok_or_else(|| LabelingError::Internal("no MAT-PEO on the overlap".into()))?;
    let p = c.len();
    let ext_a = extend_mat_peo(lab_a, &c, &peo_c)?;
    let ext_b = extend_mat_peo(lab_b, &c, &peo_c)?;
    let mut merged = lab_a.union(lab_b)?;
    for (i, &x) in ext_a.as_slice()[p..].iter().enumerate() {
        for (j, &y) in ext_b.as_slice()[p..].iter().enumerate() {
            merged
                .labels
                .insert(Edge::new(x, y)?, (p + i + j + 1) as u32);
        }
    }
    EdgeLabeling::new(Graph::complete(a.union(&b).copied()), merged.labels)
}
