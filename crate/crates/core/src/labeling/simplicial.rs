//! MAT-simplicial vertices and MAT-perfect elimination orderings.

use crate::chordal::VertexOrdering;
use crate::graph::{Edge, Vertex};

use super::{EdgeLabeling, MatViolation, ViolationKind};

/// Checks MS1–MS3 for `v`:
///
/// * MS1: `v` is simplicial,
/// * MS2: the labels on edges at `v` are exactly `1..=deg(v)`,
/// * MS3: `λ(u1 u2) < max(λ(u1 v), λ(u2 v))` for neighbours `u1, u2`.
pub fn check_mat_simplicial(lab: &EdgeLabeling, v: Vertex) -> Result<(), MatViolation> {
    let g = lab.graph();
    let nb: Vec<Vertex> = g.nb(v).iter().copied().collect();
    let deg = nb.len() as u32;
    let violation = |kind, edges, vertices| MatViolation {
        kind,
        level: deg,
        edges,
        vertices,
    };
    for (i, &a) in nb.iter().enumerate() {
        for &b in &nb[i + 1..] {
            if !g.has_edge(a, b) {
                return Err(violation(
                    ViolationKind::NotSimplicial,
                    Vec::new(),
                    vec![v, a, b],
                ));
            }
        }
    }
    let mut incident: Vec<u32> = nb.iter().map(|&u| lab.at(u, v)).collect();
    incident.sort_unstable();
    if incident.iter().zip(1..).any(|(&l, k)| l != k) {
        let edges = nb.iter().map(|&u| Edge::new(u, v).unwrap()).collect();
        return Err(violation(ViolationKind::IncidentLabels, edges, vec![v]));
    }
    for (i, &a) in nb.iter().enumerate() {
        for &b in &nb[i + 1..] {
            if lab.at(a, b) >= lab.at(a, v).max(lab.at(b, v)) {
                let edges = vec![
                    Edge::new(a, b).unwrap(),
                    Edge::new(a, v).unwrap(),
                    Edge::new(b, v).unwrap(),
                ];
                return Err(violation(
                    ViolationKind::NeighborLabel,
                    edges,
                    vec![v, a, b],
                ));
            }
        }
    }
    Ok(())
}

pub fn is_mat_simplicial(lab: &EdgeLabeling, v: Vertex) -> bool {
    check_mat_simplicial(lab, v).is_ok()
}

/// Greedy MAT-PEO: repeatedly delete the smallest MAT-simplicial vertex.
/// The deletions read backwards give the ordering.
pub fn find_mat_peo(lab: &EdgeLabeling) -> Option<VertexOrdering> {
    let mut current = lab.clone();
    let mut removed = Vec::with_capacity(lab.graph().vertex_count());
    while !current.graph().is_empty() {
        let v = current
            .graph()
            .vertices()
            .find(|&v| is_mat_simplicial(&current, v))?;
        removed.push(v);
        let rest = current
            .graph()
            .vertex_set()
            .into_iter()
            .filter(|&u| u != v)
            .collect();
        current = current.restrict(&rest).ok()?;
    }
    removed.reverse();
    Some(VertexOrdering(removed))
}

/// `v_i` is MAT-simplicial in the labeled subgraph on `v_1..=v_i`, for all `i`.
pub fn is_mat_peo(lab: &EdgeLabeling, ord: &VertexOrdering) -> bool {
    if ord.check_permutation(lab.graph()).is_err() {
        return false;
    }
    let mut prefix = lab.graph().vertex_set();
    let mut current = lab.clone();
    for &v in ord.as_slice().iter().rev() {
        if !is_mat_simplicial(&current, v) {
            return false;
        }
        prefix.remove(&v);
        current = current.restrict(&prefix).unwrap();
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::height_labeling_complete;

    #[test]
    fn height_labeling_peos() {
        let l = height_labeling_complete(4).unwrap();
        assert_eq!(find_mat_peo(&l).unwrap().0, vec![4, 3, 2, 1]);
        assert!(is_mat_simplicial(&l, 4));
        assert!(is_mat_simplicial(&l, 1));
        assert!(!is_mat_simplicial(&l, 2));
        assert!(is_mat_peo(&l, &VertexOrdering(vec![1, 2, 3, 4])));
        assert!(is_mat_peo(&l, &VertexOrdering(vec![2, 1, 3, 4])));
        assert!(!is_mat_peo(&l, &VertexOrdering(vec![1, 3, 2, 4])));
    }

    #[test]
    fn violation_kinds() {
        let l = EdgeLabeling::from_edges([], [(1, 2, 1), (2, 3, 1)]).unwrap();
        assert_eq!(
            check_mat_simplicial(&l, 2).unwrap_err().kind,
            ViolationKind::NotSimplicial
        );
        let l = EdgeLabeling::from_edges([], [(1, 2, 1), (2, 3, 1), (1, 3, 2)]).unwrap();
        assert_eq!(
            check_mat_simplicial(&l, 2).unwrap_err().kind,
            ViolationKind::IncidentLabels
        );
        let l = EdgeLabeling::from_edges([], [(1, 2, 3), (1, 3, 1), (2, 3, 2)]).unwrap();
        assert_eq!(
            check_mat_simplicial(&l, 3).unwrap_err().kind,
            ViolationKind::NeighborLabel
        );
    }
}
