//! Chordality: simplicial vertices, perfect elimination orderings, minimal
//! separators and the exponents read off a PEO.
//!
//! Orderings follow the convention `(v_1, ..., v_l)` where `v_i` is simplicial
//! in the subgraph induced by `{v_1, ..., v_i}`. The last vertex is the first
//! one eliminated.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError, Vertex, VertexSet};
use crate::invariants::ExponentMultiset;

/// A linear order on the vertex set of some graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexOrdering(pub Vec<Vertex>);

impl VertexOrdering {
    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Checks that the ordering is a permutation of `g`'s vertices.
    pub fn check_permutation(&self, g: &Graph) -> Result<(), GraphError> {
        let seen: VertexSet = self.0.iter().copied().collect();
        if seen.len() != self.0.len() || seen.len() != g.vertex_count() {
            return Err(GraphError::NotAPermutation);
        }
        for &v in &seen {
            if !g.has_vertex(v) {
                return Err(GraphError::UnknownVertex(v));
            }
        }
        Ok(())
    }
}

pub fn is_simplicial(g: &Graph, v: Vertex) -> Result<bool, GraphError> {
    let nb = g.neighborhood(v)?;
    g.is_clique(nb)
}

/// Maximum cardinality search, ties broken by the smallest vertex id.
///
/// The visit order is a PEO in the crate's convention whenever `g` is chordal.
pub fn maximum_cardinality_search(g: &Graph) -> VertexOrdering {
    let mut weight: BTreeMap<Vertex, usize> = g.vertices().map(|v| (v, 0)).collect();
    // buckets[w] holds the unvisited vertices of weight w
    let mut buckets: Vec<BTreeSet<Vertex>> = vec![BTreeSet::new(); g.vertex_count() + 1];
    buckets[0] = g.vertex_set();
    let mut top = 0usize;
    let mut order = Vec::with_capacity(g.vertex_count());
    for _ in 0..g.vertex_count() {
        while buckets[top].is_empty() {
            top -= 1;
        }
        let v = buckets[top].pop_first().unwrap();
        weight.remove(&v);
        order.push(v);
        for &u in g.nb(v) {
            if let Some(w) = weight.get_mut(&u) {
                buckets[*w].remove(&u);
                *w += 1;
                buckets[*w].insert(u);
                top = top.max(*w);
            }
        }
    }
    VertexOrdering(order)
}

/// Returns the first index `i` at which `v_i` fails to be simplicial among
/// its predecessors, together with two nonadjacent earlier neighbours.
fn first_peo_violation(g: &Graph, ord: &[Vertex]) -> Option<(usize, Vertex, Vertex)> {
    let pos: BTreeMap<Vertex, usize> = ord.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    for (i, &v) in ord.iter().enumerate() {
        let earlier: Vec<Vertex> = g.nb(v).iter().copied().filter(|u| pos[u] < i).collect();
        for (a, &x) in earlier.iter().enumerate() {
            for &y in &earlier[a + 1..] {
                if !g.has_edge(x, y) {
                    return Some((i, x, y));
                }
            }
        }
    }
    None
}

pub fn is_peo(g: &Graph, ord: &VertexOrdering) -> Result<bool, GraphError> {
    ord.check_permutation(g)?;
    Ok(first_peo_violation(g, ord.as_slice()).is_none())
}

/// A PEO of `g`, or `None` when `g` is not chordal.
pub fn find_peo(g: &Graph) -> Option<VertexOrdering> {
    let ord = maximum_cardinality_search(g);
    first_peo_violation(g, ord.as_slice())
        .is_none()
        .then_some(ord)
}

pub fn is_chordal(g: &Graph) -> bool {
    find_peo(g).is_some()
}

/// A chordless cycle of length at least four, or `None` for chordal graphs.
///
/// For every vertex `v` and nonadjacent pair `x, y` of its neighbours, a
/// shortest `x`-`y` path avoiding the rest of `N[v]` closes an induced cycle
/// through `v`. The first such cycle in vertex order is returned, starting at `v`.
pub fn find_chordless_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    if is_chordal(g) {
        return None;
    }
    for v in g.vertices() {
        let nb: Vec<Vertex> = g.nb(v).iter().copied().collect();
        for (a, &x) in nb.iter().enumerate() {
            for &y in &nb[a + 1..] {
                if g.has_edge(x, y) {
                    continue;
                }
                let mut blocked = g.closed_neighborhood(v).unwrap();
                blocked.remove(&x);
                blocked.remove(&y);
                if let Some(path) = shortest_path(g, x, y, &blocked) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    unreachable!("non-chordal graphs contain a chordless cycle through some vertex")
}

fn shortest_path(g: &Graph, from: Vertex, to: Vertex, blocked: &VertexSet) -> Option<Vec<Vertex>> {
    let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    let mut queue = VecDeque::from([from]);
    parent.insert(from, from);
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[&cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &u in g.nb(v) {
            if !blocked.contains(&u) && !parent.contains_key(&u) {
                parent.insert(u, v);
                queue.push_back(u);
            }
        }
    }
    None
}

/// Decomposition `V = A ⊔ S ⊔ B` around a minimal `(a, b)`-separator `S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparatorDecomposition {
    pub separator: VertexSet,
    /// Component of `a` in `G \ S`.
    pub a_side: VertexSet,
    /// Everything else.
    pub b_side: VertexSet,
}

/// Minimal `(a, b)`-separator: `S = N(C_b)` where `C_b` is the component of
/// `b` in `G \ N[a]`. Both `C_b` and the component of `a` are full components
/// of `S`, which makes `S` minimal.
pub fn minimal_separator_decomposition(
    g: &Graph,
    a: Vertex,
    b: Vertex,
) -> Result<SeparatorDecomposition, GraphError> {
    let na = g.closed_neighborhood(a)?;
    g.neighborhood(b)?;
    if a == b || na.contains(&b) {
        return Err(GraphError::Adjacent(a, b));
    }
    if !g.component_avoiding(a, &VertexSet::new()).contains(&b) {
        return Err(GraphError::Disconnected(a, b));
    }
    let cb = g.component_avoiding(b, &na);
    let separator: VertexSet = cb
        .iter()
        .flat_map(|&v| g.nb(v).iter().copied())
        .filter(|u| !cb.contains(u))
        .collect();
    let a_side = g.component_avoiding(a, &separator);
    let b_side = g
        .vertices()
        .filter(|v| !a_side.contains(v) && !separator.contains(v))
        .collect();
    Ok(SeparatorDecomposition {
        separator,
        a_side,
        b_side,
    })
}

/// Earlier-neighbour counts along `ord`, as a multiset.
pub fn exponents_along(g: &Graph, ord: &VertexOrdering) -> ExponentMultiset {
    let pos: BTreeMap<Vertex, usize> = ord.0.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    ExponentMultiset::new(
        ord.0
            .iter()
            .enumerate()
            .map(|(i, &v)| g.nb(v).iter().filter(|u| pos[u] < i).count() as u32),
    )
}

/// Exponents of the graphic arrangement of a chordal graph.
pub fn peo_exponents(g: &Graph) -> Option<ExponentMultiset> {
    find_peo(g).map(|ord| exponents_along(g, &ord))
}
