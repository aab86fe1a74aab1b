//! Strong chordality: simple elimination orderings, induced suns, and the
//! unit interval test.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::chordal::{is_chordal, VertexOrdering};
use crate::graph::{named, Graph, Vertex, VertexSet};

/// An induced `n`-sun. `center[i]` plays `u_{i+1}` and `outer[i]` plays
/// `v_{i+1}`, which is adjacent to `center[i]` and `center[(i + 1) % n]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SunWitness {
    pub n: usize,
    pub center: Vec<Vertex>,
    pub outer: Vec<Vertex>,
}

impl SunWitness {
    /// Image of the canonical sun vertex ids used by [`named::sun`].
    pub fn vertex_map(&self) -> BTreeMap<Vertex, Vertex> {
        let n = self.n as Vertex;
        (0..n)
            .map(|i| (i, self.center[i as usize]))
            .chain((0..n).map(|i| (n + i, self.outer[i as usize])))
            .collect()
    }

    /// Re-checks that the witness is an induced sun of `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let image: Vec<Vertex> = self.center.iter().chain(&self.outer).copied().collect();
        let distinct: VertexSet = image.iter().copied().collect();
        if self.n < 3 || distinct.len() != 2 * self.n || !image.iter().all(|&v| g.has_vertex(v)) {
            return false;
        }
        let pattern = named::sun(self.n as Vertex);
        let map = self.vertex_map();
        let ok = pattern.vertices().all(|a| {
            pattern
                .vertices()
                .filter(|&b| b > a)
                .all(|b| pattern.has_edge(a, b) == g.has_edge(map[&a], map[&b]))
        });
        ok
    }
}

/// `v` is simple when the closed neighbourhoods of `N[v]` form a chain.
pub fn is_simple(g: &Graph, v: Vertex) -> bool {
    let mut hoods: Vec<VertexSet> = g
        .closed_neighborhood(v)
        .unwrap()
        .iter()
        .map(|&u| g.closed_neighborhood(u).unwrap())
        .collect();
    hoods.sort_by_key(VertexSet::len);
    hoods.windows(2).all(|w| w[0].is_subset(&w[1]))
}

/// Greedy simple-vertex elimination, smallest id first. Returns the ordering
/// in prefix convention (last element eliminated first), or `None` when some
/// stage has no simple vertex.
pub fn find_simple_elimination_ordering(g: &Graph) -> Option<VertexOrdering> {
    let mut current = g.clone();
    let mut removed = Vec::with_capacity(g.vertex_count());
    while !current.is_empty() {
        let v = current.vertices().find(|&v| is_simple(&current, v))?;
        removed.push(v);
        current = current.delete_vertex(v).unwrap();
    }
    removed.reverse();
    Some(VertexOrdering(removed))
}

pub fn is_simple_elimination_ordering(g: &Graph, ord: &VertexOrdering) -> bool {
    if ord.check_permutation(g).is_err() {
        return false;
    }
    let mut prefix: VertexSet = ord.0.iter().copied().collect();
    for &v in ord.0.iter().rev() {
        let h = g.induced_subgraph(&prefix).unwrap();
        if !is_simple(&h, v) {
            return false;
        }
        prefix.remove(&v);
    }
    true
}

/// Chordal and free of induced suns.
pub fn is_strongly_chordal(g: &Graph) -> bool {
    find_simple_elimination_ordering(g).is_some()
}

/// Smallest `n` in `3..=n_max` with an induced `n`-sun, or `None`.
///
/// Backtracks over the central clique in order, then the outer vertices. The
/// first witness found is least in the order `(center, outer)`.
pub fn detect_induced_sun(g: &Graph, n_max: usize) -> Option<SunWitness> {
    (3..=n_max).find_map(|n| sun_of_size(g, n))
}

/// [`detect_induced_sun`] with the default bound `|V| / 2`.
pub fn find_any_sun(g: &Graph) -> Option<SunWitness> {
    detect_induced_sun(g, g.vertex_count() / 2)
}

fn sun_of_size(g: &Graph, n: usize) -> Option<SunWitness> {
    let roots: Vec<Vertex> = g.vertices().filter(|&v| g.nb(v).len() > n).collect();
    crate::batch::find_first(&roots, |&root| {
        let mut center = vec![root];
        extend_center(g, n, &mut center)
    })
}

fn extend_center(g: &Graph, n: usize, center: &mut Vec<Vertex>) -> Option<SunWitness> {
    if center.len() == n {
        let mut outer = Vec::with_capacity(n);
        return extend_outer(g, n, center, &mut outer).then(|| SunWitness {
            n,
            center: center.clone(),
            outer,
        });
    }
    let last = *center.last().unwrap();
    let candidates: Vec<Vertex> = g
        .nb(last)
        .iter()
        .copied()
        .filter(|u| !center.contains(u) && center.iter().all(|&c| g.has_edge(c, *u)))
        .collect();
    for u in candidates {
        // u_i and u_{i+1} need a private common neighbour outside the clique
        if !has_ear(g, center, last, u) {
            continue;
        }
        center.push(u);
        if let Some(w) = extend_center(g, n, center) {
            return Some(w);
        }
        center.pop();
    }
    None
}

fn has_ear(g: &Graph, center: &[Vertex], a: Vertex, b: Vertex) -> bool {
    g.nb(a).iter().any(|&w| {
        w != b
            && !center.contains(&w)
            && g.has_edge(w, b)
            && center.iter().all(|&c| c == a || !g.has_edge(c, w))
    })
}

fn extend_outer(g: &Graph, n: usize, center: &[Vertex], outer: &mut Vec<Vertex>) -> bool {
    let i = outer.len();
    if i == n {
        return true;
    }
    let (a, b) = (center[i], center[(i + 1) % n]);
    let candidates: Vec<Vertex> = g
        .nb(a)
        .iter()
        .copied()
        .filter(|&w| {
            w != b
                && !center.contains(&w)
                && !outer.contains(&w)
                && g.has_edge(w, b)
                && center
                    .iter()
                    .all(|&c| c == a || c == b || !g.has_edge(c, w))
                && outer.iter().all(|&o| !g.has_edge(o, w))
        })
        .collect();
    for w in candidates {
        outer.push(w);
        if extend_outer(g, n, center, outer) {
            return true;
        }
        outer.pop();
    }
    false
}

/// First induced copy of `pattern` in `g`, as a map from pattern vertices
/// (in ascending order) to host vertices; lexicographically least.
pub fn find_induced_subgraph(g: &Graph, pattern: &Graph) -> Option<Vec<Vertex>> {
    let pv: Vec<Vertex> = pattern.vertices().collect();
    let hv: Vec<Vertex> = g.vertices().collect();
    let mut image = Vec::with_capacity(pv.len());
    fn go(g: &Graph, p: &Graph, pv: &[Vertex], hv: &[Vertex], image: &mut Vec<Vertex>) -> bool {
        let i = image.len();
        if i == pv.len() {
            return true;
        }
        for &h in hv {
            if image.contains(&h) || g.nb(h).len() < p.nb(pv[i]).len() {
                continue;
            }
            let ok = (0..i).all(|j| p.has_edge(pv[j], pv[i]) == g.has_edge(image[j], h));
            if ok {
                image.push(h);
                if go(g, p, pv, hv, image) {
                    return true;
                }
                image.pop();
            }
        }
        false
    }
    go(g, pattern, &pv, &hv, &mut image).then_some(image)
}

/// Chordal and free of induced claw, net and 3-sun.
pub fn is_unit_interval(g: &Graph) -> bool {
    is_chordal(g)
        && [named::claw(), named::net(), named::sun(3)]
            .iter()
            .all(|p| find_induced_subgraph(g, p).is_none())
}
