//! Seeded random graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Vertex, VertexSet};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)` on vertices `0..n`.
pub fn random_graph<R: Rng>(rng: &mut R, n: u32, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(0..n, edges).unwrap()
}

/// Connected chordal graph on `0..n`: each new vertex attaches to a clique
/// grown greedily around a random earlier vertex, keeping each candidate with
/// probability `p`.
pub fn random_chordal<R: Rng>(rng: &mut R, n: u32, p: f64) -> Graph {
    grow(rng, n, p, |_, _, _| true)
}

/// Connected strongly chordal graph on `0..n`. A new vertex attaches to a
/// clique whose closed neighbourhoods form a chain, which makes it simple.
pub fn random_strongly_chordal<R: Rng>(rng: &mut R, n: u32, p: f64) -> Graph {
    grow(rng, n, p, |g, s, w| {
        let nw = g.closed_neighborhood(w).unwrap();
        s.iter().all(|&u| {
            let nu = g.closed_neighborhood(u).unwrap();
            nu.is_subset(&nw) || nw.is_subset(&nu)
        })
    })
}

fn grow<R, F>(rng: &mut R, n: u32, p: f64, admissible: F) -> Graph
where
    R: Rng,
    F: Fn(&Graph, &VertexSet, Vertex) -> bool,
{
    let mut g = Graph::from_edges(0..n.min(1), []).unwrap();
    for v in 1..n {
        let anchor = rng.gen_range(0..v);
        let mut s = VertexSet::from([anchor]);
        let mut pool: Vec<Vertex> = g.neighborhood(anchor).unwrap().iter().copied().collect();
        pool.shuffle(rng);
        for w in pool {
            if rng.gen_bool(p) && s.iter().all(|&u| g.has_edge(u, w)) && admissible(&g, &s, w) {
                s.insert(w);
            }
        }
        let edges: Vec<(Vertex, Vertex)> = g
            .edges()
            .map(|e| e.endpoints())
            .chain(s.iter().map(|&u| (u, v)))
            .collect();
        g = Graph::from_edges(0..=v, edges).unwrap();
    }
    g
}
