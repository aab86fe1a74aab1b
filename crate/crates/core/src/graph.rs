//! Immutable simple undirected graphs over integer vertex ids.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Vertex identifier. Ids need not be contiguous.
pub type Vertex = u32;

/// Sorted vertex set. Every set-valued output in this crate uses it so that
/// iteration order is deterministic.
pub type VertexSet = BTreeSet<Vertex>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("{0} is not an edge of the graph")]
    NotAnEdge(Edge),
    #[error("ordering is not a permutation of the vertex set")]
    NotAPermutation,
    #[error("vertices {0} and {1} are adjacent")]
    Adjacent(Vertex, Vertex),
    #[error("vertices {0} and {1} lie in different components")]
    Disconnected(Vertex, Vertex),
}

/// An undirected edge, stored with the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(Vertex, Vertex);

impl Edge {
    pub fn new(u: Vertex, v: Vertex) -> Result<Self, GraphError> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Ok(Edge(u, v)),
            std::cmp::Ordering::Greater => Ok(Edge(v, u)),
            std::cmp::Ordering::Equal => Err(GraphError::SelfLoop(u)),
        }
    }

    pub fn lo(self) -> Vertex {
        self.0
    }

    pub fn hi(self) -> Vertex {
        self.1
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.0, self.1)
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.0 == v || self.1 == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

/// Simple graph: no loops, no multi-edges, symmetric adjacency.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: BTreeMap<Vertex, VertexSet>,
}

impl Graph {
    /// The null graph.
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from declared vertices and an edge list. Edge endpoints
    /// are declared implicitly; duplicate edges collapse.
    pub fn from_edges<V, E>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = Vertex>,
        E: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj: BTreeMap<Vertex, VertexSet> = BTreeMap::new();
        for v in vertices {
            adj.entry(v).or_default();
        }
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj.entry(u).or_default().insert(v);
            adj.entry(v).or_default().insert(u);
        }
        Ok(Graph { adj })
    }

    /// Complete graph on the given vertices.
    pub fn complete<V: IntoIterator<Item = Vertex>>(vertices: V) -> Self {
        let vs: Vec<Vertex> = vertices.into_iter().collect();
        let mut adj: BTreeMap<Vertex, VertexSet> = BTreeMap::new();
        for &v in &vs {
            let nb = vs.iter().copied().filter(|&u| u != v).collect();
            adj.insert(v, nb);
        }
        Graph { adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.adj.keys().copied().collect()
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    /// Edges in ascending canonical order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, nb)| nb.range(u + 1..).map(move |&v| Edge(u, v)))
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|nb| nb.contains(&v))
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.0, e.1)
    }

    fn check(&self, v: Vertex) -> Result<(), GraphError> {
        if self.has_vertex(v) {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    fn check_all<'a, I: IntoIterator<Item = &'a Vertex>>(&self, s: I) -> Result<(), GraphError> {
        s.into_iter().try_for_each(|&v| self.check(v))
    }

    /// Open neighborhood.
    pub fn neighborhood(&self, v: Vertex) -> Result<&VertexSet, GraphError> {
        self.adj.get(&v).ok_or(GraphError::UnknownVertex(v))
    }

    /// Panicking neighborhood lookup for ids already known to be present.
    pub(crate) fn nb(&self, v: Vertex) -> &VertexSet {
        &self.adj[&v]
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighborhood(&self, v: Vertex) -> Result<VertexSet, GraphError> {
        let mut s = self.neighborhood(v)?.clone();
        s.insert(v);
        Ok(s)
    }

    pub fn degree(&self, v: Vertex) -> Result<usize, GraphError> {
        self.neighborhood(v).map(BTreeSet::len)
    }

    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        self.check_all(s)?;
        let adj = s
            .iter()
            .map(|&v| (v, self.adj[&v].intersection(s).copied().collect()))
            .collect();
        Ok(Graph { adj })
    }

    pub fn delete_vertex(&self, v: Vertex) -> Result<Graph, GraphError> {
        self.check(v)?;
        let mut s = self.vertex_set();
        s.remove(&v);
        self.induced_subgraph(&s)
    }

    pub fn is_clique(&self, s: &VertexSet) -> Result<bool, GraphError> {
        self.check_all(s)?;
        Ok(s.iter()
            .all(|&u| s.range(u + 1..).all(|&v| self.has_edge(u, v))))
    }

    /// Identifies the endpoints of `e` into its smaller id.
    pub fn contract_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        if !self.contains_edge(e) {
            return Err(GraphError::NotAnEdge(e));
        }
        let (keep, gone) = e.endpoints();
        let mut adj: BTreeMap<Vertex, VertexSet> = BTreeMap::new();
        let rename = |x: Vertex| if x == gone { keep } else { x };
        for (&v, nb) in &self.adj {
            let v = rename(v);
            let entry = adj.entry(v).or_default();
            entry.extend(nb.iter().map(|&u| rename(u)).filter(|&u| u != v));
        }
        Ok(Graph { adj })
    }

    /// Edge-deleted subgraph on the same vertex set.
    pub fn without_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        if !self.contains_edge(e) {
            return Err(GraphError::NotAnEdge(e));
        }
        let mut g = self.clone();
        g.adj.get_mut(&e.0).unwrap().remove(&e.1);
        g.adj.get_mut(&e.1).unwrap().remove(&e.0);
        Ok(g)
    }

    /// Spanning subgraph `(V, F)`.
    pub fn spanning_subgraph<I: IntoIterator<Item = Edge>>(
        &self,
        edges: I,
    ) -> Result<Graph, GraphError> {
        let mut adj: BTreeMap<Vertex, VertexSet> =
            self.adj.keys().map(|&v| (v, VertexSet::new())).collect();
        for e in edges {
            if !self.contains_edge(e) {
                return Err(GraphError::NotAnEdge(e));
            }
            adj.get_mut(&e.0).unwrap().insert(e.1);
            adj.get_mut(&e.1).unwrap().insert(e.0);
        }
        Ok(Graph { adj })
    }

    /// Vertices reachable from `start` while avoiding `blocked`.
    pub fn component_avoiding(&self, start: Vertex, blocked: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::new();
        if blocked.contains(&start) || !self.has_vertex(start) {
            return seen;
        }
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some(v) = queue.pop_front() {
            for &u in &self.adj[&v] {
                if !blocked.contains(&u) && seen.insert(u) {
                    queue.push_back(u);
                }
            }
        }
        seen
    }

    pub fn components(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut done = VertexSet::new();
        for v in self.vertices() {
            if done.contains(&v) {
                continue;
            }
            let c = self.component_avoiding(v, &VertexSet::new());
            done.extend(c.iter().copied());
            out.push(c);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Relabels vertices to `0..n` preserving order.
    pub fn compact(&self) -> Graph {
        let index: BTreeMap<Vertex, Vertex> = self
            .vertices()
            .enumerate()
            .map(|(i, v)| (v, i as Vertex))
            .collect();
        let adj = self
            .adj
            .iter()
            .map(|(v, nb)| (index[v], nb.iter().map(|u| index[u]).collect()))
            .collect();
        Graph { adj }
    }
}

/// Named graphs used throughout tests, examples and the CLI.
pub mod named {
    use super::{Edge, Graph, Vertex};

    pub fn path(n: Vertex) -> Graph {
        Graph::from_edges(1..=n, (1..n).map(|i| (i, i + 1))).unwrap()
    }

    pub fn cycle(n: Vertex) -> Graph {
        Graph::from_edges(1..=n, (1..=n).map(|i| (i, i % n + 1))).unwrap()
    }

    pub fn complete(n: Vertex) -> Graph {
        Graph::complete(1..=n)
    }

    pub fn edgeless(n: Vertex) -> Graph {
        Graph::from_edges(1..=n, []).unwrap()
    }

    /// Claw `K_{1,3}` with center 0.
    pub fn claw() -> Graph {
        Graph::from_edges(0..4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    /// Net: a triangle `{0,1,2}` with pendant vertices 3, 4, 5.
    pub fn net() -> Graph {
        Graph::from_edges(0..6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap()
    }

    /// The `n`-sun. The central clique is `0..n` (u_1..u_n) and the outer
    /// vertex `n + i` (v_{i+1}) is adjacent to `i` and `(i + 1) mod n`.
    pub fn sun(n: Vertex) -> Graph {
        assert!(n >= 3, "suns start at n = 3");
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
            edges.push((n + i, i));
            edges.push((n + i, (i + 1) % n));
        }
        Graph::from_edges(0..2 * n, edges).unwrap()
    }

    /// The seven-vertex unit interval graph with maximal cliques
    /// `{1,2,3,4}`, `{2,3,4,5}`, `{4,5,6}`, `{5,6,7}`. Vertex `i` is `v_i`.
    pub fn seven_vertex_example() -> Graph {
        Graph::from_edges(
            1..=7,
            [
                (1, 2),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
                (2, 5),
                (3, 4),
                (3, 5),
                (4, 5),
                (4, 6),
                (5, 6),
                (5, 7),
                (6, 7),
            ],
        )
        .unwrap()
    }

    /// The rising sun: `K_4` on `1..=4` (x_1..x_4) with ears 5, 6, 7 on the
    /// consecutive pairs `{2,3}`, `{3,4}`, `{4,1}`. The pair `{1,2}` has no ear.
    pub fn rising_sun() -> Graph {
        Graph::from_edges(
            1..=7,
            [
                (1, 2),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
                (3, 4),
                (5, 2),
                (5, 3),
                (6, 3),
                (6, 4),
                (7, 4),
                (7, 1),
            ],
        )
        .unwrap()
    }

    /// Edge of the rising sun whose contraction produces the 3-sun.
    pub fn rising_sun_marked_edge() -> Edge {
        Edge::new(1, 2).unwrap()
    }
}
