//! Edge labelings and MAT-labelings of graphs.
//!
//! A labeling `λ: E → {1, 2, ...}` splits the edge set into blocks
//! `π_k = λ⁻¹(k)`. Writing `E_k = π_1 ∪ ... ∪ π_k`, it is a MAT-labeling when
//! for every `k`:
//!
//! * ML1: `π_k` is a forest,
//! * ML2: no edge of `E_{k-1}` joins two vertices connected in `π_k`,
//! * ML3: every `e ∈ π_k` lies in exactly `k - 1` triangles whose other two
//!   edges are in `E_{k-1}`.

mod brute;
mod complete;
mod construct;
mod simplicial;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Edge, Graph, GraphError, Vertex, VertexSet};

pub use brute::{brute_force_mat_labeling, enumerate_mat_labelings, BruteOptions};
pub use complete::{
    extend_labeling_complete, extend_mat_peo, height_labeling, height_labeling_complete,
    merge_complete,
};
pub use construct::{
    construct_mat_labeling, construct_with_trace, node_family, Construction, GlueStep, NodeFamily,
    Rejection,
};
pub use simplicial::{check_mat_simplicial, find_mat_peo, is_mat_peo, is_mat_simplicial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("edge {0} has no label")]
    Unlabeled(Edge),
    #[error("label on {0}, which is not an edge")]
    Stray(Edge),
    #[error("edge {0} has label 0; labels start at 1")]
    ZeroLabel(Edge),
    #[error("graph is not complete")]
    NotComplete,
    #[error("labelings disagree on edge {0}")]
    Disagree(Edge),
    #[error("input labeling is not a MAT-labeling: {0}")]
    Invalid(MatViolation),
    #[error("graph is not strongly chordal")]
    NotStronglyChordal(Box<Rejection>),
    #[error("{edges} edges exceeds the brute-force limit of {limit}")]
    TooManyEdges { edges: usize, limit: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

/// A total labeling of the edges of a graph by positive integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLabeling {
    graph: Graph,
    labels: BTreeMap<Edge, u32>,
}

impl EdgeLabeling {
    /// Checks that `labels` covers exactly the edges of `graph`, all positive.
    pub fn new(graph: Graph, labels: BTreeMap<Edge, u32>) -> Result<Self, LabelingError> {
        for (&e, &l) in &labels {
            if !graph.contains_edge(e) {
                return Err(LabelingError::Stray(e));
            }
            if l == 0 {
                return Err(LabelingError::ZeroLabel(e));
            }
        }
        if let Some(e) = graph.edges().find(|e| !labels.contains_key(e)) {
            return Err(LabelingError::Unlabeled(e));
        }
        Ok(EdgeLabeling { graph, labels })
    }

    /// The labeling of an edgeless graph.
    pub fn trivial(graph: Graph) -> Result<Self, LabelingError> {
        Self::new(graph, BTreeMap::new())
    }

    /// Builds the graph from the labeled edges plus `extra` isolated vertices.
    pub fn from_edges<V, I>(extra: V, labeled: I) -> Result<Self, LabelingError>
    where
        V: IntoIterator<Item = Vertex>,
        I: IntoIterator<Item = (Vertex, Vertex, u32)>,
    {
        let mut labels = BTreeMap::new();
        for (u, v, l) in labeled {
            let e = Edge::new(u, v)?;
            if labels.insert(e, l).is_some_and(|old| old != l) {
                return Err(LabelingError::Disagree(e));
            }
        }
        let graph = Graph::from_edges(extra, labels.keys().map(|e| e.endpoints()))?;
        Self::new(graph, labels)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn labels(&self) -> &BTreeMap<Edge, u32> {
        &self.labels
    }

    pub fn label(&self, e: Edge) -> Option<u32> {
        self.labels.get(&e).copied()
    }

    /// Label of `{u, v}`. Panics if it is not an edge.
    pub(crate) fn at(&self, u: Vertex, v: Vertex) -> u32 {
        self.labels[&Edge::new(u, v).unwrap()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, u32)> + '_ {
        self.labels.iter().map(|(&e, &l)| (e, l))
    }

    pub fn max_label(&self) -> u32 {
        self.labels.values().copied().max().unwrap_or(0)
    }

    pub fn blocks(&self) -> LabelBlocks {
        let mut blocks = vec![Vec::new(); self.max_label() as usize];
        for (e, l) in self.iter() {
            blocks[l as usize - 1].push(e);
        }
        LabelBlocks { blocks }
    }

    /// `|π_k|` for `k = 1..=max_label`.
    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks().blocks.iter().map(Vec::len).collect()
    }

    /// Restriction to the induced subgraph on `s`.
    pub fn restrict(&self, s: &VertexSet) -> Result<EdgeLabeling, LabelingError> {
        let graph = self.graph.induced_subgraph(s)?;
        let labels = self
            .labels
            .iter()
            .filter(|(e, _)| s.contains(&e.lo()) && s.contains(&e.hi()))
            .map(|(&e, &l)| (e, l))
            .collect();
        Ok(EdgeLabeling { graph, labels })
    }

    /// Restriction to the spanning subgraph with edge set `f`.
    pub fn restrict_edges(&self, f: &BTreeSet<Edge>) -> Result<EdgeLabeling, LabelingError> {
        let graph = self.graph.spanning_subgraph(f.iter().copied())?;
        let labels = self
            .labels
            .iter()
            .filter(|(e, _)| f.contains(e))
            .map(|(&e, &l)| (e, l))
            .collect();
        Ok(EdgeLabeling { graph, labels })
    }

    /// Union of two labelings that agree on shared edges. The result lives on
    /// the union graph.
    pub fn union(&self, other: &EdgeLabeling) -> Result<EdgeLabeling, LabelingError> {
        let mut labels = self.labels.clone();
        for (e, l) in other.iter() {
            if labels.insert(e, l).is_some_and(|old| old != l) {
                return Err(LabelingError::Disagree(e));
            }
        }
        let graph = Graph::from_edges(
            self.graph.vertices().chain(other.graph.vertices()),
            labels.keys().map(|e| e.endpoints()),
        )?;
        Ok(EdgeLabeling { graph, labels })
    }
}

/// For a MAT-labeling of a chordal graph, sends each edge of the top block
/// to the unique maximal clique containing it. The map is checked to be a
/// bijection onto the largest cliques.
pub fn largest_clique_edges(
    lab: &EdgeLabeling,
) -> Result<BTreeMap<Edge, VertexSet>, LabelingError> {
    verify_mat_labeling(lab).map_err(LabelingError::Invalid)?;
    let cliques = crate::poset::maximal_cliques(lab.graph())
        .map_err(|e| LabelingError::InvalidArgument(e.to_string()))?;
    let top = lab.max_label();
    let omega = cliques.iter().map(VertexSet::len).max().unwrap_or(0);
    let mut out = BTreeMap::new();
    for &e in lab.blocks().block(top) {
        let mut hosts = cliques
            .iter()
            .filter(|c| c.contains(&e.lo()) && c.contains(&e.hi()));
        match (hosts.next(), hosts.next()) {
            (Some(c), None) => {
                out.insert(e, c.clone());
            }
            _ => {
                return Err(LabelingError::Internal(format!(
                    "top edge {e} is not in a unique maximal clique"
                )))
            }
        }
    }
    let image: BTreeSet<&VertexSet> = out.values().collect();
    let largest: BTreeSet<&VertexSet> = cliques.iter().filter(|c| c.len() == omega).collect();
    if top > 0 && (image.len() != out.len() || image != largest) {
        return Err(LabelingError::Internal(
            "top block does not biject onto the largest cliques".into(),
        ));
    }
    Ok(out)
}

/// Edge blocks `π_1, π_2, ...` of a labeling, each sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelBlocks {
    blocks: Vec<Vec<Edge>>,
}

impl LabelBlocks {
    /// `π_k`; empty for out-of-range `k`.
    pub fn block(&self, k: u32) -> &[Edge] {
        match k {
            0 => &[],
            _ => self.blocks.get(k as usize - 1).map_or(&[], Vec::as_slice),
        }
    }

    /// `E_k = π_1 ∪ ... ∪ π_k`, sorted.
    pub fn prefix(&self, k: u32) -> Vec<Edge> {
        let mut out: Vec<Edge> = (1..=k)
            .flat_map(|j| self.block(j).iter().copied())
            .collect();
        out.sort_unstable();
        out
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &[Edge])> {
        self.blocks
            .iter()
            .enumerate()
            .map(|(i, b)| (i as u32 + 1, b.as_slice()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ViolationKind {
    /// `π_k` contains a cycle.
    ForestCycle,
    /// An earlier edge joins two vertices connected in `π_k`.
    Closure,
    /// Wrong number of supporting triangles.
    TriangleCount,
    /// Neighbourhood is not a clique.
    NotSimplicial,
    /// Incident labels are not `1..=deg`.
    IncidentLabels,
    /// A neighbour edge carries a label too large.
    NeighborLabel,
}

/// Why a labeling fails, with the edges and vertices that show it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatViolation {
    pub kind: ViolationKind,
    /// The block `k` for ML conditions, the vertex degree for MS conditions.
    pub level: u32,
    pub edges: Vec<Edge>,
    pub vertices: Vec<Vertex>,
}

impl fmt::Display for MatViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            ViolationKind::ForestCycle => "ML1: block contains a cycle",
            ViolationKind::Closure => "ML2: earlier edge inside a block component",
            ViolationKind::TriangleCount => "ML3: wrong triangle count",
            ViolationKind::NotSimplicial => "MS1: neighbourhood is not a clique",
            ViolationKind::IncidentLabels => "MS2: incident labels are not 1..deg",
            ViolationKind::NeighborLabel => "MS3: neighbour edge label too large",
        };
        write!(f, "{what} at level {}", self.level)?;
        if !self.edges.is_empty() {
            let es: Vec<String> = self.edges.iter().map(Edge::to_string).collect();
            write!(f, "; edges {}", es.join(" "))?;
        }
        if !self.vertices.is_empty() {
            write!(f, "; vertices {:?}", self.vertices)?;
        }
        Ok(())
    }
}

/// Union-find over vertex ids.
#[derive(Debug, Clone, Default)]
struct Components {
    parent: BTreeMap<Vertex, Vertex>,
}

impl Components {
    fn find(&mut self, v: Vertex) -> Vertex {
        let p = *self.parent.get(&v).unwrap_or(&v);
        if p == v {
            return v;
        }
        let r = self.find(p);
        self.parent.insert(v, r);
        r
    }

    fn union(&mut self, a: Vertex, b: Vertex) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent.insert(ra.max(rb), ra.min(rb));
        true
    }
}

/// Path between `a` and `b` using only `edges`, as edges in walk order.
fn forest_path(edges: &[Edge], a: Vertex, b: Vertex) -> Vec<Edge> {
    let mut prev: BTreeMap<Vertex, Edge> = BTreeMap::new();
    let mut queue = std::collections::VecDeque::from([a]);
    let mut seen = VertexSet::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == b {
            break;
        }
        for &e in edges.iter().filter(|e| e.contains(x)) {
            let y = if e.lo() == x { e.hi() } else { e.lo() };
            if seen.insert(y) {
                prev.insert(y, e);
                queue.push_back(y);
            }
        }
    }
    let mut path = Vec::new();
    let mut x = b;
    while let Some(&e) = prev.get(&x) {
        path.push(e);
        x = if e.lo() == x { e.hi() } else { e.lo() };
    }
    path.reverse();
    path
}

/// Checks ML1–ML3 level by level and reports the first violation.
pub fn verify_mat_labeling(lab: &EdgeLabeling) -> Result<(), MatViolation> {
    let g = lab.graph();
    let blocks = lab.blocks();
    let mut earlier: Vec<Edge> = Vec::new();
    for (k, block) in blocks.iter() {
        let mut comps = Components::default();
        for (i, &e) in block.iter().enumerate() {
            if !comps.union(e.lo(), e.hi()) {
                let mut cycle = forest_path(&block[..i], e.lo(), e.hi());
                cycle.push(e);
                return Err(MatViolation {
                    kind: ViolationKind::ForestCycle,
                    level: k,
                    edges: cycle,
                    vertices: Vec::new(),
                });
            }
        }
        if let Some(&f) = earlier
            .iter()
            .find(|f| comps.find(f.lo()) == comps.find(f.hi()))
        {
            let mut edges = vec![f];
            edges.extend(forest_path(block, f.lo(), f.hi()));
            return Err(MatViolation {
                kind: ViolationKind::Closure,
                level: k,
                edges,
                vertices: Vec::new(),
            });
        }
        for &e in block {
            let (u, v) = e.endpoints();
            let support: Vec<Vertex> = g
                .nb(u)
                .intersection(g.nb(v))
                .copied()
                .filter(|&w| lab.at(u, w) < k && lab.at(v, w) < k)
                .collect();
            if support.len() != k as usize - 1 {
                return Err(MatViolation {
                    kind: ViolationKind::TriangleCount,
                    level: k,
                    edges: vec![e],
                    vertices: support,
                });
            }
        }
        earlier.extend_from_slice(block);
    }
    Ok(())
}

pub fn is_mat_labeling(lab: &EdgeLabeling) -> bool {
    verify_mat_labeling(lab).is_ok()
}
