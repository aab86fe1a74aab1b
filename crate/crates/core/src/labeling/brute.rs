//! Exhaustive search for MAT-labelings, used as an independent check on the
//! constructive route. Exponential; guarded by an edge limit.
//!
//! Blocks are chosen level by level. At level `k` only edges with exactly
//! `k - 1` supporting triangles in `E_{k-1}` may enter `π_k`, and subsets of
//! those are tried include-first in edge order. Partial blocks are pruned with
//! union-find against ML1 and ML2, and failed `(k, E_{k-1})` states are
//! remembered.

use std::collections::{BTreeMap, HashSet};

use crate::batch::{self, Exec};
use crate::graph::{Edge, Graph, Vertex};

use super::{EdgeLabeling, LabelingError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteOptions {
    /// Refuse graphs with more edges than this.
    pub max_edges: usize,
    /// Largest label tried. Defaults to `min(|V| - 1, 1 + max common neighbours)`.
    pub max_label: Option<u32>,
    pub exec: Exec,
}

impl Default for BruteOptions {
    fn default() -> Self {
        BruteOptions {
            max_edges: 18,
            max_label: None,
            exec: Exec::default(),
        }
    }
}

/// Hard ceiling from the bitmask representation.
const MASK_BITS: usize = 64;

/// Number of leading level-1 edges decided before splitting work across threads.
const SPLIT_DEPTH: usize = 6;

struct Search {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// Pairs of edge indices completing a triangle with each edge.
    tri: Vec<Vec<(usize, usize)>>,
    max_label: u32,
    all: u64,
}

#[derive(Clone)]
struct Dsu(Vec<u8>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n as u8).collect())
    }

    fn find(&self, mut x: usize) -> usize {
        while self.0[x] as usize != x {
            x = self.0[x] as usize;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb)] = ra.min(rb) as u8;
        true
    }
}

/// State threaded through one sequential search.
struct Walk<'a> {
    s: &'a Search,
    labels: Vec<u32>,
    failed: HashSet<(u32, u64)>,
    visit: &'a mut dyn FnMut(&[u32]) -> bool,
    stop: bool,
}

impl Search {
    fn new(g: &Graph, max_label: Option<u32>) -> (Self, Vec<Edge>) {
        let vs: Vec<Vertex> = g.vertices().collect();
        let idx: BTreeMap<Vertex, usize> = vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let es: Vec<Edge> = g.edges().collect();
        let eidx: BTreeMap<Edge, usize> = es.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let tri: Vec<Vec<(usize, usize)>> = es
            .iter()
            .map(|e| {
                let (u, v) = e.endpoints();
                g.nb(u)
                    .intersection(g.nb(v))
                    .map(|&w| {
                        (
                            eidx[&Edge::new(u, w).unwrap()],
                            eidx[&Edge::new(v, w).unwrap()],
                        )
                    })
                    .collect()
            })
            .collect();
        let intrinsic = tri.iter().map(Vec::len).max().map_or(0, |c| c as u32 + 1);
        let bound = (vs.len().saturating_sub(1) as u32).min(intrinsic);
        let all = if es.len() == 64 {
            u64::MAX
        } else {
            (1u64 << es.len()) - 1
        };
        let s = Search {
            n: vs.len(),
            edges: es.iter().map(|e| (idx[&e.lo()], idx[&e.hi()])).collect(),
            tri,
            max_label: max_label.unwrap_or(bound),
            all,
        };
        (s, es)
    }

    fn support(&self, e: usize, done: u64) -> usize {
        self.tri[e]
            .iter()
            .filter(|&&(a, b)| done >> a & 1 == 1 && done >> b & 1 == 1)
            .count()
    }

    /// Edges eligible for `π_k` given `E_{k-1} = done`, or `None` if some
    /// unassigned edge can no longer be labeled.
    fn candidates(&self, k: u32, done: u64) -> Option<Vec<usize>> {
        let mut out = Vec::new();
        for e in 0..self.edges.len() {
            if done >> e & 1 == 1 {
                continue;
            }
            if self.tri[e].len() + 1 < k as usize {
                return None;
            }
            if self.support(e, done) + 1 == k as usize {
                out.push(e);
            }
        }
        Some(out)
    }

    /// `e` may join the partial block without breaking ML1 or ML2.
    fn admits(&self, dsu: &Dsu, e: usize, done: u64) -> Option<Dsu> {
        let (u, v) = self.edges[e];
        let mut next = dsu.clone();
        if !next.union(u, v) {
            return None;
        }
        let clash = (0..self.edges.len())
            .filter(|&f| done >> f & 1 == 1)
            .any(|f| next.find(self.edges[f].0) == next.find(self.edges[f].1));
        (!clash).then_some(next)
    }

    /// Level-1 partial decisions on the first few candidates, in search order.
    fn prefixes(&self) -> (Vec<usize>, Vec<(u64, Dsu)>) {
        let cands = self.candidates(1, 0).unwrap_or_default();
        let depth = cands.len().min(SPLIT_DEPTH);
        let mut out = vec![(0u64, Dsu::new(self.n))];
        for &e in &cands[..depth] {
            let mut next = Vec::with_capacity(out.len() * 2);
            for (chosen, dsu) in out {
                if let Some(d) = self.admits(&dsu, e, 0) {
                    next.push((chosen | 1 << e, d));
                }
                next.push((chosen, dsu));
            }
            out = next;
        }
        (cands, out)
    }
}

impl Walk<'_> {
    /// Returns whether any complete labeling was reached below this state.
    fn level(&mut self, k: u32, done: u64) -> bool {
        if done == self.s.all {
            self.stop = (self.visit)(&self.labels);
            return true;
        }
        if k > self.s.max_label || self.failed.contains(&(k, done)) {
            return false;
        }
        let Some(cands) = self.s.candidates(k, done) else {
            self.failed.insert((k, done));
            return false;
        };
        let found = self.choose(k, done, &cands, 0, 0, &Dsu::new(self.s.n));
        if !found && !self.stop {
            self.failed.insert((k, done));
        }
        found
    }

    fn choose(
        &mut self,
        k: u32,
        done: u64,
        cands: &[usize],
        i: usize,
        chosen: u64,
        dsu: &Dsu,
    ) -> bool {
        if i == cands.len() {
            return self.level(k + 1, done | chosen);
        }
        let e = cands[i];
        let mut found = false;
        if let Some(next) = self.s.admits(dsu, e, done) {
            self.labels[e] = k;
            found |= self.choose(k, done, cands, i + 1, chosen | 1 << e, &next);
            self.labels[e] = 0;
            if self.stop {
                return found;
            }
        }
        found | self.choose(k, done, cands, i + 1, chosen, dsu)
    }
}

fn labeling_from(g: &Graph, es: &[Edge], labels: &[u32]) -> EdgeLabeling {
    let map = es.iter().copied().zip(labels.iter().copied()).collect();
    EdgeLabeling::new(g.clone(), map).expect("search assigns every edge")
}

fn guard(g: &Graph, opts: &BruteOptions) -> Result<(), LabelingError> {
    let limit = opts.max_edges.min(MASK_BITS);
    if g.edge_count() > limit || g.vertex_count() > u8::MAX as usize {
        return Err(LabelingError::TooManyEdges {
            edges: g.edge_count(),
            limit,
        });
    }
    Ok(())
}

/// The first MAT-labeling in search order, or `None` if there is none. The
/// answer does not depend on `opts.exec`.
pub fn brute_force_mat_labeling(
    g: &Graph,
    opts: &BruteOptions,
) -> Result<Option<EdgeLabeling>, LabelingError> {
    guard(g, opts)?;
    let (s, es) = Search::new(g, opts.max_label);
    let (cands, prefixes) = s.prefixes();
    let depth = cands.len().min(SPLIT_DEPTH);
    let found = batch::find_first_with(opts.exec, &prefixes, |(chosen, dsu)| {
        let mut hit: Option<Vec<u32>> = None;
        let mut visit = |l: &[u32]| {
            hit = Some(l.to_vec());
            true
        };
        let mut labels = vec![0; es.len()];
        for &e in &cands[..depth] {
            if chosen >> e & 1 == 1 {
                labels[e] = 1;
            }
        }
        let mut w = Walk {
            s: &s,
            labels,
            failed: HashSet::new(),
            visit: &mut visit,
            stop: false,
        };
        w.choose(1, 0, &cands, depth, *chosen, dsu);
        hit
    });
    Ok(found.map(|l| labeling_from(g, &es, &l)))
}

/// Every MAT-labeling in search order, up to `cap` of them.
pub fn enumerate_mat_labelings(
    g: &Graph,
    opts: &BruteOptions,
    cap: usize,
) -> Result<Vec<EdgeLabeling>, LabelingError> {
    guard(g, opts)?;
    let (s, es) = Search::new(g, opts.max_label);
    let mut out: Vec<Vec<u32>> = Vec::new();
    if cap > 0 {
        let mut visit = |l: &[u32]| {
            out.push(l.to_vec());
            out.len() >= cap
        };
        let mut w = Walk {
            s: &s,
            labels: vec![0; es.len()],
            failed: HashSet::new(),
            visit: &mut visit,
            stop: false,
        };
        w.level(1, 0);
    }
    Ok(out.iter().map(|l| labeling_from(g, &es, l)).collect())
}
