//! Maximal cliques of chordal graphs and the clique intersection poset: all
//! intersections of maximal cliques ordered by inclusion.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::chordal::find_peo;
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("graph is not chordal")]
    NotChordal,
    #[error("crowns need k >= 3, got {0}")]
    CrownTooSmall(usize),
    #[error("antichain needs at least two nodes")]
    AntichainTooSmall,
    #[error("node family is not an antichain")]
    NotAnAntichain,
    #[error("no leaf pair exists in antichain {antichain:?}")]
    NoLeafPair { antichain: Vec<VertexSet> },
}

/// Inclusion-maximal cliques of a chordal graph, sorted ascending.
///
/// Each vertex together with its earlier neighbours along a PEO is a clique;
/// the maximal ones among these are exactly the maximal cliques.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<VertexSet>, PosetError> {
    let ord = find_peo(g).ok_or(PosetError::NotChordal)?;
    let mut placed = VertexSet::new();
    let mut candidates: Vec<VertexSet> = Vec::with_capacity(g.vertex_count());
    for &v in ord.as_slice() {
        let mut c: VertexSet = g.nb(v).intersection(&placed).copied().collect();
        c.insert(v);
        placed.insert(v);
        candidates.push(c);
    }
    let mut out: Vec<VertexSet> = candidates
        .iter()
        .filter(|c| {
            !candidates
                .iter()
                .any(|d| c.len() < d.len() && c.is_subset(d))
        })
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    out.sort_by(node_order);
    Ok(out)
}

/// Canonical node order: by size, then lexicographically. Subsets always
/// precede their proper supersets.
pub fn node_order(a: &VertexSet, b: &VertexSet) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// A finite family of vertex sets ordered by inclusion, with its Hasse diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliquePoset {
    nodes: Vec<VertexSet>,
    /// `covers[i]`: indices of the nodes covered by node `i`.
    covers: Vec<Vec<usize>>,
    rank: Vec<usize>,
    maximal: Vec<bool>,
}

impl CliquePoset {
    /// Inclusion order on an arbitrary family of sets (duplicates collapse).
    pub fn from_sets<I: IntoIterator<Item = VertexSet>>(sets: I) -> Self {
        let mut nodes: Vec<VertexSet> = sets
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        nodes.sort_by(node_order);
        let n = nodes.len();
        let below = |i: usize, j: usize| i != j && nodes[i].is_subset(&nodes[j]);
        let mut covers = vec![Vec::new(); n];
        for (x, cov) in covers.iter_mut().enumerate() {
            for y in 0..x {
                if below(y, x) && !(0..n).any(|z| below(y, z) && below(z, x)) {
                    cov.push(y);
                }
            }
        }
        let mut rank = vec![0; n];
        for x in 0..n {
            rank[x] = covers[x].iter().map(|&y| rank[y] + 1).max().unwrap_or(0);
        }
        let maximal = (0..n).map(|x| !(0..n).any(|y| below(x, y))).collect();
        CliquePoset {
            nodes,
            covers,
            rank,
            maximal,
        }
    }

    pub fn nodes(&self) -> &[VertexSet] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, x: &VertexSet) -> Option<usize> {
        self.nodes.iter().position(|n| n == x)
    }

    pub fn covered_by(&self, i: usize) -> &[usize] {
        &self.covers[i]
    }

    /// Cover pairs `(lower, upper)`, sorted.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .covers
            .iter()
            .enumerate()
            .flat_map(|(x, ys)| ys.iter().map(move |&y| (y, x)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn rank(&self, i: usize) -> usize {
        self.rank[i]
    }

    pub fn is_maximal(&self, i: usize) -> bool {
        self.maximal[i]
    }

    pub fn maximal_nodes(&self) -> Vec<VertexSet> {
        (0..self.len())
            .filter(|&i| self.maximal[i])
            .map(|i| self.nodes[i].clone())
            .collect()
    }

    /// The unique minimum, if there is one.
    pub fn bottom(&self) -> Option<&VertexSet> {
        let first = self.nodes.first()?;
        self.nodes
            .iter()
            .all(|n| first.is_subset(n))
            .then_some(first)
    }

    /// Strict inclusion between nodes `i` and `j`.
    pub fn less(&self, i: usize, j: usize) -> bool {
        i != j && self.nodes[i].is_subset(&self.nodes[j])
    }

    /// The same family with the empty set removed.
    pub fn without_empty(&self) -> CliquePoset {
        CliquePoset::from_sets(self.nodes.iter().filter(|n| !n.is_empty()).cloned())
    }
}

/// The clique intersection poset. The null graph gets the single node `∅`.
pub fn build_poset(g: &Graph) -> Result<CliquePoset, PosetError> {
    let cliques = maximal_cliques(g)?;
    if cliques.is_empty() {
        return Ok(CliquePoset::from_sets([VertexSet::new()]));
    }
    let mut family: BTreeSet<VertexSet> = cliques.iter().cloned().collect();
    let mut frontier: Vec<VertexSet> = family.iter().cloned().collect();
    // pairwise intersection to a fixpoint
    while let Some(x) = frontier.pop() {
        let fresh: Vec<VertexSet> = family
            .iter()
            .map(|y| x.intersection(y).copied().collect::<VertexSet>())
            .filter(|z| !family.contains(z))
            .collect();
        for z in fresh {
            if family.insert(z.clone()) {
                frontier.push(z);
            }
        }
    }
    Ok(CliquePoset::from_sets(family))
}

/// An induced `k`-crown: `bottoms[i] < tops[i]` and `bottoms[i] < tops[(i+1) % k]`,
/// no other comparabilities. Entries are node indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrownWitness {
    pub k: usize,
    pub bottoms: Vec<usize>,
    pub tops: Vec<usize>,
}

impl CrownWitness {
    pub fn bottom_sets(&self, p: &CliquePoset) -> Vec<VertexSet> {
        self.bottoms.iter().map(|&i| p.nodes[i].clone()).collect()
    }

    pub fn top_sets(&self, p: &CliquePoset) -> Vec<VertexSet> {
        self.tops.iter().map(|&i| p.nodes[i].clone()).collect()
    }

    /// Re-checks every comparability of the witness against `p`.
    pub fn is_valid_in(&self, p: &CliquePoset) -> bool {
        let k = self.k;
        let elems: Vec<usize> = self.bottoms.iter().chain(&self.tops).copied().collect();
        if k < 3 || self.bottoms.len() != k || self.tops.len() != k {
            return false;
        }
        if elems.iter().collect::<BTreeSet<_>>().len() != 2 * k
            || elems.iter().any(|&e| e >= p.len())
        {
            return false;
        }
        let expected = |a: usize, b: usize| -> bool {
            // a < b in the crown: a = bottom i, b = top i or top i+1
            a < k && b >= k && {
                let (i, j) = (a, b - k);
                j == i || j == (i + 1) % k
            }
        };
        (0..2 * k).all(|a| (0..2 * k).all(|b| p.less(elems[a], elems[b]) == expected(a, b)))
    }
}

/// First induced `k`-crown in search order, or `None`.
///
/// Walks the zigzag `y_1 > x_1 < y_2 > x_2 < ... < y_k`, closing with
/// `x_k < y_1`. `y_1` is the smallest top index, which removes rotations.
pub fn find_crown(p: &CliquePoset, k: usize) -> Result<Option<CrownWitness>, PosetError> {
    if k < 3 {
        return Err(PosetError::CrownTooSmall(k));
    }
    if 2 * k > p.len() {
        return Ok(None);
    }
    let mut seq: Vec<usize> = Vec::with_capacity(2 * k);
    Ok(crown_step(p, k, &mut seq).then(|| CrownWitness {
        k,
        bottoms: seq.iter().skip(1).step_by(2).copied().collect(),
        tops: seq.iter().step_by(2).copied().collect(),
    }))
}

// seq[2i] = y_{i+1}, seq[2i+1] = x_{i+1}
fn crown_step(p: &CliquePoset, k: usize, seq: &mut Vec<usize>) -> bool {
    let pos = seq.len();
    if pos == 2 * k {
        return true;
    }
    let is_top = pos.is_multiple_of(2);
    for c in 0..p.len() {
        if seq.contains(&c) {
            continue;
        }
        if is_top && pos > 0 && c < seq[0] {
            continue;
        }
        let fits = seq.iter().enumerate().all(|(q, &e)| {
            let related = if is_top {
                // new top y_{pos/2+1}: above x at q = pos-1 only, and x_k closes with y_1
                q % 2 == 1 && q == pos - 1
            } else {
                // new bottom x: below y at q = pos-1, and below y_1 if it is x_k
                q % 2 == 0 && (q == pos - 1 || (q == 0 && pos == 2 * k - 1))
            };
            let (lo, hi) = if is_top { (e, c) } else { (c, e) };
            if related {
                p.less(lo, hi) && !p.less(hi, lo)
            } else {
                !p.less(e, c) && !p.less(c, e)
            }
        });
        if fits {
            seq.push(c);
            if crown_step(p, k, seq) {
                return true;
            }
            seq.pop();
        }
    }
    false
}

/// True when no induced `k`-crown exists for any `k >= 3`.
pub fn is_crown_free(p: &CliquePoset) -> bool {
    first_crown(p).is_none()
}

/// The smallest crown, if any.
pub fn first_crown(p: &CliquePoset) -> Option<CrownWitness> {
    (3..=p.len() / 2).find_map(|k| find_crown(p, k).unwrap())
}

/// Finds distinct `X0, Y0` in the antichain with `X0 ∩ Y0 ⊇ X0 ∩ Y` for every
/// `Y ≠ X0`. Pairs are tried in antichain order. Failure means the antichain
/// sits over a crown, so the graph is not strongly chordal.
pub fn leaf_pair(antichain: &[VertexSet]) -> Result<(usize, usize), PosetError> {
    if antichain.len() < 2 {
        return Err(PosetError::AntichainTooSmall);
    }
    for (i, a) in antichain.iter().enumerate() {
        for (j, b) in antichain.iter().enumerate() {
            if i != j && (a.is_subset(b) || a == b) {
                return Err(PosetError::NotAnAntichain);
            }
        }
    }
    for (i, x) in antichain.iter().enumerate() {
        for (j, y0) in antichain.iter().enumerate() {
            if i == j {
                continue;
            }
            let meet: VertexSet = x.intersection(y0).copied().collect();
            let dominates = antichain
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != i)
                .all(|(_, y)| x.intersection(y).all(|v| meet.contains(v)));
            if dominates {
                return Ok((i, j));
            }
        }
    }
    Err(PosetError::NoLeafPair {
        antichain: antichain.to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::graph::Vertex;

    fn set(v: &[Vertex]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn abstract_crown(k: Vertex) -> CliquePoset {
        // x_i = {i}, y_i = {i-1, i}
        let xs = (0..k).map(|i| set(&[i]));
        let ys = (0..k).map(|i| set(&[(i + k - 1) % k, i]));
        CliquePoset::from_sets(xs.chain(ys))
    }

    #[test]
    fn maximal_clique_examples() {
        assert_eq!(
            maximal_cliques(&complete(5)).unwrap(),
            vec![set(&[1, 2, 3, 4, 5])]
        );
        assert_eq!(
            maximal_cliques(&seven_vertex_example()).unwrap(),
            vec![
                set(&[4, 5, 6]),
                set(&[5, 6, 7]),
                set(&[1, 2, 3, 4]),
                set(&[2, 3, 4, 5])
            ]
        );
        let mut k = maximal_cliques(&sun(3)).unwrap();
        k.sort();
        assert_eq!(
            k,
            vec![
                set(&[0, 1, 2]),
                set(&[0, 1, 3]),
                set(&[0, 2, 5]),
                set(&[1, 2, 4])
            ]
        );
        assert_eq!(maximal_cliques(&cycle(4)), Err(PosetError::NotChordal));
    }

    #[test]
    fn poset_of_complete_graph_is_a_point() {
        let p = build_poset(&complete(4)).unwrap();
        assert_eq!(p.nodes(), &[set(&[1, 2, 3, 4])]);
        assert_eq!(p.bottom(), Some(&set(&[1, 2, 3, 4])));
        assert!(p.cover_pairs().is_empty());
    }

    #[test]
    fn poset_of_two_disjoint_edges() {
        let g = Graph::from_edges([], [(1, 2), (3, 4)]).unwrap();
        let p = build_poset(&g).unwrap();
        assert_eq!(p.nodes(), &[set(&[]), set(&[1, 2]), set(&[3, 4])]);
        assert_eq!(p.rank(1), 1);
        assert_eq!(p.bottom(), Some(&set(&[])));
    }

    #[test]
    fn null_graph_poset() {
        let p = build_poset(&Graph::new()).unwrap();
        assert_eq!(p.nodes(), &[set(&[])]);
        assert!(is_crown_free(&p));
    }

    #[test]
    fn crown_examples() {
        let p = build_poset(&sun(3)).unwrap();
        let w = find_crown(&p, 3).unwrap().unwrap();
        assert!(w.is_valid_in(&p));
        assert!(!is_crown_free(&p));

        let p7 = build_poset(&seven_vertex_example()).unwrap();
        assert!(is_crown_free(&p7));

        let c4 = abstract_crown(4);
        let w = find_crown(&c4, 4).unwrap().unwrap();
        assert!(w.is_valid_in(&c4));
        assert_eq!(find_crown(&c4, 3).unwrap(), None);
        assert_eq!(find_crown(&c4, 2), Err(PosetError::CrownTooSmall(2)));

        assert!(is_crown_free(&CliquePoset::from_sets([set(&[1])])));
    }

    #[test]
    fn rank_is_monotone() {
        let p = build_poset(&seven_vertex_example()).unwrap();
        for i in 0..p.len() {
            for j in 0..p.len() {
                if p.less(i, j) {
                    assert!(p.rank(i) < p.rank(j));
                }
            }
        }
    }

    #[test]
    fn leaf_pair_examples() {
        let k = maximal_cliques(&seven_vertex_example()).unwrap();
        let (x, y) = leaf_pair(&k).unwrap();
        let meet: VertexSet = k[x].intersection(&k[y]).copied().collect();
        for (l, other) in k.iter().enumerate() {
            if l != x {
                assert!(k[x].intersection(other).all(|v| meet.contains(v)));
            }
        }
        assert_eq!(
            (k[x].clone(), k[y].clone()),
            (set(&[5, 6, 7]), set(&[4, 5, 6]))
        );

        assert_eq!(leaf_pair(&[set(&[1, 2]), set(&[2, 3])]).unwrap(), (0, 1));

        let ears = vec![set(&[0, 1, 3]), set(&[1, 2, 4]), set(&[0, 2, 5])];
        assert!(matches!(
            leaf_pair(&ears),
            Err(PosetError::NoLeafPair { .. })
        ));
        assert_eq!(leaf_pair(&ears[..1]), Err(PosetError::AntichainTooSmall));
        assert_eq!(
            leaf_pair(&[set(&[1]), set(&[1, 2])]),
            Err(PosetError::NotAnAntichain)
        );
    }
}
