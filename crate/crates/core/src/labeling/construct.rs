//! Constructing a MAT-labeling of a strongly chordal graph through its clique
//! intersection poset.
//!
//! Every node of the poset is a clique. Going up by rank, a node's labeling is
//! obtained by merging the labelings of the nodes it covers (peeling leaf
//! pairs) and extending to the node. The labelings of the maximal cliques are
//! then glued together in leaf-peeling order.

use serde::Serialize;

use crate::chordal::{find_chordless_cycle, is_chordal};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::invariants::{dual_partition, ExponentMultiset};
use crate::poset::{build_poset, first_crown, leaf_pair, CliquePoset, PosetError};
use crate::strong::{find_any_sun, is_strongly_chordal, SunWitness};

use super::{
    extend_labeling_complete, merge_complete, verify_mat_labeling, EdgeLabeling, LabelingError,
};

/// Crown searches are skipped on posets larger than this.
const CROWN_SEARCH_LIMIT: usize = 48;

/// Certificates explaining why no MAT-labeling was built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Rejection {
    pub chordless_cycle: Option<Vec<Vertex>>,
    pub sun: Option<SunWitness>,
    pub crown: Option<CrownSets>,
    /// Antichain of the poset on which leaf-pair peeling got stuck.
    pub stuck_antichain: Option<Vec<VertexSet>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrownSets {
    pub k: usize,
    pub bottoms: Vec<VertexSet>,
    pub tops: Vec<VertexSet>,
}

impl Rejection {
    /// Collects whatever witnesses apply to `g`.
    pub fn for_graph(g: &Graph) -> Self {
        if let Some(c) = find_chordless_cycle(g) {
            return Rejection {
                chordless_cycle: Some(c),
                sun: None,
                crown: None,
                stuck_antichain: None,
            };
        }
        let crown = build_poset(g)
            .ok()
            .filter(|p| p.len() <= CROWN_SEARCH_LIMIT)
            .and_then(|p| {
                first_crown(&p).map(|w| CrownSets {
                    k: w.k,
                    bottoms: w.bottom_sets(&p),
                    tops: w.top_sets(&p),
                })
            });
        Rejection {
            chordless_cycle: None,
            sun: find_any_sun(g),
            crown,
            stuck_antichain: None,
        }
    }

    fn stuck(g: &Graph, antichain: Vec<VertexSet>) -> LabelingError {
        let mut r = Rejection::for_graph(g);
        r.stuck_antichain = Some(antichain);
        LabelingError::NotStronglyChordal(Box::new(r))
    }
}

/// The clique intersection poset with a MAT-labeling of every node. Labelings
/// agree wherever nodes overlap.
#[derive(Debug, Clone)]
pub struct NodeFamily {
    pub poset: CliquePoset,
    pub labelings: Vec<EdgeLabeling>,
}

fn poset_error(g: &Graph, e: PosetError) -> LabelingError {
    match e {
        PosetError::NoLeafPair { antichain } => Rejection::stuck(g, antichain),
        PosetError::NotChordal => {
            LabelingError::NotStronglyChordal(Box::new(Rejection::for_graph(g)))
        }
        other => LabelingError::Internal(other.to_string()),
    }
}

/// Labels every node of the clique intersection poset, rank by rank.
pub fn node_family(g: &Graph) -> Result<NodeFamily, LabelingError> {
    let poset = build_poset(g).map_err(|e| poset_error(g, e))?;
    let mut order: Vec<usize> = (0..poset.len()).collect();
    order.sort_by_key(|&i| (poset.rank(i), i));
    let mut labs: Vec<Option<EdgeLabeling>> = vec![None; poset.len()];
    for x in order {
        let covered = poset.covered_by(x);
        let base = if covered.is_empty() {
            EdgeLabeling::trivial(Graph::new())?
        } else {
            merge_covered(g, &poset, &labs, covered)?
        };
        labs[x] = Some(extend_labeling_complete(&poset.nodes()[x], &base)?);
    }
    Ok(NodeFamily {
        labelings: labs.into_iter().map(Option::unwrap).collect(),
        poset,
    })
}

// Merges the labelings of an antichain of nodes by splitting off leaves.
fn merge_covered(
    g: &Graph,
    poset: &CliquePoset,
    labs: &[Option<EdgeLabeling>],
    idxs: &[usize],
) -> Result<EdgeLabeling, LabelingError> {
    let lab = |i: usize| labs[i].as_ref().expect("covered nodes are labeled first");
    if idxs.len() == 1 {
        return Ok(lab(idxs[0]).clone());
    }
    let sets: Vec<VertexSet> = idxs.iter().map(|&i| poset.nodes()[i].clone()).collect();
    let (x0, _) = leaf_pair(&sets).map_err(|e| poset_error(g, e))?;
    let rest: Vec<usize> = idxs
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != x0)
        .map(|(_, &n)| n)
        .collect();
    let merged = merge_covered(g, poset, labs, &rest)?;
    merge_complete(&merged, lab(idxs[x0]))
}

/// One gluing step: the maximal clique `added` joins the part built so far
/// through `separator = added ∩ attached_to`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GlueStep {
    pub added: VertexSet,
    pub attached_to: VertexSet,
    pub separator: VertexSet,
    /// Exponents of the partial graph after this step.
    pub exponents: ExponentMultiset,
}

/// A MAT-labeling with the record of how it was glued together.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Construction {
    #[serde(skip)]
    pub labeling: EdgeLabeling,
    /// The maximal clique gluing starts from.
    pub root: VertexSet,
    pub root_exponents: ExponentMultiset,
    pub steps: Vec<GlueStep>,
}

/// MAT-labeling of a strongly chordal graph, or a rejection with witnesses.
pub fn construct_mat_labeling(g: &Graph) -> Result<EdgeLabeling, LabelingError> {
    construct_with_trace(g).map(|c| c.labeling)
}

pub fn construct_with_trace(g: &Graph) -> Result<Construction, LabelingError> {
    if !is_chordal(g) || !is_strongly_chordal(g) {
        return Err(LabelingError::NotStronglyChordal(Box::new(
            Rejection::for_graph(g),
        )));
    }
    if g.is_empty() {
        let labeling = EdgeLabeling::trivial(Graph::new())?;
        return Ok(Construction {
            root_exponents: dual_partition(&labeling),
            labeling,
            root: VertexSet::new(),
            steps: Vec::new(),
        });
    }
    let family = node_family(g)?;
    let nodes = family.poset.nodes();
    let mut remaining: Vec<usize> = (0..nodes.len())
        .filter(|&i| family.poset.is_maximal(i))
        .collect();
    let mut peeled = Vec::new();
    while remaining.len() > 1 {
        let sets: Vec<VertexSet> = remaining.iter().map(|&i| nodes[i].clone()).collect();
        let (x0, y0) = leaf_pair(&sets).map_err(|e| poset_error(g, e))?;
        peeled.push((remaining[x0], remaining[y0]));
        remaining.remove(x0);
    }
    let root = remaining[0];
    let mut lab = family.labelings[root].clone();
    let root_exponents = dual_partition(&lab);
    let mut steps = Vec::with_capacity(peeled.len());
    for &(x, y) in peeled.iter().rev() {
        lab = lab.union(&family.labelings[x])?;
        steps.push(GlueStep {
            added: nodes[x].clone(),
            attached_to: nodes[y].clone(),
            separator: nodes[x].intersection(&nodes[y]).copied().collect(),
            exponents: dual_partition(&lab),
        });
    }
    let labeling = EdgeLabeling::new(g.clone(), lab.labels)?;
    if let Err(v) = verify_mat_labeling(&labeling) {
        return Err(LabelingError::Internal(format!(
            "constructed labeling fails: {v}"
        )));
    }
    Ok(Construction {
        labeling,
        root: nodes[root].clone(),
        root_exponents,
        steps,
    })
}
