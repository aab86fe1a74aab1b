//! Exponents and chromatic polynomials.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::chordal::{exponents_along, find_peo, minimal_separator_decomposition};
use crate::graph::{Edge, Graph, GraphError, Vertex};
use crate::labeling::{verify_mat_labeling, EdgeLabeling, MatViolation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("coefficient overflow")]
    Overflow,
    #[error("graph has {0} vertices; deletion-contraction is limited to {1}")]
    TooLarge(usize, usize),
    #[error("graph is not chordal")]
    NotChordal,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Vertex limit for deletion-contraction on non-chordal graphs.
pub const DELETION_CONTRACTION_LIMIT: usize = 12;

/// A sorted multiset of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ExponentMultiset(Vec<u32>);

impl ExponentMultiset {
    pub fn new<I: IntoIterator<Item = u32>>(values: I) -> Self {
        let mut v: Vec<u32> = values.into_iter().collect();
        v.sort_unstable();
        ExponentMultiset(v)
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// `∏ (t - e)` over the multiset.
    pub fn polynomial(&self) -> Result<IntPolynomial, InvariantError> {
        IntPolynomial::from_roots(self.0.iter().map(|&e| e as i128))
    }
}

impl fmt::Display for ExponentMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Exponents of a MAT-labeled graph. Fails on labelings that do not verify.
pub fn exponents_from_labeling(lab: &EdgeLabeling) -> Result<ExponentMultiset, MatViolation> {
    verify_mat_labeling(lab)?;
    Ok(dual_partition(lab))
}

/// Conjugate of the block-size partition `(|π_1|, |π_2|, ...)`, padded with
/// zeros to one entry per vertex. No validity check.
pub fn dual_partition(lab: &EdgeLabeling) -> ExponentMultiset {
    let sizes = lab.block_sizes();
    let largest = sizes.iter().copied().max().unwrap_or(0);
    let mut values: Vec<u32> = (1..=largest)
        .map(|j| sizes.iter().filter(|&&s| s >= j).count() as u32)
        .collect();
    values.resize(values.len().max(lab.graph().vertex_count()), 0);
    ExponentMultiset::new(values)
}

/// Integer polynomial, coefficients from the constant term up. No trailing
/// zeros are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct IntPolynomial(Vec<i128>);

impl IntPolynomial {
    pub fn from_coeffs(mut c: Vec<i128>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        IntPolynomial(c)
    }

    pub fn zero() -> Self {
        IntPolynomial(Vec::new())
    }

    pub fn one() -> Self {
        IntPolynomial(vec![1])
    }

    /// `t^n`.
    pub fn power(n: usize) -> Self {
        let mut c = vec![0; n + 1];
        c[n] = 1;
        IntPolynomial(c)
    }

    /// `∏ (t - r)`.
    pub fn from_roots<I: IntoIterator<Item = i128>>(roots: I) -> Result<Self, InvariantError> {
        roots.into_iter().try_fold(Self::one(), |acc, r| {
            acc.mul(&IntPolynomial::from_coeffs(vec![
                r.checked_neg().ok_or(InvariantError::Overflow)?,
                1,
            ]))
        })
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.0
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, InvariantError> {
        if self.0.is_empty() || other.0.is_empty() {
            return Ok(Self::zero());
        }
        let mut c = vec![0i128; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                let term = a.checked_mul(b).ok_or(InvariantError::Overflow)?;
                c[i + j] = c[i + j].checked_add(term).ok_or(InvariantError::Overflow)?;
            }
        }
        Ok(Self::from_coeffs(c))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, InvariantError> {
        let n = self.0.len().max(other.0.len());
        let get = |p: &Self, i: usize| p.0.get(i).copied().unwrap_or(0);
        let c = (0..n)
            .map(|i| {
                get(self, i)
                    .checked_sub(get(other, i))
                    .ok_or(InvariantError::Overflow)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_coeffs(c))
    }

    pub fn eval(&self, t: i128) -> Result<i128, InvariantError> {
        self.0.iter().rev().try_fold(0i128, |acc, &c| {
            acc.checked_mul(t)
                .and_then(|x| x.checked_add(c))
                .ok_or(InvariantError::Overflow)
        })
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{a}t")?,
                (_, 1) => write!(f, "t^{i}")?,
                _ => write!(f, "{a}t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Chromatic polynomial: a PEO product for chordal graphs, deletion-contraction
/// otherwise (chordal pieces are short-cut).
pub fn chromatic_polynomial(g: &Graph) -> Result<IntPolynomial, InvariantError> {
    if let Some(ord) = find_peo(g) {
        return exponents_along(g, &ord).polynomial();
    }
    if g.vertex_count() > DELETION_CONTRACTION_LIMIT {
        return Err(InvariantError::TooLarge(
            g.vertex_count(),
            DELETION_CONTRACTION_LIMIT,
        ));
    }
    let mut memo = HashMap::new();
    deletion_contraction(&g.compact(), true, &mut memo)
}

/// Plain deletion-contraction with no chordal short cut.
pub fn chromatic_deletion_contraction(g: &Graph) -> Result<IntPolynomial, InvariantError> {
    if g.vertex_count() > DELETION_CONTRACTION_LIMIT {
        return Err(InvariantError::TooLarge(
            g.vertex_count(),
            DELETION_CONTRACTION_LIMIT,
        ));
    }
    let mut memo = HashMap::new();
    deletion_contraction(&g.compact(), false, &mut memo)
}

fn deletion_contraction(
    g: &Graph,
    shortcut: bool,
    memo: &mut HashMap<Graph, IntPolynomial>,
) -> Result<IntPolynomial, InvariantError> {
    if let Some(p) = memo.get(g) {
        return Ok(p.clone());
    }
    let edges: Vec<Edge> = g.edges().collect();
    let p = match edges.first() {
        None => IntPolynomial::power(g.vertex_count()),
        Some(_) if shortcut && find_peo(g).is_some() => {
            exponents_along(g, &find_peo(g).unwrap()).polynomial()?
        }
        Some(&e) => {
            let del = deletion_contraction(&g.without_edge(e).unwrap().compact(), shortcut, memo)?;
            let con = deletion_contraction(&g.contract_edge(e).unwrap().compact(), shortcut, memo)?;
            del.sub(&con)?
        }
    };
    memo.insert(g.clone(), p.clone());
    Ok(p)
}

/// Whether `χ_G(t) = ∏ (t - e)` over `exps`.
pub fn check_terao_factorization(
    g: &Graph,
    exps: &ExponentMultiset,
) -> Result<bool, InvariantError> {
    Ok(chromatic_polynomial(g)? == exps.polynomial()?)
}

/// Splits a chordal `g` along the minimal `(a, b)`-separator `S` and checks
/// `χ_G · χ_S = χ_{G1} · χ_{G2}` for `G1 = G[A ∪ S]`, `G2 = G[B ∪ S]`.
pub fn separator_product_check(g: &Graph, a: Vertex, b: Vertex) -> Result<bool, InvariantError> {
    if find_peo(g).is_none() {
        return Err(InvariantError::NotChordal);
    }
    let dec = minimal_separator_decomposition(g, a, b)?;
    let side = |x: &crate::graph::VertexSet| {
        let vs = x.union(&dec.separator).copied().collect();
        g.induced_subgraph(&vs).expect("sides are vertex subsets")
    };
    let gs = g
        .induced_subgraph(&dec.separator)
        .expect("separator is a vertex subset");
    let lhs = chromatic_polynomial(g)?.mul(&chromatic_polynomial(&gs)?)?;
    let rhs = chromatic_polynomial(&side(&dec.a_side))?
        .mul(&chromatic_polynomial(&side(&dec.b_side))?)?;
    Ok(lhs == rhs)
}
