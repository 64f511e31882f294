//! Signed vertex-edge walks.
//!
//! A walk alternates between vertices and incident edges. A step between a
//! vertex and an edge has sign `−1` when the edge leaves the vertex and `+1`
//! when it enters it, regardless of the direction the walk traverses it.
//! Summing walk signs reproduces the powers of the incidence Dirac operator.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::OrientedGraph;
use crate::matrix::{IntMatrix, Overflow};
use crate::ops::incidence_dirac;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WalkElement {
    Vertex(usize),
    Edge(usize),
}

impl WalkElement {
    /// Row/column of this element in the incidence Dirac operator.
    pub fn position(self, g: &OrientedGraph) -> usize {
        match self {
            WalkElement::Vertex(v) => v,
            WalkElement::Edge(e) => g.vertex_count() + e,
        }
    }

    pub fn from_position(g: &OrientedGraph, p: usize) -> Self {
        if p < g.vertex_count() {
            WalkElement::Vertex(p)
        } else {
            WalkElement::Edge(p - g.vertex_count())
        }
    }

    fn check(self, g: &OrientedGraph) -> Result<(), WalkError> {
        let ok = match self {
            WalkElement::Vertex(v) => v < g.vertex_count(),
            WalkElement::Edge(e) => e < g.edge_count(),
        };
        if ok {
            Ok(())
        } else {
            Err(WalkError::OutOfRange(self))
        }
    }
}

impl fmt::Display for WalkElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WalkElement::Vertex(v) => write!(f, "v{}", v + 1),
            WalkElement::Edge(e) => write!(f, "e{}", e + 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WalkError {
    NotIncident(WalkElement, WalkElement),
    OutOfRange(WalkElement),
    Overflow,
}

impl fmt::Display for WalkError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WalkError::NotIncident(a, b) => write!(f, "{a} and {b} are not incident"),
            WalkError::OutOfRange(a) => write!(f, "{a} does not exist in this graph"),
            WalkError::Overflow => f.write_str("walk count overflows 64-bit integers"),
        }
    }
}

impl From<Overflow> for WalkError {
    fn from(_: Overflow) -> Self {
        WalkError::Overflow
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedWalk {
    /// `k + 1` elements for a walk of length `k`.
    pub steps: Vec<WalkElement>,
    pub sign: i8,
}

impl SignedWalk {
    pub fn len(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl fmt::Display for SignedWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(" -> ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "  sgn={}", self.sign)
    }
}

/// Sign of the step between a vertex and an edge, in either order.
pub fn step_sign(g: &OrientedGraph, a: WalkElement, b: WalkElement) -> Result<i8, WalkError> {
    a.check(g)?;
    b.check(g)?;
    let (v, e) = match (a, b) {
        (WalkElement::Vertex(v), WalkElement::Edge(e)) | (WalkElement::Edge(e), WalkElement::Vertex(v)) => (v, e),
        _ => return Err(WalkError::NotIncident(a, b)),
    };
    let (t, h) = g.edge(e);
    if v == t {
        Ok(-1)
    } else if v == h {
        Ok(1)
    } else {
        Err(WalkError::NotIncident(a, b))
    }
}

// incident elements in ascending index order, with step signs
fn successors(g: &OrientedGraph, x: WalkElement) -> Vec<(WalkElement, i8)> {
    match x {
        WalkElement::Vertex(v) => {
            let mut out: Vec<(WalkElement, i8)> = g
                .neighbors(v)
                .iter()
                .map(|&(_, e)| (WalkElement::Edge(e), if g.edge(e).0 == v { -1 } else { 1 }))
                .collect();
            out.sort();
            out
        }
        WalkElement::Edge(e) => {
            let (t, h) = g.edge(e);
            let mut out = alloc::vec![(WalkElement::Vertex(t), -1), (WalkElement::Vertex(h), 1)];
            out.sort();
            out
        }
    }
}

/// All walks of length `k` from `from` to `to`, depth first in ascending index order.
pub fn enumerate_signed_walks(
    g: &OrientedGraph,
    from: WalkElement,
    to: WalkElement,
    k: usize,
) -> Result<Vec<SignedWalk>, WalkError> {
    from.check(g)?;
    to.check(g)?;
    let mut out = Vec::new();
    let mut path = alloc::vec![from];
    extend(g, to, k, &mut path, 1, &mut out);
    Ok(out)
}

fn extend(g: &OrientedGraph, to: WalkElement, k: usize, path: &mut Vec<WalkElement>, sign: i8, out: &mut Vec<SignedWalk>) {
    let last = *path.last().expect("walk is never empty");
    if path.len() == k + 1 {
        if last == to {
            out.push(SignedWalk { steps: path.clone(), sign });
        }
        return;
    }
    for (next, s) in successors(g, last) {
        path.push(next);
        extend(g, to, k, path, sign * s, out);
        path.pop();
    }
}

/// `Σ sgn(γ)` over all walks of length `k` from `from` to `to`.
pub fn signed_walk_sum(g: &OrientedGraph, from: WalkElement, to: WalkElement, k: usize) -> Result<i64, WalkError> {
    Ok(enumerate_signed_walks(g, from, to, k)?.iter().map(|w| w.sign as i64).sum())
}

/// `D̸_I^k` over exact integers.
pub fn walk_count_matrix(g: &OrientedGraph, k: usize) -> Result<IntMatrix, WalkError> {
    Ok(incidence_dirac(g).try_pow(k as u32)?)
}
