//! Necessary conditions for a planar associated graph to come from an
//! actual configuration of planes.
//!
//! Two double lines `C_wa`, `C_wb` on the plane `X_w` always meet. Their
//! intersection point is a good Zappatic singularity, so the pair of edges
//! at `w` must be covered by exactly one marking: a closed face or an open
//! face passing through `a, w, b`, or an angle centred at `w` with leaves
//! `a` and `b`. Passing the check does not imply that the graph is
//! realizable.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::surface::ZappaticGraph;
use crate::{Error, Result, VertexId};

/// A pair of edges at `vertex` covered `covers != 1` times. Edges are
/// named by their endpoints, lower id first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CoverageViolation {
    pub vertex: VertexId,
    pub edge_pair: ((VertexId, VertexId), (VertexId, VertexId)),
    pub covers: usize,
}

impl fmt::Display for CoverageViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ((a, b), (c, d)) = self.edge_pair;
        write!(
            f,
            "edges e{a}{b}, e{c}{d} at v{}: covered {} times",
            self.vertex, self.covers
        )
    }
}

fn edge(a: VertexId, b: VertexId) -> (VertexId, VertexId) {
    (a.min(b), a.max(b))
}

fn same_pair(x: (VertexId, VertexId), a: VertexId, b: VertexId) -> bool {
    x == (a, b) || x == (b, a)
}

/// Number of markings covering the edges `wa`, `wb` at `w`.
fn coverage(g: &ZappaticGraph, w: VertexId, a: VertexId, b: VertexId) -> usize {
    let closed = g
        .closed_faces()
        .iter()
        .filter(|f| f.neighbours_of(w).is_some_and(|n| same_pair(n, a, b)))
        .count();
    let open = g
        .open_faces()
        .iter()
        .filter(|f| f.neighbours_of(w).is_some_and(|n| same_pair(n, a, b)))
        .count();
    let angles = g
        .angles()
        .iter()
        .filter(|x| x.center == w && x.leaves.contains(&a) && x.leaves.contains(&b))
        .count();
    closed + open + angles
}

/// Every pair of adjacent edges not covered exactly once. Empty means the
/// necessary condition holds.
pub fn check_planar(g: &ZappaticGraph) -> Result<Vec<CoverageViolation>> {
    if !g.is_planar() {
        return Err(Error::NotPlanar);
    }
    let mut out = Vec::new();
    for v in g.vertices() {
        let w = v.id;
        let mut nbrs = g.neighbours(w);
        nbrs.sort_unstable();
        for (x, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[x + 1..] {
                let covers = coverage(g, w, a, b);
                if covers != 1 {
                    let (e1, e2) = (edge(w, a), edge(w, b));
                    out.push(CoverageViolation {
                        vertex: w,
                        edge_pair: (e1.min(e2), e1.max(e2)),
                        covers,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// A single syntactic change that would fix one violation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "edit", rename_all = "snake_case")]
pub enum Edit {
    AddClosedFace {
        cycle: Vec<VertexId>,
    },
    /// The face's third side is not yet an edge.
    AddEdgeAndClosedFace {
        edge: (VertexId, VertexId),
        cycle: Vec<VertexId>,
    },
    AddOpenFace {
        path: Vec<VertexId>,
    },
    AddAngle {
        center: VertexId,
        leaves: Vec<VertexId>,
    },
    /// Drop one of several markings covering the same pair.
    RemoveMarking {
        marking: String,
    },
}

impl fmt::Display for Edit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Edit::AddClosedFace { cycle } => write!(f, "add closed face {cycle:?}"),
            Edit::AddEdgeAndClosedFace { edge, cycle } => {
                write!(
                    f,
                    "add edge e{}{} and closed face {cycle:?}",
                    edge.0, edge.1
                )
            }
            Edit::AddOpenFace { path } => write!(f, "add open face {path:?}"),
            Edit::AddAngle { center, leaves } => write!(f, "add angle at {center} over {leaves:?}"),
            Edit::RemoveMarking { marking } => write!(f, "remove {marking}"),
        }
    }
}

/// Candidate single-marking edits for every violation, deduplicated and
/// sorted. Nothing here guarantees geometric realizability.
pub fn suggest_completions(g: &ZappaticGraph) -> Result<Vec<Edit>> {
    let mut edits = BTreeSet::new();
    for v in check_planar(g)? {
        let w = v.vertex;
        let other = |e: (VertexId, VertexId)| if e.0 == w { e.1 } else { e.0 };
        let (a, b) = (other(v.edge_pair.0), other(v.edge_pair.1));
        if v.covers == 0 {
            let cycle = crate::surface::ClosedFace::new(vec![a, w, b], 1).cycle;
            if g.has_edge(a, b) {
                edits.insert(Edit::AddClosedFace { cycle });
            } else {
                edits.insert(Edit::AddEdgeAndClosedFace {
                    edge: edge(a, b),
                    cycle,
                });
            }
            edits.insert(Edit::AddOpenFace {
                path: crate::surface::OpenFace::new(vec![a, w, b], 1).path,
            });
            for c in g.neighbours(w) {
                if c != a && c != b {
                    let mut leaves = vec![a, b, c];
                    leaves.sort_unstable();
                    edits.insert(Edit::AddAngle { center: w, leaves });
                }
            }
        } else {
            for m in g.markings() {
                let covers = match &m {
                    crate::Marking::ClosedFace(f) => {
                        f.neighbours_of(w).is_some_and(|n| same_pair(n, a, b))
                    }
                    crate::Marking::OpenFace(f) => {
                        f.neighbours_of(w).is_some_and(|n| same_pair(n, a, b))
                    }
                    crate::Marking::Angle(x) => {
                        x.center == w && x.leaves.contains(&a) && x.leaves.contains(&b)
                    }
                };
                if covers {
                    edits.insert(Edit::RemoveMarking {
                        marking: m.to_string(),
                    });
                }
            }
        }
    }
    Ok(edits.into_iter().collect())
}
