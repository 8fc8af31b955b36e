use thiserror::Error;

use crate::surface::Violation;
use crate::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid curve graph: {0}")]
    InvalidCurve(String),

    #[error("invalid zappatic graph: {}", join_violations(.0))]
    InvalidGraph(Vec<Violation>),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not a tree")]
    NotATree,

    #[error("{kind} stick curve needs at least {min} vertices, got {n}")]
    TooSmall {
        kind: &'static str,
        n: usize,
        min: usize,
    },

    #[error("vertex {0} carries no degree")]
    MissingDegree(VertexId),

    #[error("graph must have only 3-faces and no open faces or angles: {0}")]
    NotOnlyE3(String),

    #[error("graph is not planar")]
    NotPlanar,

    #[error("phi is required: both the edge genera and the irregularities are positive")]
    MissingPhi,

    #[error("phi rank {rank} exceeds min(sum g_ij, sum q_i) = {bound}")]
    PhiRankTooLarge { rank: usize, bound: usize },

    #[error("phi matrix has shape {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    PhiShape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },

    #[error("corrupted chain complex: {0}")]
    CorruptComplex(String),

    #[error("marking not present in graph: {0}")]
    MarkingAbsent(String),

    #[error("closed face {0} is already a triangle")]
    AlreadyTriangle(String),

    #[error("unknown face ({i}, {j}, {k}) t={t}")]
    UnknownFace {
        i: VertexId,
        j: VertexId,
        k: VertexId,
        t: u32,
    },

    #[error("residue assignment does not match the faces of the graph: {0}")]
    KeyMismatch(String),

    #[error("rewrite changed the Betti numbers from {before} to {after}")]
    HomologyChanged { before: String, after: String },

    #[error("inconsistent invariants: {0}")]
    Inconsistent(String),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
