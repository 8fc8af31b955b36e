//! Combinatorial invariants of degenerations: stick curves and good
//! Zappatic surfaces, encoded as weighted graphs and 2-complexes.
//!
//! The crate models the dual graph of a nodal curve ([`CurveGraph`]) and the
//! associated graph of a good Zappatic surface ([`ZappaticGraph`]), and
//! computes from them the arithmetic genus, `chi(O)`, Betti numbers, the
//! geometric genus bound with the cokernel correction, residue balance of
//! 2-cycles, planar coverage checks and a homology-preserving graph-level
//! semistable reduction.
//!
//! All arithmetic is exact. The linear algebra in [`linalg`] is generic over
//! the scalar type; the aliases below fix the concrete choices used by the
//! rest of the crate.

pub mod catalog;
pub mod curve;
pub mod document;
pub mod dot;
mod error;
#[cfg(feature = "gen")]
pub mod gen;
pub mod homology;
pub mod invariants;
pub mod linalg;
pub mod realizability;
pub mod reduction;
pub mod residues;
pub mod surface;

pub use curve::{CurveEdge, CurveGraph, CurveVertex, StickKind};
pub use error::{Error, Result};
pub use homology::{BettiNumbers, ChainComplex};
pub use invariants::{InvariantReport, PgBound, PhiSpec};
pub use linalg::Matrix;
pub use surface::{
    Angle, ClosedFace, DoubleCurve, Marking, OpenFace, RawZappaticGraph, SurfaceVertex, Violation,
    ZappaticGraph,
};

/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;
/// Arbitrary-precision rational; the default scalar for residues and kernels.
pub type Rational = num_rational::BigRational;
/// Machine-word rational, for callers that know their values stay small.
pub type Rational64 = num_rational::Rational64;
/// Integer matrix as used for boundary maps.
pub type IntMatrix = Matrix<i64>;
/// Rational matrix.
pub type RationalMatrix = Matrix<Rational>;
/// Residue assignment over arbitrary-precision rationals.
pub type RationalResidues = residues::ResidueAssignment<Rational>;

/// Vertex identifier. Ids are positive; their numeric order is the
/// lexicographic order used for orientations.
pub type VertexId = u32;
