//! Cellular chain complex of an associated graph under the lexicographic
//! orientation, with exact Betti numbers and a normalized 2-cycle basis.
//!
//! Edges run from the lower id to the higher one, so `d(e_ij) = v_j - v_i`.
//! A closed face `u_1, ..., u_n` (canonical form) is oriented along its
//! cycle: the side `(u_k, u_{k+1})` enters with `+1` when `u_k < u_{k+1}`
//! and `-1` otherwise. For a triangle `i < j < k` this gives
//! `e_ij + e_jk - e_ik`. Open faces and angles are not cells.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::linalg::{self, Field, Matrix};
use crate::surface::{ClosedFace, ZappaticGraph};
use crate::{Error, Rational, Result, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BettiNumbers {
    pub b0: usize,
    pub b1: usize,
    pub b2: usize,
}

impl BettiNumbers {
    pub fn euler(&self) -> i64 {
        self.b0 as i64 - self.b1 as i64 + self.b2 as i64
    }
}

impl fmt::Display for BettiNumbers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.b0, self.b1, self.b2)
    }
}

/// Boundary matrices: `d2` is faces x edges, `d1` is edges x vertices, each
/// row holding the boundary of one cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    pub d2: Matrix<i64>,
    pub d1: Matrix<i64>,
    pub face_order: Vec<ClosedFace>,
    pub edge_order: Vec<(VertexId, VertexId)>,
    pub vertex_order: Vec<VertexId>,
}

impl ChainComplex {
    pub fn new(g: &ZappaticGraph) -> Self {
        let vertex_order: Vec<_> = g.vertices().iter().map(|v| v.id).collect();
        let edge_order: Vec<_> = g.edges().iter().map(|e| e.key()).collect();
        let face_order = g.closed_faces().to_vec();

        let mut d1 = Matrix::zeros(edge_order.len(), vertex_order.len());
        for (r, &(i, j)) in edge_order.iter().enumerate() {
            let col = |v: VertexId| vertex_order.binary_search(&v).expect("edge endpoint");
            d1.set(r, col(i), -1);
            d1.set(r, col(j), 1);
        }

        let mut d2 = Matrix::zeros(face_order.len(), edge_order.len());
        for (r, face) in face_order.iter().enumerate() {
            for (a, b) in face.sides() {
                let c = g.edge_position(a, b).expect("face side is an edge");
                d2.set(r, c, if a < b { 1 } else { -1 });
            }
        }

        let complex = Self {
            d2,
            d1,
            face_order,
            edge_order,
            vertex_order,
        };
        assert!(complex.composes_to_zero(), "d1 o d2 must vanish");
        complex
    }

    /// Wraps raw boundary matrices. Shapes and entries are checked; the
    /// composition is not, see [`Self::composes_to_zero`].
    pub fn from_matrices(d2: Matrix<i64>, d1: Matrix<i64>) -> Result<Self> {
        if d2.cols() != d1.rows() {
            return Err(Error::CorruptComplex(format!(
                "d2 has {} columns but d1 has {} rows",
                d2.cols(),
                d1.rows()
            )));
        }
        let unit = |m: &Matrix<i64>| m.row_vecs().iter().flatten().all(|x| x.abs() <= 1);
        if !unit(&d2) || !unit(&d1) {
            return Err(Error::CorruptComplex(
                "entries must lie in {-1, 0, 1}".into(),
            ));
        }
        Ok(Self {
            face_order: Vec::new(),
            edge_order: Vec::new(),
            vertex_order: (1..=d1.cols() as VertexId).collect(),
            d2,
            d1,
        })
    }

    pub fn composes_to_zero(&self) -> bool {
        self.d2.mul(&self.d1).is_zero()
    }

    pub fn num_faces(&self) -> usize {
        self.d2.rows()
    }

    pub fn num_edges(&self) -> usize {
        self.d1.rows()
    }

    pub fn num_vertices(&self) -> usize {
        self.d1.cols()
    }

    /// Exact Betti numbers over the rationals.
    pub fn betti_numbers(&self) -> Result<BettiNumbers> {
        let rank2 = linalg::rank(&self.d2);
        let rank1 = linalg::rank(&self.d1);
        let cycles1 = self.num_edges() - rank1;
        if rank2 > cycles1 {
            return Err(Error::CorruptComplex(format!(
                "rank of d2 ({rank2}) exceeds the nullity of d1 ({cycles1})"
            )));
        }
        Ok(BettiNumbers {
            b0: self.num_vertices() - rank1,
            b1: cycles1 - rank2,
            b2: self.num_faces() - rank2,
        })
    }

    /// Boundary of a 2-chain given by one coefficient per face, as one
    /// coefficient per edge.
    pub fn boundary<T>(&self, chain: &[T]) -> Vec<T>
    where
        T: Clone + Zero + std::ops::Sub<Output = T>,
    {
        assert_eq!(chain.len(), self.num_faces(), "one coefficient per face");
        let mut out = vec![T::zero(); self.num_edges()];
        for (f, x) in chain.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (e, slot) in out.iter_mut().enumerate() {
                match *self.d2.get(f, e) {
                    1 => *slot = slot.clone() + x.clone(),
                    -1 => *slot = slot.clone() - x.clone(),
                    _ => {}
                }
            }
        }
        out
    }

    /// Basis of the 2-cycles `ker d2`, as primitive integer vectors with a
    /// positive leading entry, indexed like [`Self::face_order`].
    pub fn two_cycle_basis(&self) -> Vec<Vec<BigInt>> {
        let boundary_map = self
            .d2
            .transpose()
            .map(|&x| Rational::from_integer(x.into()));
        linalg::kernel(&boundary_map)
            .iter()
            .map(|v| linalg::primitive(v))
            .collect()
    }

    /// Whether `chain` lies in the span of `basis`, decided by comparing
    /// ranks rather than by evaluating the boundary.
    pub fn in_span<F: Field>(basis: &[Vec<F>], chain: &[F]) -> bool {
        let width = chain.len();
        let base = Matrix::from_rows(basis.to_vec(), width).expect("basis width");
        let mut extended_rows = basis.to_vec();
        extended_rows.push(chain.to_vec());
        let extended = Matrix::from_rows(extended_rows, width).expect("chain width");
        linalg::rank_over_field(&base) == linalg::rank_over_field(&extended)
    }
}

/// Betti numbers of the 2-complex of `g`.
pub fn betti(g: &ZappaticGraph) -> BettiNumbers {
    ChainComplex::new(g)
        .betti_numbers()
        .expect("complex of a validated graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::surface::RawZappaticGraph;

    fn graph(raw: RawZappaticGraph) -> ZappaticGraph {
        ZappaticGraph::new(raw).unwrap()
    }

    #[test]
    fn triangle_orientation() {
        let g = catalog::e3_triangle();
        let c = ChainComplex::new(&g);
        assert_eq!(c.edge_order, vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(c.d2.row(0), &[1, -1, 1]);
        assert_eq!(
            c.betti_numbers().unwrap(),
            BettiNumbers {
                b0: 1,
                b1: 0,
                b2: 0
            }
        );
    }

    #[test]
    fn edge_orientation() {
        let g = graph(RawZappaticGraph::planar(5).with_edges(&[(2, 5), (1, 2), (3, 5), (4, 5)]));
        let c = ChainComplex::new(&g);
        let r = c.edge_order.iter().position(|&e| e == (2, 5)).unwrap();
        assert_eq!(c.d1.row(r), &[0, -1, 0, 0, 1]);
        assert_eq!(c.d2.rows(), 0);
        assert_eq!(c.num_faces(), 0);
    }

    #[test]
    fn tetrahedron_homology() {
        let c = ChainComplex::new(&catalog::tetrahedron());
        assert_eq!(
            c.betti_numbers().unwrap(),
            BettiNumbers {
                b0: 1,
                b1: 0,
                b2: 1
            }
        );
        let basis = c.two_cycle_basis();
        let want: Vec<BigInt> = [1, -1, 1, -1].into_iter().map(BigInt::from).collect();
        assert_eq!(basis, vec![want]);
    }

    #[test]
    fn unfilled_cycle_is_a_circle() {
        let g = catalog::en(6).unwrap().into_raw();
        let g = graph(RawZappaticGraph {
            closed_faces: vec![],
            ..g
        });
        let c = ChainComplex::new(&g);
        assert_eq!(
            c.betti_numbers().unwrap(),
            BettiNumbers {
                b0: 1,
                b1: 1,
                b2: 0
            }
        );
        assert!(c.two_cycle_basis().is_empty());
    }

    #[test]
    fn two_tetrahedra_on_a_vertex() {
        let tet = |o: VertexId, raw: RawZappaticGraph| {
            let [a, b, c, d] = [o, o + 1, o + 2, o + 3];
            raw.with_edges(&[(a, b), (a, c), (a, d), (b, c), (b, d), (c, d)])
                .with_face(&[a, b, c])
                .with_face(&[a, b, d])
                .with_face(&[a, c, d])
                .with_face(&[b, c, d])
        };
        let g = graph(tet(4, tet(1, RawZappaticGraph::planar(7))));
        let c = ChainComplex::new(&g);
        assert_eq!(
            c.betti_numbers().unwrap(),
            BettiNumbers {
                b0: 1,
                b1: 0,
                b2: 2
            }
        );
        let basis = c.two_cycle_basis();
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(c.boundary(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn corrupted_complex_is_rejected() {
        // one edge, one "face" whose boundary is that edge: d1 o d2 != 0
        let d1 = Matrix::from_rows(vec![vec![-1, 1]], 2).unwrap();
        let d2 = Matrix::from_rows(vec![vec![1], vec![1]], 1).unwrap();
        let c = ChainComplex::from_matrices(d2, d1).unwrap();
        assert!(!c.composes_to_zero());
        assert!(matches!(c.betti_numbers(), Err(Error::CorruptComplex(_))));

        let bad = Matrix::from_rows(vec![vec![2]], 1).unwrap();
        assert!(ChainComplex::from_matrices(bad.clone(), bad).is_err());
    }
}
