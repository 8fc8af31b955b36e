//! Residues of a 2-form at the triple points of a surface with only
//! `E_3`-points, reduced to their combinatorics.
//!
//! A residue datum assigns one value to each closed 3-face `(i < j < k, t)`.
//! Reading it under a permuted triple picks up the sign of the permutation.
//! The residue theorem on each double curve `C_ij` says that the signed
//! residues along the curve sum to zero; a datum satisfying this on every
//! edge is exactly a 2-cycle of the associated graph.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::invariants::{pg_upper_bound, PgBound, PhiSpec};
use crate::linalg::Field;
use crate::surface::ZappaticGraph;
use crate::{Error, Result, VertexId};

/// `(i, j, k, t)` with `i < j < k`.
pub type FaceKey = (VertexId, VertexId, VertexId, u32);

/// Sorts a triple and returns it with the sign of the sorting permutation.
pub fn sort_triple(i: VertexId, j: VertexId, k: VertexId) -> ((VertexId, VertexId, VertexId), i8) {
    let inversions = [(i, j), (i, k), (j, k)]
        .iter()
        .filter(|(a, b)| a > b)
        .count();
    let mut s = [i, j, k];
    s.sort_unstable();
    ((s[0], s[1], s[2]), if inversions % 2 == 0 { 1 } else { -1 })
}

fn face_keys(g: &ZappaticGraph) -> Vec<FaceKey> {
    g.closed_faces()
        .iter()
        .filter(|f| f.len() == 3)
        .map(|f| (f.cycle[0], f.cycle[1], f.cycle[2], f.t))
        .collect()
}

/// One residue per closed 3-face, stored under the sorted triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueAssignment<T> {
    values: BTreeMap<FaceKey, T>,
}

impl<T: Field> ResidueAssignment<T> {
    /// Builds an assignment from `(i, j, k, t, value)` entries in any index
    /// order; a permuted triple stores `sgn * value`. Every closed 3-face of
    /// `g` must be given exactly once and nothing else.
    pub fn from_entries(
        g: &ZappaticGraph,
        entries: impl IntoIterator<Item = (VertexId, VertexId, VertexId, u32, T)>,
    ) -> Result<Self> {
        g.require_only_e3()?;
        let mut values = BTreeMap::new();
        for (i, j, k, t, value) in entries {
            let ((a, b, c), sign) = sort_triple(i, j, k);
            if a == b || b == c {
                return Err(Error::KeyMismatch(format!(
                    "repeated index in ({i}, {j}, {k})"
                )));
            }
            let value = if sign < 0 { -value } else { value };
            if values.insert((a, b, c, t), value).is_some() {
                return Err(Error::KeyMismatch(format!(
                    "face ({a}, {b}, {c}) t={t} given twice"
                )));
            }
        }
        let assignment = Self { values };
        assignment.check_keys(g)?;
        Ok(assignment)
    }

    /// Values listed in canonical face order.
    pub fn from_vector(g: &ZappaticGraph, vector: &[T]) -> Result<Self> {
        g.require_only_e3()?;
        let keys = face_keys(g);
        if keys.len() != vector.len() {
            return Err(Error::KeyMismatch(format!(
                "{} values for {} faces",
                vector.len(),
                keys.len()
            )));
        }
        Ok(Self {
            values: keys.into_iter().zip(vector.iter().cloned()).collect(),
        })
    }

    pub fn zero(g: &ZappaticGraph) -> Result<Self> {
        let n = face_keys(g).len();
        Self::from_vector(g, &vec![T::zero(); n])
    }

    fn check_keys(&self, g: &ZappaticGraph) -> Result<()> {
        let keys = face_keys(g);
        if let Some(extra) = self.values.keys().find(|k| keys.binary_search(k).is_err()) {
            return Err(Error::KeyMismatch(format!(
                "({}, {}, {}) t={} is not a face",
                extra.0, extra.1, extra.2, extra.3
            )));
        }
        if let Some(missing) = keys.iter().find(|k| !self.values.contains_key(k)) {
            return Err(Error::KeyMismatch(format!(
                "no value for face ({}, {}, {}) t={}",
                missing.0, missing.1, missing.2, missing.3
            )));
        }
        Ok(())
    }

    pub fn values(&self) -> &BTreeMap<FaceKey, T> {
        &self.values
    }

    /// Values in canonical face order.
    pub fn to_vector(&self) -> Vec<T> {
        self.values.values().cloned().collect()
    }

    /// `omega^t_{s(i)s(j)s(k)} = sgn(s) omega^t_{ijk}`.
    pub fn residue_at(&self, i: VertexId, j: VertexId, k: VertexId, t: u32) -> Result<T> {
        let ((a, b, c), sign) = sort_triple(i, j, k);
        let value = self
            .values
            .get(&(a, b, c, t))
            .ok_or(Error::UnknownFace { i, j, k, t })?;
        Ok(if sign < 0 {
            -value.clone()
        } else {
            value.clone()
        })
    }

    /// For each edge `(i, j)`, the sum over faces `{i, j, k}` of
    /// `sgn(s_k) omega^t` with `s_k` sorting `(i, j, k)`.
    pub fn edge_balance(&self, g: &ZappaticGraph) -> Result<BTreeMap<(VertexId, VertexId), T>> {
        g.require_only_e3()?;
        self.check_keys(g)?;
        let mut sums: BTreeMap<_, _> = g.edges().iter().map(|e| (e.key(), T::zero())).collect();
        for &(a, b, c, t) in self.values.keys() {
            for (i, j, k) in [(a, b, c), (a, c, b), (b, c, a)] {
                let slot = sums.get_mut(&(i, j)).expect("face side is an edge");
                *slot = slot.clone() + self.residue_at(i, j, k, t)?;
            }
        }
        Ok(sums)
    }

    /// Whether every edge balance vanishes.
    pub fn is_two_cycle(&self, g: &ZappaticGraph) -> Result<bool> {
        Ok(self.edge_balance(g)?.values().all(|x| x.is_zero()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// `h^0(omega_X)` attains the bound, as a smoothable surface requires.
    Holds,
    /// Strictly below the bound: not the central fibre of a semistable
    /// degeneration.
    Violated,
    /// Above the bound, which is impossible.
    Inconsistent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SmoothabilityReport {
    pub claimed_pg: u64,
    pub bound: PgBound,
    pub verdict: Verdict,
}

/// Necessary condition for `g` (only `E_3`-points) to be the central fibre
/// of a semistable degeneration: `h^0(omega_X)` must equal the bound.
pub fn smoothability_report(
    g: &ZappaticGraph,
    claimed_pg: u64,
    phi: Option<&PhiSpec>,
) -> Result<SmoothabilityReport> {
    let bound = pg_upper_bound(g, phi, false)?;
    let verdict = match claimed_pg.cmp(&bound.value) {
        std::cmp::Ordering::Equal => Verdict::Holds,
        std::cmp::Ordering::Less => Verdict::Violated,
        std::cmp::Ordering::Greater => Verdict::Inconsistent,
    };
    Ok(SmoothabilityReport {
        claimed_pg,
        bound,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn tet(values: [i64; 4]) -> ResidueAssignment<Rational> {
        ResidueAssignment::from_vector(&catalog::tetrahedron(), &values.map(q)).unwrap()
    }

    #[test]
    fn permutation_signs() {
        assert_eq!(sort_triple(1, 2, 3), ((1, 2, 3), 1));
        assert_eq!(sort_triple(2, 1, 3), ((1, 2, 3), -1));
        assert_eq!(sort_triple(2, 3, 1), ((1, 2, 3), 1));
        assert_eq!(sort_triple(3, 2, 1), ((1, 2, 3), -1));
    }

    #[test]
    fn residue_access() {
        let g = catalog::e3_triangle();
        let a = ResidueAssignment::from_entries(&g, [(1, 2, 3, 1, q(5))]).unwrap();
        assert_eq!(a.residue_at(2, 1, 3, 1), Ok(q(-5)));
        assert_eq!(a.residue_at(2, 3, 1, 1), Ok(q(5)));
        assert!(matches!(
            a.residue_at(1, 2, 3, 2),
            Err(Error::UnknownFace { .. })
        ));

        let t = tet([3, 7, 11, 13]);
        assert_eq!(t.residue_at(1, 2, 4, 1), Ok(q(7)));

        let permuted = ResidueAssignment::from_entries(&g, [(3, 2, 1, 1, q(5))]).unwrap();
        assert_eq!(permuted.residue_at(1, 2, 3, 1), Ok(q(-5)));
    }

    #[test]
    fn entry_mismatches() {
        let g = catalog::e3_triangle();
        assert!(ResidueAssignment::<Rational>::from_entries(&g, []).is_err());
        assert!(ResidueAssignment::from_entries(&g, [(1, 2, 4, 1, q(1))]).is_err());
        assert!(
            ResidueAssignment::from_entries(&g, [(1, 2, 3, 1, q(1)), (2, 1, 3, 1, q(1))]).is_err()
        );
        assert!(ResidueAssignment::<Rational>::zero(&catalog::en(4).unwrap()).is_err());
    }

    #[test]
    fn tetrahedron_balances() {
        let g = catalog::tetrahedron();
        assert!(tet([1, -1, 1, -1])
            .edge_balance(&g)
            .unwrap()
            .values()
            .all(|x| *x == q(0)));
        assert!(tet([1, -1, 1, -1]).is_two_cycle(&g).unwrap());

        // faces 123, 124, 134, 234 all 1: e12 gets +1 (k=3) +1 (k=4); e13 gets
        // -1 (k=2) +1 (k=4); ...
        let ones = tet([1, 1, 1, 1]).edge_balance(&g).unwrap();
        let want: BTreeMap<_, _> = [
            ((1, 2), 2),
            ((1, 3), 0),
            ((1, 4), -2),
            ((2, 3), 2),
            ((2, 4), 0),
            ((3, 4), 2),
        ]
        .into_iter()
        .map(|(k, v)| (k, q(v)))
        .collect();
        assert_eq!(ones, want);
        assert!(!tet([1, 0, 0, 0]).is_two_cycle(&g).unwrap());
        assert!(ResidueAssignment::<Rational>::zero(&g)
            .unwrap()
            .is_two_cycle(&g)
            .unwrap());
    }

    #[test]
    fn empty_face_set() {
        let g = catalog::tetrahedron().into_raw();
        let g = ZappaticGraph::new(crate::RawZappaticGraph {
            closed_faces: vec![],
            ..g
        })
        .unwrap();
        let a = ResidueAssignment::<Rational>::zero(&g).unwrap();
        assert!(a.edge_balance(&g).unwrap().values().all(|x| *x == q(0)));
    }

    #[test]
    fn verdicts() {
        let g = catalog::tetrahedron();
        assert_eq!(
            smoothability_report(&g, 1, None).unwrap().verdict,
            Verdict::Holds
        );
        assert_eq!(
            smoothability_report(&g, 0, None).unwrap().verdict,
            Verdict::Violated
        );
        assert_eq!(
            smoothability_report(&g, 2, None).unwrap().verdict,
            Verdict::Inconsistent
        );
    }
}
