//! Numerical invariants of good Zappatic surfaces and of the smooth fibres
//! of Zappatic degenerations.
//!
//! Degree, sectional genus and `chi(O)` are determined by the graph and its
//! weights. The geometric genus needs in addition the rank of the
//! restriction map `Phi: (+) H^1(X_i, O) -> (+) H^1(C_ij, O)`, which the
//! graph does not carry; it is taken from a [`PhiSpec`] unless one side of
//! the map is zero.

use serde::{Deserialize, Serialize};

use crate::homology::{betti, BettiNumbers};
use crate::linalg::{self, Matrix};
use crate::surface::ZappaticGraph;
use crate::{Error, Result};

/// Rank of `Phi`, given directly or as an integer matrix of shape
/// `(sum g_ij) x (sum q_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum PhiSpec {
    Rank(usize),
    Matrix(Vec<Vec<i64>>),
}

impl PhiSpec {
    /// Rank of the map, checked against the shape implied by `g`.
    pub fn rank_for(&self, g: &ZappaticGraph) -> Result<usize> {
        let rows = edge_genus_sum(g);
        let cols = irregularity_sum(g);
        let rank = match self {
            PhiSpec::Rank(r) => *r,
            PhiSpec::Matrix(m) => {
                let bad_shape = || Error::PhiShape {
                    rows: m.len(),
                    cols: m.first().map_or(0, Vec::len),
                    expected_rows: rows,
                    expected_cols: cols,
                };
                if m.len() != rows {
                    return Err(bad_shape());
                }
                let matrix = Matrix::from_rows(m.clone(), cols).ok_or_else(bad_shape)?;
                linalg::rank(&matrix)
            }
        };
        let bound = rows.min(cols);
        if rank > bound {
            return Err(Error::PhiRankTooLarge { rank, bound });
        }
        Ok(rank)
    }
}

fn edge_genus_sum(g: &ZappaticGraph) -> usize {
    g.edges().iter().map(|e| e.curve_genus as usize).sum()
}

fn irregularity_sum(g: &ZappaticGraph) -> usize {
    g.vertices().iter().map(|v| v.q as usize).sum()
}

fn pg_sum(g: &ZappaticGraph) -> u64 {
    g.vertices().iter().map(|v| u64::from(v.pg)).sum()
}

/// `d = sum d_i`.
pub fn degree(g: &ZappaticGraph) -> u64 {
    g.vertices().iter().map(|v| u64::from(v.degree)).sum()
}

/// Arithmetic genus of a general hyperplane section:
/// `sum g_i + sum c_ij - v + 1`.
pub fn sectional_genus(g: &ZappaticGraph) -> u64 {
    let genera: i64 = g
        .vertices()
        .iter()
        .map(|v| i64::from(v.section_genus))
        .sum();
    let nodes: i64 = g.edges().iter().map(|e| i64::from(e.curve_degree)).sum();
    let value = genera + nodes - g.vertices().len() as i64 + 1;
    // connected with positive curve degrees, so at least one node per tree edge
    debug_assert!(value >= 0);
    value as u64
}

/// `chi(O_X) = sum chi(O_{X_i}) - sum chi(O_{C_ij}) + f`.
pub fn chi_o(g: &ZappaticGraph) -> i64 {
    let components: i64 = g.vertices().iter().map(|v| v.chi()).sum();
    let curves: i64 = g.edges().iter().map(|e| 1 - i64::from(e.curve_genus)).sum();
    components - curves + g.closed_faces().len() as i64
}

/// `dim coker(Phi) = sum g_ij - rank(Phi)`.
pub fn coker_phi_dim(g: &ZappaticGraph, phi: Option<&PhiSpec>) -> Result<usize> {
    let target = edge_genus_sum(g);
    if target == 0 {
        return Ok(0);
    }
    let rank = match (phi, irregularity_sum(g)) {
        (Some(p), _) => p.rank_for(g)?,
        (None, 0) => 0,
        (None, _) => return Err(Error::MissingPhi),
    };
    Ok(target - rank)
}

/// Upper bound for `p_g` with a flag telling whether it is known to be
/// attained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PgBound {
    pub value: u64,
    pub b2: usize,
    pub coker_phi: usize,
    pub equality_certain: bool,
}

/// `p_g(X) <= b_2(G_X) + sum p_g(X_i) + dim coker(Phi)` for a surface whose
/// only Zappatic singularities are `E_3`-points.
///
/// Equality is certain when every component is regular, or when the
/// caller asserts that each double curve `C_j` is ample on every irregular
/// component (`ample_asserted`); the latter is never checked here.
pub fn pg_upper_bound(
    g: &ZappaticGraph,
    phi: Option<&PhiSpec>,
    ample_asserted: bool,
) -> Result<PgBound> {
    g.require_only_e3()?;
    let b2 = betti(g).b2;
    let coker_phi = coker_phi_dim(g, phi)?;
    let regular = g.vertices().iter().all(|v| v.q == 0);
    Ok(PgBound {
        value: b2 as u64 + pg_sum(g) + coker_phi as u64,
        b2,
        coker_phi,
        equality_certain: regular || ample_asserted,
    })
}

/// `(p_g, q) = (b_2, b_1)` for a planar surface with only `E_3`-points.
pub fn planar_pg_q(g: &ZappaticGraph) -> Result<(u64, u64)> {
    if !g.is_planar() {
        return Err(Error::NotPlanar);
    }
    g.require_only_e3()?;
    let b = betti(g);
    Ok((b.b2 as u64, b.b1 as u64))
}

/// Which statement the report's genus values come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportBasis {
    /// The surface itself, only `E_3`-points: `p_g` is an upper bound.
    CentralFibre,
    /// Smooth fibres of a degeneration with this central fibre.
    SmoothFibre,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub basis: ReportBasis,
    pub degree: u64,
    pub sectional_genus: u64,
    pub chi_o: i64,
    pub betti: BettiNumbers,
    pub coker_phi: usize,
    pub pg_bound: u64,
    pub pg: Option<u64>,
    pub q: Option<u64>,
    pub equality_certain: bool,
}

fn irregularity(pg: u64, chi: i64) -> Result<u64> {
    let q = 1 + pg as i64 - chi;
    if q < 0 {
        return Err(Error::Inconsistent(format!(
            "p_g = {pg} and chi = {chi} give negative irregularity {q}"
        )));
    }
    Ok(q as u64)
}

/// Invariants of the surface itself (only `E_3`-points). `p_g` and `q` are
/// filled in when the bound is known to be attained.
pub fn surface_report(
    g: &ZappaticGraph,
    phi: Option<&PhiSpec>,
    ample_asserted: bool,
) -> Result<InvariantReport> {
    let bound = pg_upper_bound(g, phi, ample_asserted)?;
    let chi = chi_o(g);
    let pg = bound.equality_certain.then_some(bound.value);
    let q = pg.map(|p| irregularity(p, chi)).transpose()?;
    Ok(InvariantReport {
        basis: ReportBasis::CentralFibre,
        degree: degree(g),
        sectional_genus: sectional_genus(g),
        chi_o: chi,
        betti: betti(g),
        coker_phi: bound.coker_phi,
        pg_bound: bound.value,
        pg,
        q,
        equality_certain: bound.equality_certain,
    })
}

/// Invariants of the general fibre of a good Zappatic degeneration with
/// central fibre `g`. Degree and sectional genus are flat; `chi` is the
/// same formula as for the central fibre; the geometric genus is
/// `b_2(G_X) + sum p_g(X_i) + dim coker(Phi)` exactly, for any good
/// markings. The caller asserts that `g` is smoothable.
pub fn fibre_invariants(g: &ZappaticGraph, phi: Option<&PhiSpec>) -> Result<InvariantReport> {
    let b = betti(g);
    let coker_phi = coker_phi_dim(g, phi)?;
    let pg = b.b2 as u64 + pg_sum(g) + coker_phi as u64;
    let chi = chi_o(g);
    Ok(InvariantReport {
        basis: ReportBasis::SmoothFibre,
        degree: degree(g),
        sectional_genus: sectional_genus(g),
        chi_o: chi,
        betti: b,
        coker_phi,
        pg_bound: pg,
        pg: Some(pg),
        q: Some(irregularity(pg, chi)?),
        equality_certain: true,
    })
}
