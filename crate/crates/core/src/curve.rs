//! Dual graphs of reduced nodal curves with smooth components.
//!
//! Vertices are components weighted by `(genus, degree)`; parallel edges are
//! the nodes between two components. Edges are oriented from the lower id to
//! the higher one and indexed `1..=m_ij` for each pair.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::{Error, Result, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveVertex {
    pub id: VertexId,
    pub genus: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
}

impl CurveVertex {
    pub fn new(id: VertexId, genus: u32, degree: Option<u32>) -> Self {
        Self { id, genus, degree }
    }

    /// A line: genus 0, degree 1.
    pub fn line(id: VertexId) -> Self {
        Self::new(id, 0, Some(1))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveEdge {
    pub i: VertexId,
    pub j: VertexId,
    pub index: u32,
}

impl CurveEdge {
    pub fn new(i: VertexId, j: VertexId, index: u32) -> Self {
        Self { i, j, index }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StickKind {
    Chain,
    Fork,
    Cycle,
}

impl StickKind {
    pub fn name(self) -> &'static str {
        match self {
            StickKind::Chain => "chain",
            StickKind::Fork => "fork",
            StickKind::Cycle => "cycle",
        }
    }

    pub fn min_vertices(self) -> usize {
        match self {
            StickKind::Chain | StickKind::Cycle => 3,
            StickKind::Fork => 4,
        }
    }
}

/// Dual graph of a nodal curve.
///
/// Construction checks the structural invariants (distinct positive ids,
/// positive degrees, no loops, oriented edges with gap-free indices).
/// Connectivity is not enforced here; the genus operations reject
/// disconnected graphs instead.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveGraph {
    vertices: Vec<CurveVertex>,
    edges: Vec<CurveEdge>,
    #[serde(skip_serializing_if = "Option::is_none")]
    embedding_dim: Option<u32>,
}

impl CurveGraph {
    pub fn new(
        mut vertices: Vec<CurveVertex>,
        mut edges: Vec<CurveEdge>,
        embedding_dim: Option<u32>,
    ) -> Result<Self> {
        vertices.sort();
        let mut ids = BTreeSet::new();
        for v in &vertices {
            if v.id == 0 {
                return Err(Error::InvalidCurve("vertex id 0 is not positive".into()));
            }
            if !ids.insert(v.id) {
                return Err(Error::InvalidCurve(format!("duplicate vertex id {}", v.id)));
            }
            if v.degree == Some(0) {
                return Err(Error::InvalidCurve(format!("vertex {} has degree 0", v.id)));
            }
        }
        if embedding_dim == Some(0) {
            return Err(Error::InvalidCurve("embedding dimension 0".into()));
        }

        edges.sort();
        let mut per_pair: BTreeMap<(VertexId, VertexId), Vec<u32>> = BTreeMap::new();
        for e in &edges {
            if e.i == e.j {
                return Err(Error::InvalidCurve(format!("loop at vertex {}", e.i)));
            }
            if e.i > e.j {
                return Err(Error::InvalidCurve(format!(
                    "edge ({}, {}) is not oriented from lower to higher id",
                    e.i, e.j
                )));
            }
            for end in [e.i, e.j] {
                if !ids.contains(&end) {
                    return Err(Error::InvalidCurve(format!(
                        "edge ({}, {}) references missing vertex {end}",
                        e.i, e.j
                    )));
                }
            }
            per_pair.entry((e.i, e.j)).or_default().push(e.index);
        }
        for ((i, j), indices) in &per_pair {
            // sorted, so gap-free means exactly 1..=m
            if indices.iter().zip(1..).any(|(&h, want)| h != want) {
                return Err(Error::InvalidCurve(format!(
                    "edge indices for ({i}, {j}) are not 1..{}: {indices:?}",
                    indices.len()
                )));
            }
        }

        Ok(Self {
            vertices,
            edges,
            embedding_dim,
        })
    }

    /// Builds a graph from unordered node pairs, orienting each pair and
    /// numbering parallel edges in order of appearance.
    pub fn from_pairs(
        vertices: Vec<CurveVertex>,
        pairs: &[(VertexId, VertexId)],
        embedding_dim: Option<u32>,
    ) -> Result<Self> {
        let mut next: BTreeMap<(VertexId, VertexId), u32> = BTreeMap::new();
        let edges = pairs
            .iter()
            .map(|&(a, b)| {
                let key = (a.min(b), a.max(b));
                let h = next.entry(key).or_insert(0);
                *h += 1;
                CurveEdge::new(key.0, key.1, *h)
            })
            .collect();
        Self::new(vertices, edges, embedding_dim)
    }

    pub fn vertices(&self) -> &[CurveVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[CurveEdge] {
        &self.edges
    }

    pub fn embedding_dim(&self) -> Option<u32> {
        self.embedding_dim
    }

    pub fn with_embedding_dim(mut self, r: Option<u32>) -> Self {
        self.embedding_dim = r;
        self
    }

    /// `(v, e)` with edges counted with multiplicity.
    pub fn counts(&self) -> (usize, usize) {
        (self.vertices.len(), self.edges.len())
    }

    /// Number of parallel edges joining `a` and `b`.
    pub fn multiplicity(&self, a: VertexId, b: VertexId) -> usize {
        let (i, j) = (a.min(b), a.max(b));
        self.edges.iter().filter(|e| e.i == i && e.j == j).count()
    }

    pub fn is_connected(&self) -> bool {
        let Some(first) = self.vertices.first() else {
            return false;
        };
        let mut adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for e in &self.edges {
            adj.entry(e.i).or_default().push(e.j);
            adj.entry(e.j).or_default().push(e.i);
        }
        let mut seen = BTreeSet::from([first.id]);
        let mut stack = vec![first.id];
        while let Some(u) = stack.pop() {
            for &w in adj.get(&u).into_iter().flatten() {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    fn genus_sum(&self) -> i64 {
        self.vertices.iter().map(|v| i64::from(v.genus)).sum()
    }

    /// Euler characteristic `v - e` of the graph.
    pub fn euler(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64
    }

    /// First Betti number `1 - (v - e)`.
    pub fn h1(&self) -> Result<u64> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok((1 - self.euler()) as u64)
    }

    /// `chi(O_C) = v - e - sum g_i`.
    pub fn chi_o(&self) -> i64 {
        self.euler() - self.genus_sum()
    }

    /// Arithmetic genus `h1 + sum g_i`.
    pub fn arithmetic_genus(&self) -> Result<u64> {
        Ok(self.h1()? + self.genus_sum() as u64)
    }

    /// Total degree `sum d_i`.
    pub fn degree(&self) -> Result<u64> {
        self.vertices.iter().try_fold(0u64, |acc, v| {
            v.degree
                .map(|d| acc + u64::from(d))
                .ok_or(Error::MissingDegree(v.id))
        })
    }

    /// Catalog stick curves with all weights `(0, 1)`.
    ///
    /// The chain is the path `1 - 2 - ... - n`, the fork is the star with
    /// centre `n` and leaves `1..n-1`, the cycle closes the path with the
    /// edge `(1, n)`. The embedding dimension is `n` for trees and `n - 1`
    /// for the cycle.
    pub fn stick(kind: StickKind, n: usize) -> Result<Self> {
        if n < kind.min_vertices() {
            return Err(Error::TooSmall {
                kind: kind.name(),
                n,
                min: kind.min_vertices(),
            });
        }
        let top = n as VertexId;
        let vertices = (1..=top).map(CurveVertex::line).collect();
        let pairs: Vec<_> = match kind {
            StickKind::Chain => (1..top).map(|i| (i, i + 1)).collect(),
            StickKind::Fork => (1..top).map(|i| (i, top)).collect(),
            StickKind::Cycle => (1..top).map(|i| (i, i + 1)).chain([(1, top)]).collect(),
        };
        let r = match kind {
            StickKind::Cycle => top - 1,
            _ => top,
        };
        Self::from_pairs(vertices, &pairs, Some(r))
    }

    /// The stick curve `C_{T_n}` on a tree: weights `(0, 1)`, embedded in
    /// `P^n`.
    pub fn tree_stick(tree: &CurveGraph) -> Result<Self> {
        let (v, e) = tree.counts();
        if !tree.is_connected() || e + 1 != v {
            return Err(Error::NotATree);
        }
        if v < 3 {
            return Err(Error::TooSmall {
                kind: "tree",
                n: v,
                min: 3,
            });
        }
        let vertices = tree
            .vertices
            .iter()
            .map(|x| CurveVertex::line(x.id))
            .collect();
        Self::new(vertices, tree.edges.clone(), Some(v as u32))
    }

    /// Same graph with vertex ids replaced through `map`. The map must be
    /// injective on the vertex set.
    pub fn relabel(&self, map: impl Fn(VertexId) -> VertexId) -> Result<Self> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| CurveVertex::new(map(v.id), v.genus, v.degree))
            .collect();
        let pairs: Vec<_> = self.edges.iter().map(|e| (map(e.i), map(e.j))).collect();
        Self::from_pairs(vertices, &pairs, self.embedding_dim)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> CurveGraph {
        let vs = (1..=4).map(|i| CurveVertex::new(i, 0, None)).collect();
        CurveGraph::from_pairs(vs, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)], None).unwrap()
    }

    fn banana(edges: usize) -> CurveGraph {
        let vs = vec![CurveVertex::line(1), CurveVertex::line(2)];
        CurveGraph::from_pairs(vs, &vec![(1, 2); edges], None).unwrap()
    }

    #[test]
    fn counts_of_catalog_curves() {
        assert_eq!(
            CurveGraph::stick(StickKind::Chain, 3).unwrap().counts(),
            (3, 2)
        );
        assert_eq!(
            CurveGraph::stick(StickKind::Cycle, 7).unwrap().counts(),
            (7, 7)
        );
        assert_eq!(
            CurveGraph::stick(StickKind::Fork, 5).unwrap().counts(),
            (5, 4)
        );
    }

    #[test]
    fn euler_and_h1() {
        assert_eq!(CurveGraph::stick(StickKind::Chain, 4).unwrap().euler(), 1);
        assert_eq!(CurveGraph::stick(StickKind::Cycle, 5).unwrap().euler(), 0);
        assert_eq!(banana(3).euler(), -1);
        assert_eq!(banana(3).h1().unwrap(), 2);
        assert_eq!(
            CurveGraph::stick(StickKind::Cycle, 9)
                .unwrap()
                .h1()
                .unwrap(),
            1
        );
        assert_eq!(
            CurveGraph::stick(StickKind::Fork, 6).unwrap().h1().unwrap(),
            0
        );
    }

    #[test]
    fn chi_and_genus() {
        assert_eq!(CurveGraph::stick(StickKind::Chain, 6).unwrap().chi_o(), 1);
        assert_eq!(CurveGraph::stick(StickKind::Cycle, 6).unwrap().chi_o(), 0);
        let lone = CurveGraph::new(vec![CurveVertex::new(1, 2, None)], vec![], None).unwrap();
        assert_eq!(lone.chi_o(), -1);
        assert_eq!(lone.arithmetic_genus().unwrap(), 2);
        assert_eq!(k4().arithmetic_genus().unwrap(), 3);
    }

    #[test]
    fn degree() {
        assert_eq!(
            CurveGraph::stick(StickKind::Cycle, 6)
                .unwrap()
                .degree()
                .unwrap(),
            6
        );
        let g = CurveGraph::from_pairs(
            vec![
                CurveVertex::new(1, 0, Some(2)),
                CurveVertex::new(2, 0, Some(3)),
            ],
            &[(1, 2)],
            None,
        )
        .unwrap();
        assert_eq!(g.degree().unwrap(), 5);
        assert_eq!(k4().degree(), Err(Error::MissingDegree(1)));
    }

    #[test]
    fn stick_shapes() {
        let chain = CurveGraph::stick(StickKind::Chain, 3).unwrap();
        assert_eq!(
            chain.edges(),
            &[CurveEdge::new(1, 2, 1), CurveEdge::new(2, 3, 1)]
        );
        assert_eq!(chain.embedding_dim(), Some(3));

        let tri = CurveGraph::stick(StickKind::Cycle, 3).unwrap();
        assert_eq!(tri.multiplicity(1, 3), 1);
        assert_eq!(tri.embedding_dim(), Some(2));

        let fork = CurveGraph::stick(StickKind::Fork, 4).unwrap();
        assert!(fork.edges().iter().all(|e| e.j == 4));
        assert_eq!(fork.edges().len(), 3);

        assert!(matches!(
            CurveGraph::stick(StickKind::Fork, 3),
            Err(Error::TooSmall { min: 4, .. })
        ));
        assert!(CurveGraph::stick(StickKind::Chain, 2).is_err());
    }

    #[test]
    fn tree_sticks() {
        let path = CurveGraph::from_pairs(
            (1..=5).map(|i| CurveVertex::new(i, 3, None)).collect(),
            &[(1, 2), (2, 3), (3, 4), (4, 5)],
            None,
        )
        .unwrap();
        let t5 = CurveGraph::tree_stick(&path).unwrap();
        assert_eq!(t5.embedding_dim(), Some(5));
        assert_eq!(t5.arithmetic_genus().unwrap(), 0);
        assert_eq!(t5.degree().unwrap(), 5);

        let star = CurveGraph::from_pairs(
            (1..=5).map(|i| CurveVertex::new(i, 0, None)).collect(),
            &[(1, 5), (2, 5), (3, 5), (4, 5)],
            None,
        )
        .unwrap();
        assert_eq!(
            CurveGraph::tree_stick(&star).unwrap(),
            CurveGraph::stick(StickKind::Fork, 5).unwrap()
        );

        assert_eq!(CurveGraph::tree_stick(&k4()), Err(Error::NotATree));
        assert_eq!(CurveGraph::tree_stick(&banana(2)), Err(Error::NotATree));
    }

    #[test]
    fn rejects_malformed() {
        let vs = || vec![CurveVertex::line(1), CurveVertex::line(2)];
        assert!(CurveGraph::new(vs(), vec![CurveEdge::new(2, 1, 1)], None).is_err());
        assert!(CurveGraph::new(vs(), vec![CurveEdge::new(1, 1, 1)], None).is_err());
        assert!(CurveGraph::new(vs(), vec![CurveEdge::new(1, 3, 1)], None).is_err());
        assert!(CurveGraph::new(vs(), vec![CurveEdge::new(1, 2, 2)], None).is_err());
        let dup = vec![CurveVertex::line(1), CurveVertex::line(1)];
        assert!(CurveGraph::new(dup, vec![], None).is_err());
        assert!(CurveGraph::new(vec![CurveVertex::new(1, 0, Some(0))], vec![], None).is_err());
    }

    #[test]
    fn disconnected_genus_rejected() {
        let g = CurveGraph::new(
            vec![CurveVertex::line(1), CurveVertex::line(2)],
            vec![],
            None,
        )
        .unwrap();
        assert_eq!(g.h1(), Err(Error::Disconnected));
        assert_eq!(g.arithmetic_genus(), Err(Error::Disconnected));
        assert_eq!(g.chi_o(), 2);
    }
}
