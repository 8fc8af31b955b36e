//! Associated graphs of good Zappatic surfaces.
//!
//! A vertex is a smooth component `X_i`, an edge is a smooth irreducible
//! double curve `C_ij`. Good Zappatic singularities are recorded as
//! markings: closed `n`-faces (`E_n`-points), open `n`-faces (`R_n`-points)
//! and `n`-angles (`S_n`-points).
//!
//! [`RawZappaticGraph`] is the unchecked, serializable form; it can be
//! inspected with [`RawZappaticGraph::validate`]. [`ZappaticGraph`] is only
//! obtainable from a raw graph that validates, so every operation on it may
//! assume the structural invariants.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::curve::{CurveGraph, CurveVertex};
use crate::{Error, Result, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceVertex {
    pub id: VertexId,
    pub pg: u32,
    pub q: u32,
    pub degree: u32,
    pub section_genus: u32,
}

impl SurfaceVertex {
    /// A plane: `p_g = q = 0`, degree 1, rational hyperplane section.
    pub fn plane(id: VertexId) -> Self {
        Self {
            id,
            pg: 0,
            q: 0,
            degree: 1,
            section_genus: 0,
        }
    }

    /// `chi(O_{X_i}) = 1 - q + p_g`.
    pub fn chi(&self) -> i64 {
        1 - i64::from(self.q) + i64::from(self.pg)
    }

    fn is_plane(&self) -> bool {
        self.pg == 0 && self.q == 0 && self.degree == 1 && self.section_genus == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DoubleCurve {
    pub i: VertexId,
    pub j: VertexId,
    pub curve_degree: u32,
    pub curve_genus: u32,
}

impl DoubleCurve {
    /// A double line.
    pub fn line(a: VertexId, b: VertexId) -> Self {
        Self {
            i: a.min(b),
            j: a.max(b),
            curve_degree: 1,
            curve_genus: 0,
        }
    }

    pub fn key(&self) -> (VertexId, VertexId) {
        (self.i, self.j)
    }
}

/// Closed `n`-face, stored with the smallest id first and the second entry
/// smaller than the last.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClosedFace {
    pub cycle: Vec<VertexId>,
    pub t: u32,
}

impl ClosedFace {
    pub fn new(cycle: Vec<VertexId>, t: u32) -> Self {
        Self { cycle, t }.canonical()
    }

    pub fn canonical(mut self) -> Self {
        if let Some(pos) = self
            .cycle
            .iter()
            .enumerate()
            .min_by_key(|&(_, v)| *v)
            .map(|(p, _)| p)
        {
            self.cycle.rotate_left(pos);
        }
        let n = self.cycle.len();
        if n >= 3 && self.cycle[1] > self.cycle[n - 1] {
            self.cycle[1..].reverse();
        }
        self
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    /// Sorted vertex set; multiplicity indices count faces per vertex set.
    pub fn vertex_set(&self) -> Vec<VertexId> {
        let mut s = self.cycle.clone();
        s.sort_unstable();
        s
    }

    /// Consecutive pairs `(u_k, u_{k+1})` around the cycle, in cycle order.
    pub fn sides(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let n = self.cycle.len();
        (0..n).map(move |k| (self.cycle[k], self.cycle[(k + 1) % n]))
    }

    /// The two cycle neighbours of `w`, if `w` lies on the face.
    pub fn neighbours_of(&self, w: VertexId) -> Option<(VertexId, VertexId)> {
        let n = self.cycle.len();
        let k = self.cycle.iter().position(|&u| u == w)?;
        Some((self.cycle[(k + n - 1) % n], self.cycle[(k + 1) % n]))
    }
}

impl fmt::Display for ClosedFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "face {} t={}", join_ids(&self.cycle), self.t)
    }
}

/// Open `n`-face on a path; stored with the first id smaller than the last.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OpenFace {
    pub path: Vec<VertexId>,
    pub t: u32,
}

impl OpenFace {
    pub fn new(path: Vec<VertexId>, t: u32) -> Self {
        Self { path, t }.canonical()
    }

    pub fn canonical(mut self) -> Self {
        if self.path.first() > self.path.last() {
            self.path.reverse();
        }
        self
    }

    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path.is_empty()
    }

    pub fn sides(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.path.windows(2).map(|w| (w[0], w[1]))
    }

    /// Endpoints of the path: the pair joined by the dashed non-edge.
    pub fn endpoints(&self) -> Option<(VertexId, VertexId)> {
        Some((*self.path.first()?, *self.path.last()?))
    }

    /// Path neighbours of an interior vertex `w`.
    pub fn neighbours_of(&self, w: VertexId) -> Option<(VertexId, VertexId)> {
        let k = self.path.iter().position(|&u| u == w)?;
        if k == 0 || k + 1 == self.path.len() {
            return None;
        }
        Some((self.path[k - 1], self.path[k + 1]))
    }
}

impl fmt::Display for OpenFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "open face {} t={}", join_ids(&self.path), self.t)
    }
}

/// `n`-angle: `n - 1` edges fanning out of `center`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Angle {
    pub center: VertexId,
    pub leaves: BTreeSet<VertexId>,
    pub t: u32,
}

impl Angle {
    pub fn new(center: VertexId, leaves: impl IntoIterator<Item = VertexId>, t: u32) -> Self {
        Self {
            center,
            leaves: leaves.into_iter().collect(),
            t,
        }
    }

    /// `n`, the number of components through the `S_n`-point.
    pub fn order(&self) -> usize {
        self.leaves.len() + 1
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let leaves: Vec<_> = self.leaves.iter().copied().collect();
        write!(
            f,
            "angle at {} over {{{}}} t={}",
            self.center,
            join_ids(&leaves).trim_matches(|c| c == '(' || c == ')'),
            self.t
        )
    }
}

/// Any of the three singularity markings.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Marking {
    ClosedFace(ClosedFace),
    OpenFace(OpenFace),
    Angle(Angle),
}

impl fmt::Display for Marking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Marking::ClosedFace(x) => x.fmt(f),
            Marking::OpenFace(x) => x.fmt(f),
            Marking::Angle(x) => x.fmt(f),
        }
    }
}

fn join_ids(ids: &[VertexId]) -> String {
    let parts: Vec<_> = ids.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(","))
}

/// One broken structural rule.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Violation {
    pub element: String,
    pub rule: String,
}

impl Violation {
    fn new(element: impl fmt::Display, rule: impl Into<String>) -> Self {
        Self {
            element: element.to_string(),
            rule: rule.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.element, self.rule)
    }
}

/// Unchecked associated graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawZappaticGraph {
    #[serde(default)]
    pub planar: bool,
    pub vertices: Vec<SurfaceVertex>,
    #[serde(default)]
    pub edges: Vec<DoubleCurve>,
    #[serde(default)]
    pub closed_faces: Vec<ClosedFace>,
    #[serde(default)]
    pub open_faces: Vec<OpenFace>,
    #[serde(default)]
    pub angles: Vec<Angle>,
}

impl RawZappaticGraph {
    /// Planar graph on the planes `1..=v` with no edges yet.
    pub fn planar(v: VertexId) -> Self {
        Self {
            planar: true,
            vertices: (1..=v).map(SurfaceVertex::plane).collect(),
            ..Self::default()
        }
    }

    /// Adds a double line between `a` and `b` unless one is present.
    pub fn with_edge(mut self, a: VertexId, b: VertexId) -> Self {
        let key = (a.min(b), a.max(b));
        if !self.edges.iter().any(|e| e.key() == key) {
            self.edges.push(DoubleCurve::line(a, b));
        }
        self
    }

    pub fn with_edges(self, pairs: &[(VertexId, VertexId)]) -> Self {
        pairs.iter().fold(self, |g, &(a, b)| g.with_edge(a, b))
    }

    /// Adds a closed face on `cycle` with the next free multiplicity index.
    /// Missing sides are not added.
    pub fn with_face(mut self, cycle: &[VertexId]) -> Self {
        let face = ClosedFace::new(cycle.to_vec(), 1);
        let set = face.vertex_set();
        let t = 1 + self
            .closed_faces
            .iter()
            .filter(|f| f.vertex_set() == set)
            .count() as u32;
        self.closed_faces.push(ClosedFace { t, ..face });
        self
    }

    pub fn with_open_face(mut self, path: &[VertexId]) -> Self {
        let face = OpenFace::new(path.to_vec(), 1);
        let t = 1 + self
            .open_faces
            .iter()
            .filter(|f| f.path == face.path)
            .count() as u32;
        self.open_faces.push(OpenFace { t, ..face });
        self
    }

    pub fn with_angle(mut self, center: VertexId, leaves: &[VertexId]) -> Self {
        let angle = Angle::new(center, leaves.iter().copied(), 1);
        let t = 1 + self
            .angles
            .iter()
            .filter(|a| a.center == angle.center && a.leaves == angle.leaves)
            .count() as u32;
        self.angles.push(Angle { t, ..angle });
        self
    }

    /// Puts every marking in canonical form and sorts all lists.
    pub fn canonicalize(&mut self) {
        self.vertices.sort();
        for e in &mut self.edges {
            if e.i > e.j {
                std::mem::swap(&mut e.i, &mut e.j);
            }
        }
        self.edges.sort();
        for f in &mut self.closed_faces {
            *f = std::mem::take(f).canonical();
        }
        self.closed_faces.sort();
        for f in &mut self.open_faces {
            *f = std::mem::take(f).canonical();
        }
        self.open_faces.sort();
        self.angles.sort();
    }

    pub fn canonicalized(mut self) -> Self {
        self.canonicalize();
        self
    }

    /// Every broken invariant, in a deterministic order. Empty iff valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();

        let mut ids = BTreeSet::new();
        for v in &self.vertices {
            let el = format!("vertex {}", v.id);
            if v.id == 0 {
                out.push(Violation::new(&el, "id must be positive"));
            }
            if !ids.insert(v.id) {
                out.push(Violation::new(&el, "duplicate vertex id"));
            }
            if v.degree == 0 {
                out.push(Violation::new(&el, "degree must be at least 1"));
            }
            if self.planar && !v.is_plane() {
                out.push(Violation::new(
                    &el,
                    "planar graph requires pg=q=section_genus=0 and degree=1",
                ));
            }
        }
        if self.vertices.is_empty() {
            out.push(Violation::new("graph", "no vertices"));
        }

        let mut edge_keys = BTreeSet::new();
        for e in &self.edges {
            let el = format!("edge ({}, {})", e.i, e.j);
            if e.i >= e.j {
                out.push(Violation::new(&el, "edge must join i < j (no loops)"));
            }
            for end in [e.i, e.j] {
                if !ids.contains(&end) {
                    out.push(Violation::new(&el, format!("missing vertex {end}")));
                }
            }
            if !edge_keys.insert((e.i.min(e.j), e.i.max(e.j))) {
                out.push(Violation::new(
                    &el,
                    "more than one edge on this vertex pair",
                ));
            }
            if e.curve_degree == 0 {
                out.push(Violation::new(&el, "curve degree must be at least 1"));
            }
            if self.planar && (e.curve_degree != 1 || e.curve_genus != 0) {
                out.push(Violation::new(
                    &el,
                    "planar graph requires curve_degree=1 and curve_genus=0",
                ));
            }
        }
        let has_edge = |a: VertexId, b: VertexId| edge_keys.contains(&(a.min(b), a.max(b)));

        let check_vertices = |el: &str, list: &[VertexId], out: &mut Vec<Violation>| {
            if list.len() < 3 {
                out.push(Violation::new(el, "needs at least 3 vertices"));
            }
            if list.iter().collect::<BTreeSet<_>>().len() != list.len() {
                out.push(Violation::new(el, "vertices must be distinct"));
            }
            for v in list {
                if !ids.contains(v) {
                    out.push(Violation::new(el, format!("missing vertex {v}")));
                }
            }
        };

        let mut face_sets: BTreeMap<Vec<VertexId>, Vec<u32>> = BTreeMap::new();
        for f in &self.closed_faces {
            let el = f.to_string();
            check_vertices(&el, &f.cycle, &mut out);
            if f.clone().canonical() != *f {
                out.push(Violation::new(&el, "cycle is not in canonical form"));
            }
            for (a, b) in f.sides() {
                if a != b && !has_edge(a, b) {
                    out.push(Violation::new(
                        &el,
                        format!("missing edge ({}, {})", a.min(b), a.max(b)),
                    ));
                }
            }
            face_sets.entry(f.vertex_set()).or_default().push(f.t);
        }
        for (set, ts) in &face_sets {
            let el = format!("faces on {}", join_ids(set));
            check_indices(&el, ts, &mut out);
            if self.planar && ts.len() > 1 {
                out.push(Violation::new(
                    &el,
                    "planar graph allows one face per vertex set",
                ));
            }
        }

        let mut open_keys: BTreeMap<Vec<VertexId>, Vec<u32>> = BTreeMap::new();
        for f in &self.open_faces {
            let el = f.to_string();
            check_vertices(&el, &f.path, &mut out);
            if f.clone().canonical() != *f {
                out.push(Violation::new(&el, "path is not in canonical form"));
            }
            for (a, b) in f.sides() {
                if a != b && !has_edge(a, b) {
                    out.push(Violation::new(
                        &el,
                        format!("missing edge ({}, {})", a.min(b), a.max(b)),
                    ));
                }
            }
            open_keys.entry(f.path.clone()).or_default().push(f.t);
        }
        for (path, ts) in &open_keys {
            check_indices(&format!("open faces on {}", join_ids(path)), ts, &mut out);
        }

        let mut angle_keys: BTreeMap<(VertexId, Vec<VertexId>), Vec<u32>> = BTreeMap::new();
        for a in &self.angles {
            let el = a.to_string();
            if a.leaves.len() < 3 {
                out.push(Violation::new(&el, "needs at least 3 leaves"));
            }
            if a.leaves.contains(&a.center) {
                out.push(Violation::new(&el, "center cannot be a leaf"));
            }
            if !ids.contains(&a.center) {
                out.push(Violation::new(&el, format!("missing vertex {}", a.center)));
            }
            for &l in &a.leaves {
                if !ids.contains(&l) {
                    out.push(Violation::new(&el, format!("missing vertex {l}")));
                } else if l != a.center && !has_edge(a.center, l) {
                    out.push(Violation::new(
                        &el,
                        format!("missing edge ({}, {})", a.center.min(l), a.center.max(l)),
                    ));
                }
            }
            angle_keys
                .entry((a.center, a.leaves.iter().copied().collect()))
                .or_default()
                .push(a.t);
        }
        for ((c, leaves), ts) in &angle_keys {
            let el = format!("angles at {c} over {}", join_ids(leaves));
            check_indices(&el, ts, &mut out);
        }

        if !self.vertices.is_empty() && !connected(&ids, &edge_keys) {
            out.push(Violation::new("graph", "not connected"));
        }
        out
    }
}

fn check_indices(el: &str, ts: &[u32], out: &mut Vec<Violation>) {
    let mut sorted = ts.to_vec();
    sorted.sort_unstable();
    if sorted.iter().zip(1..).any(|(&t, want)| t != want) {
        out.push(Violation::new(
            el,
            format!("multiplicity indices {sorted:?} are not 1..{}", ts.len()),
        ));
    }
}

fn connected(ids: &BTreeSet<VertexId>, edges: &BTreeSet<(VertexId, VertexId)>) -> bool {
    let mut adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for &(a, b) in edges {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    let Some(&start) = ids.iter().next() else {
        return true;
    };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &w in adj.get(&u).into_iter().flatten() {
            if ids.contains(&w) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == ids.len()
}

/// Per-type marking counts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub v: usize,
    pub e: usize,
    /// `f_n`: closed faces by `n`.
    pub faces_by_n: BTreeMap<usize, usize>,
    pub f: usize,
    /// `r_n`: open faces by `n`.
    pub open_by_n: BTreeMap<usize, usize>,
    /// `s_n`: angles by `n`.
    pub angles_by_n: BTreeMap<usize, usize>,
}

/// Validated associated graph in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZappaticGraph {
    raw: RawZappaticGraph,
    edge_index: BTreeMap<(VertexId, VertexId), usize>,
}

impl TryFrom<RawZappaticGraph> for ZappaticGraph {
    type Error = Error;

    fn try_from(raw: RawZappaticGraph) -> Result<Self> {
        Self::new(raw)
    }
}

impl ZappaticGraph {
    /// Canonicalizes and validates.
    pub fn new(mut raw: RawZappaticGraph) -> Result<Self> {
        raw.canonicalize();
        let violations = raw.validate();
        if !violations.is_empty() {
            return Err(Error::InvalidGraph(violations));
        }
        let edge_index = raw
            .edges
            .iter()
            .enumerate()
            .map(|(k, e)| (e.key(), k))
            .collect();
        Ok(Self { raw, edge_index })
    }

    pub fn raw(&self) -> &RawZappaticGraph {
        &self.raw
    }

    pub fn into_raw(self) -> RawZappaticGraph {
        self.raw
    }

    pub fn is_planar(&self) -> bool {
        self.raw.planar
    }

    pub fn vertices(&self) -> &[SurfaceVertex] {
        &self.raw.vertices
    }

    pub fn edges(&self) -> &[DoubleCurve] {
        &self.raw.edges
    }

    pub fn closed_faces(&self) -> &[ClosedFace] {
        &self.raw.closed_faces
    }

    pub fn open_faces(&self) -> &[OpenFace] {
        &self.raw.open_faces
    }

    pub fn angles(&self) -> &[Angle] {
        &self.raw.angles
    }

    pub fn vertex(&self, id: VertexId) -> Option<&SurfaceVertex> {
        self.raw
            .vertices
            .binary_search_by_key(&id, |v| v.id)
            .ok()
            .map(|k| &self.raw.vertices[k])
    }

    /// Position of the edge on `{a, b}` in [`Self::edges`].
    pub fn edge_position(&self, a: VertexId, b: VertexId) -> Option<usize> {
        self.edge_index.get(&(a.min(b), a.max(b))).copied()
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.edge_position(a, b).is_some()
    }

    pub fn neighbours(&self, w: VertexId) -> Vec<VertexId> {
        self.raw
            .edges
            .iter()
            .filter_map(|e| match (e.i == w, e.j == w) {
                (true, _) => Some(e.j),
                (_, true) => Some(e.i),
                _ => None,
            })
            .collect()
    }

    pub fn max_vertex_id(&self) -> VertexId {
        self.raw.vertices.last().map_or(0, |v| v.id)
    }

    /// All markings, in canonical order within each kind.
    pub fn markings(&self) -> impl Iterator<Item = Marking> + '_ {
        let closed = self.closed_faces().iter().cloned().map(Marking::ClosedFace);
        let open = self.open_faces().iter().cloned().map(Marking::OpenFace);
        let angles = self.angles().iter().cloned().map(Marking::Angle);
        closed.chain(open).chain(angles)
    }

    pub fn contains_marking(&self, m: &Marking) -> bool {
        match m {
            Marking::ClosedFace(f) => self.closed_faces().contains(f),
            Marking::OpenFace(f) => self.open_faces().contains(f),
            Marking::Angle(a) => self.angles().contains(a),
        }
    }

    pub fn counts(&self) -> Counts {
        let mut c = Counts {
            v: self.vertices().len(),
            e: self.edges().len(),
            f: self.closed_faces().len(),
            ..Counts::default()
        };
        for f in self.closed_faces() {
            *c.faces_by_n.entry(f.len()).or_default() += 1;
        }
        for f in self.open_faces() {
            *c.open_by_n.entry(f.len()).or_default() += 1;
        }
        for a in self.angles() {
            *c.angles_by_n.entry(a.order()).or_default() += 1;
        }
        c
    }

    /// `chi(G) = v - e + f`; open faces and angles do not count.
    pub fn chi_graph(&self) -> i64 {
        let c = self.counts();
        c.v as i64 - c.e as i64 + c.f as i64
    }

    /// Ok when the only markings are closed 3-faces.
    pub fn require_only_e3(&self) -> Result<()> {
        if let Some(f) = self.closed_faces().iter().find(|f| f.len() != 3) {
            return Err(Error::NotOnlyE3(format!("{f} has {} sides", f.len())));
        }
        if let Some(f) = self.open_faces().first() {
            return Err(Error::NotOnlyE3(f.to_string()));
        }
        if let Some(a) = self.angles().first() {
            return Err(Error::NotOnlyE3(a.to_string()));
        }
        Ok(())
    }

    pub fn is_only_e3(&self) -> bool {
        self.require_only_e3().is_ok()
    }

    /// The 1-skeleton: vertices weighted `(section_genus, degree)`, one
    /// curve edge per double curve.
    pub fn one_skeleton(&self) -> CurveGraph {
        let pairs: Vec<_> = self.edges().iter().map(DoubleCurve::key).collect();
        CurveGraph::from_pairs(self.section_vertices(), &pairs, None)
            .expect("validated graph has a valid 1-skeleton")
    }

    /// Dual graph of a general hyperplane section: `c_ij` parallel edges
    /// for each double curve.
    pub fn hyperplane_section(&self) -> CurveGraph {
        let pairs: Vec<_> = self
            .edges()
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.key(), e.curve_degree as usize))
            .collect();
        CurveGraph::from_pairs(self.section_vertices(), &pairs, None)
            .expect("validated graph has a valid hyperplane section")
    }

    fn section_vertices(&self) -> Vec<CurveVertex> {
        self.vertices()
            .iter()
            .map(|v| CurveVertex::new(v.id, v.section_genus, Some(v.degree)))
            .collect()
    }

    /// Same graph with every vertex id sent through `map`, which must be
    /// injective and keep ids positive.
    pub fn relabel(&self, map: impl Fn(VertexId) -> VertexId) -> Result<Self> {
        let raw = &self.raw;
        let relabelled = RawZappaticGraph {
            planar: raw.planar,
            vertices: raw
                .vertices
                .iter()
                .map(|v| SurfaceVertex {
                    id: map(v.id),
                    ..*v
                })
                .collect(),
            edges: raw
                .edges
                .iter()
                .map(|e| {
                    let (a, b) = (map(e.i), map(e.j));
                    DoubleCurve {
                        i: a.min(b),
                        j: a.max(b),
                        ..*e
                    }
                })
                .collect(),
            closed_faces: raw
                .closed_faces
                .iter()
                .map(|f| ClosedFace::new(f.cycle.iter().map(|&v| map(v)).collect(), f.t))
                .collect(),
            open_faces: raw
                .open_faces
                .iter()
                .map(|f| OpenFace::new(f.path.iter().map(|&v| map(v)).collect(), f.t))
                .collect(),
            angles: raw
                .angles
                .iter()
                .map(|a| Angle::new(map(a.center), a.leaves.iter().map(|&v| map(v)), a.t))
                .collect(),
        };
        Self::new(relabelled)
    }
}
