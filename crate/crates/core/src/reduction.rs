//! Graph-level semistable reduction.
//!
//! Each good Zappatic singularity other than an `E_3`-point is replaced by
//! a cone over its local graph: a new rational component (the apex) joined
//! by rational double curves to every component through the point, with a
//! triangle for each side of the marking. Closed `n`-faces become `n`
//! triangles; open faces and angles, whose local graphs are contractible,
//! become fans of triangles that retract back onto them. The rewrites keep
//! `(b0, b1, b2)`, which is checked after every step.
//!
//! Only the homological contract is modelled. Degrees of the exceptional
//! components are placeholders (1), so degree sums change.

use serde::Serialize;

use crate::homology::{betti, BettiNumbers};
use crate::surface::{
    Angle, ClosedFace, DoubleCurve, Marking, OpenFace, RawZappaticGraph, SurfaceVertex,
    ZappaticGraph,
};
use crate::{Error, Result, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    TriangulateFace,
    ResolveOpenFace,
    ResolveAngle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub kind: StepKind,
    pub target: Marking,
    pub new_vertices: Vec<VertexId>,
    pub before: BettiNumbers,
    pub after: BettiNumbers,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub before: BettiNumbers,
    pub after: BettiNumbers,
    pub steps: Vec<ReductionStep>,
}

/// Adds an apex over `base`, spokes to every base vertex and one triangle
/// per pair in `fan`.
fn cone(
    mut raw: RawZappaticGraph,
    base: &[VertexId],
    fan: &[(VertexId, VertexId)],
) -> (RawZappaticGraph, VertexId) {
    let apex = raw.vertices.iter().map(|v| v.id).max().unwrap_or(0) + 1;
    raw.vertices.push(SurfaceVertex::plane(apex));
    raw.edges
        .extend(base.iter().map(|&u| DoubleCurve::line(apex, u)));
    for &(a, b) in fan {
        raw = raw.with_face(&[apex, a, b]);
    }
    (raw, apex)
}

/// Removes the marking at position `at` and closes the gap it leaves in
/// the multiplicity indices of its siblings.
fn remove_indexed<T>(
    list: &mut Vec<T>,
    at: usize,
    same_key: impl Fn(&T, &T) -> bool,
    index: impl Fn(&mut T) -> &mut u32,
) {
    let mut removed = list.remove(at);
    let t = *index(&mut removed);
    for x in list.iter_mut() {
        if same_key(x, &removed) && *index(x) > t {
            *index(x) -= 1;
        }
    }
}

/// Replaces a closed face with `n >= 4` sides by `n` triangles around a
/// new apex.
pub fn triangulate_closed_face(g: &ZappaticGraph, face: &ClosedFace) -> Result<ZappaticGraph> {
    let face = face.clone().canonical();
    let at = g
        .closed_faces()
        .iter()
        .position(|f| *f == face)
        .ok_or_else(|| Error::MarkingAbsent(face.to_string()))?;
    if face.len() == 3 {
        return Err(Error::AlreadyTriangle(face.to_string()));
    }
    let mut raw = g.raw().clone();
    remove_indexed(
        &mut raw.closed_faces,
        at,
        |a, b| a.vertex_set() == b.vertex_set(),
        |f| &mut f.t,
    );
    let sides: Vec<_> = face.sides().collect();
    let (raw, _) = cone(raw, &face.cycle, &sides);
    ZappaticGraph::new(raw)
}

/// Replaces an open face on `v_1..v_n` by `n - 1` triangles over the path.
pub fn resolve_open_face(g: &ZappaticGraph, face: &OpenFace) -> Result<ZappaticGraph> {
    let face = face.clone().canonical();
    let at = g
        .open_faces()
        .iter()
        .position(|f| *f == face)
        .ok_or_else(|| Error::MarkingAbsent(face.to_string()))?;
    let mut raw = g.raw().clone();
    remove_indexed(
        &mut raw.open_faces,
        at,
        |a, b| a.path == b.path,
        |f| &mut f.t,
    );
    let sides: Vec<_> = face.sides().collect();
    let (raw, _) = cone(raw, &face.path, &sides);
    ZappaticGraph::new(raw)
}

/// Replaces an angle by one triangle `(apex, leaf, centre)` per leaf.
pub fn resolve_angle(g: &ZappaticGraph, angle: &Angle) -> Result<ZappaticGraph> {
    let at = g
        .angles()
        .iter()
        .position(|a| a == angle)
        .ok_or_else(|| Error::MarkingAbsent(angle.to_string()))?;
    let mut raw = g.raw().clone();
    remove_indexed(
        &mut raw.angles,
        at,
        |a, b| a.center == b.center && a.leaves == b.leaves,
        |a| &mut a.t,
    );
    let base: Vec<_> = std::iter::once(angle.center)
        .chain(angle.leaves.iter().copied())
        .collect();
    let fan: Vec<_> = angle.leaves.iter().map(|&l| (l, angle.center)).collect();
    let (raw, _) = cone(raw, &base, &fan);
    ZappaticGraph::new(raw)
}

/// Next marking to rewrite: open faces, then angles, then closed faces by
/// decreasing size, each in canonical order.
fn next_marking(g: &ZappaticGraph) -> Option<Marking> {
    if let Some(f) = g.open_faces().first() {
        return Some(Marking::OpenFace(f.clone()));
    }
    if let Some(a) = g.angles().first() {
        return Some(Marking::Angle(a.clone()));
    }
    g.closed_faces()
        .iter()
        .filter(|f| f.len() > 3)
        .min_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)))
        .map(|f| Marking::ClosedFace(f.clone()))
}

/// Rewrites `g` until its only markings are closed 3-faces.
pub fn semistable_reduce(g: &ZappaticGraph) -> Result<(ZappaticGraph, ReductionTrace)> {
    let start = betti(g);
    let mut current = g.clone();
    let mut before = start;
    let mut steps = Vec::new();
    while let Some(target) = next_marking(&current) {
        let apex = current.max_vertex_id() + 1;
        let (kind, next) = match &target {
            Marking::OpenFace(f) => (StepKind::ResolveOpenFace, resolve_open_face(&current, f)?),
            Marking::Angle(a) => (StepKind::ResolveAngle, resolve_angle(&current, a)?),
            Marking::ClosedFace(f) => (
                StepKind::TriangulateFace,
                triangulate_closed_face(&current, f)?,
            ),
        };
        let after = betti(&next);
        if after != before {
            return Err(Error::HomologyChanged {
                before: before.to_string(),
                after: after.to_string(),
            });
        }
        steps.push(ReductionStep {
            kind,
            target,
            new_vertices: vec![apex],
            before,
            after,
        });
        current = next;
        before = after;
    }
    Ok((
        current,
        ReductionTrace {
            before: start,
            after: before,
            steps,
        },
    ))
}
