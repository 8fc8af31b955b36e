//! Seeded random generators for valid graphs and exact scalars, used by the
//! property and acceptance tests. Enabled with the `gen` feature.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curve::{CurveGraph, CurveVertex};
use crate::surface::{DoubleCurve, RawZappaticGraph, SurfaceVertex, ZappaticGraph};
use crate::{Rational, VertexId};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_tree<R: Rng + ?Sized>(rng: &mut R, v: VertexId) -> Vec<(VertexId, VertexId)> {
    let mut order: Vec<VertexId> = (1..=v).collect();
    order.shuffle(rng);
    (1..order.len())
        .map(|k| (order[rng.gen_range(0..k)], order[k]))
        .collect()
}

fn weighted_vertex<R: Rng + ?Sized>(rng: &mut R, id: VertexId) -> SurfaceVertex {
    SurfaceVertex {
        id,
        pg: rng.gen_range(0..3),
        q: rng.gen_range(0..3),
        degree: rng.gen_range(1..5),
        section_genus: rng.gen_range(0..3),
    }
}

/// Empty graph on `1..=v` with a random spanning tree; weights are random
/// unless `planar`.
fn skeleton<R: Rng + ?Sized>(rng: &mut R, v: VertexId, planar: bool) -> RawZappaticGraph {
    let mut raw = RawZappaticGraph::planar(v);
    raw.planar = planar;
    if !planar {
        raw.vertices = (1..=v).map(|id| weighted_vertex(rng, id)).collect();
    }
    for (a, b) in random_tree(rng, v) {
        raw = add_edge(rng, raw, a, b);
    }
    raw
}

fn add_edge<R: Rng + ?Sized>(
    rng: &mut R,
    mut raw: RawZappaticGraph,
    a: VertexId,
    b: VertexId,
) -> RawZappaticGraph {
    let key = (a.min(b), a.max(b));
    if raw.edges.iter().any(|e| e.key() == key) {
        return raw;
    }
    let mut e = DoubleCurve::line(key.0, key.1);
    if !raw.planar {
        e.curve_degree = rng.gen_range(1..4);
        e.curve_genus = rng.gen_range(0..2);
    }
    raw.edges.push(e);
    raw
}

fn distinct<R: Rng + ?Sized>(rng: &mut R, v: VertexId, n: usize) -> Vec<VertexId> {
    let mut ids: Vec<VertexId> = (1..=v).collect();
    ids.shuffle(rng);
    ids.truncate(n);
    ids
}

fn has_face_on(raw: &RawZappaticGraph, set: &[VertexId]) -> bool {
    let mut set = set.to_vec();
    set.sort_unstable();
    raw.closed_faces.iter().any(|f| f.vertex_set() == set)
}

fn add_closed<R: Rng + ?Sized>(
    rng: &mut R,
    mut raw: RawZappaticGraph,
    cycle: &[VertexId],
) -> RawZappaticGraph {
    if raw.planar && has_face_on(&raw, cycle) {
        return raw;
    }
    for k in 0..cycle.len() {
        raw = add_edge(rng, raw, cycle[k], cycle[(k + 1) % cycle.len()]);
    }
    raw.with_face(cycle)
}

/// Valid graph with up to `max_vertices` vertices carrying random closed
/// faces, open faces and angles with up to `max_marking` vertices. Planar
/// about half of the time.
pub fn zappatic_graph<R: Rng + ?Sized>(
    rng: &mut R,
    max_vertices: VertexId,
    max_marking: usize,
) -> ZappaticGraph {
    let v = rng.gen_range(1..=max_vertices);
    let planar = rng.gen_bool(0.5);
    let mut raw = skeleton(rng, v, planar);
    for _ in 0..rng.gen_range(0..=v as usize) {
        let (a, b) = (rng.gen_range(1..=v), rng.gen_range(1..=v));
        if a != b {
            raw = add_edge(rng, raw, a, b);
        }
    }
    let top = max_marking.min(v as usize);
    if top >= 3 {
        for _ in 0..rng.gen_range(0..=4) {
            let n = rng.gen_range(3..=top);
            let cycle = distinct(rng, v, n);
            raw = add_closed(rng, raw, &cycle);
        }
        for _ in 0..rng.gen_range(0..=2) {
            let n = rng.gen_range(3..=top);
            let path = distinct(rng, v, n);
            for w in path.windows(2) {
                raw = add_edge(rng, raw, w[0], w[1]);
            }
            raw = raw.with_open_face(&path);
        }
    }
    if top >= 4 {
        for _ in 0..rng.gen_range(0..=2) {
            let n = rng.gen_range(4..=top);
            let ids = distinct(rng, v, n);
            for &l in &ids[1..] {
                raw = add_edge(rng, raw, ids[0], l);
            }
            raw = raw.with_angle(ids[0], &ids[1..]);
        }
    }
    ZappaticGraph::new(raw).expect("generated graph is valid")
}

/// Valid graph whose only markings are closed 3-faces. Each triangle on
/// `v <= max_vertices` vertices becomes a face with a random density, so
/// closed 2-cycles are common. Non-planar graphs get random weights and
/// occasional repeated faces.
pub fn only_e3<R: Rng + ?Sized>(
    rng: &mut R,
    max_vertices: VertexId,
    planar: bool,
) -> ZappaticGraph {
    let v = rng.gen_range(3..=max_vertices.max(3));
    let mut raw = skeleton(rng, v, planar);
    let density = rng.gen_range(0.1..0.9);
    for a in 1..=v {
        for b in a + 1..=v {
            for c in b + 1..=v {
                if rng.gen_bool(density) {
                    raw = add_closed(rng, raw, &[a, b, c]);
                    if !planar && rng.gen_bool(0.1) {
                        raw = raw.with_face(&[a, b, c]);
                    }
                }
            }
        }
    }
    ZappaticGraph::new(raw).expect("generated graph is valid")
}

/// Connected curve graph with random genera, degrees and multi-edges.
pub fn curve_graph<R: Rng + ?Sized>(rng: &mut R, max_vertices: VertexId) -> CurveGraph {
    let v = rng.gen_range(1..=max_vertices);
    let vertices: Vec<_> = (1..=v)
        .map(|id| CurveVertex::new(id, rng.gen_range(0..3), Some(rng.gen_range(1..4))))
        .collect();
    let mut pairs = random_tree(rng, v);
    for _ in 0..rng.gen_range(0..=v as usize) {
        let (a, b) = (rng.gen_range(1..=v), rng.gen_range(1..=v));
        if a != b {
            pairs.push((a, b));
        }
    }
    CurveGraph::from_pairs(vertices, &pairs, None).expect("generated curve is valid")
}

/// Rational `p/q` with `|p| <= bound` and `1 <= q <= bound`.
pub fn rational<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    let p = rng.gen_range(-bound..=bound);
    let q = rng.gen_range(1..=bound.max(1));
    Rational::new(p.into(), q.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        let a = zappatic_graph(&mut seeded(7), 12, 6);
        let b = zappatic_graph(&mut seeded(7), 12, 6);
        assert_eq!(a, b);
    }

    #[test]
    fn generated_graphs_are_valid() {
        let mut rng = seeded(1);
        for _ in 0..200 {
            let g = zappatic_graph(&mut rng, 12, 8);
            assert!(g.raw().validate().is_empty());
            assert!(only_e3(&mut rng, 8, true).is_only_e3());
            assert!(only_e3(&mut rng, 8, false).is_only_e3());
            assert!(curve_graph(&mut rng, 10).is_connected());
        }
    }
}
