//! Built-in worked examples.
//!
//! The local graphs of good Zappatic singularities (`R_n`, `S_n`, `E_n`
//! points of planar surfaces), the union of four general planes in `P^3`,
//! a planar graph that cannot come from any plane configuration, and the
//! dual graph of a curve that is not a stick curve.

use crate::curve::{CurveGraph, CurveVertex, StickKind};
use crate::surface::{RawZappaticGraph, ZappaticGraph};
use crate::{Error, Result, VertexId};

fn build(raw: RawZappaticGraph) -> ZappaticGraph {
    ZappaticGraph::new(raw).expect("catalog graphs are valid")
}

fn too_small(kind: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::TooSmall { kind, n, min });
    }
    Ok(())
}

/// `R_n`-point: chain `1 - ... - n` with one open `n`-face.
pub fn rn(n: usize) -> Result<ZappaticGraph> {
    too_small("R_n", n, 3)?;
    let top = n as VertexId;
    let path: Vec<_> = (1..=top).collect();
    let pairs: Vec<_> = (1..top).map(|i| (i, i + 1)).collect();
    Ok(build(
        RawZappaticGraph::planar(top)
            .with_edges(&pairs)
            .with_open_face(&path),
    ))
}

/// `S_n`-point: star with centre `n`, leaves `1..n-1`, one `n`-angle.
pub fn sn(n: usize) -> Result<ZappaticGraph> {
    too_small("S_n", n, 4)?;
    let top = n as VertexId;
    let leaves: Vec<_> = (1..top).collect();
    let pairs: Vec<_> = leaves.iter().map(|&l| (l, top)).collect();
    Ok(build(
        RawZappaticGraph::planar(top)
            .with_edges(&pairs)
            .with_angle(top, &leaves),
    ))
}

/// `E_n`-point: `n`-cycle with one closed `n`-face.
pub fn en(n: usize) -> Result<ZappaticGraph> {
    too_small("E_n", n, 3)?;
    let top = n as VertexId;
    let cycle: Vec<_> = (1..=top).collect();
    let pairs: Vec<_> = (1..top).map(|i| (i, i + 1)).chain([(1, top)]).collect();
    Ok(build(
        RawZappaticGraph::planar(top)
            .with_edges(&pairs)
            .with_face(&cycle),
    ))
}

/// Four general planes in `P^3`: `K_4` with all four triangles.
pub fn tetrahedron() -> ZappaticGraph {
    build(
        RawZappaticGraph::planar(4)
            .with_edges(&[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
            .with_face(&[1, 2, 3])
            .with_face(&[1, 2, 4])
            .with_face(&[1, 3, 4])
            .with_face(&[2, 3, 4]),
    )
}

/// Four planes, five double lines and two triple points on the line
/// `C_13`. Structurally valid, but no configuration of planes realizes it:
/// the lines `C_12, C_14` on `X_1` and `C_23, C_34` on `X_3` force `X_2`
/// and `X_4` to meet along a line.
pub fn impossible() -> ZappaticGraph {
    build(
        RawZappaticGraph::planar(4)
            .with_edges(&[(1, 2), (1, 3), (1, 4), (2, 3), (3, 4)])
            .with_face(&[1, 2, 3])
            .with_face(&[1, 3, 4]),
    )
}

/// `R_3`-point of a planar surface. The open 3-face is stored, and
/// suppressed when drawing (planar convention).
pub fn r3_planar() -> ZappaticGraph {
    build(
        RawZappaticGraph::planar(3)
            .with_edges(&[(1, 2), (2, 3)])
            .with_open_face(&[1, 2, 3]),
    )
}

/// `E_3`-point: a triangle with its face.
pub fn e3_triangle() -> ZappaticGraph {
    build(
        RawZappaticGraph::planar(3)
            .with_edges(&[(1, 2), (2, 3), (1, 3)])
            .with_face(&[1, 2, 3]),
    )
}

/// Square with one diagonal: a simple connected graph that is the dual
/// graph of no stick curve.
pub fn impossible_stick() -> CurveGraph {
    CurveGraph::from_pairs(
        (1..=4).map(CurveVertex::line).collect(),
        &[(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)],
        None,
    )
    .expect("valid curve graph")
}

/// A named catalog entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Entry {
    Curve(CurveGraph),
    Zappatic(ZappaticGraph),
}

/// Names accepted by [`lookup`]; `<n>` is a vertex count.
pub const NAMES: &[&str] = &[
    "rn:<n>",
    "sn:<n>",
    "en:<n>",
    "tetrahedron",
    "impossible",
    "r3-planar",
    "e3-triangle",
    "chain:<n>",
    "fork:<n>",
    "cycle:<n>",
    "impossible-stick",
];

/// Resolves a catalog name; `None` for unknown names or bad sizes.
pub fn lookup(name: &str) -> Option<Entry> {
    let fixed = match name {
        "tetrahedron" => Some(Entry::Zappatic(tetrahedron())),
        "impossible" => Some(Entry::Zappatic(impossible())),
        "r3-planar" => Some(Entry::Zappatic(r3_planar())),
        "e3-triangle" => Some(Entry::Zappatic(e3_triangle())),
        "impossible-stick" => Some(Entry::Curve(impossible_stick())),
        _ => None,
    };
    if fixed.is_some() {
        return fixed;
    }
    let (family, n) = name.split_once(':')?;
    let n: usize = n.parse().ok()?;
    // keep ids within VertexId and output sizes sane
    if n > 10_000 {
        return None;
    }
    match family {
        "rn" => rn(n).ok().map(Entry::Zappatic),
        "sn" => sn(n).ok().map(Entry::Zappatic),
        "en" => en(n).ok().map(Entry::Zappatic),
        "chain" => CurveGraph::stick(StickKind::Chain, n)
            .ok()
            .map(Entry::Curve),
        "fork" => CurveGraph::stick(StickKind::Fork, n).ok().map(Entry::Curve),
        "cycle" => CurveGraph::stick(StickKind::Cycle, n)
            .ok()
            .map(Entry::Curve),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        let r4 = rn(4).unwrap();
        assert_eq!(r4.open_faces()[0].path, vec![1, 2, 3, 4]);
        assert_eq!(r4.edges().len(), 3);
        let s4 = sn(4).unwrap();
        assert_eq!(s4.angles()[0].center, 4);
        assert_eq!(s4.angles()[0].order(), 4);
        let e4 = en(4).unwrap();
        assert_eq!(e4.closed_faces()[0].cycle, vec![1, 2, 3, 4]);
        assert!(rn(2).is_err() && sn(3).is_err() && en(2).is_err());
    }

    #[test]
    fn lookup_names() {
        for name in [
            "tetrahedron",
            "impossible",
            "r3-planar",
            "e3-triangle",
            "impossible-stick",
            "rn:5",
            "sn:4",
            "en:3",
            "chain:3",
            "fork:4",
            "cycle:3",
        ] {
            assert!(lookup(name).is_some(), "{name}");
        }
        for name in ["rn:2", "sn:3", "tetra", "en:x", "en:", "fork:3"] {
            assert!(lookup(name).is_none(), "{name}");
        }
    }

    #[test]
    fn impossible_stick_shape() {
        let g = impossible_stick();
        assert_eq!(g.counts(), (4, 5));
        assert_eq!(g.arithmetic_genus().unwrap(), 2);
    }
}
