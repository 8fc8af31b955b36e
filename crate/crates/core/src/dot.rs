//! Graphviz export.
//!
//! Solid edges are double curves (or nodes, for curves). An open face adds
//! a dashed edge between its endpoints, except open 3-faces of planar
//! graphs, which are conventionally left undrawn. Faces and angles have no
//! Graphviz counterpart and are listed as comments.

use std::fmt::Write;

use crate::curve::CurveGraph;
use crate::surface::ZappaticGraph;

pub fn zappatic_to_dot(g: &ZappaticGraph) -> String {
    let mut out = String::new();
    let kind = if g.is_planar() { "planar" } else { "general" };
    writeln!(out, "graph G {{").unwrap();
    writeln!(out, "  // zappatic graph ({kind})").unwrap();
    for v in g.vertices() {
        let label = if g.is_planar() {
            format!("v{}", v.id)
        } else {
            format!(
                "v{}\\npg={} q={} d={} g={}",
                v.id, v.pg, v.q, v.degree, v.section_genus
            )
        };
        writeln!(out, "  v{} [label=\"{label}\"];", v.id).unwrap();
    }
    for e in g.edges() {
        if g.is_planar() {
            writeln!(out, "  v{} -- v{};", e.i, e.j).unwrap();
        } else {
            writeln!(
                out,
                "  v{} -- v{} [label=\"c={} g={}\"];",
                e.i, e.j, e.curve_degree, e.curve_genus
            )
            .unwrap();
        }
    }
    for f in g.open_faces() {
        let (a, b) = f.endpoints().expect("open face has endpoints");
        if g.is_planar() && f.len() == 3 {
            continue;
        }
        writeln!(out, "  v{a} -- v{b} [style=dashed];").unwrap();
    }
    for f in g.closed_faces() {
        writeln!(out, "  // {f}").unwrap();
    }
    for f in g.open_faces() {
        writeln!(out, "  // {f}").unwrap();
    }
    for a in g.angles() {
        writeln!(out, "  // {a} (double arc)").unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

pub fn curve_to_dot(g: &CurveGraph) -> String {
    let mut out = String::new();
    writeln!(out, "graph G {{").unwrap();
    match g.embedding_dim() {
        Some(r) => writeln!(out, "  // curve graph, r={r}").unwrap(),
        None => writeln!(out, "  // curve graph").unwrap(),
    }
    for v in g.vertices() {
        let d = v.degree.map_or(String::new(), |d| format!(" d={d}"));
        writeln!(out, "  v{} [label=\"v{}\\ng={}{d}\"];", v.id, v.id, v.genus).unwrap();
    }
    for e in g.edges() {
        writeln!(out, "  v{} -- v{};", e.i, e.j).unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}
