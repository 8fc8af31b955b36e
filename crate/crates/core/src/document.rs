//! JSON interchange format.
//!
//! Every document is an object with `schema_version` (currently 1) and
//! `kind` (`curve`, `zappatic` or `residues`), followed by the payload
//! fields of that kind. Unknown fields are rejected, integers must be
//! integers, and rationals are strings `"p/q"` or `"p"`. Output is pretty
//! printed with a trailing newline, in canonical order, so serialization is
//! byte-for-byte deterministic.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::curve::{CurveEdge, CurveGraph, CurveVertex};
use crate::invariants::PhiSpec;
use crate::residues::{sort_triple, ResidueAssignment};
use crate::surface::{
    Angle, ClosedFace, DoubleCurve, OpenFace, RawZappaticGraph, SurfaceVertex, ZappaticGraph,
};
use crate::{Rational, VertexId};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug)]
pub enum DocumentError {
    /// Malformed JSON or a payload that does not match the schema; the
    /// message carries the line and column.
    Syntax(serde_json::Error),
    Schema(String),
    Invalid(crate::Error),
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocumentError::Syntax(e) => write!(f, "{e}"),
            DocumentError::Schema(s) => write!(f, "{s}"),
            DocumentError::Invalid(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for DocumentError {}

impl From<serde_json::Error> for DocumentError {
    fn from(e: serde_json::Error) -> Self {
        DocumentError::Syntax(e)
    }
}

impl From<crate::Error> for DocumentError {
    fn from(e: crate::Error) -> Self {
        DocumentError::Invalid(e)
    }
}

/// One residue value; the triple may be given in any order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueEntry {
    pub i: VertexId,
    pub j: VertexId,
    pub k: VertexId,
    pub t: u32,
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Curve(CurveGraph),
    Zappatic(ZappaticGraph),
    Residues(Vec<ResidueEntry>),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Curve(_) => "curve",
            Document::Zappatic(_) => "zappatic",
            Document::Residues(_) => "residues",
        }
    }
}

#[derive(Deserialize)]
struct Envelope {
    schema_version: u32,
    kind: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveFile {
    schema_version: u32,
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    embedding_dim: Option<u32>,
    vertices: Vec<CurveVertex>,
    #[serde(default)]
    edges: Vec<CurveEdge>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ZappaticFile {
    schema_version: u32,
    kind: String,
    #[serde(default)]
    planar: bool,
    vertices: Vec<SurfaceVertex>,
    #[serde(default)]
    edges: Vec<DoubleCurve>,
    #[serde(default)]
    closed_faces: Vec<ClosedFace>,
    #[serde(default)]
    open_faces: Vec<OpenFace>,
    #[serde(default)]
    angles: Vec<Angle>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ResidueFileEntry {
    i: VertexId,
    j: VertexId,
    k: VertexId,
    t: u32,
    value: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ResiduesFile {
    schema_version: u32,
    kind: String,
    values: Vec<ResidueFileEntry>,
}

/// Parses an exact rational `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational, DocumentError> {
    let bad = || DocumentError::Schema(format!("not an exact fraction: {s:?}"));
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let numer = crate::Integer::from_str(n).map_err(|_| bad())?;
    let denom = crate::Integer::from_str(d).map_err(|_| bad())?;
    if denom == 0.into() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

pub fn parse(text: &str) -> Result<Document, DocumentError> {
    let env: Envelope = serde_json::from_str(text)?;
    if env.schema_version != SCHEMA_VERSION {
        return Err(DocumentError::Schema(format!(
            "unsupported schema_version {} (expected {SCHEMA_VERSION})",
            env.schema_version
        )));
    }
    match env.kind.as_str() {
        "curve" => {
            let f: CurveFile = serde_json::from_str(text)?;
            Ok(Document::Curve(CurveGraph::new(
                f.vertices,
                f.edges,
                f.embedding_dim,
            )?))
        }
        "zappatic" => {
            let f: ZappaticFile = serde_json::from_str(text)?;
            let raw = RawZappaticGraph {
                planar: f.planar,
                vertices: f.vertices,
                edges: f.edges,
                closed_faces: f.closed_faces,
                open_faces: f.open_faces,
                angles: f.angles,
            };
            Ok(Document::Zappatic(ZappaticGraph::new(raw)?))
        }
        "residues" => {
            let f: ResiduesFile = serde_json::from_str(text)?;
            let values = f
                .values
                .into_iter()
                .map(|e| {
                    Ok(ResidueEntry {
                        i: e.i,
                        j: e.j,
                        k: e.k,
                        t: e.t,
                        value: parse_rational(&e.value)?,
                    })
                })
                .collect::<Result<_, DocumentError>>()?;
            Ok(Document::Residues(values))
        }
        other => Err(DocumentError::Schema(format!(
            "unknown kind {other:?} (expected curve, zappatic or residues)"
        ))),
    }
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

/// Canonical serialization.
pub fn to_string(doc: &Document) -> String {
    let kind = doc.kind().to_string();
    let schema_version = SCHEMA_VERSION;
    match doc {
        Document::Curve(g) => pretty(&CurveFile {
            schema_version,
            kind,
            embedding_dim: g.embedding_dim(),
            vertices: g.vertices().to_vec(),
            edges: g.edges().to_vec(),
        }),
        Document::Zappatic(g) => {
            let raw = g.raw().clone();
            pretty(&ZappaticFile {
                schema_version,
                kind,
                planar: raw.planar,
                vertices: raw.vertices,
                edges: raw.edges,
                closed_faces: raw.closed_faces,
                open_faces: raw.open_faces,
                angles: raw.angles,
            })
        }
        Document::Residues(values) => {
            // canonical: sorted triple, sign folded into the value
            let mut entries: Vec<_> = values
                .iter()
                .map(|e| {
                    let ((i, j, k), sign) = sort_triple(e.i, e.j, e.k);
                    let v = if sign < 0 {
                        -e.value.clone()
                    } else {
                        e.value.clone()
                    };
                    ((i, j, k, e.t), v)
                })
                .collect();
            entries.sort_by_key(|e| e.0);
            pretty(&ResiduesFile {
                schema_version,
                kind,
                values: entries
                    .into_iter()
                    .map(|((i, j, k, t), v)| ResidueFileEntry {
                        i,
                        j,
                        k,
                        t,
                        value: v.to_string(),
                    })
                    .collect(),
            })
        }
    }
}

/// Residue document entries for an assignment.
pub fn residue_entries(a: &ResidueAssignment<Rational>) -> Vec<ResidueEntry> {
    a.values()
        .iter()
        .map(|(&(i, j, k, t), v)| ResidueEntry {
            i,
            j,
            k,
            t,
            value: v.clone(),
        })
        .collect()
}

/// Builds the assignment of `entries` on the faces of `g`.
pub fn residues_on(
    g: &ZappaticGraph,
    entries: &[ResidueEntry],
) -> Result<ResidueAssignment<Rational>, crate::Error> {
    ResidueAssignment::from_entries(
        g,
        entries
            .iter()
            .map(|e| (e.i, e.j, e.k, e.t, e.value.clone())),
    )
}

/// Parses a `Phi` description: `{"rank": r}` or `{"matrix": [[...], ...]}`.
pub fn parse_phi(text: &str) -> Result<PhiSpec, DocumentError> {
    Ok(serde_json::from_str(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use proptest::prelude::*;

    #[test]
    fn zappatic_roundtrip() {
        let doc = Document::Zappatic(catalog::tetrahedron());
        let text = to_string(&doc);
        assert!(text.starts_with("{\n  \"schema_version\": 1,\n  \"kind\": \"zappatic\""));
        assert_eq!(parse(&text).unwrap(), doc);
        assert_eq!(to_string(&parse(&text).unwrap()), text);
    }

    #[test]
    fn curve_roundtrip() {
        let doc = Document::Curve(catalog::impossible_stick().with_embedding_dim(Some(3)));
        let text = to_string(&doc);
        assert_eq!(parse(&text).unwrap(), doc);
    }

    #[test]
    fn residues_canonicalized() {
        let text = r#"{"schema_version": 1, "kind": "residues",
            "values": [{"i": 2, "j": 1, "k": 3, "t": 1, "value": "5/2"}]}"#;
        let doc = parse(text).unwrap();
        let out = to_string(&doc);
        assert!(out.contains("\"value\": \"-5/2\""), "{out}");
        assert!(out.contains("\"i\": 1"));
        let g = catalog::e3_triangle();
        let Document::Residues(entries) = doc else {
            panic!()
        };
        let a = residues_on(&g, &entries).unwrap();
        assert_eq!(
            a.residue_at(1, 2, 3, 1).unwrap(),
            parse_rational("-5/2").unwrap()
        );
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("3").unwrap().to_string(), "3");
        assert_eq!(parse_rational("-6/4").unwrap().to_string(), "-3/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn rejections() {
        let err = parse(
            "{\"schema_version\": 1,\n \"kind\": \"zappatic\",\n \"vertices\": [], \"bogus\": 1}",
        )
        .unwrap_err();
        assert!(matches!(err, DocumentError::Syntax(_)));
        assert!(err.to_string().contains("line 3"), "{err}");

        assert!(matches!(parse("{"), Err(DocumentError::Syntax(_))));
        assert!(matches!(
            parse(r#"{"schema_version": 2, "kind": "curve", "vertices": []}"#),
            Err(DocumentError::Schema(_))
        ));
        assert!(matches!(
            parse(r#"{"schema_version": 1, "kind": "surface"}"#),
            Err(DocumentError::Schema(_))
        ));
        assert!(matches!(
            parse(
                r#"{"schema_version": 1, "kind": "zappatic", "vertices": [{"id": 1, "pg": 0.5, "q": 0, "degree": 1, "section_genus": 0}]}"#
            ),
            Err(DocumentError::Syntax(_))
        ));
        assert!(matches!(
            parse(r#"{"schema_version": 1, "kind": "zappatic", "vertices": []}"#),
            Err(DocumentError::Invalid(_))
        ));
    }

    #[test]
    fn phi_files() {
        assert_eq!(parse_phi(r#"{"rank": 2}"#).unwrap(), PhiSpec::Rank(2));
        assert_eq!(
            parse_phi(r#"{"matrix": [[1, 0]]}"#).unwrap(),
            PhiSpec::Matrix(vec![vec![1, 0]])
        );
        assert!(parse_phi(r#"{"rank": 2, "matrix": []}"#).is_err());
    }

    proptest! {
        #[test]
        fn residue_values_roundtrip(n in any::<i64>(), d in 1i64..1_000_000) {
            let r = Rational::new(n.into(), d.into());
            prop_assert_eq!(parse_rational(&r.to_string()).unwrap(), r);
        }
    }
}
