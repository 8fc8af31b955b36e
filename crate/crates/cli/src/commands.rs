use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;

use serde_json::{json, Value};
use zappatic::catalog::{self, Entry};
use zappatic::document::{self, Document, DocumentError};
use zappatic::homology::ChainComplex;
use zappatic::invariants::{fibre_invariants, surface_report, InvariantReport, PhiSpec};
use zappatic::realizability::{check_planar, suggest_completions};
use zappatic::reduction::semistable_reduce;
use zappatic::residues::smoothability_report;
use zappatic::{dot, CurveGraph, Error, ZappaticGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    CheckFailed = 1,
    InputError = 2,
    MissingData = 3,
}

#[derive(Debug)]
pub struct Failure {
    pub status: Status,
    pub message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self {
            status: Status::InputError,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::MissingPhi => Status::MissingData,
            _ => Status::InputError,
        };
        Self {
            status,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<Status, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Document, Failure> {
    let text = read(path)?;
    document::parse(&text).map_err(|e| {
        let status = match e {
            DocumentError::Invalid(Error::MissingPhi) => Status::MissingData,
            _ => Status::InputError,
        };
        Failure {
            status,
            message: format!("{}: {e}", path.display()),
        }
    })
}

fn load_surface(path: &Path) -> Result<ZappaticGraph, Failure> {
    match load(path)? {
        Document::Zappatic(g) => Ok(g),
        other => Err(Failure::input(format!(
            "{}: expected a zappatic document, found kind {:?}",
            path.display(),
            other.kind()
        ))),
    }
}

fn load_phi(path: Option<&Path>) -> Result<Option<PhiSpec>, Failure> {
    path.map(|p| {
        document::parse_phi(&read(p)?).map_err(|e| Failure::input(format!("{}: {e}", p.display())))
    })
    .transpose()
}

fn pretty(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

fn table(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

pub fn invariants(path: &Path, phi: Option<&Path>, json: bool, ample: bool) -> Outcome {
    let g = match load(path)? {
        Document::Zappatic(g) => g,
        Document::Curve(c) => return curve_invariants(&c, json),
        Document::Residues(_) => {
            return Err(Failure::input("residues documents carry no invariants"))
        }
    };
    let phi = load_phi(phi)?;
    let (report, note) = if g.is_only_e3() {
        (surface_report(&g, phi.as_ref(), ample)?, None)
    } else {
        (
            fibre_invariants(&g, phi.as_ref())?,
            Some("markings other than E_3-points: genera are those of the smooth fibre"),
        )
    };
    let violations = if g.is_planar() {
        Some(check_planar(&g)?.len())
    } else {
        None
    };
    if json {
        let mut out = serde_json::to_value(&report).expect("report serializes");
        let obj = out.as_object_mut().expect("object");
        obj.insert("planar".into(), json!(g.is_planar()));
        obj.insert("realizability_violations".into(), json!(violations));
        print!("{}", pretty(&out));
    } else {
        print!("{}", surface_table(&g, &report));
        if let Some(note) = note {
            println!("note: {note}");
        }
    }
    if let Some(n) = violations.filter(|&n| n > 0) {
        eprintln!(
            "warning: {n} pair(s) of double lines fail the planar coverage condition; \
             no configuration of planes realizes this graph (see `zappatic check`)"
        );
    }
    Ok(Status::Ok)
}

fn surface_table(g: &ZappaticGraph, r: &InvariantReport) -> String {
    let c = g.counts();
    let kind = if g.is_planar() { "planar" } else { "general" };
    let mut rows = vec![
        ("graph", format!("zappatic ({kind})")),
        ("v e f", format!("{} {} {}", c.v, c.e, c.f)),
        ("degree", r.degree.to_string()),
        ("sectional genus", r.sectional_genus.to_string()),
        ("chi(O)", r.chi_o.to_string()),
        ("betti", r.betti.to_string()),
        ("coker phi", r.coker_phi.to_string()),
    ];
    match (r.pg, r.q) {
        (Some(pg), Some(q)) => {
            rows.push(("pg", pg.to_string()));
            rows.push(("q", q.to_string()));
        }
        _ => {
            rows.push(("pg", format!("<= {} (equality not certain)", r.pg_bound)));
            rows.push(("q", "unknown".into()));
        }
    }
    table(&rows)
}

fn curve_invariants(c: &CurveGraph, json: bool) -> Outcome {
    let (v, e) = c.counts();
    let h1 = c.h1()?;
    let pa = c.arithmetic_genus()?;
    let degree = c.degree().ok();
    if json {
        print!(
            "{}",
            pretty(&json!({
                "vertices": v,
                "nodes": e,
                "h1": h1,
                "arithmetic_genus": pa,
                "chi_o": c.chi_o(),
                "degree": degree,
                "embedding_dim": c.embedding_dim(),
            }))
        );
    } else {
        let mut rows = vec![
            ("graph", "curve".to_string()),
            ("v e", format!("{v} {e}")),
            ("h1", h1.to_string()),
            ("arithmetic genus", pa.to_string()),
            ("chi(O)", c.chi_o().to_string()),
        ];
        if let Some(d) = degree {
            rows.push(("degree", d.to_string()));
        }
        print!("{}", table(&rows));
    }
    Ok(Status::Ok)
}

pub fn check(path: &Path, json: bool) -> Outcome {
    let g = load_surface(path)?;
    let violations = check_planar(&g)?;
    let edits = suggest_completions(&g)?;
    if json {
        print!(
            "{}",
            pretty(&json!({
                "ok": violations.is_empty(),
                "violations": violations,
                "suggestions": edits,
            }))
        );
    } else if violations.is_empty() {
        println!("ok: every pair of adjacent double lines is covered exactly once");
    } else {
        println!("{} violation(s):", violations.len());
        for v in &violations {
            println!("  {v}");
        }
        println!("candidate edits:");
        for e in &edits {
            println!("  {e}");
        }
    }
    Ok(if violations.is_empty() {
        Status::Ok
    } else {
        Status::CheckFailed
    })
}

pub fn reduce(path: &Path, out: Option<&Path>, trace_path: Option<&Path>) -> Outcome {
    let g = load_surface(path)?;
    let (h, trace) = semistable_reduce(&g)?;
    let doc = document::to_string(&Document::Zappatic(h));
    let trace = pretty(&trace);
    match out {
        Some(p) => write(p, &doc)?,
        None => print!("{doc}"),
    }
    match (trace_path, out) {
        (Some(p), _) => write(p, &trace)?,
        (None, Some(_)) => print!("{trace}"),
        (None, None) => eprint!("{trace}"),
    }
    Ok(Status::Ok)
}

pub fn catalog(name: Option<&str>) -> Outcome {
    let names = catalog::NAMES.join(", ");
    let Some(name) = name else {
        for n in catalog::NAMES {
            println!("{n}");
        }
        return Ok(Status::Ok);
    };
    let doc = match catalog::lookup(name) {
        Some(Entry::Curve(c)) => Document::Curve(c),
        Some(Entry::Zappatic(g)) => Document::Zappatic(g),
        None => {
            return Err(Failure::input(format!(
                "unknown catalog entry {name:?}; valid names: {names}"
            )))
        }
    };
    print!("{}", document::to_string(&doc));
    Ok(Status::Ok)
}

pub fn export_dot(path: &Path) -> Outcome {
    let text = match load(path)? {
        Document::Zappatic(g) => dot::zappatic_to_dot(&g),
        Document::Curve(c) => dot::curve_to_dot(&c),
        Document::Residues(_) => return Err(Failure::input("residues documents have no graph")),
    };
    print!("{text}");
    Ok(Status::Ok)
}

pub fn homology(path: &Path, json: bool) -> Outcome {
    let g = load_surface(path)?;
    let complex = ChainComplex::new(&g);
    let b = complex.betti_numbers()?;
    let basis = complex.two_cycle_basis();
    if json {
        let cycles: Vec<Vec<String>> = basis
            .iter()
            .map(|v| v.iter().map(|x| x.to_string()).collect())
            .collect();
        print!(
            "{}",
            pretty(&json!({
                "betti": b,
                "faces": complex.face_order,
                "two_cycles": cycles,
            }))
        );
    } else {
        let mut s = String::new();
        writeln!(s, "betti  {b}").unwrap();
        writeln!(s, "euler  {}", b.euler()).unwrap();
        if !basis.is_empty() {
            writeln!(s, "2-cycles (coefficients on the faces below, in order):").unwrap();
            for v in &basis {
                let parts: Vec<_> = v.iter().map(|x| x.to_string()).collect();
                writeln!(s, "  [{}]", parts.join(", ")).unwrap();
            }
            writeln!(s, "faces:").unwrap();
            for f in &complex.face_order {
                writeln!(s, "  {f}").unwrap();
            }
        }
        print!("{s}");
    }
    Ok(Status::Ok)
}

pub fn section(path: &Path) -> Outcome {
    let g = load_surface(path)?;
    print!(
        "{}",
        document::to_string(&Document::Curve(g.hyperplane_section()))
    );
    Ok(Status::Ok)
}

pub fn residues(
    graph: &Path,
    residues: &Path,
    claimed_pg: Option<u64>,
    phi: Option<&Path>,
    json: bool,
) -> Outcome {
    let g = load_surface(graph)?;
    let entries = match load(residues)? {
        Document::Residues(e) => e,
        other => {
            return Err(Failure::input(format!(
                "{}: expected a residues document, found kind {:?}",
                residues.display(),
                other.kind()
            )))
        }
    };
    let assignment = document::residues_on(&g, &entries)?;
    let balance = assignment.edge_balance(&g)?;
    let cycle = assignment.is_two_cycle(&g)?;
    let phi = load_phi(phi)?;
    let report = claimed_pg
        .map(|pg| smoothability_report(&g, pg, phi.as_ref()))
        .transpose()?;
    if json {
        let balance: serde_json::Map<String, Value> = balance
            .iter()
            .map(|((i, j), v)| (format!("{i}-{j}"), json!(v.to_string())))
            .collect();
        print!(
            "{}",
            pretty(&json!({
                "edge_balance": balance,
                "is_two_cycle": cycle,
                "smoothability": report,
            }))
        );
    } else {
        let mut s = String::new();
        writeln!(s, "edge balance:").unwrap();
        for ((i, j), v) in &balance {
            writeln!(s, "  e{i}{j}  {v}").unwrap();
        }
        writeln!(s, "two-cycle  {}", if cycle { "yes" } else { "no" }).unwrap();
        if let Some(r) = report {
            let verdict = serde_json::to_value(r.verdict).expect("verdict");
            writeln!(
                s,
                "smoothability  {} (claimed pg {}, bound {})",
                verdict.as_str().unwrap_or_default(),
                r.claimed_pg,
                r.bound.value
            )
            .unwrap();
        }
        print!("{s}");
    }
    Ok(Status::Ok)
}
