//! `zappatic`: invariants, checks and rewrites for associated graphs of
//! degenerations, read from and written to JSON documents.
//!
//! Exit codes: 0 ok, 1 check failed, 2 input error, 3 missing data.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(
    name = "zappatic",
    version,
    about = "Invariants of stick curves and good Zappatic surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Degree, sectional genus, chi(O), Betti numbers, p_g and q
    Invariants {
        /// Graph document (`-` for stdin)
        path: PathBuf,
        /// JSON file describing Phi: {"rank": r} or {"matrix": [[...]]}
        #[arg(long)]
        phi: Option<PathBuf>,
        /// Emit JSON instead of a table
        #[arg(long)]
        json: bool,
        /// Assert that every double curve is ample on each irregular component
        #[arg(long)]
        assert_ample_condition: bool,
    },
    /// Planar realizability check (exit 1 if any pair of edges is miscovered)
    Check {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Rewrite all markings into E_3-points, keeping the Betti numbers
    Reduce {
        path: PathBuf,
        /// Where to write the reduced graph; the trace then goes to stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Where to write the trace (default: stdout with --out, stderr without)
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Print a built-in example document
    Catalog {
        /// Entry name, e.g. tetrahedron or en:5; omit to list names
        name: Option<String>,
    },
    /// Graphviz DOT rendering
    #[command(alias = "dot")]
    ExportDot { path: PathBuf },
    /// Betti numbers and a basis of the 2-cycles
    Homology {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Dual graph of a general hyperplane section, as a curve document
    Section { path: PathBuf },
    /// Residue balance of an assignment, and the smoothability verdict
    Residues {
        /// Graph document with only E_3-points
        graph: PathBuf,
        /// Residues document
        residues: PathBuf,
        /// Claimed h^0 of the dualizing sheaf, compared with the bound
        #[arg(long)]
        claimed_pg: Option<u64>,
        #[arg(long)]
        phi: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Invariants {
            path,
            phi,
            json,
            assert_ample_condition,
        } => commands::invariants(&path, phi.as_deref(), json, assert_ample_condition),
        Command::Check { path, json } => commands::check(&path, json),
        Command::Reduce { path, out, trace } => {
            commands::reduce(&path, out.as_deref(), trace.as_deref())
        }
        Command::Catalog { name } => commands::catalog(name.as_deref()),
        Command::ExportDot { path } => commands::export_dot(&path),
        Command::Homology { path, json } => commands::homology(&path, json),
        Command::Section { path } => commands::section(&path),
        Command::Residues {
            graph,
            residues,
            claimed_pg,
            phi,
            json,
        } => commands::residues(&graph, &residues, claimed_pg, phi.as_deref(), json),
    };
    match result {
        Ok(status) => ExitCode::from(status as u8),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.status as u8)
        }
    }
}
