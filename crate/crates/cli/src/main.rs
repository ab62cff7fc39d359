use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crclab::runner::{run_verify, Limits, Selection};
use crclab::{format, CliError, Family};
use crclab_core::code::CosetTable;
use crclab_core::graph::build_coset_graph_with_limit;

/// Desk-scale laboratory for two families of binary linear codes: exhaustive
/// verification of their coset structure, symmetry, graphs, and spectra.
#[derive(Parser)]
#[command(name = "crclab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Target {
    /// Code family: "Cm" (pair check columns) or "Cm-union" (even m >= 6).
    family: String,
    /// Family size parameter m.
    m: usize,
    /// Write the output to PATH instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Raise the desk-scale guards to their hard caps.
    #[arg(long)]
    unsafe_large: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    /// One "u v" line per edge, zero-based, sorted.
    Edges,
    /// DOT with syndrome bitstring labels.
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a family member and emit it as a code file (header "n k",
    /// then the generator and check matrices in matrix text).
    Construct {
        #[command(flatten)]
        target: Target,
    },
    /// Run structural checks and emit a deterministic JSON report on stdout.
    /// Exit code: 0 all checks passed, 1 some check failed, 2 usage/guard
    /// errors. With no section flag, everything runs.
    Verify {
        #[command(flatten)]
        target: Target,
        /// Run every section (the default when no section flag is given).
        #[arg(long)]
        all: bool,
        /// Regularity profile: per-level neighbor counts and the array.
        #[arg(long)]
        cr: bool,
        /// Coset orbits under the induced coordinate-permutation action.
        #[arg(long)]
        ct: bool,
        /// Inverse-array bookkeeping of the covering coset view.
        #[arg(long = "inverse-array")]
        inverse_array: bool,
        /// Weight-reflection identity across the all-ones syndrome.
        #[arg(long)]
        lemma32: bool,
        /// Coset graph suite: distance regularity and transitivity,
        /// primitivity, antipodality, folding, halved-cube identification.
        #[arg(long)]
        graph: bool,
        /// Exact spectra by both oracles, plus the closed-form audit.
        #[arg(long)]
        spectra: bool,
    },
    /// Export the coset graph.
    Graph {
        #[command(flatten)]
        target: Target,
        /// Output format.
        #[arg(long, value_enum, default_value = "edges")]
        format: ExportFormat,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => {
            std::fs::write(path, content).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            eprintln!("wrote {}", path.display());
            Ok(())
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Construct { target } => {
            let family = Family::parse(&target.family)?;
            let limits = Limits::new(target.unsafe_large);
            let code = family.build(target.m, limits.table_bits)?;
            eprintln!(
                "{} m={}: n={} k={} redundancy={}",
                family.name(),
                target.m,
                code.n(),
                code.k(),
                code.redundancy()
            );
            emit(&target.out, &format::render_code(&code))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            target,
            all,
            cr,
            ct,
            inverse_array,
            lemma32,
            graph,
            spectra,
        } => {
            let family = Family::parse(&target.family)?;
            let limits = Limits::new(target.unsafe_large);
            let mut selection = Selection {
                cr,
                ct,
                inverse_array,
                lemma32,
                graph,
                spectra,
            };
            if all || selection.none_requested() {
                selection = Selection::all();
            }
            let report = run_verify(family, target.m, selection, limits)?;
            let mut body = serde_json::to_string_pretty(&report)
                .expect("report serialization cannot fail");
            body.push('\n');
            emit(&target.out, &body)?;
            Ok(if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Graph { target, format: fmt } => {
            let family = Family::parse(&target.family)?;
            let limits = Limits::new(target.unsafe_large);
            let code = family.build(target.m, limits.table_bits)?;
            let table = CosetTable::build_with_limit(&code, limits.table_bits)?;
            let g = build_coset_graph_with_limit(&code, &table, limits.graph_bits)?;
            if let Some(w) = g.warning {
                eprintln!("note: {w}");
            }
            let content = match fmt {
                ExportFormat::Edges => format::render_edge_list(&g),
                ExportFormat::Dot => format::render_dot(&g, table.redundancy()),
            };
            emit(&target.out, &content)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
