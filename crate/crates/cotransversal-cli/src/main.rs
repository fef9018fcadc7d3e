//! Command line front end for planted graphs and the matroids they
//! present.
//!
//! Every subcommand reads JSON documents (`-` for stdin), writes its
//! result to stdout (or `--output`), and signals through the exit code:
//! 0 for success, 1 for a true-or-false question answered "no" (or a
//! family with no transversal), 2 for unusable input, 3 for a broken
//! internal invariant.

use std::collections::BTreeSet;
use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cotransversal::equivalence::{isomorphism_classes, same_matroid, swap_graph, swap_path};
use cotransversal::io::{
    emit_bases, emit_planted, emit_presentation, emit_swap_graph, export_dot, parse_basis_set,
    parse_planted, parse_planted_lenient, parse_presentation, swap_graph_dot,
};
use cotransversal::oracle;
use cotransversal::planted::{
    enumerate_bases_with_limit, loops, rank, swap, valid_swaps, validate,
};
use cotransversal::saturation::{
    claw, contract_presentation, is_saturated, saturate,
};
use cotransversal::transversal::{
    dragon_condition, dualize, enumerate_transversals_with_limit, find_sdr, hall_violator,
    sdr_exchange_path, undualize,
};
use cotransversal::{Error, PlantedGraph, Sdr, VertexId, DEFAULT_SIZE_LIMIT};

#[derive(Parser)]
#[command(name = "cotransversal", version, about = "Planted graphs and the matroids they present")]
struct Cli {
    /// Write the result to this file instead of stdout
    #[arg(long, short = 'o', global = true, value_name = "FILE")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a document describes a planted graph
    Validate { input: String },
    /// List every basis of the matroid the graph presents
    Bases { input: String },
    /// Rank of a vertex subset (of the whole matroid when --set is absent)
    Rank {
        input: String,
        /// Comma-separated vertex labels
        #[arg(long, value_delimiter = ',', value_name = "LIST")]
        set: Option<Vec<String>>,
    },
    /// Vertices with no route to any sink
    Loops { input: String },
    /// Apply the swap along the edge (i, j) into a sink
    Swap { input: String, i: String, j: String },
    /// List every applicable swap
    ValidSwaps { input: String },
    /// Grow the graph to its unique maximal equivalent presentation
    Saturate { input: String },
    /// Is the graph already its own saturation?
    IsSaturated { input: String },
    /// The vertex together with its out-neighbours
    Claw {
        input: String,
        #[arg(long)]
        vertex: String,
    },
    /// Present the contraction of the matroid by a vertex subset
    Contract {
        input: String,
        /// Comma-separated vertex labels
        #[arg(long, value_delimiter = ',', value_name = "LIST")]
        set: Option<Vec<String>>,
    },
    /// The set family and representatives dual to a planted graph
    Dualize { input: String },
    /// The planted graph dual to a set family with representatives
    Undualize { input: String },
    /// List every transversal of a set family
    Transversals { input: String },
    /// Does every union of k sets have more than k elements?
    Dragon { input: String },
    /// A system of distinct representatives, if one exists
    Sdr { input: String },
    /// Walk between two representative systems one position at a time
    SdrPath {
        input: String,
        #[arg(long, value_delimiter = ',', value_name = "LIST", required = true)]
        from: Vec<String>,
        #[arg(long, value_delimiter = ',', value_name = "LIST", required = true)]
        to: Vec<String>,
    },
    /// Do two graphs present the same matroid?
    Equivalent {
        a: String,
        b: String,
        /// Also print the swap sequence joining the saturations
        #[arg(long)]
        witness: bool,
    },
    /// Swap sequence from one saturation to the other, if equivalent
    SwapPath { a: String, b: String },
    /// Explore all saturated presentations reachable by swaps
    SwapGraph {
        input: String,
        /// Refuse to collect more presentations than this
        #[arg(long, default_value_t = 1000)]
        limit: usize,
        /// Emit GraphViz instead of JSON
        #[arg(long)]
        dot: bool,
    },
    /// Group the reachable presentations up to relabeling
    IsoClasses {
        input: String,
        #[arg(long, default_value_t = 1000)]
        limit: usize,
    },
    /// Checks on explicit basis lists, independent of any presentation
    Oracle {
        #[command(subcommand)]
        op: OracleOp,
    },
    /// GraphViz rendering of a planted graph
    ExportDot { input: String },
}

#[derive(Subcommand)]
enum OracleOp {
    /// Does the list satisfy the basis exchange axiom?
    CheckAxioms { input: String },
    /// Bases of the dual matroid
    Dual { input: String },
    /// Bases of the contraction by a subset
    Contract {
        input: String,
        #[arg(long, value_delimiter = ',', value_name = "LIST")]
        set: Option<Vec<String>>,
    },
    /// Elements in no basis, and elements in every basis
    LoopsColoops { input: String },
    /// Do two lists describe the same matroid?
    Equal { a: String, b: String },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Internal(_) => 3,
        Error::NoTransversal(_) => 1,
        _ => 2,
    }
}

fn read_input(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::Input(format!("cannot read stdin: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {path}: {e}")))
    }
}

fn graph_arg(path: &str) -> Result<PlantedGraph, Error> {
    parse_planted(&read_input(path)?)
}

fn vertex_set(labels: &[String]) -> BTreeSet<VertexId> {
    labels.iter().map(VertexId::new).collect()
}

fn labels(set: &BTreeSet<VertexId>) -> Vec<String> {
    set.iter().map(|v| v.to_string()).collect()
}

fn size_limit() -> Result<usize, Error> {
    match std::env::var("COTRANSVERSAL_SIZE_LIMIT") {
        Ok(text) => text.parse().map_err(|_| {
            Error::Input(format!(
                "COTRANSVERSAL_SIZE_LIMIT must be a positive integer, not {text}"
            ))
        }),
        Err(_) => Ok(DEFAULT_SIZE_LIMIT),
    }
}

fn compact_json<T: serde::Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string(value).expect("output values serialize");
    out.push('\n');
    out
}

fn pretty_json<T: serde::Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("output values serialize");
    out.push('\n');
    out
}

/// The text for stdout and the exit code; errors go to stderr instead.
fn run(command: &Command) -> Result<(String, u8), Error> {
    match command {
        Command::Validate { input } => {
            let g = parse_planted_lenient(&read_input(input)?)?;
            let problems = validate(&g);
            if problems.is_empty() {
                Ok(("valid\n".to_string(), 0))
            } else {
                Ok((problems.join("\n") + "\n", 1))
            }
        }
        Command::Bases { input } => {
            let g = graph_arg(input)?;
            let bases = enumerate_bases_with_limit(&g, size_limit()?)?;
            Ok((emit_bases(&bases), 0))
        }
        Command::Rank { input, set } => {
            let g = graph_arg(input)?;
            let k = match set {
                Some(labels) => vertex_set(labels),
                None => g.vertices().clone(),
            };
            Ok((format!("{}\n", rank(&g, &k)?), 0))
        }
        Command::Loops { input } => {
            let g = graph_arg(input)?;
            Ok((compact_json(&labels(&loops(&g))), 0))
        }
        Command::Swap { input, i, j } => {
            let g = graph_arg(input)?;
            let swapped = swap(&g, &VertexId::new(i), &VertexId::new(j))?;
            Ok((emit_planted(&swapped), 0))
        }
        Command::ValidSwaps { input } => {
            let g = graph_arg(input)?;
            let pairs: Vec<(String, String)> = valid_swaps(&g)
                .into_iter()
                .map(|(i, j)| (i.to_string(), j.to_string()))
                .collect();
            Ok((compact_json(&pairs), 0))
        }
        Command::Saturate { input } => {
            let g = graph_arg(input)?;
            Ok((emit_planted(&saturate(&g)?), 0))
        }
        Command::IsSaturated { input } => {
            let g = graph_arg(input)?;
            if is_saturated(&g)? {
                Ok(("saturated\n".to_string(), 0))
            } else {
                Ok(("not saturated\n".to_string(), 1))
            }
        }
        Command::Claw { input, vertex } => {
            let g = graph_arg(input)?;
            Ok((compact_json(&labels(&claw(&g, &VertexId::new(vertex))?)), 0))
        }
        Command::Contract { input, set } => {
            let g = graph_arg(input)?;
            let k = set.as_deref().map(vertex_set).unwrap_or_default();
            Ok((emit_planted(&contract_presentation(&g, &k)?), 0))
        }
        Command::Dualize { input } => {
            let g = graph_arg(input)?;
            let (p, m) = dualize(&g)?;
            Ok((emit_presentation(&p, Some(&m)), 0))
        }
        Command::Undualize { input } => {
            let (p, given) = parse_presentation(&read_input(input)?)?;
            let m = match given {
                Some(m) => m,
                None => find_sdr(&p).ok_or_else(|| {
                    let violator =
                        hall_violator(&p).expect("families without an SDR violate Hall");
                    Error::NoTransversal(violator)
                })?,
            };
            Ok((emit_planted(&undualize(&p, &m)?), 0))
        }
        Command::Transversals { input } => {
            let (p, _) = parse_presentation(&read_input(input)?)?;
            let transversals = enumerate_transversals_with_limit(&p, size_limit()?)?;
            Ok((emit_bases(&transversals), 0))
        }
        Command::Dragon { input } => {
            let (p, _) = parse_presentation(&read_input(input)?)?;
            if dragon_condition(&p) {
                Ok(("satisfied\n".to_string(), 0))
            } else {
                Ok(("not satisfied\n".to_string(), 1))
            }
        }
        Command::Sdr { input } => {
            let (p, _) = parse_presentation(&read_input(input)?)?;
            match find_sdr(&p) {
                Some(m) => {
                    let reps: Vec<String> = m.reps().iter().map(|v| v.to_string()).collect();
                    Ok((compact_json(&reps), 0))
                }
                None => {
                    let violator =
                        hall_violator(&p).expect("families without an SDR violate Hall");
                    Err(Error::NoTransversal(violator))
                }
            }
        }
        Command::SdrPath { input, from, to } => {
            let (p, _) = parse_presentation(&read_input(input)?)?;
            let m1 = Sdr::new(from.iter().map(VertexId::new).collect());
            let m2 = Sdr::new(to.iter().map(VertexId::new).collect());
            let path = sdr_exchange_path(&p, &m1, &m2)?;
            let rows: Vec<Vec<String>> = path
                .iter()
                .map(|m| m.reps().iter().map(|v| v.to_string()).collect())
                .collect();
            Ok((compact_json(&rows), 0))
        }
        Command::Equivalent { a, b, witness } => {
            let g1 = graph_arg(a)?;
            let g2 = graph_arg(b)?;
            if !same_matroid(&g1, &g2)? {
                return Ok(("not equivalent\n".to_string(), 1));
            }
            let mut out = "equivalent\n".to_string();
            if *witness {
                let seq = swap_path(&g1, &g2)?.ok_or_else(|| {
                    Error::Internal("equivalent graphs must have a swap path".to_string())
                })?;
                let steps: Vec<(String, String)> = seq
                    .steps()
                    .iter()
                    .map(|(i, j)| (i.to_string(), j.to_string()))
                    .collect();
                out.push_str(&compact_json(&steps));
            }
            Ok((out, 0))
        }
        Command::SwapPath { a, b } => {
            let g1 = graph_arg(a)?;
            let g2 = graph_arg(b)?;
            match swap_path(&g1, &g2)? {
                Some(seq) => {
                    let steps: Vec<(String, String)> = seq
                        .steps()
                        .iter()
                        .map(|(i, j)| (i.to_string(), j.to_string()))
                        .collect();
                    Ok((compact_json(&steps), 0))
                }
                None => Ok(("not equivalent\n".to_string(), 1)),
            }
        }
        Command::SwapGraph { input, limit, dot } => {
            let g = graph_arg(input)?;
            let sg = swap_graph(&g, *limit)?;
            if *dot {
                Ok((swap_graph_dot(&sg), 0))
            } else {
                Ok((emit_swap_graph(&sg), 0))
            }
        }
        Command::IsoClasses { input, limit } => {
            let g = graph_arg(input)?;
            let sg = swap_graph(&g, *limit)?;
            Ok((compact_json(&isomorphism_classes(sg.nodes())), 0))
        }
        Command::Oracle { op } => run_oracle(op),
        Command::ExportDot { input } => Ok((export_dot(&graph_arg(input)?), 0)),
    }
}

fn run_oracle(op: &OracleOp) -> Result<(String, u8), Error> {
    match op {
        OracleOp::CheckAxioms { input } => {
            let m = parse_basis_set(&read_input(input)?)?;
            if oracle::check_exchange_axiom(&m) {
                Ok(("satisfied\n".to_string(), 0))
            } else {
                Ok(("violated\n".to_string(), 1))
            }
        }
        OracleOp::Dual { input } => {
            let m = parse_basis_set(&read_input(input)?)?;
            Ok((emit_bases(&oracle::dual(&m)), 0))
        }
        OracleOp::Contract { input, set } => {
            let m = parse_basis_set(&read_input(input)?)?;
            let k = set.as_deref().map(vertex_set).unwrap_or_default();
            Ok((emit_bases(&oracle::contract(&m, &k)), 0))
        }
        OracleOp::LoopsColoops { input } => {
            let m = parse_basis_set(&read_input(input)?)?;
            let (loops, coloops) = oracle::loops_and_coloops(&m);
            let doc = serde_json::json!({
                "loops": labels(&loops),
                "coloops": labels(&coloops),
            });
            Ok((pretty_json(&doc), 0))
        }
        OracleOp::Equal { a, b } => {
            let m1 = parse_basis_set(&read_input(a)?)?;
            let m2 = parse_basis_set(&read_input(b)?)?;
            if oracle::equal(&m1, &m2) {
                Ok(("equal\n".to_string(), 0))
            } else {
                Ok(("not equal\n".to_string(), 1))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok((text, code)) => {
            if let Some(path) = &cli.output {
                if let Err(e) = fs::write(path, &text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{text}");
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
