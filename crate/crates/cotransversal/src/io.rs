//! JSON documents and DOT export.
//!
//! Every emitter sorts its output, so emitting the same value twice gives
//! byte-identical text.  Parsers reject duplicate entries: the in-memory
//! types are sets, and silently collapsing duplicates would hide typos in
//! hand-written documents.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::equivalence::SwapGraph;
use crate::error::{Error, Result};
use crate::oracle::BasisSet;
use crate::planted::{validate, PlantedGraph, VertexId};
use crate::transversal::{Sdr, TransversalPresentation};

#[derive(Serialize, Deserialize)]
struct PlantedGraphDocument {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
    sinks: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct PresentationDocument {
    ground: Vec<String>,
    sets: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sdr: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct BasisSetDocument {
    ground: Vec<String>,
    bases: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct SwapGraphDocument {
    nodes: Vec<PlantedGraphDocument>,
    edges: Vec<(usize, usize, (String, String))>,
}

fn vertex_set(labels: Vec<String>, field: &str) -> Result<BTreeSet<VertexId>> {
    let mut out = BTreeSet::new();
    for label in labels {
        if !out.insert(VertexId::new(label.clone())) {
            return Err(Error::Input(format!("duplicate {field} entry {label}")));
        }
    }
    Ok(out)
}

fn from_json<'a, T: Deserialize<'a>>(json: &'a str) -> Result<T> {
    serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("documents serialize");
    out.push('\n');
    out
}

fn graph_from_document(doc: PlantedGraphDocument) -> Result<PlantedGraph> {
    let vertices = vertex_set(doc.vertices, "vertices")?;
    let sinks = vertex_set(doc.sinks, "sinks")?;
    let mut edges = BTreeSet::new();
    for (from, to) in doc.edges {
        if !edges.insert((VertexId::new(from.clone()), VertexId::new(to.clone()))) {
            return Err(Error::Input(format!("duplicate edges entry ({from},{to})")));
        }
    }
    Ok(PlantedGraph::new(vertices, edges, sinks))
}

fn graph_to_document(g: &PlantedGraph) -> PlantedGraphDocument {
    PlantedGraphDocument {
        vertices: g.vertices().iter().map(|v| v.to_string()).collect(),
        edges: g
            .edges()
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect(),
        sinks: g.sinks().iter().map(|v| v.to_string()).collect(),
    }
}

/// Parses a planted-graph document and checks the planted-graph rules.
pub fn parse_planted(json: &str) -> Result<PlantedGraph> {
    let g = parse_planted_lenient(json)?;
    let problems = validate(&g);
    if problems.is_empty() {
        Ok(g)
    } else {
        Err(Error::InvalidGraph(problems))
    }
}

/// Parses a planted-graph document without checking the planted-graph
/// rules, so that a validator can report them itself.  Duplicate entries
/// are still rejected: they are document defects, not graph defects.
pub fn parse_planted_lenient(json: &str) -> Result<PlantedGraph> {
    graph_from_document(from_json(json)?)
}

pub fn emit_planted(g: &PlantedGraph) -> String {
    to_json(&graph_to_document(g))
}

/// Parses a presentation document; the representative system is optional.
pub fn parse_presentation(json: &str) -> Result<(TransversalPresentation, Option<Sdr>)> {
    let doc: PresentationDocument = from_json(json)?;
    let ground = vertex_set(doc.ground, "ground")?;
    let mut sets = Vec::with_capacity(doc.sets.len());
    for (at, labels) in doc.sets.into_iter().enumerate() {
        let mut set = BTreeSet::new();
        for label in labels {
            if !set.insert(VertexId::new(label.clone())) {
                return Err(Error::Input(format!(
                    "duplicate entry {label} in the set at position {at}"
                )));
            }
        }
        sets.push(set);
    }
    let presentation = TransversalPresentation::new(ground, sets)?;
    let sdr = doc
        .sdr
        .map(|reps| Sdr::new(reps.into_iter().map(VertexId::new).collect()));
    Ok((presentation, sdr))
}

pub fn emit_presentation(p: &TransversalPresentation, sdr: Option<&Sdr>) -> String {
    to_json(&PresentationDocument {
        ground: p.ground().iter().map(|v| v.to_string()).collect(),
        sets: p
            .sets()
            .iter()
            .map(|s| s.iter().map(|v| v.to_string()).collect())
            .collect(),
        sdr: sdr.map(|m| m.reps().iter().map(|v| v.to_string()).collect()),
    })
}

pub fn parse_basis_set(json: &str) -> Result<BasisSet> {
    let doc: BasisSetDocument = from_json(json)?;
    let ground = vertex_set(doc.ground, "ground")?;
    let mut bases = BTreeSet::new();
    for (at, labels) in doc.bases.into_iter().enumerate() {
        let mut basis = BTreeSet::new();
        for label in labels {
            if !basis.insert(VertexId::new(label.clone())) {
                return Err(Error::Input(format!(
                    "duplicate entry {label} in the basis at position {at}"
                )));
            }
        }
        if !bases.insert(basis) {
            return Err(Error::Input(format!("duplicate basis at position {at}")));
        }
    }
    BasisSet::new(ground, bases)
}

pub fn emit_bases(m: &BasisSet) -> String {
    to_json(&BasisSetDocument {
        ground: m.ground().iter().map(|v| v.to_string()).collect(),
        bases: m
            .bases()
            .iter()
            .map(|b| b.iter().map(|v| v.to_string()).collect())
            .collect(),
    })
}

pub fn emit_swap_graph(sg: &SwapGraph) -> String {
    to_json(&SwapGraphDocument {
        nodes: sg.nodes().iter().map(graph_to_document).collect(),
        edges: sg
            .edges()
            .iter()
            .map(|(from, to, (i, j))| (*from, *to, (i.to_string(), j.to_string())))
            .collect(),
    })
}

fn dot_quoted(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}

/// GraphViz rendering of a planted graph; sinks are drawn filled.
pub fn export_dot(g: &PlantedGraph) -> String {
    let mut out = String::from("digraph {\n");
    for v in g.vertices() {
        out.push_str("    ");
        out.push_str(&dot_quoted(v.as_str()));
        if g.is_sink(v) {
            out.push_str(" [style=filled, fillcolor=black, fontcolor=white]");
        }
        out.push_str(";\n");
    }
    for (from, to) in g.edges() {
        out.push_str(&format!(
            "    {} -> {};\n",
            dot_quoted(from.as_str()),
            dot_quoted(to.as_str())
        ));
    }
    out.push_str("}\n");
    out
}

/// GraphViz rendering of a swap graph; nodes are labeled by their sink
/// sets and edges by the swap they apply.
pub fn swap_graph_dot(sg: &SwapGraph) -> String {
    let mut out = String::from("digraph {\n");
    for (at, node) in sg.nodes().iter().enumerate() {
        let sinks = node
            .sinks()
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",");
        out.push_str(&format!(
            "    g{at} [label={}];\n",
            dot_quoted(&format!("g{at}: B = {{{sinks}}}"))
        ));
    }
    for (from, to, (i, j)) in sg.edges() {
        out.push_str(&format!(
            "    g{from} -> g{to} [label={}];\n",
            dot_quoted(&format!("{i},{j}"))
        ));
    }
    out.push_str("}\n");
    out
}
