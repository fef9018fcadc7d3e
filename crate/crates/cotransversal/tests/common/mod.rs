//! Shared fixtures, strategies, and an independent brute-force oracle.
//!
//! The oracle decides routability by enumerating simple paths and
//! backtracking over vertex-disjoint systems, sharing no code with the
//! flow-based routines it checks.
#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use proptest::prelude::*;

use cotransversal::{PlantedGraph, Sdr, TransversalPresentation, VertexId};

pub fn vs(labels: &[&str]) -> BTreeSet<VertexId> {
    labels.iter().map(|l| VertexId::new(*l)).collect()
}

pub fn graph(vertices: &[&str], edges: &[(&str, &str)], sinks: &[&str]) -> PlantedGraph {
    PlantedGraph::new(
        vs(vertices),
        edges
            .iter()
            .map(|(a, b)| (VertexId::new(*a), VertexId::new(*b)))
            .collect(),
        vs(sinks),
    )
}

pub fn pres(ground: &[&str], sets: &[&[&str]]) -> TransversalPresentation {
    TransversalPresentation::new(vs(ground), sets.iter().map(|s| vs(s)).collect()).unwrap()
}

pub fn ex_g() -> PlantedGraph {
    graph(
        &["1", "2", "3", "4", "5", "6"],
        &[
            ("1", "2"),
            ("1", "3"),
            ("1", "4"),
            ("1", "5"),
            ("1", "6"),
            ("2", "4"),
            ("2", "5"),
            ("3", "5"),
            ("3", "6"),
        ],
        &["4", "5", "6"],
    )
}

pub fn chain_third() -> PlantedGraph {
    graph(
        &["1", "2", "3", "4", "5", "6"],
        &[
            ("3", "1"),
            ("3", "2"),
            ("3", "4"),
            ("3", "5"),
            ("3", "6"),
            ("2", "4"),
            ("2", "5"),
            ("5", "3"),
            ("5", "6"),
        ],
        &["1", "4", "6"],
    )
}

pub fn ex_r2() -> PlantedGraph {
    graph(
        &["1", "2", "3", "4", "5"],
        &[
            ("1", "2"),
            ("1", "3"),
            ("2", "1"),
            ("2", "3"),
            ("3", "1"),
            ("3", "2"),
            ("3", "4"),
            ("3", "5"),
        ],
        &["4", "5"],
    )
}

pub fn ex_a() -> TransversalPresentation {
    pres(
        &["1", "2", "3", "4", "5", "6"],
        &[
            &["1", "2", "3", "4", "5", "6"],
            &["2", "4", "5"],
            &["3", "5", "6"],
        ],
    )
}

/// All simple paths from `from` to some sink (a path stops the moment it
/// reaches a sink, since sinks have no way onward).
fn simple_paths_to_sinks(g: &PlantedGraph, from: &VertexId) -> Vec<Vec<VertexId>> {
    fn go(g: &PlantedGraph, path: &mut Vec<VertexId>, out: &mut Vec<Vec<VertexId>>) {
        let last = path.last().expect("paths start nonempty").clone();
        if g.is_sink(&last) {
            out.push(path.clone());
            return;
        }
        for next in g.out_neighbors(&last) {
            if !path.contains(&next) {
                path.push(next);
                go(g, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, &mut vec![from.clone()], &mut out);
    out
}

fn disjoint_system(
    per_source: &[Vec<Vec<VertexId>>],
    used: &mut BTreeSet<VertexId>,
    at: usize,
) -> bool {
    if at == per_source.len() {
        return true;
    }
    for path in &per_source[at] {
        if path.iter().all(|v| !used.contains(v)) {
            used.extend(path.iter().cloned());
            if disjoint_system(per_source, used, at + 1) {
                return true;
            }
            for v in path {
                used.remove(v);
            }
        }
    }
    false
}

/// Can every source be routed to a sink along vertex-disjoint paths?
pub fn brute_force_routable(g: &PlantedGraph, sources: &BTreeSet<VertexId>) -> bool {
    let per_source: Vec<_> = sources
        .iter()
        .map(|v| simple_paths_to_sinks(g, v))
        .collect();
    disjoint_system(&per_source, &mut BTreeSet::new(), 0)
}

/// Largest number of sources in `k` that can be routed simultaneously.
pub fn brute_force_rank(g: &PlantedGraph, k: &BTreeSet<VertexId>) -> usize {
    (0..=k.len())
        .rev()
        .find(|&m| {
            k.iter()
                .cloned()
                .combinations(m)
                .any(|c| brute_force_routable(g, &c.into_iter().collect()))
        })
        .unwrap_or(0)
}

pub fn brute_force_bases(g: &PlantedGraph) -> BTreeSet<BTreeSet<VertexId>> {
    g.vertices()
        .iter()
        .cloned()
        .combinations(g.sinks().len())
        .map(|c| c.into_iter().collect::<BTreeSet<_>>())
        .filter(|s| brute_force_routable(g, s))
        .collect()
}

/// Every system of distinct representatives of `p`, by backtracking.
pub fn all_sdrs(p: &TransversalPresentation) -> Vec<Sdr> {
    fn go(
        sets: &[BTreeSet<VertexId>],
        used: &mut BTreeSet<VertexId>,
        cur: &mut Vec<VertexId>,
        out: &mut Vec<Sdr>,
    ) {
        let Some(set) = sets.first() else {
            out.push(Sdr::new(cur.clone()));
            return;
        };
        for v in set {
            if used.insert(v.clone()) {
                cur.push(v.clone());
                go(&sets[1..], used, cur, out);
                cur.pop();
                used.remove(v);
            }
        }
    }
    let mut out = Vec::new();
    go(p.sets(), &mut BTreeSet::new(), &mut Vec::new(), &mut out);
    out
}

/// Arbitrary valid planted graphs on exactly `n` vertices, labeled
/// `1..=n`; sink sets of every size occur, including empty and full.
pub fn planted_graphs_sized(n: usize) -> impl Strategy<Value = PlantedGraph> {
    assert!(n >= 1);
    (
        prop::collection::btree_set(0..n, 0..=n),
        prop::collection::btree_set((0..n, 0..n), 0..=n * n),
    )
        .prop_map(move |(sinks, raw_edges)| {
            let label = |i: usize| VertexId::new((i + 1).to_string());
            let vertices: BTreeSet<VertexId> = (0..n).map(label).collect();
            let edges = raw_edges
                .into_iter()
                .filter(|(a, b)| a != b && !sinks.contains(a))
                .map(|(a, b)| (label(a), label(b)))
                .collect();
            let sinks = sinks.into_iter().map(label).collect();
            PlantedGraph::new(vertices, edges, sinks)
        })
}

/// As [`planted_graphs_sized`], with the vertex count itself ranging over
/// `1..=max_n`.
pub fn planted_graphs(max_n: usize) -> impl Strategy<Value = PlantedGraph> {
    (1..=max_n).prop_flat_map(planted_graphs_sized)
}

/// Arbitrary set families over ground `1..=s` with `s` at most
/// `max_ground` and at most `max_rank` sets (possibly empty ones, possibly
/// none).
pub fn presentations(
    max_rank: usize,
    max_ground: usize,
) -> impl Strategy<Value = TransversalPresentation> {
    (1..=max_ground).prop_flat_map(move |s| {
        prop::collection::vec(prop::collection::btree_set(0..s, 0..=s), 0..=max_rank)
            .prop_map(move |raw| {
                let label = |i: usize| VertexId::new((i + 1).to_string());
                let ground: BTreeSet<VertexId> = (0..s).map(label).collect();
                let sets = raw
                    .into_iter()
                    .map(|set| set.into_iter().map(label).collect())
                    .collect();
                TransversalPresentation::new(ground, sets)
                    .expect("sets are drawn from the ground")
            })
    })
}
