//! Shared fixtures for the unit tests.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::oracle::BasisSet;
use crate::planted::{PlantedGraph, VertexId};
use crate::transversal::TransversalPresentation;

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

/// Rank-3 running example: six vertices, sinks 4, 5, 6.
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

/// A second presentation of the same matroid as [`ex_g`], one swap away.
pub fn chain_second() -> PlantedGraph {
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
            ("5", "3"),
            ("5", "6"),
        ],
        &["3", "4", "6"],
    )
}

/// A third presentation of the same matroid, one more swap along.
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

/// Rank-2 graph on the same six vertices; not the matroid of [`ex_g`].
pub fn two_sink() -> PlantedGraph {
    graph(
        &["1", "2", "3", "4", "5", "6"],
        &[("1", "5"), ("2", "5"), ("3", "6"), ("4", "6")],
        &["5", "6"],
    )
}

/// Rank-2 example whose saturation closure has several presentations.
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

/// Set family dual to [`ex_g`], with a system of distinct representatives.
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

/// The matroid presented by [`ex_g`]: every 3-subset of {1,…,6} is a basis
/// except {2,4,5} and {3,5,6}.
pub fn ex_m() -> BasisSet {
    let ground = vs(&["1", "2", "3", "4", "5", "6"]);
    let excluded = [vs(&["2", "4", "5"]), vs(&["3", "5", "6"])];
    let bases: BTreeSet<BTreeSet<VertexId>> = ground
        .iter()
        .cloned()
        .combinations(3)
        .map(|c| c.into_iter().collect::<BTreeSet<_>>())
        .filter(|b| !excluded.contains(b))
        .collect();
    BasisSet::new(ground, bases).unwrap()
}
