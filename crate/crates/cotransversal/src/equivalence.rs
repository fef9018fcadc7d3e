//! Deciding whether two planted graphs present the same matroid.
//!
//! Two planted graphs on one vertex set present the same matroid exactly
//! when their saturations are connected by swaps.  The witness path is
//! found on the dual side: both saturations dualize to the same maximal
//! set family, an SDR exchange path connects their representative
//! systems (loops excluded — their sets coincide and need no moves), and
//! each single-position exchange translates back into one swap.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::planted::{ensure_valid, loops, swap, valid_swaps, PlantedGraph, VertexId};
use crate::saturation::saturate;
use crate::transversal::{dualize, sdr_exchange_path, Sdr, TransversalPresentation};

/// A list of swaps applied in order from a declared start graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwapSequence {
    steps: Vec<(VertexId, VertexId)>,
}

impl SwapSequence {
    pub fn new(steps: Vec<(VertexId, VertexId)>) -> Self {
        SwapSequence { steps }
    }

    pub fn steps(&self) -> &[(VertexId, VertexId)] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Replays the sequence on `g`; errors if some step is not applicable
    /// at its turn.
    pub fn apply(&self, g: &PlantedGraph) -> Result<PlantedGraph> {
        let mut cur = g.clone();
        for (i, j) in &self.steps {
            cur = swap(&cur, i, j)?;
        }
        Ok(cur)
    }
}

/// The graph of saturated presentations reachable by swaps: nodes are
/// saturated planted graphs, edges are labeled by the swap relating their
/// endpoints (both directions appear, labeled by mutually inverse swaps).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwapGraph {
    nodes: Vec<PlantedGraph>,
    edges: Vec<(usize, usize, (VertexId, VertexId))>,
}

impl SwapGraph {
    pub fn nodes(&self) -> &[PlantedGraph] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize, (VertexId, VertexId))] {
        &self.edges
    }

    pub fn is_connected(&self) -> bool {
        if self.nodes.is_empty() {
            return true;
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.nodes.len()];
        for (from, to, _) in &self.edges {
            adj[*from].push(*to);
            adj[*to].push(*from);
        }
        let mut seen = vec![false; self.nodes.len()];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for &j in &adj[i] {
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Do `g1` and `g2` present the same matroid?  Graphs on different vertex
/// sets never do.  Decided by comparing the dual set families of the two
/// saturations as multisets.
pub fn same_matroid(g1: &PlantedGraph, g2: &PlantedGraph) -> Result<bool> {
    ensure_valid(g1)?;
    ensure_valid(g2)?;
    if g1.vertices() != g2.vertices() {
        return Ok(false);
    }
    let s1 = saturate(g1)?;
    let s2 = saturate(g2)?;
    let (p1, _) = dualize(&s1)?;
    let (p2, _) = dualize(&s2)?;
    Ok(p1.sets_multiset() == p2.sets_multiset())
}

/// Lines the second presentation's representatives up with the first
/// presentation's positions: sets are matched as multisets, and within a
/// group of equal sets the representatives are handed out in canonical
/// order.  Loop positions therefore receive identical representatives on
/// both sides.
fn align_reps(
    reference: &TransversalPresentation,
    other: &TransversalPresentation,
    other_sdr: &Sdr,
) -> Result<Sdr> {
    let mut groups: BTreeMap<&BTreeSet<VertexId>, Vec<VertexId>> = BTreeMap::new();
    for (set, rep) in other.sets().iter().zip(other_sdr.reps()) {
        groups.entry(set).or_default().push(rep.clone());
    }
    for reps in groups.values_mut() {
        reps.sort();
        reps.reverse(); // pop() hands the smallest out first
    }
    let mut reps = Vec::with_capacity(reference.len());
    for set in reference.sets() {
        let rep = groups
            .get_mut(set)
            .and_then(|r| r.pop())
            .ok_or_else(|| Error::Internal("dual families do not match as multisets".into()))?;
        reps.push(rep);
    }
    Ok(Sdr::new(reps))
}

/// A swap sequence transforming `saturate(g1)` into `saturate(g2)`, if the
/// two graphs present the same matroid.
pub fn swap_path(g1: &PlantedGraph, g2: &PlantedGraph) -> Result<Option<SwapSequence>> {
    ensure_valid(g1)?;
    ensure_valid(g2)?;
    if g1.vertices() != g2.vertices() {
        return Err(Error::Input(
            "the graphs are on different vertex sets".to_string(),
        ));
    }
    let s1 = saturate(g1)?;
    let s2 = saturate(g2)?;
    let (p1, m1) = dualize(&s1)?;
    let (p2, m2) = dualize(&s2)?;
    if p1.sets_multiset() != p2.sets_multiset() {
        return Ok(None);
    }
    let m2 = align_reps(&p1, &p2, &m2)?;

    // Loops appear as positions whose set is exactly the loop cluster;
    // alignment gave them equal representatives, so they can be dropped
    // and the exchange runs over the rest, on the loop-free ground set.
    let loop_set = loops(&s1);
    let mut sets = Vec::new();
    let mut start = Vec::new();
    let mut goal = Vec::new();
    for ((set, b), c) in p1.sets().iter().zip(m1.reps()).zip(m2.reps()) {
        if *set == loop_set && !loop_set.is_empty() {
            if b != c {
                return Err(Error::Internal(
                    "aligned loop positions disagree".to_string(),
                ));
            }
            continue;
        }
        sets.push(set.difference(&loop_set).cloned().collect());
        start.push(b.clone());
        goal.push(c.clone());
    }
    let ground = p1.ground().difference(&loop_set).cloned().collect();
    let restricted = TransversalPresentation::new(ground, sets)
        .map_err(|e| Error::Internal(format!("loop-free family is malformed: {e}")))?;

    let path = match sdr_exchange_path(&restricted, &Sdr::new(start), &Sdr::new(goal)) {
        Ok(path) => path,
        Err(Error::Input(msg)) => {
            return Err(Error::Internal(format!(
                "loop-free family violates an exchange precondition: {msg}"
            )))
        }
        Err(e) => return Err(e),
    };

    let mut steps = Vec::new();
    for (prev, next) in path.iter().tuple_windows() {
        let at = prev
            .reps()
            .iter()
            .zip(next.reps())
            .position(|(a, b)| a != b)
            .ok_or_else(|| Error::Internal("exchange path repeats an SDR".into()))?;
        steps.push((prev.reps()[at].clone(), next.reps()[at].clone()));
    }
    let seq = SwapSequence::new(steps);
    if seq.apply(&s1)? != s2 {
        return Err(Error::Internal(
            "translated swap sequence does not reach the second saturation".to_string(),
        ));
    }
    Ok(Some(seq))
}

/// Breadth-first exploration of all saturated presentations reachable from
/// `saturate(g)` by swaps, capped at `limit` nodes.
pub fn swap_graph(g: &PlantedGraph, limit: usize) -> Result<SwapGraph> {
    swap_graph_with_report(g, limit).map(|(graph, _)| graph)
}

/// As [`swap_graph`], also reporting how many swap results needed
/// re-saturation (expected to be none: swaps preserve saturation).
pub fn swap_graph_with_report(g: &PlantedGraph, limit: usize) -> Result<(SwapGraph, usize)> {
    ensure_valid(g)?;
    let start = saturate(g)?;
    let mut nodes = vec![start.clone()];
    let mut index = BTreeMap::from([(start, 0usize)]);
    let mut edges = Vec::new();
    let mut resaturated = 0usize;
    let mut frontier = VecDeque::from([0usize]);
    if limit == 0 {
        return Err(Error::SwapGraphLimit {
            limit,
            partial: Box::new(SwapGraph { nodes: Vec::new(), edges: Vec::new() }),
        });
    }
    while let Some(from) = frontier.pop_front() {
        let current = nodes[from].clone();
        for (i, j) in valid_swaps(&current) {
            let swapped = swap(&current, &i, &j)?;
            let node = saturate(&swapped)?;
            if node != swapped {
                resaturated += 1;
            }
            let to = match index.get(&node) {
                Some(&to) => to,
                None => {
                    if nodes.len() == limit {
                        return Err(Error::SwapGraphLimit {
                            limit,
                            partial: Box::new(SwapGraph { nodes, edges }),
                        });
                    }
                    let to = nodes.len();
                    nodes.push(node.clone());
                    index.insert(node, to);
                    frontier.push_back(to);
                    to
                }
            };
            edges.push((from, to, (i, j)));
        }
    }
    Ok((SwapGraph { nodes, edges }, resaturated))
}

fn degree_signature(g: &PlantedGraph) -> Vec<(bool, usize, usize)> {
    let mut sig: Vec<(bool, usize, usize)> = g
        .vertices()
        .iter()
        .map(|v| {
            let out = g.edges().iter().filter(|(a, _)| a == v).count();
            let inn = g.edges().iter().filter(|(_, b)| b == v).count();
            (g.is_sink(v), out, inn)
        })
        .collect();
    sig.sort();
    sig
}

/// Minimum relabeled edge list over all relabelings that send sinks to
/// sinks.  Quadratic-factorial, meant for small graphs only.
fn canonical_form(g: &PlantedGraph) -> Vec<(usize, usize)> {
    let nonsinks: Vec<&VertexId> =
        g.vertices().iter().filter(|v| !g.is_sink(v)).collect();
    let sinks: Vec<&VertexId> = g.sinks().iter().collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    for p_non in nonsinks.iter().permutations(nonsinks.len()) {
        for p_sink in sinks.iter().permutations(sinks.len()) {
            let mut pos: BTreeMap<&VertexId, usize> = BTreeMap::new();
            for (at, v) in p_non.iter().enumerate() {
                pos.insert(**v, at);
            }
            for (at, v) in p_sink.iter().enumerate() {
                pos.insert(**v, nonsinks.len() + at);
            }
            let mut edges: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .map(|(a, b)| (pos[a], pos[b]))
                .collect();
            edges.sort();
            if best.as_ref().is_none_or(|b| edges < *b) {
                best = Some(edges);
            }
        }
    }
    best.unwrap_or_default()
}

/// Partitions the graphs into isomorphism classes (relabelings must send
/// edges to edges and sinks to sinks).  Classes are listed by first
/// appearance, indices ascending.
pub fn isomorphism_classes(graphs: &[PlantedGraph]) -> Vec<Vec<usize>> {
    let mut keys: Vec<(usize, usize, Vec<(bool, usize, usize)>, Vec<(usize, usize)>)> =
        Vec::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (at, g) in graphs.iter().enumerate() {
        let key = (
            g.vertices().len(),
            g.sinks().len(),
            degree_signature(g),
            canonical_form(g),
        );
        match keys.iter().position(|k| *k == key) {
            Some(c) => classes[c].push(at),
            None => {
                keys.push(key);
                classes.push(vec![at]);
            }
        }
    }
    classes
}
