//! Planted graphs and the matroids they present by routing.
//!
//! A planted graph is a finite directed graph with no self-edges and no
//! duplicate edges, together with a distinguished vertex set `B` whose
//! members have out-degree zero (the sinks).  A vertex set is a basis of
//! the presented matroid exactly when it has `|B|` members and can be
//! routed onto `B` by vertex-disjoint directed paths; a sink routes to
//! itself along a path of length zero.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::oracle::BasisSet;

/// Default cap on vertex count for the exhaustive enumerators.
pub const DEFAULT_SIZE_LIMIT: usize = 20;

/// Opaque vertex label.  Labels compare lexicographically, and that order
/// fixes every canonical enumeration in this crate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(label: impl Into<String>) -> Self {
        VertexId(label.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<&str> for VertexId {
    fn from(s: &str) -> Self {
        VertexId(s.to_string())
    }
}

impl From<String> for VertexId {
    fn from(s: String) -> Self {
        VertexId(s)
    }
}

/// Directed graph with a distinguished sink set.
///
/// The struct itself does not enforce the planted-graph invariants; run
/// [`validate`] to collect violations.  All other operations in the crate
/// expect a graph for which `validate` returns nothing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlantedGraph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeSet<(VertexId, VertexId)>,
    sinks: BTreeSet<VertexId>,
}

impl PlantedGraph {
    pub fn new(
        vertices: BTreeSet<VertexId>,
        edges: BTreeSet<(VertexId, VertexId)>,
        sinks: BTreeSet<VertexId>,
    ) -> Self {
        PlantedGraph { vertices, edges, sinks }
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(VertexId, VertexId)> {
        &self.edges
    }

    pub fn sinks(&self) -> &BTreeSet<VertexId> {
        &self.sinks
    }

    pub fn is_sink(&self, v: &VertexId) -> bool {
        self.sinks.contains(v)
    }

    pub fn contains_edge(&self, from: &VertexId, to: &VertexId) -> bool {
        self.edges.contains(&(from.clone(), to.clone()))
    }

    /// Out-neighbors of `v` in canonical order.
    pub fn out_neighbors(&self, v: &VertexId) -> BTreeSet<VertexId> {
        self.edges
            .iter()
            .filter(|(from, _)| from == v)
            .map(|(_, to)| to.clone())
            .collect()
    }

    pub(crate) fn add_edge(&mut self, from: VertexId, to: VertexId) {
        self.edges.insert((from, to));
    }
}

impl fmt::Debug for PlantedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|(a, b)| format!("({a},{b})"))
            .collect();
        write!(
            f,
            "PlantedGraph {{ vertices: {:?}, edges: [{}], sinks: {:?} }}",
            self.vertices.iter().map(|v| v.as_str()).collect::<Vec<_>>(),
            edges.join(", "),
            self.sinks.iter().map(|v| v.as_str()).collect::<Vec<_>>(),
        )
    }
}

/// Vertex-disjoint directed paths ending in the sink set.
///
/// Paths are sorted by starting vertex; a length-zero path is a single
/// sink routing to itself.  Values are only produced by [`find_routing`],
/// which guarantees maximality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Routing {
    paths: Vec<Vec<VertexId>>,
}

impl Routing {
    pub fn paths(&self) -> &[Vec<VertexId>] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }
}

/// Collect invariant violations: empty labels, unknown endpoints,
/// self-edges, and sinks with outgoing edges.  An empty result means the
/// graph is planted.
pub fn validate(g: &PlantedGraph) -> Vec<String> {
    let mut violations = Vec::new();
    for v in &g.vertices {
        if v.as_str().is_empty() {
            violations.push("empty vertex label".to_string());
        }
    }
    for b in &g.sinks {
        if !g.vertices.contains(b) {
            violations.push(format!("sink {b} not in vertex set"));
        }
    }
    let mut offending_sinks = BTreeSet::new();
    for (from, to) in &g.edges {
        if from == to {
            violations.push(format!("self-edge at {from}"));
        }
        for end in [from, to] {
            if !g.vertices.contains(end) {
                violations.push(format!("edge ({from},{to}) endpoint {end} not in vertex set"));
            }
        }
        if g.sinks.contains(from) {
            offending_sinks.insert(from.clone());
        }
    }
    for b in offending_sinks {
        violations.push(format!("sink {b} has outgoing edge"));
    }
    violations
}

pub(crate) fn ensure_valid(g: &PlantedGraph) -> Result<()> {
    let violations = validate(g);
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidGraph(violations))
    }
}

/// Unit-capacity flow network used for the routing computation.  Every
/// vertex is split into an in/out pair so vertex-disjointness reduces to
/// edge capacities.
struct FlowNet {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u8>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet { adj: vec![Vec::new(); nodes], to: Vec::new(), cap: Vec::new() }
    }

    /// Adds a capacity-one arc and returns its id (even; the paired
    /// residual arc is id+1).
    fn add_arc(&mut self, from: usize, to: usize) -> usize {
        let id = self.to.len();
        self.to.push(to);
        self.cap.push(1);
        self.adj[from].push(id);
        self.to.push(from);
        self.cap.push(0);
        self.adj[to].push(id + 1);
        id
    }

    fn used(&self, arc: usize) -> bool {
        self.cap[arc] == 0
    }

    /// Shortest augmenting path from `s` to `t`; returns false when none
    /// exists.  Arc ids are explored in insertion order, which keeps the
    /// whole computation deterministic.
    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut parent: Vec<Option<usize>> = vec![None; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &arc in &self.adj[u] {
                let v = self.to[arc];
                if self.cap[arc] > 0 && !seen[v] {
                    seen[v] = true;
                    parent[v] = Some(arc);
                    if v == t {
                        let mut node = t;
                        while let Some(arc) = parent[node] {
                            self.cap[arc] -= 1;
                            self.cap[arc ^ 1] += 1;
                            node = self.to[arc ^ 1];
                        }
                        return true;
                    }
                    queue.push_back(v);
                }
            }
        }
        false
    }
}

/// Maximum routing from `sources` onto the sinks: vertex-disjoint directed
/// paths, each starting at a distinct source, as many as possible.
pub fn find_routing(g: &PlantedGraph, sources: &BTreeSet<VertexId>) -> Result<Routing> {
    for s in sources {
        if !g.vertices.contains(s) {
            return Err(Error::UnknownVertex(s.to_string()));
        }
    }

    let verts: Vec<&VertexId> = g.vertices.iter().collect();
    let index: BTreeMap<&VertexId, usize> =
        verts.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let n = verts.len();
    let node_in = |i: usize| 2 * i;
    let node_out = |i: usize| 2 * i + 1;
    let (s, t) = (2 * n, 2 * n + 1);

    let mut net = FlowNet::new(2 * n + 2);
    let mut split_arcs = Vec::with_capacity(n);
    for i in 0..n {
        split_arcs.push(net.add_arc(node_in(i), node_out(i)));
    }
    let mut source_arcs = BTreeMap::new();
    for src in sources {
        source_arcs.insert(src.clone(), net.add_arc(s, node_in(index[src])));
    }
    let mut graph_arcs: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for (from, to) in &g.edges {
        let (fi, ti) = (index[from], index[to]);
        let arc = net.add_arc(node_out(fi), node_in(ti));
        graph_arcs.entry(fi).or_default().push((arc, ti));
    }
    let mut sink_arcs = BTreeMap::new();
    for b in &g.sinks {
        sink_arcs.insert(index[b], net.add_arc(node_out(index[b]), t));
    }

    while net.augment(s, t) {}

    let mut paths = Vec::new();
    for src in sources {
        if !net.used(source_arcs[src]) {
            continue;
        }
        let mut at = index[src];
        let mut path = vec![src.clone()];
        loop {
            if sink_arcs.get(&at).is_some_and(|&arc| net.used(arc)) {
                break;
            }
            let step = graph_arcs
                .get(&at)
                .and_then(|arcs| arcs.iter().find(|(arc, _)| net.used(*arc)));
            match step {
                Some(&(arc, next)) => {
                    debug_assert!(net.used(split_arcs[next]) && net.used(arc));
                    path.push(verts[next].clone());
                    at = next;
                }
                None => {
                    return Err(Error::Internal(format!(
                        "flow unit from {src} does not reach a sink"
                    )))
                }
            }
        }
        paths.push(path);
    }
    Ok(Routing { paths })
}

/// Rank of the vertex set `k`: the size of a maximum routing from `k`.
pub fn rank(g: &PlantedGraph, k: &BTreeSet<VertexId>) -> Result<usize> {
    Ok(find_routing(g, k)?.len())
}

/// Is `a` a basis, i.e. a `|B|`-subset routable onto the sinks?
pub fn is_basis(g: &PlantedGraph, a: &BTreeSet<VertexId>) -> Result<bool> {
    if a.len() != g.sinks.len() {
        return Ok(false);
    }
    Ok(find_routing(g, a)?.len() == g.sinks.len())
}

/// All bases of the presented matroid, by exhaustive routing checks.
pub fn enumerate_bases(g: &PlantedGraph) -> Result<BasisSet> {
    enumerate_bases_with_limit(g, DEFAULT_SIZE_LIMIT)
}

/// As [`enumerate_bases`], refusing graphs with more than `limit` vertices.
pub fn enumerate_bases_with_limit(g: &PlantedGraph, limit: usize) -> Result<BasisSet> {
    ensure_valid(g)?;
    if g.vertices.len() > limit {
        return Err(Error::TooLarge { size: g.vertices.len(), limit });
    }
    let mut bases = BTreeSet::new();
    for combo in g.vertices.iter().combinations(g.sinks.len()) {
        let a: BTreeSet<VertexId> = combo.into_iter().cloned().collect();
        if is_basis(g, &a)? {
            bases.insert(a);
        }
    }
    debug_assert!(bases.contains(&g.sinks));
    Ok(BasisSet::from_parts(g.vertices.clone(), bases))
}

/// Vertices with no directed path to any sink.  These are exactly the
/// loops of the presented matroid.
pub fn loops(g: &PlantedGraph) -> BTreeSet<VertexId> {
    let mut reaches: BTreeSet<VertexId> = g.sinks.clone();
    let mut queue: VecDeque<VertexId> = g.sinks.iter().cloned().collect();
    while let Some(v) = queue.pop_front() {
        for (from, to) in &g.edges {
            if *to == v && !reaches.contains(from) {
                reaches.insert(from.clone());
                queue.push_back(from.clone());
            }
        }
    }
    g.vertices.difference(&reaches).cloned().collect()
}

/// Rewire the edge `(i, j)` into the sink `j`: the edge reverses, every
/// other out-edge of `i` moves to `j`, and `i` replaces `j` in the sink
/// set.  The presented matroid is unchanged, and `swap(j, i)` on the
/// result undoes the move.
pub fn swap(g: &PlantedGraph, i: &VertexId, j: &VertexId) -> Result<PlantedGraph> {
    for v in [i, j] {
        if !g.vertices.contains(v) {
            return Err(Error::UnknownVertex(v.to_string()));
        }
    }
    if g.sinks.contains(i) {
        return Err(Error::SwapNotApplicable(format!("source {i} is a sink")));
    }
    if !g.sinks.contains(j) {
        return Err(Error::SwapNotApplicable(format!("target {j} is not a sink")));
    }
    if !g.contains_edge(i, j) {
        return Err(Error::SwapNotApplicable(format!("edge ({i},{j}) absent")));
    }

    let mut edges = BTreeSet::new();
    for (from, to) in &g.edges {
        if from == i {
            if to == j {
                edges.insert((j.clone(), i.clone()));
            } else {
                edges.insert((j.clone(), to.clone()));
            }
        } else {
            edges.insert((from.clone(), to.clone()));
        }
    }
    let mut sinks = g.sinks.clone();
    sinks.remove(j);
    sinks.insert(i.clone());
    Ok(PlantedGraph::new(g.vertices.clone(), edges, sinks))
}

/// Every pair `(i, j)` for which [`swap`] applies, in canonical order.
pub fn valid_swaps(g: &PlantedGraph) -> Vec<(VertexId, VertexId)> {
    g.edges
        .iter()
        .filter(|(i, j)| !g.sinks.contains(i) && g.sinks.contains(j))
        .cloned()
        .collect()
}
