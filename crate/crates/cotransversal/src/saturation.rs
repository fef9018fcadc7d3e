//! Saturation: growing a planted graph to the unique maximal presentation
//! of its matroid.
//!
//! An edge `(v, w)` can be added without changing the presented matroid
//! exactly when `w` is a loop of the matroid contracted by the claw of
//! `v` (the vertex together with its out-neighbors).  Contracting by a
//! vertex set is itself performed presentation-side: swaps move
//! representatives of the set onto sinks, after which the set can simply
//! be deleted.  Saturating every vertex yields a graph that is
//! independent of the order in which vertices were processed.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::planted::{
    ensure_valid, find_routing, loops, swap, PlantedGraph, VertexId,
};
use crate::transversal::{dualize, undualize, Sdr, TransversalPresentation};

/// The claw of `v`: the vertex together with its out-neighbors.
pub fn claw(g: &PlantedGraph, v: &VertexId) -> Result<BTreeSet<VertexId>> {
    if !g.vertices().contains(v) {
        return Err(Error::UnknownVertex(v.to_string()));
    }
    let mut k = g.out_neighbors(v);
    k.insert(v.clone());
    Ok(k)
}

/// A planted-graph presentation of the matroid contracted by `k`.
///
/// While fewer than `rank(k)` members of `k` are sinks, some routing path
/// leads from an unsunk member of `k` to a sink outside it; cascading
/// swaps backwards along that path turns its start into a sink.  Once
/// `k` carries `rank(k)` sinks it can be deleted outright.
pub fn contract_presentation(
    g: &PlantedGraph,
    k: &BTreeSet<VertexId>,
) -> Result<PlantedGraph> {
    ensure_valid(g)?;
    for v in k {
        if !g.vertices().contains(v) {
            return Err(Error::UnknownVertex(v.to_string()));
        }
    }

    let mut cur = g.clone();
    loop {
        let routing = find_routing(&cur, k)?;
        let sunk = k.iter().filter(|v| cur.is_sink(v)).count();
        if sunk == routing.len() {
            break;
        }
        let path = routing
            .paths()
            .iter()
            .find(|p| !k.contains(p.last().expect("paths are nonempty")))
            .ok_or_else(|| {
                Error::Internal("maximum routing has no path leaving the contracted set".into())
            })?
            .clone();
        for pair in path.windows(2).rev() {
            cur = swap(&cur, &pair[0], &pair[1])?;
        }
    }

    let vertices: BTreeSet<VertexId> = cur.vertices().difference(k).cloned().collect();
    let edges = cur
        .edges()
        .iter()
        .filter(|(a, b)| !k.contains(a) && !k.contains(b))
        .cloned()
        .collect();
    let sinks = cur.sinks().difference(k).cloned().collect();
    Ok(PlantedGraph::new(vertices, edges, sinks))
}

/// Can `(v, w)` be added without changing the presented matroid?
pub fn can_add_edge(g: &PlantedGraph, v: &VertexId, w: &VertexId) -> Result<bool> {
    ensure_valid(g)?;
    for u in [v, w] {
        if !g.vertices().contains(u) {
            return Err(Error::UnknownVertex(u.to_string()));
        }
    }
    if g.is_sink(v) {
        return Err(Error::Input(format!("cannot add an edge out of the sink {v}")));
    }
    if v == w {
        return Err(Error::Input(format!("cannot add a self-edge at {v}")));
    }
    if g.contains_edge(v, w) {
        return Err(Error::Input(format!("edge ({v},{w}) is already present")));
    }
    let contracted = contract_presentation(g, &claw(g, v)?)?;
    Ok(loops(&contracted).contains(w))
}

/// The saturation: every addable edge added.  Vertices are processed in
/// canonical order and passes repeat until nothing changes; the result
/// does not depend on the order (see [`saturate_with_order`]).
pub fn saturate(g: &PlantedGraph) -> Result<PlantedGraph> {
    let order: Vec<VertexId> = g
        .vertices()
        .iter()
        .filter(|v| !g.is_sink(v))
        .cloned()
        .collect();
    saturate_with_order(g, &order)
}

/// As [`saturate`], processing non-sinks in the given order.
pub fn saturate_with_order(g: &PlantedGraph, order: &[VertexId]) -> Result<PlantedGraph> {
    ensure_valid(g)?;
    let mut cur = g.clone();
    loop {
        let mut changed = false;
        for v in order {
            let k = claw(&cur, v)?;
            let contracted = contract_presentation(&cur, &k)?;
            for w in loops(&contracted) {
                cur.add_edge(v.clone(), w);
                changed = true;
            }
        }
        if !changed {
            return Ok(cur);
        }
    }
}

/// Is `g` its own saturation?
pub fn is_saturated(g: &PlantedGraph) -> Result<bool> {
    Ok(saturate(g)? == *g)
}

/// The maximal transversal presentation containing `(p, m)`: undualize,
/// saturate, dualize back, and line the grown sets up with the input
/// positions via their representatives.
pub fn maximal_transversal_presentation(
    p: &TransversalPresentation,
    m: &Sdr,
) -> Result<TransversalPresentation> {
    let g = undualize(p, m)?;
    let saturated = saturate(&g)?;
    let (grown, grown_sdr) = dualize(&saturated)?;
    let mut sets = Vec::with_capacity(p.len());
    for rep in m.reps() {
        let at = grown_sdr
            .reps()
            .iter()
            .position(|r| r == rep)
            .ok_or_else(|| {
                Error::Internal(format!("representative {rep} lost during saturation"))
            })?;
        sets.push(grown.sets()[at].clone());
    }
    for (a, b) in p.sets().iter().zip(&sets) {
        if !a.is_subset(b) {
            return Err(Error::Internal(
                "saturation shrank a presentation set".to_string(),
            ));
        }
    }
    TransversalPresentation::new(p.ground().clone(), sets)
}
