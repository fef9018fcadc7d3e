//! Seeded random instances for exercising the algorithms.
//!
//! All generators draw from a caller-supplied source, so one seed pins a
//! whole scenario.  They construct values that are valid by construction
//! (no self-edges, no edges out of sinks, representatives from the right
//! sets), never values that merely usually pass validation.

use std::collections::BTreeSet;

use rand::seq::{IteratorRandom, SliceRandom};
use rand::Rng;

use crate::planted::{swap, valid_swaps, PlantedGraph, VertexId};
use crate::transversal::{dragon_condition, TransversalPresentation};

fn labels(n: usize) -> Vec<VertexId> {
    (1..=n).map(|i| VertexId::new(i.to_string())).collect()
}

/// A random planted graph on vertices `1..=n`.  Sink sets of every size
/// occur, including the empty one (all vertices become loops) and the full
/// one (the graph has no edges at all).
pub fn random_planted_graph<R: Rng>(rng: &mut R, n: usize) -> PlantedGraph {
    let vertices = labels(n);
    let sink_count = rng.gen_range(0..=n);
    let sinks: BTreeSet<VertexId> = vertices
        .choose_multiple(rng, sink_count)
        .cloned()
        .collect();
    let density = rng.gen_range(0.2..0.9);
    let mut edges = BTreeSet::new();
    for from in &vertices {
        if sinks.contains(from) {
            continue;
        }
        for to in &vertices {
            if to != from && rng.gen_bool(density) {
                edges.insert((from.clone(), to.clone()));
            }
        }
    }
    PlantedGraph::new(vertices.into_iter().collect(), edges, sinks)
}

/// Applies up to `steps` random swaps to `g`, returning wherever the walk
/// ends.  The result presents the same matroid as `g`.
pub fn random_swap_walk<R: Rng>(rng: &mut R, g: &PlantedGraph, steps: usize) -> PlantedGraph {
    let mut cur = g.clone();
    for _ in 0..steps {
        let choices = valid_swaps(&cur);
        let Some((i, j)) = choices.into_iter().choose(rng) else {
            break;
        };
        cur = swap(&cur, &i, &j).expect("valid_swaps offers applicable swaps");
    }
    cur
}

/// A random set family over ground `1..=s` in which every union of `k`
/// sets has more than `k` elements.  Found by rejection, so rank and
/// ground size must leave room (`max_ground` of at least `max_rank + 1`);
/// panics if no family turns up in a large number of attempts.
pub fn random_dragon_family<R: Rng>(
    rng: &mut R,
    max_rank: usize,
    max_ground: usize,
) -> TransversalPresentation {
    assert!(max_rank >= 1 && max_ground >= max_rank + 1);
    for _ in 0..10_000 {
        let rank = rng.gen_range(1..=max_rank);
        let size = rng.gen_range(rank + 1..=max_ground);
        let ground = labels(size);
        let sets: Vec<BTreeSet<VertexId>> = (0..rank)
            .map(|_| {
                let take = rng.gen_range(2..=size);
                ground.choose_multiple(rng, take).cloned().collect()
            })
            .collect();
        let p = TransversalPresentation::new(ground.into_iter().collect(), sets)
            .expect("sets are drawn from the ground");
        if dragon_condition(&p) {
            return p;
        }
    }
    panic!("no admissible family found; widen the rank or ground bounds");
}
