//! Saturation: growth to the unique maximal presentation, one edge and
//! one contraction at a time.

mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use common::{all_sdrs, brute_force_bases, ex_g, ex_r2, planted_graphs, presentations};
use cotransversal::oracle;
use cotransversal::planted::{enumerate_bases, loops};
use cotransversal::saturation::{
    can_add_edge, contract_presentation, is_saturated, maximal_transversal_presentation,
    saturate, saturate_with_order,
};
use cotransversal::transversal::enumerate_transversals;
use cotransversal::VertexId;

proptest! {
    #[test]
    fn saturation_grows_the_graph_without_changing_the_bases(g in planted_graphs(6)) {
        let s = saturate(&g).unwrap();
        prop_assert_eq!(s.vertices(), g.vertices());
        prop_assert_eq!(s.sinks(), g.sinks());
        prop_assert!(g.edges().is_subset(s.edges()));
        prop_assert_eq!(brute_force_bases(&s), brute_force_bases(&g));
    }

    #[test]
    fn saturation_is_idempotent(g in planted_graphs(6)) {
        let s = saturate(&g).unwrap();
        prop_assert!(is_saturated(&s).unwrap());
        prop_assert_eq!(saturate(&s).unwrap(), s);
    }

    #[test]
    fn saturation_does_not_depend_on_the_vertex_order(g in planted_graphs(5)) {
        let canonical = saturate(&g).unwrap();
        let mut order: Vec<VertexId> = g
            .vertices()
            .iter()
            .filter(|v| !g.is_sink(v))
            .cloned()
            .collect();
        order.reverse();
        prop_assert_eq!(saturate_with_order(&g, &order).unwrap(), canonical.clone());
        let shift = order.len() / 2;
        order.rotate_left(shift);
        prop_assert_eq!(saturate_with_order(&g, &order).unwrap(), canonical);
    }

    #[test]
    fn an_edge_is_addable_exactly_when_it_changes_nothing(g in planted_graphs(5)) {
        let reference = brute_force_bases(&g);
        for v in g.vertices() {
            if g.is_sink(v) {
                continue;
            }
            for w in g.vertices() {
                if w == v || g.contains_edge(v, w) {
                    continue;
                }
                let mut edges = g.edges().clone();
                edges.insert((v.clone(), w.clone()));
                let extended =
                    cotransversal::PlantedGraph::new(g.vertices().clone(), edges, g.sinks().clone());
                let harmless = brute_force_bases(&extended) == reference;
                prop_assert_eq!(
                    can_add_edge(&g, v, w).unwrap(),
                    harmless,
                    "edge ({}, {})", v, w
                );
            }
        }
    }

    #[test]
    fn saturated_graphs_admit_no_further_edges(g in planted_graphs(5)) {
        let s = saturate(&g).unwrap();
        for v in s.vertices() {
            if s.is_sink(v) {
                continue;
            }
            for w in s.vertices() {
                if w == v || s.contains_edge(v, w) {
                    continue;
                }
                prop_assert!(!can_add_edge(&s, v, w).unwrap(), "edge ({}, {})", v, w);
            }
        }
    }

    #[test]
    fn saturated_graphs_point_every_vertex_at_every_loop(g in planted_graphs(6)) {
        let s = saturate(&g).unwrap();
        let ls = loops(&s);
        for v in s.vertices() {
            if s.is_sink(v) {
                continue;
            }
            for w in &ls {
                prop_assert!(w == v || s.contains_edge(v, w), "missing ({}, {})", v, w);
            }
        }
    }

    #[test]
    fn contraction_matches_the_oracle(
        g in planted_graphs(6),
        picks in prop::collection::btree_set(0..6usize, 0..=6),
    ) {
        let all: Vec<VertexId> = g.vertices().iter().cloned().collect();
        let k: BTreeSet<VertexId> =
            picks.into_iter().filter_map(|i| all.get(i).cloned()).collect();
        let contracted = contract_presentation(&g, &k).unwrap();
        let expected = oracle::contract(&enumerate_bases(&g).unwrap(), &k);
        prop_assert!(oracle::equal(&enumerate_bases(&contracted).unwrap(), &expected));
    }

    #[test]
    fn maximal_presentations_grow_sets_and_keep_transversals(
        p in presentations(4, 6),
        pick in any::<prop::sample::Index>(),
    ) {
        let sdrs = all_sdrs(&p);
        prop_assume!(!sdrs.is_empty());
        let m = &sdrs[pick.index(sdrs.len())];
        let grown = maximal_transversal_presentation(&p, m).unwrap();
        prop_assert_eq!(grown.len(), p.len());
        for (small, big) in p.sets().iter().zip(grown.sets()) {
            prop_assert!(small.is_subset(big));
        }
        prop_assert!(m.validate_for(&grown).is_ok());
        prop_assert!(oracle::equal(
            &enumerate_transversals(&grown).unwrap(),
            &enumerate_transversals(&p).unwrap()
        ));
        let again = maximal_transversal_presentation(&grown, m).unwrap();
        prop_assert_eq!(again, grown);
    }
}

#[test]
fn ex_g_is_already_maximal() {
    assert!(is_saturated(&ex_g()).unwrap());
}

#[test]
fn ex_r2_saturates_to_the_full_rank_two_presentation() {
    let s = saturate(&ex_r2()).unwrap();
    assert!(is_saturated(&s).unwrap());
    assert!(oracle::equal(
        &enumerate_bases(&s).unwrap(),
        &enumerate_bases(&ex_r2()).unwrap()
    ));
    // contracting any single non-sink never destroys the other bases
    for v in ["1", "2", "3"] {
        let k: BTreeSet<VertexId> = [VertexId::new(v)].into();
        let contracted = contract_presentation(&s, &k).unwrap();
        assert!(oracle::equal(
            &enumerate_bases(&contracted).unwrap(),
            &oracle::contract(&enumerate_bases(&s).unwrap(), &k)
        ));
    }
}
