//! Properties of the reduction: uniqueness up to isomorphism, distance
//! preservation, conservation laws, and the structure of the spine.

mod common;

use common::{arb_graph, isomorphic_by_permutations};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spine_core::{
    chordless_cycles, gen, is_irreducible, isomorphic, reduce, reduce_with_order, subsumes,
    NodeSet,
};

proptest! {
    /// Spines from different visit orders are isomorphic (checked against
    /// the exhaustive permutation oracle on ≤ 8 survivors).
    #[test]
    fn spines_are_unique_up_to_isomorphism(
        g in arb_graph(8, 16),
        seed in any::<u64>(),
    ) {
        let base = reduce(&g);
        let order = gen::seeded_visit_order(&g, seed);
        let other = reduce_with_order(&g, &order).unwrap();
        prop_assert!(isomorphic_by_permutations(base.spine(), other.spine()));
        // The backtracking test must agree with the oracle.
        prop_assert!(isomorphic(base.spine(), other.spine()).unwrap());
    }

    /// The backtracking isomorphism test agrees with brute force on
    /// arbitrary small graph pairs, isomorphic or not.
    #[test]
    fn isomorphism_matches_permutation_oracle(
        g1 in arb_graph(6, 10),
        g2 in arb_graph(6, 10),
    ) {
        prop_assert_eq!(
            isomorphic(&g1, &g2).unwrap(),
            isomorphic_by_permutations(&g1, &g2)
        );
    }

    /// Every spine is irreducible, has minimum degree ≥ 2 among
    /// non-isolated survivors, conserves τ, and partitions the nodes.
    #[test]
    fn spine_structure_invariants(g in arb_graph(32, 100)) {
        let r = reduce(&g);
        let spine = r.spine();
        prop_assert!(is_irreducible(spine));
        for y in spine.nodes() {
            let d = spine.degree(y);
            prop_assert!(d == 0 || d >= 2, "degree-1 spine node {y}");
        }
        let total: u64 = r.tau_table().map(|(_, t)| t).sum();
        prop_assert_eq!(total, g.node_count() as u64);
        let mut union = NodeSet::empty(g.universe());
        for y in r.survivors() {
            prop_assert!(union.is_disjoint(r.beta(y)));
            union.union_with(r.beta(y));
        }
        prop_assert_eq!(&union, g.active_set());
    }

    /// Distances between survivors are identical in the spine and in the
    /// original graph.
    #[test]
    fn distances_between_survivors_are_preserved(g in arb_graph(24, 72)) {
        let r = reduce(&g);
        for u in r.survivors() {
            let original = g.bfs_distances(u);
            let reduced = r.spine().bfs_distances(u);
            for v in r.survivors() {
                prop_assert_eq!(original[v.index()], reduced[v.index()]);
            }
        }
    }

    /// Direct domination in the original graph implies the survivor is at
    /// least as central as its victim, in both measures.
    #[test]
    fn dominating_survivors_are_at_least_as_central(g in arb_graph(16, 40)) {
        let r = reduce(&g);
        let sums = spine_core::distance_sums(&g);
        let raw = spine_core::stress_betweenness(&g, false);
        for y in r.survivors() {
            for z in r.beta(y) {
                if z == y || !subsumes(&g, y, z) {
                    continue;
                }
                prop_assert!(sums[y.index()] <= sums[z.index()]);
                prop_assert!(raw[y.index()] >= raw[z.index()]);
            }
        }
    }

    /// Components with at least one edge in a spine always contain a
    /// chordless cycle of length ≥ 4; a chordal component would have
    /// collapsed to a point.
    #[test]
    fn spine_components_with_edges_carry_long_cycles(g in arb_graph(14, 40)) {
        let r = reduce(&g);
        let spine = r.spine();
        for comp in spine.components() {
            let sub = spine.induced_subgraph(&comp);
            if sub.edge_count() == 0 {
                continue;
            }
            let max_k = comp.len().max(4);
            let cycles = chordless_cycles(&sub, 4, max_k);
            prop_assert!(!cycles.is_empty(), "edged spine component without ≥4-cycle");
            // Connectivity makes "reaches a cycle node" immediate, but we
            // check it as stated.
            let mut on_cycles = NodeSet::empty(sub.universe());
            for c in &cycles {
                on_cycles.union_with(&c.node_set(sub.universe()));
            }
            let any = on_cycles.first().unwrap();
            let dist = sub.bfs_distances(any);
            for v in &comp {
                prop_assert!(
                    on_cycles.contains(v) || dist[v.index()].is_some(),
                    "node {v} cannot reach any long cycle"
                );
            }
        }
    }
}

#[test]
fn chordal_graphs_collapse_to_a_point() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for round in 0..40 {
        let n = 1 + (round * 5) % 120;
        let g = gen::chordal_tree_of_cliques(&mut rng, n, 6);
        let r = reduce(&g);
        assert_eq!(r.survivors().len(), 1, "chordal graph with {n} nodes");
        let y = r.survivors().first().unwrap();
        assert_eq!(r.tau(y), n as u64);
    }
}

#[test]
fn ten_random_orders_on_one_graph_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let g = gen::gnp(&mut rng, 30, 0.12);
    let base = reduce(&g);
    for seed in 0..10 {
        let order = gen::seeded_visit_order(&g, seed);
        let r = reduce_with_order(&g, &order).unwrap();
        assert!(isomorphic(base.spine(), r.spine()).unwrap());
        assert!(is_irreducible(r.spine()));
    }
}

#[test]
fn pendant_cycle_recovers_exactly() {
    // A 14-cycle with nine pendant trees: reduction strips the pendants.
    let pendants = [
        (0, 1),
        (1, 1),
        (3, 1),
        (5, 2),
        (6, 1),
        (8, 2),
        (10, 3),
        (11, 1),
        (12, 3),
    ];
    let g = gen::cycle_with_pendant_trees(14, &pendants);
    let r = reduce(&g);
    assert_eq!(r.survivors().len(), 14);
    assert!(isomorphic(r.spine(), &gen::cycle_graph(14)).unwrap());
    let sig = spine_core::signature(r.spine(), 16);
    assert_eq!(sig.counts.len(), 1);
    assert_eq!(sig.counts.get(&14), Some(&1));
}

#[test]
fn masked_graphs_reduce_like_their_compaction() {
    // Reducing an induced subgraph with masked-out nodes works on the
    // surviving universe.
    let g = gen::cycle_with_pendant_trees(8, &[(0, 3), (4, 2)]);
    let keep = NodeSet::from_iter(
        g.universe(),
        g.nodes().filter(|v| v.index() < 10),
    );
    let masked = g.induced_subgraph(&keep);
    let r = reduce(&masked);
    assert!(is_irreducible(r.spine()));
    let total: u64 = r.tau_table().map(|(_, t)| t).sum();
    assert_eq!(total, masked.node_count() as u64);
}

#[test]
fn worst_case_chain_is_quadratic_in_total_work() {
    for n in [20, 40, 80] {
        let g = gen::subsumption_chain(n);
        let r = reduce(&g);
        assert_eq!(r.iterations() as usize, n - 3);
        assert!(matches!(
            isomorphic(r.spine(), &gen::cycle_graph(4)),
            Ok(true)
        ));
    }
}
