//! Edge-list round-trip: `parse(write(g))` reproduces `g` up to the
//! label→id mapping, and reports are deterministic text transforms.

use proptest::prelude::*;
use spine_cli::edgelist::{parse_edge_list, write_edge_list};
use spine_core::Graph;
use std::collections::BTreeSet;

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=20, proptest::collection::vec((0usize..20, 0usize..20), 0..60)).prop_map(
        |(n, pairs)| {
            let edges: Vec<(usize, usize)> = pairs
                .into_iter()
                .map(|(u, v)| (u % n, v % n))
                .filter(|(u, v)| u != v)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        },
    )
}

/// Label-level view of a graph: edge set plus isolated-node set.
fn shape(g: &Graph) -> (BTreeSet<(String, String)>, BTreeSet<String>) {
    let mut edges = BTreeSet::new();
    for (u, v) in g.edges() {
        let (a, b) = (g.label(u).to_string(), g.label(v).to_string());
        edges.insert(if a <= b { (a, b) } else { (b, a) });
    }
    let isolated = g
        .nodes()
        .filter(|&v| g.degree(v) == 0)
        .map(|v| g.label(v).to_string())
        .collect();
    (edges, isolated)
}

proptest! {
    #[test]
    fn parse_inverts_write(g in arb_graph()) {
        let text = write_edge_list(&g);
        let parsed = parse_edge_list(&text).unwrap();
        prop_assert_eq!(parsed.duplicate_edges, 0);
        prop_assert_eq!(shape(&parsed.graph), shape(&g));
        prop_assert_eq!(parsed.graph.node_count(), g.node_count());
        prop_assert_eq!(parsed.graph.edge_count(), g.edge_count());
    }

    #[test]
    fn writing_twice_is_identical(g in arb_graph()) {
        prop_assert_eq!(write_edge_list(&g), write_edge_list(&g));
    }
}
