//! Exact isomorphism testing for small graphs.
//!
//! Backtracking over candidate bijections, pruned by iterated degree
//! refinement (1-WL colors). Exact but exponential in the worst case, so
//! inputs are capped at [`MAX_ISO_NODES`] active nodes; spines from
//! uniqueness experiments are comfortably below that.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, NodeId};

/// Size cap for [`isomorphic`].
pub const MAX_ISO_NODES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoError {
    TooLarge { nodes: usize, limit: usize },
}

impl fmt::Display for IsoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoError::TooLarge { nodes, limit } => {
                write!(f, "graph has {nodes} nodes; exact isomorphism is capped at {limit}")
            }
        }
    }
}

impl core::error::Error for IsoError {}

/// Joint 1-WL refinement: start from degrees, repeatedly split classes by
/// the multiset of neighbor colors, numbering classes from a palette shared
/// by both graphs so colors are comparable across them. `None` as soon as
/// the color histograms diverge (the graphs cannot be isomorphic).
fn refine_colors(
    g1: &Graph,
    nodes1: &[NodeId],
    g2: &Graph,
    nodes2: &[NodeId],
) -> Option<(Vec<u32>, Vec<u32>)> {
    let keys_of = |g: &Graph, nodes: &[NodeId], colors: &[u32]| -> Vec<(u32, Vec<u32>)> {
        let pos: BTreeMap<NodeId, usize> =
            nodes.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        nodes
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let mut nbr: Vec<u32> = g.neighbors(v).iter().map(|w| colors[pos[&w]]).collect();
                nbr.sort_unstable();
                (colors[i], nbr)
            })
            .collect()
    };

    let mut colors1: Vec<u32> = nodes1.iter().map(|&v| g1.degree(v) as u32).collect();
    let mut colors2: Vec<u32> = nodes2.iter().map(|&v| g2.degree(v) as u32).collect();
    loop {
        let keys1 = keys_of(g1, nodes1, &colors1);
        let keys2 = keys_of(g2, nodes2, &colors2);
        let mut palette: BTreeMap<&(u32, Vec<u32>), u32> = BTreeMap::new();
        for key in keys1.iter().chain(&keys2) {
            palette.insert(key, 0);
        }
        for (rank, slot) in palette.values_mut().enumerate() {
            *slot = rank as u32;
        }
        let fresh1: Vec<u32> = keys1.iter().map(|k| palette[k]).collect();
        let fresh2: Vec<u32> = keys2.iter().map(|k| palette[k]).collect();
        let mut hist1 = fresh1.clone();
        let mut hist2 = fresh2.clone();
        hist1.sort_unstable();
        hist2.sort_unstable();
        if hist1 != hist2 {
            return None;
        }
        if fresh1 == colors1 && fresh2 == colors2 {
            return Some((colors1, colors2));
        }
        colors1 = fresh1;
        colors2 = fresh2;
    }
}

/// Does an edge-preserving bijection between the active nodes of `g1` and
/// `g2` exist? Exact; errors if either graph exceeds [`MAX_ISO_NODES`].
pub fn isomorphic(g1: &Graph, g2: &Graph) -> Result<bool, IsoError> {
    for g in [g1, g2] {
        if g.node_count() > MAX_ISO_NODES {
            return Err(IsoError::TooLarge {
                nodes: g.node_count(),
                limit: MAX_ISO_NODES,
            });
        }
    }
    if g1.node_count() != g2.node_count() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    let n = g1.node_count();
    if n == 0 {
        return Ok(true);
    }

    let nodes1: Vec<NodeId> = g1.nodes().collect();
    let nodes2: Vec<NodeId> = g2.nodes().collect();
    let Some((colors1, colors2)) = refine_colors(g1, &nodes1, g2, &nodes2) else {
        return Ok(false);
    };

    // Order g1's nodes most-constrained first: rarest color class, then
    // highest degree. Ties keep ascending id for determinism.
    let mut class_size: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in &colors1 {
        *class_size.entry(c).or_insert(0) += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| {
        (
            class_size[&colors1[i]],
            usize::MAX - g1.degree(nodes1[i]),
            nodes1[i],
        )
    });

    let search = Search {
        g1,
        g2,
        nodes1: &nodes1,
        nodes2: &nodes2,
        colors1: &colors1,
        colors2: &colors2,
        order: &order,
    };
    let mut mapping: Vec<Option<NodeId>> = vec![None; n]; // g1 position -> g2 node
    let mut used = vec![false; n]; // g2 position used
    Ok(search.backtrack(0, &mut mapping, &mut used))
}

struct Search<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    nodes1: &'a [NodeId],
    nodes2: &'a [NodeId],
    colors1: &'a [u32],
    colors2: &'a [u32],
    order: &'a [usize],
}

impl Search<'_> {
    fn backtrack(&self, depth: usize, mapping: &mut Vec<Option<NodeId>>, used: &mut Vec<bool>) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let i = self.order[depth];
        let v = self.nodes1[i];
        'candidates: for (j, &w) in self.nodes2.iter().enumerate() {
            if used[j] || self.colors2[j] != self.colors1[i] {
                continue;
            }
            // Every already-mapped node must relate to w exactly as it
            // relates to v.
            for (k, &u) in self.nodes1.iter().enumerate() {
                if let Some(mu) = mapping[k] {
                    if self.g1.has_edge(v, u) != self.g2.has_edge(w, mu) {
                        continue 'candidates;
                    }
                }
            }
            mapping[i] = Some(w);
            used[j] = true;
            if self.backtrack(depth + 1, mapping, used) {
                return true;
            }
            mapping[i] = None;
            used[j] = false;
        }
        false
    }
}
