//! Chordless cycle enumeration and the cycle-distribution signature.
//!
//! A cycle is chordless when no edge joins two of its non-consecutive
//! vertices. Enumeration grows induced paths from each anchor edge `(u, v)`
//! with `u` the minimum vertex of the eventual cycle: a candidate extension
//! must be adjacent to the path head only — adjacency to the anchor closes a
//! cycle, adjacency to any interior vertex would create a chord and prunes
//! the branch. Every chordless cycle within the length bounds is produced
//! exactly once, already in canonical form, because the anchor fixes the
//! starting vertex and cycles are emitted only in the direction whose second
//! vertex is the smaller neighbor of `u`.
//!
//! Cycle counts can grow exponentially with the length bound, so `max_k` is
//! mandatory and [`Signature`] records how far the search went.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;

use crate::graph::{Graph, NodeId};
use crate::set::NodeSet;

/// A simple cycle in canonical form: the minimum vertex first, continuing in
/// the direction whose second vertex is smaller. Two `Cycle` values are equal
/// iff they denote the same vertex cycle, whatever rotation or reflection
/// they were built from.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    verts: Vec<NodeId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleError {
    TooShort { len: usize },
    ForeignVertex { vertex: NodeId },
    RepeatedVertex { vertex: NodeId },
    MissingEdge { from: NodeId, to: NodeId },
}

impl fmt::Display for CycleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleError::TooShort { len } => write!(f, "a cycle needs at least 3 vertices, got {len}"),
            CycleError::ForeignVertex { vertex } => {
                write!(f, "vertex {vertex} is not a node of the graph")
            }
            CycleError::RepeatedVertex { vertex } => write!(f, "vertex {vertex} repeats"),
            CycleError::MissingEdge { from, to } => {
                write!(f, "consecutive vertices {from} and {to} are not adjacent")
            }
        }
    }
}

impl core::error::Error for CycleError {}

impl Cycle {
    /// Validates `verts` as a simple cycle of `g` (consecutive vertices and
    /// last→first adjacent, no repeats) and canonicalizes it.
    pub fn in_graph(g: &Graph, verts: &[NodeId]) -> Result<Cycle, CycleError> {
        if verts.len() < 3 {
            return Err(CycleError::TooShort { len: verts.len() });
        }
        let mut seen = NodeSet::empty(g.universe());
        for &v in verts {
            if v.index() >= g.universe() || !g.is_active(v) {
                return Err(CycleError::ForeignVertex { vertex: v });
            }
            if !seen.insert(v) {
                return Err(CycleError::RepeatedVertex { vertex: v });
            }
        }
        for i in 0..verts.len() {
            let (a, b) = (verts[i], verts[(i + 1) % verts.len()]);
            if !g.has_edge(a, b) {
                return Err(CycleError::MissingEdge { from: a, to: b });
            }
        }
        Ok(Cycle::canonicalize(verts))
    }

    fn canonicalize(verts: &[NodeId]) -> Cycle {
        let k = verts.len();
        let start = (0..k).min_by_key(|&i| verts[i]).unwrap();
        let fwd: Vec<NodeId> = (0..k).map(|i| verts[(start + i) % k]).collect();
        let bwd: Vec<NodeId> = (0..k).map(|i| verts[(start + k - i) % k]).collect();
        Cycle {
            verts: if fwd <= bwd { fwd } else { bwd },
        }
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[NodeId] {
        &self.verts
    }

    pub fn contains(&self, v: NodeId) -> bool {
        self.verts.contains(&v)
    }

    /// Cycle edges as `(min, max)` pairs, in traversal order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        (0..self.verts.len()).map(move |i| {
            let a = self.verts[i];
            let b = self.verts[(i + 1) % self.verts.len()];
            (a.min(b), a.max(b))
        })
    }

    pub fn node_set(&self, universe: usize) -> NodeSet {
        NodeSet::from_iter(universe, self.verts.iter().copied())
    }
}

impl fmt::Debug for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.verts.iter().map(|v| v.index())).finish()
    }
}

/// True iff no edge of `g` joins two non-consecutive vertices of `c`.
/// `c` must be a valid cycle of `g`.
pub fn is_chordless(g: &Graph, c: &Cycle) -> bool {
    debug_assert!(Cycle::in_graph(g, c.vertices()).is_ok(), "cycle not in graph");
    let k = c.verts.len();
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if !consecutive && g.has_edge(c.verts[i], c.verts[j]) {
                return false;
            }
        }
    }
    true
}

/// All chordless cycles of `g` with `min_k ≤ length ≤ max_k`, sorted by
/// canonical form. Requires `3 ≤ min_k ≤ max_k`.
pub fn chordless_cycles(g: &Graph, min_k: usize, max_k: usize) -> Vec<Cycle> {
    assert!(
        (3..=max_k).contains(&min_k),
        "cycle length bounds must satisfy 3 ≤ min_k ≤ max_k"
    );
    let mut out = Vec::new();
    for u in g.nodes() {
        for v in g.neighbors(u).iter().filter(|&v| v > u) {
            chordless_cycles_from_anchor_into(g, u, v, min_k, max_k, &mut out);
        }
    }
    out.sort_unstable();
    out
}

/// Chordless cycles whose minimum vertex is `u` and whose canonical second
/// vertex is `v`. The union over all anchor edges `(u, v)`, `u < v`, yields
/// every chordless cycle exactly once, so anchors may be fanned out across
/// workers and merged.
pub fn chordless_cycles_from_anchor(
    g: &Graph,
    u: NodeId,
    v: NodeId,
    min_k: usize,
    max_k: usize,
) -> Vec<Cycle> {
    assert!(
        (3..=max_k).contains(&min_k),
        "cycle length bounds must satisfy 3 ≤ min_k ≤ max_k"
    );
    assert!(u < v && g.has_edge(u, v), "anchor must be an edge (u, v) with u < v");
    let mut out = Vec::new();
    chordless_cycles_from_anchor_into(g, u, v, min_k, max_k, &mut out);
    out
}

fn chordless_cycles_from_anchor_into(
    g: &Graph,
    u: NodeId,
    v: NodeId,
    min_k: usize,
    max_k: usize,
    out: &mut Vec<Cycle>,
) {
    let mut path = alloc::vec![u, v];
    let mut on_path = NodeSet::empty(g.universe());
    on_path.insert(u);
    on_path.insert(v);
    // Neighbors of interior path vertices; extensions must avoid them to
    // keep the path induced.
    let banned = NodeSet::empty(g.universe());
    extend(g, u, &mut path, &mut on_path, &banned, min_k, max_k, out);
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    u: NodeId,
    path: &mut Vec<NodeId>,
    on_path: &mut NodeSet,
    banned: &NodeSet,
    min_k: usize,
    max_k: usize,
    out: &mut Vec<Cycle>,
) {
    let head = *path.last().unwrap();
    let mut candidates = g.neighbors(head).difference(banned);
    candidates.difference_with(on_path);
    for w in &candidates {
        if w <= u {
            continue;
        }
        if g.has_edge(u, w) {
            // Closing edge: w touches only the head and the anchor, so the
            // cycle is chordless. Emit in the canonical direction only.
            let k = path.len() + 1;
            if k >= min_k && k <= max_k && path[1] < w {
                let mut verts = path.clone();
                verts.push(w);
                out.push(Cycle { verts });
            }
        } else if path.len() + 1 < max_k {
            let mut next_banned = banned.clone();
            next_banned.union_with(g.neighbors(head));
            path.push(w);
            on_path.insert(w);
            extend(g, u, path, on_path, &next_banned, min_k, max_k, out);
            on_path.remove(w);
            path.pop();
        }
    }
}

/// Histogram of chordless cycle counts `k ↦ n_k`, with the searched bound and
/// the connective complexity under the searched graph's own node count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    pub counts: BTreeMap<usize, u64>,
    pub max_k_searched: usize,
    /// `Σ k·n_k / node_count`; `None` for an empty graph.
    pub cc: Option<Ratio<u64>>,
}

/// Counts chordless k-cycles for `3 ≤ k ≤ max_k`.
pub fn signature(g: &Graph, max_k: usize) -> Signature {
    let mut counts = BTreeMap::new();
    for c in chordless_cycles(g, 3, max_k) {
        *counts.entry(c.len()).or_insert(0u64) += 1;
    }
    let mut sig = Signature {
        counts,
        max_k_searched: max_k,
        cc: None,
    };
    sig.cc = connective_complexity(&sig, g.node_count());
    sig
}

/// `CC = Σ_k k·n_k / node_count` as an exact rational; `None` when
/// `node_count` is zero.
pub fn connective_complexity(sig: &Signature, node_count: usize) -> Option<Ratio<u64>> {
    if node_count == 0 {
        return None;
    }
    let weighted: u64 = sig.counts.iter().map(|(&k, &n)| k as u64 * n).sum();
    Some(Ratio::new(weighted, node_count as u64))
}

/// The cycles of maximum length among `cycles` ("major cycles"), sorted.
pub fn longest_cycles(cycles: &[Cycle]) -> Vec<Cycle> {
    let Some(max) = cycles.iter().map(Cycle::len).max() else {
        return Vec::new();
    };
    let mut out: Vec<Cycle> = cycles.iter().filter(|c| c.len() == max).cloned().collect();
    out.sort_unstable();
    out
}

/// Nodes and edges common to every input cycle. Intended for the
/// maximum-length cycles of a signature; panics on empty input.
pub fn longest_cycle_intersection(
    g: &Graph,
    cycles: &[Cycle],
) -> (NodeSet, Vec<(NodeId, NodeId)>) {
    assert!(!cycles.is_empty(), "intersection of no cycles is undefined");
    let mut nodes = cycles[0].node_set(g.universe());
    let mut edges: Vec<(NodeId, NodeId)> = cycles[0].edges().collect();
    for c in &cycles[1..] {
        nodes.intersect_with(&c.node_set(g.universe()));
        let cur: Vec<(NodeId, NodeId)> = c.edges().collect();
        edges.retain(|e| cur.contains(e));
    }
    edges.sort_unstable();
    (nodes, edges)
}
