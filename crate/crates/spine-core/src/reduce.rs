//! Reduction of a network to its irreducible spine.
//!
//! A node `z` is subsumed by a neighbor `y` when `z.η ⊆ y.ρ`; equivalently,
//! `{z}.φ ⊆ {y}.φ`. Removing a subsumed node never lengthens a shortest path
//! between the remaining nodes, so the sweep below deletes such nodes until
//! none are left. The result — the irreducible spine — is unique up to
//! isomorphism regardless of the order in which nodes are visited.
//!
//! The sweep visits each live node `y` in order, scans its neighbors `z`,
//! and on success deletes `z` (edges first) before continuing. Sweeps repeat
//! until one completes without an event; that final quiet sweep is included
//! in `iterations`. Bookkeeping per survivor:
//!
//! * `τ(y)` — how many original nodes `y` absorbed, itself included; the
//!   victim's count is folded in at each event, so `Σ τ = n`;
//! * `β(y)` — the absorbed node set (`y ∈ β(y)`, `τ(y) = |β(y)|`); the β sets
//!   partition the original nodes;
//! * `edges_absorbed(y)` — edges deleted on behalf of `y`'s community; these
//!   plus the spine's edges account for every original edge.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, NodeId};
use crate::set::NodeSet;

/// One subsumption: `victim` was deleted in favor of `survivor` during the
/// given 1-based sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubsumptionEvent {
    pub survivor: NodeId,
    pub victim: NodeId,
    pub iteration: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReduceError {
    /// The supplied visit order is not a permutation of the active nodes.
    InvalidOrder,
}

impl fmt::Display for ReduceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReduceError::InvalidOrder => {
                write!(f, "visit order is not a permutation of the active nodes")
            }
        }
    }
}

impl core::error::Error for ReduceError {}

/// Outcome of [`reduce`]: the spine plus per-survivor bookkeeping.
///
/// All node ids refer to the original graph's universe; the spine masks
/// victims rather than reindexing.
#[derive(Clone)]
pub struct ReductionResult {
    spine: Graph,
    survivors: NodeSet,
    tau: Vec<u64>,
    beta: Vec<NodeSet>,
    edges_absorbed: Vec<u64>,
    trace: Vec<SubsumptionEvent>,
    iterations: u32,
}

impl ReductionResult {
    /// The irreducible spine, induced on the survivors.
    pub fn spine(&self) -> &Graph {
        &self.spine
    }

    pub fn survivors(&self) -> &NodeSet {
        &self.survivors
    }

    pub fn is_survivor(&self, v: NodeId) -> bool {
        self.survivors.contains(v)
    }

    /// `τ(y)`: nodes absorbed into survivor `y`, itself included.
    pub fn tau(&self, y: NodeId) -> u64 {
        assert!(self.is_survivor(y), "τ is defined for survivors only");
        self.tau[y.index()]
    }

    /// `β(y)`: the original nodes absorbed into survivor `y`.
    pub fn beta(&self, y: NodeId) -> &NodeSet {
        assert!(self.is_survivor(y), "β is defined for survivors only");
        &self.beta[y.index()]
    }

    /// Edges deleted while building `y`'s community.
    pub fn edges_absorbed(&self, y: NodeId) -> u64 {
        assert!(self.is_survivor(y), "edge counts are kept for survivors only");
        self.edges_absorbed[y.index()]
    }

    /// `(survivor, τ)` pairs, ascending by node id.
    pub fn tau_table(&self) -> impl Iterator<Item = (NodeId, u64)> + '_ {
        self.survivors.iter().map(move |y| (y, self.tau[y.index()]))
    }

    pub fn trace(&self) -> &[SubsumptionEvent] {
        &self.trace
    }

    /// Number of sweeps performed, including the final one with no events.
    pub fn iterations(&self) -> u32 {
        self.iterations
    }

    #[cfg(test)]
    pub(crate) fn synthetic(spine: Graph, tau: Vec<u64>) -> ReductionResult {
        let survivors = spine.active_set().clone();
        let universe = spine.universe();
        let beta = (0..universe)
            .map(|i| NodeSet::singleton(universe, NodeId::new(i)))
            .collect();
        ReductionResult {
            spine,
            survivors,
            tau,
            beta,
            edges_absorbed: vec![0; universe],
            trace: Vec::new(),
            iterations: 1,
        }
    }
}

impl fmt::Debug for ReductionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ReductionResult(spine={} nodes, {} events, {} iterations)",
            self.survivors.len(),
            self.trace.len(),
            self.iterations
        )
    }
}

/// Does `z.η ⊆ y.ρ` hold with `z` adjacent to `y`? Word-parallel test, no
/// allocation: the only member of `z.η` allowed outside `y.η` is `y` itself.
#[inline]
fn dominates(y_adj: &NodeSet, z_adj: &NodeSet, y: NodeId, z: NodeId) -> bool {
    if !y_adj.contains(z) {
        return false;
    }
    let y_word = y.index() / 64;
    let y_bit = 1u64 << (y.index() % 64);
    z_adj
        .words()
        .iter()
        .zip(y_adj.words())
        .enumerate()
        .all(|(i, (zw, yw))| {
            let allowed = if i == y_word { y_bit } else { 0 };
            zw & !yw & !allowed == 0
        })
}

/// Is `z` subsumed by `y` (`{z}.φ ⊆ {y}.φ`)? Operationally: `z ∈ y.η` and
/// `z.η ⊆ y.ρ`. Panics if `y = z`.
pub fn subsumes(g: &Graph, y: NodeId, z: NodeId) -> bool {
    assert!(y != z, "subsumption is defined for distinct nodes");
    dominates(g.neighbors(y), g.neighbors(z), y, z)
}

/// True iff every singleton `{y}` is closed, i.e. no node subsumes another.
pub fn is_irreducible(g: &Graph) -> bool {
    g.nodes().all(|y| {
        g.neighbors(y)
            .iter()
            .all(|z| !dominates(g.neighbors(y), g.neighbors(z), y, z))
    })
}

/// Reduces `g` with the default ascending visit order.
pub fn reduce(g: &Graph) -> ReductionResult {
    let order: Vec<NodeId> = g.nodes().collect();
    reduce_with_order(g, &order).unwrap()
}

/// Reduces `g`, visiting candidate subsumers in the given order. The order
/// must be a permutation of the active nodes. Deterministic for a fixed
/// `(g, order)` pair; different orders can pick different survivors, but the
/// resulting spines are always isomorphic.
pub fn reduce_with_order(g: &Graph, order: &[NodeId]) -> Result<ReductionResult, ReduceError> {
    let universe = g.universe();
    let mut seen = NodeSet::empty(universe);
    for &v in order {
        if v.index() >= universe || !g.is_active(v) || !seen.insert(v) {
            return Err(ReduceError::InvalidOrder);
        }
    }
    if seen != *g.active_set() {
        return Err(ReduceError::InvalidOrder);
    }

    let mut live = g.clone();
    let mut alive = g.active_set().clone();
    let mut tau = vec![1u64; universe];
    let mut edges_absorbed = vec![0u64; universe];
    let mut beta: Vec<NodeSet> = (0..universe)
        .map(|i| NodeSet::singleton(universe, NodeId::new(i)))
        .collect();
    let mut trace = Vec::new();
    let mut iterations = 0u32;

    loop {
        iterations += 1;
        let mut removed_any = false;
        for &y in order {
            if !alive.contains(y) {
                continue;
            }
            // Snapshot y's neighbors; victims removed mid-scan are skipped
            // via the alive mask, and every test runs against live sets.
            let snapshot: Vec<NodeId> = live.neighbors(y).iter().collect();
            for z in snapshot {
                if !alive.contains(z) {
                    continue;
                }
                if !dominates(live.neighbors(y), live.neighbors(z), y, z) {
                    continue;
                }
                // z is subsumed by y: delete z's edges, then z itself.
                let z_neighbors: Vec<NodeId> = live.neighbors(z).iter().collect();
                edges_absorbed[y.index()] += z_neighbors.len() as u64;
                for x in z_neighbors {
                    live.adj_mut()[x.index()].remove(z);
                }
                live.adj_mut()[z.index()].clear();
                alive.remove(z);
                tau[y.index()] += tau[z.index()];
                edges_absorbed[y.index()] += edges_absorbed[z.index()];
                let victim_beta = core::mem::replace(&mut beta[z.index()], NodeSet::empty(0));
                beta[y.index()].union_with(&victim_beta);
                trace.push(SubsumptionEvent {
                    survivor: y,
                    victim: z,
                    iteration: iterations,
                });
                removed_any = true;
            }
        }
        if !removed_any {
            break;
        }
    }

    live.set_active(alive.clone());
    let spine_edges: usize = alive.iter().map(|v| live.neighbors(v).len()).sum();
    live.set_edge_count(spine_edges / 2);
    debug_assert!(is_irreducible(&live));

    // Victim slots keep their frozen τ but lose β; normalize the dead β
    // slots so the vector stays uniform.
    for (i, slot) in beta.iter_mut().enumerate() {
        if !alive.contains(NodeId::new(i)) {
            *slot = NodeSet::empty(universe);
        }
    }

    Ok(ReductionResult {
        spine: live,
        survivors: alive,
        tau,
        beta,
        edges_absorbed,
        trace,
        iterations,
    })
}
