//! Simple undirected graphs and the neighborhood-closure primitives.
//!
//! A [`Graph`] keeps one adjacency [`NodeSet`] per node of a fixed universe,
//! plus an `active` mask. Derived graphs (induced subgraphs, spines) keep the
//! original universe and simply mask nodes out, so a [`NodeId`] issued at
//! construction stays valid in every downstream result.
//!
//! The three set operators everything else is built on:
//!
//! * neighborhood `Y.η` — nodes outside `Y` adjacent to some node of `Y`;
//! * region `Y.ρ = Y ∪ Y.η` — the set `Y` dominates;
//! * closure `Y.φ = Y ∪ { z ∈ Y.η : z.η ⊆ Y.ρ }` — an expansive, monotone,
//!   idempotent operator.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::set::NodeSet;

/// Dense index of a node within a graph's universe.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct NodeId(u32);

impl NodeId {
    pub fn new(index: usize) -> Self {
        NodeId(u32::try_from(index).expect("node index exceeds u32"))
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    /// Self-loops are rejected: the closure operators presume simple
    /// adjacency.
    SelfLoop { node: String },
    NodeOutOfRange { index: usize, universe: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SelfLoop { node } => write!(f, "self-loop on node '{node}'"),
            GraphError::NodeOutOfRange { index, universe } => {
                write!(f, "node index {index} outside universe [0, {universe})")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// An immutable simple undirected graph.
///
/// Invariants: adjacency is symmetric and irreflexive; inactive nodes have
/// empty adjacency and appear in nobody's adjacency; `edge_count` is half the
/// total adjacency cardinality.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<NodeSet>,
    active: NodeSet,
    labels: Vec<String>,
    edge_count: usize,
}

impl Graph {
    /// `n` isolated active nodes labeled `"0"‥"n-1"`.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: (0..n).map(|_| NodeSet::empty(n)).collect(),
            active: NodeSet::full(n),
            labels: (0..n).map(|i| i.to_string()).collect(),
            edge_count: 0,
        }
    }

    /// Builds a graph on `n` nodes from index pairs. Duplicate edges collapse
    /// silently; self-loops and out-of-range endpoints are errors.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::NodeOutOfRange { index: x, universe: n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { node: u.to_string() });
            }
            let (u, v) = (NodeId::new(u), NodeId::new(v));
            if g.adj[u.index()].insert(v) {
                g.adj[v.index()].insert(u);
                g.edge_count += 1;
            }
        }
        Ok(g)
    }

    /// Size of the node universe (indices ever issued), masked or not.
    pub fn universe(&self) -> usize {
        self.adj.len()
    }

    /// Number of active (unmasked) nodes.
    pub fn node_count(&self) -> usize {
        self.active.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_active(&self, v: NodeId) -> bool {
        self.active.contains(v)
    }

    /// Active nodes, ascending.
    pub fn nodes(&self) -> crate::set::Iter<'_> {
        self.active.iter()
    }

    pub fn active_set(&self) -> &NodeSet {
        &self.active
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.adj[u.index()].contains(v)
    }

    /// `{v}.η` as a borrowed set.
    pub fn neighbors(&self, v: NodeId) -> &NodeSet {
        &self.adj[v.index()]
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.adj[v.index()].len()
    }

    pub fn label(&self, v: NodeId) -> &str {
        &self.labels[v.index()]
    }

    /// Node id carrying the given label, if any.
    pub fn find_label(&self, label: &str) -> Option<NodeId> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(NodeId::new)
            .filter(|&v| self.is_active(v))
    }

    /// Edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.nodes().flat_map(move |u| {
            self.adj[u.index()]
                .iter()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// `Y.η`: nodes outside `y` adjacent to at least one node of `y`.
    pub fn neighborhood(&self, y: &NodeSet) -> NodeSet {
        let mut out = NodeSet::empty(self.universe());
        for v in y {
            out.union_with(&self.adj[v.index()]);
        }
        out.difference_with(y);
        out
    }

    /// `Y.ρ = Y ∪ Y.η`: the region dominated by `y`.
    pub fn region(&self, y: &NodeSet) -> NodeSet {
        let mut out = self.neighborhood(y);
        out.union_with(y);
        out
    }

    /// `Y.φ = Y ∪ { z ∈ Y.η : z.η ⊆ Y.ρ }`: the neighborhood closure.
    pub fn closure(&self, y: &NodeSet) -> NodeSet {
        let eta = self.neighborhood(y);
        let rho = eta.union(y);
        let mut out = y.clone();
        for z in &eta {
            if self.adj[z.index()].is_subset(&rho) {
                out.insert(z);
            }
        }
        out
    }

    /// Hop distances from `s`; `None` marks unreachable (or inactive) nodes.
    pub fn bfs_distances(&self, s: NodeId) -> Vec<Option<u32>> {
        assert!(self.is_active(s), "BFS source {s} is not an active node");
        let mut dist = alloc::vec![None; self.universe()];
        dist[s.index()] = Some(0);
        let mut queue = alloc::collections::VecDeque::new();
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            let next = dist[v.index()].unwrap() + 1;
            for w in &self.adj[v.index()] {
                if dist[w.index()].is_none() {
                    dist[w.index()] = Some(next);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// The subgraph on `keep ∩ active` with all and only the edges of `self`
    /// between kept nodes. Universe and labels are preserved.
    pub fn induced_subgraph(&self, keep: &NodeSet) -> Graph {
        let active = keep.intersection(&self.active);
        let mut adj: Vec<NodeSet> = Vec::with_capacity(self.universe());
        let mut edge_count = 0;
        for i in 0..self.universe() {
            let v = NodeId::new(i);
            if active.contains(v) {
                let masked = self.adj[i].intersection(&active);
                edge_count += masked.len();
                adj.push(masked);
            } else {
                adj.push(NodeSet::empty(self.universe()));
            }
        }
        Graph {
            adj,
            active,
            labels: self.labels.clone(),
            edge_count: edge_count / 2,
        }
    }

    /// Connected components of the active nodes, ordered by smallest member.
    pub fn components(&self) -> Vec<NodeSet> {
        let mut seen = NodeSet::empty(self.universe());
        let mut out = Vec::new();
        for v in self.nodes() {
            if seen.contains(v) {
                continue;
            }
            let mut comp = NodeSet::empty(self.universe());
            let mut stack = alloc::vec![v];
            comp.insert(v);
            while let Some(x) = stack.pop() {
                for w in &self.adj[x.index()] {
                    if comp.insert(w) {
                        stack.push(w);
                    }
                }
            }
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    pub(crate) fn adj_mut(&mut self) -> &mut Vec<NodeSet> {
        &mut self.adj
    }

    pub(crate) fn set_active(&mut self, active: NodeSet) {
        self.active = active;
    }

    pub(crate) fn set_edge_count(&mut self, e: usize) {
        self.edge_count = e;
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, e={}, universe={})",
            self.node_count(),
            self.edge_count(),
            self.universe()
        )
    }
}

/// Incremental construction with label interning.
///
/// Labels map to dense [`NodeId`]s in first-appearance order. `add_edge`
/// reports whether the edge is new, so callers can count collapsed
/// duplicates.
#[derive(Default)]
pub struct GraphBuilder {
    labels: Vec<String>,
    index: BTreeMap<String, u32>,
    edges: Vec<(u32, u32)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Interns `label`, declaring the node if it is new.
    pub fn node(&mut self, label: &str) -> NodeId {
        if let Some(&i) = self.index.get(label) {
            return NodeId(i);
        }
        let i = u32::try_from(self.labels.len()).expect("too many nodes");
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), i);
        NodeId(i)
    }

    /// Adds an undirected edge by label; returns `false` for a duplicate.
    pub fn edge(&mut self, a: &str, b: &str) -> Result<bool, GraphError> {
        if a == b {
            return Err(GraphError::SelfLoop { node: a.to_string() });
        }
        let (u, v) = (self.node(a).0, self.node(b).0);
        let key = (u.min(v), u.max(v));
        if self.edges.contains(&key) {
            return Ok(false);
        }
        self.edges.push(key);
        Ok(true)
    }

    pub fn build(self) -> Graph {
        let n = self.labels.len();
        let mut g = Graph::new(n);
        g.labels = self.labels;
        for (u, v) in self.edges {
            let (u, v) = (NodeId(u), NodeId(v));
            if g.adj[u.index()].insert(v) {
                g.adj[v.index()].insert(u);
                g.edge_count += 1;
            }
        }
        g
    }
}
