#![allow(dead_code)] // each test binary uses its own subset

//! Independent oracles used by the property suites. Each is a deliberately
//! naive reimplementation that shares no code with the library paths it
//! checks.

use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use spine_core::{Cycle, Graph, NodeId, NodeSet};

/// All-pairs shortest paths by Floyd–Warshall over the adjacency matrix.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.universe();
    let mut d = vec![vec![None; n]; n];
    for v in g.nodes() {
        d[v.index()][v.index()] = Some(0);
    }
    for (u, v) in g.edges() {
        d[u.index()][v.index()] = Some(1);
        d[v.index()][u.index()] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Every chordless cycle of length in `[min_k, max_k]`, found by testing
/// each vertex subset for inducing a single cycle (all inner degrees 2 and
/// connected). Exponential; keep `n ≤ 16`.
pub fn chordless_cycles_by_subsets(g: &Graph, min_k: usize, max_k: usize) -> Vec<Cycle> {
    let nodes: Vec<NodeId> = g.nodes().collect();
    let n = nodes.len();
    assert!(n <= 16, "subset oracle is exponential");
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < min_k || size > max_k {
            continue;
        }
        let subset: Vec<NodeId> = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| nodes[i]).collect();
        if let Some(cycle) = induced_cycle(g, &subset) {
            out.push(cycle);
        }
    }
    out.sort();
    out
}

/// If the subset induces exactly one cycle, return it (canonical).
fn induced_cycle(g: &Graph, subset: &[NodeId]) -> Option<Cycle> {
    let members = NodeSet::from_iter(g.universe(), subset.iter().copied());
    let degree_two = subset
        .iter()
        .all(|&v| g.neighbors(v).intersection(&members).len() == 2);
    if !degree_two {
        return None;
    }
    // Walk the cycle from the first vertex; it must close after visiting
    // every subset member.
    let mut walk = vec![subset[0]];
    let mut prev = None;
    loop {
        let here = *walk.last().unwrap();
        let next = g
            .neighbors(here)
            .intersection(&members)
            .iter()
            .find(|&w| Some(w) != prev)?;
        if next == subset[0] {
            break;
        }
        if walk.contains(&next) {
            return None;
        }
        prev = Some(here);
        walk.push(next);
    }
    if walk.len() != subset.len() {
        return None; // two disjoint cycles in the subset
    }
    Some(Cycle::in_graph(g, &walk).expect("walk is a cycle"))
}

/// All shortest `s → t` paths, discovered by DFS over the BFS distance
/// labeling.
pub fn all_shortest_paths(g: &Graph, s: NodeId, t: NodeId) -> Vec<Vec<NodeId>> {
    let dist = g.bfs_distances(s);
    let Some(dt) = dist[t.index()] else {
        return Vec::new();
    };
    let mut paths = Vec::new();
    let mut stack = vec![vec![t]];
    while let Some(path) = stack.pop() {
        let head = *path.last().unwrap();
        if head == s {
            let mut forward = path.clone();
            forward.reverse();
            paths.push(forward);
            continue;
        }
        let dh = dist[head.index()].unwrap();
        for w in g.neighbors(head) {
            if dist[w.index()] == Some(dh - 1) {
                let mut next = path.clone();
                next.push(w);
                stack.push(next);
            }
        }
    }
    debug_assert!(paths.iter().all(|p| p.len() as u32 == dt + 1));
    paths
}

/// Raw and fractional betweenness by explicit enumeration of every shortest
/// path. `include_endpoints` matches the toggle on the library side.
pub fn naive_betweenness(g: &Graph, include_endpoints: bool) -> (Vec<u128>, Vec<BigRational>) {
    let n = g.universe();
    let mut raw = vec![0u128; n];
    let mut frac = vec![BigRational::zero(); n];
    let nodes: Vec<NodeId> = g.nodes().collect();
    for (i, &s) in nodes.iter().enumerate() {
        for &t in &nodes[i + 1..] {
            let paths = all_shortest_paths(g, s, t);
            if paths.is_empty() {
                continue;
            }
            let count = BigRational::from_integer(num_bigint::BigInt::from(paths.len()));
            for path in &paths {
                for &y in &path[1..path.len() - 1] {
                    raw[y.index()] += 1;
                    frac[y.index()] += BigRational::from_integer(1.into()) / &count;
                }
                if include_endpoints {
                    raw[s.index()] += 1;
                    raw[t.index()] += 1;
                }
            }
        }
    }
    (raw, frac)
}

/// Isomorphism by trying every bijection. `n ≤ 8`.
pub fn isomorphic_by_permutations(g1: &Graph, g2: &Graph) -> bool {
    let a: Vec<NodeId> = g1.nodes().collect();
    let b: Vec<NodeId> = g2.nodes().collect();
    if a.len() != b.len() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    assert!(a.len() <= 8, "permutation oracle is factorial");
    let mut perm: Vec<usize> = (0..b.len()).collect();
    permute(&mut perm, 0, &mut |p| {
        a.iter().enumerate().all(|(i, &u)| {
            a.iter()
                .enumerate()
                .all(|(j, &v)| g1.has_edge(u, v) == g2.has_edge(b[p[i]], b[p[j]]))
        })
    })
}

fn permute(perm: &mut Vec<usize>, k: usize, check: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == perm.len() {
        return check(perm);
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        if permute(perm, k + 1, check) {
            perm.swap(k, i);
            return true;
        }
        perm.swap(k, i);
    }
    false
}

/// Random graph strategy: `n` nodes and index pairs folded into range.
pub fn arb_graph(max_n: usize, max_edges: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, proptest::collection::vec((0..max_n, 0..max_n), 0..=max_edges)).prop_map(
        move |(n, pairs)| {
            let edges: Vec<(usize, usize)> = pairs
                .into_iter()
                .map(|(u, v)| (u % n, v % n))
                .filter(|(u, v)| u != v)
                .collect();
            Graph::from_edges(n, &edges).expect("valid edges")
        },
    )
}

/// Subset of the active nodes of `g` driven by a bitmask.
pub fn subset_from_mask(g: &Graph, mask: u64) -> NodeSet {
    let mut set = NodeSet::empty(g.universe());
    for (i, v) in g.nodes().enumerate() {
        if i < 64 && mask >> i & 1 == 1 {
            set.insert(v);
        }
    }
    set
}
