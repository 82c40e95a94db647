//! Graph generators for tests and reduction experiments.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, NodeId};

/// Cycle `C_n`: `0–1–…–(n-1)–0`. Requires `n ≥ 3`.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 nodes");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Path `P_n`: `0–1–…–(n-1)`.
pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Complete graph `K_n`.
pub fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Star `K_{1,k}`: hub 0 with `k` leaves.
pub fn star_graph(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::from_edges(leaves + 1, &edges).unwrap()
}

/// The Petersen graph: outer 5-cycle 0‥4, inner pentagram 5‥9, spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &edges).unwrap()
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// `G(n, m)`: exactly `m` distinct edges, sampled uniformly.
pub fn gnm<R: Rng>(rng: &mut R, n: usize, m: usize) -> Graph {
    assert!(m <= n * (n - 1) / 2, "too many edges requested");
    let mut g = Graph::new(n);
    let mut added = 0;
    while added < m {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u == v {
            continue;
        }
        let (u, v) = (NodeId::new(u), NodeId::new(v));
        if g.adj_mut()[u.index()].insert(v) {
            g.adj_mut()[v.index()].insert(u);
            added += 1;
        }
    }
    g.set_edge_count(m);
    g
}

/// Connected random graph: a random recursive tree plus `G(n, p)` extras.
pub fn connected_gnp<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random connected chordal graph on `n` nodes, assembled as a tree of
/// cliques: each new clique is glued onto a random clique subset of an
/// existing one, which keeps every cycle of length ≥ 4 chorded.
pub fn chordal_tree_of_cliques<R: Rng>(rng: &mut R, n: usize, max_clique: usize) -> Graph {
    assert!(n >= 1);
    let max_clique = max_clique.max(2);
    let mut edges = Vec::new();
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    let first = rng.random_range(1..=max_clique.min(n));
    let mut next = first;
    cliques.push((0..first).collect());
    while next < n {
        let host = &cliques[rng.random_range(0..cliques.len())];
        let sep_size = rng.random_range(1..=host.len());
        let mut sep = host.clone();
        sep.shuffle(rng);
        sep.truncate(sep_size);
        let fresh = rng.random_range(1..=max_clique.min(n - next));
        let mut clique = sep;
        clique.extend(next..next + fresh);
        next += fresh;
        cliques.push(clique);
    }
    for clique in &cliques {
        for i in 0..clique.len() {
            for j in i + 1..clique.len() {
                edges.push((clique[i], clique[j]));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Worst-case reduction input: a `C_4` cap `{0,1,2,3}` with a pendant tail
/// `3–4–…–(n-1)`. Under the default ascending visit order, every sweep
/// removes exactly one tail node, so the sweep count grows linearly with `n`
/// (n − 3 sweeps including the final quiet one). Requires `n ≥ 5`.
pub fn subsumption_chain(n: usize) -> Graph {
    assert!(n >= 5);
    let mut edges = alloc::vec![(0, 1), (1, 2), (2, 3), (3, 0)];
    for v in 4..n {
        edges.push((v - 1, v));
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// A `cycle_len`-cycle with pendant paths attached to it. Each entry of
/// `pendants` is `(cycle position, path length)`; the whole pendant forest is
/// chordal, so reduction collapses it back into the cycle.
pub fn cycle_with_pendant_trees(cycle_len: usize, pendants: &[(usize, usize)]) -> Graph {
    assert!(cycle_len >= 3);
    let extra: usize = pendants.iter().map(|&(_, len)| len).sum();
    let n = cycle_len + extra;
    let mut edges: Vec<_> = (0..cycle_len).map(|i| (i, (i + 1) % cycle_len)).collect();
    let mut next = cycle_len;
    for &(pos, len) in pendants {
        assert!(pos < cycle_len, "pendant position outside the cycle");
        let mut attach = pos;
        for _ in 0..len {
            edges.push((attach, next));
            attach = next;
            next += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Deterministic pseudo-random permutation of the active nodes, for
/// visit-order experiments. The same seed always yields the same order.
pub fn seeded_visit_order(g: &Graph, seed: u64) -> Vec<NodeId> {
    let mut order: Vec<NodeId> = g.nodes().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    order.shuffle(&mut rng);
    order
}
