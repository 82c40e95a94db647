//! IO companion to `spine-core`: edge-list parsing, DOT export, the JSON
//! analysis report, and the pipeline driving the `spine` binary.

pub mod dot;
pub mod edgelist;
pub mod pipeline;
pub mod report;

use spine_core::{chordless_cycles, chordless_cycles_from_anchor, Cycle, Graph, NodeId};

/// Chordless-cycle enumeration fanned out over anchor edges across
/// `threads` OS threads. The merged, sorted result is identical to the
/// single-threaded enumeration; `threads ≤ 1` runs inline.
pub fn parallel_chordless_cycles(
    g: &Graph,
    min_k: usize,
    max_k: usize,
    threads: usize,
) -> Vec<Cycle> {
    if threads <= 1 {
        return chordless_cycles(g, min_k, max_k);
    }
    let anchors: Vec<(NodeId, NodeId)> = g
        .nodes()
        .flat_map(|u| g.neighbors(u).iter().filter(move |&v| v > u).map(move |v| (u, v)))
        .collect();
    let chunks: Vec<Vec<(NodeId, NodeId)>> = (0..threads)
        .map(|t| anchors.iter().copied().skip(t).step_by(threads).collect())
        .collect();
    let mut cycles: Vec<Cycle> = std::thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .iter()
            .map(|chunk| {
                scope.spawn(move || {
                    let mut local = Vec::new();
                    for &(u, v) in chunk {
                        local.extend(chordless_cycles_from_anchor(g, u, v, min_k, max_k));
                    }
                    local
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("enumeration worker panicked"))
            .collect()
    });
    cycles.sort_unstable();
    cycles
}
