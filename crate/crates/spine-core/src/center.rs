//! Centers, betweenness, and spine-based diameter estimates.
//!
//! Two notions of center:
//!
//! * the distance center `C_C` — nodes minimizing `δ(y) = Σ_s d(s, y)`;
//! * the betweenness center `C_B` — nodes maximizing the number of shortest
//!   paths passing through them.
//!
//! Betweenness comes in two variants. [`stress_betweenness`] is the raw
//! count of shortest `(s, t)` paths containing `y` (endpoints excluded by
//! default; unordered pairs), which is the convention the balance and
//! containment checks use. [`brandes_betweenness`] is the standard
//! pair-dependency variant, where each pair contributes the *fraction* of
//! its shortest paths through `y`; it is computed in exact rational
//! arithmetic so results can be compared without tolerance.
//!
//! Disconnected graphs are handled per component: distance sums only range
//! over a node's own component, and the center sets are the union of the
//! per-component centers.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::Zero;

use crate::graph::{Graph, NodeId};
use crate::reduce::ReductionResult;
use crate::set::NodeSet;

/// Breadth-first pass from `s`: hop distances, shortest-path counts, and the
/// visit order (non-decreasing distance).
fn bfs_counts(g: &Graph, s: NodeId) -> (Vec<Option<u32>>, Vec<u128>, Vec<NodeId>) {
    let mut dist = vec![None; g.universe()];
    let mut sigma = vec![0u128; g.universe()];
    let mut order = Vec::new();
    dist[s.index()] = Some(0);
    sigma[s.index()] = 1;
    let mut queue = alloc::collections::VecDeque::new();
    queue.push_back(s);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        let next = dist[v.index()].unwrap() + 1;
        for w in g.neighbors(v) {
            match dist[w.index()] {
                None => {
                    dist[w.index()] = Some(next);
                    sigma[w.index()] = sigma[v.index()];
                    queue.push_back(w);
                }
                Some(d) if d == next => {
                    sigma[w.index()] = sigma[w.index()]
                        .checked_add(sigma[v.index()])
                        .expect("shortest-path count overflow");
                }
                _ => {}
            }
        }
    }
    (dist, sigma, order)
}

/// `δ(y) = Σ_s d(s, y)` over `y`'s component; `None` for inactive slots.
pub fn distance_sums(g: &Graph) -> Vec<Option<u64>> {
    let mut sums = vec![None; g.universe()];
    for s in g.nodes() {
        let (dist, _, _) = bfs_counts(g, s);
        let total: u64 = dist.iter().flatten().map(|&d| d as u64).sum();
        sums[s.index()] = Some(total);
    }
    sums
}

/// Raw betweenness: for each `y`, the number of shortest paths — over
/// unordered pairs `{s, t}` — that contain `y`. With `include_endpoints`
/// paths also count toward their two end nodes.
pub fn stress_betweenness(g: &Graph, include_endpoints: bool) -> Vec<u128> {
    let mut doubled = vec![0u128; g.universe()];
    let mut endpoint = vec![0u128; g.universe()];
    let mut downstream = vec![0u128; g.universe()];
    for s in g.nodes() {
        let (dist, sigma, order) = bfs_counts(g, s);
        for &v in &order {
            downstream[v.index()] = 0;
        }
        // downstream(v) = Σ over t strictly below v in the shortest-path DAG
        // of the number of shortest v→t paths; every shortest s-t path
        // through v decomposes as (s→v) · (v→t), so v picks up
        // σ(v) · downstream(v) paths for this source.
        for &v in order.iter().rev() {
            let dv = dist[v.index()].unwrap();
            let mut total = 0u128;
            for w in g.neighbors(v) {
                if dist[w.index()] == Some(dv + 1) {
                    total = total
                        .checked_add(1 + downstream[w.index()])
                        .expect("path count overflow");
                }
            }
            downstream[v.index()] = total;
            if v != s {
                doubled[v.index()] += sigma[v.index()]
                    .checked_mul(total)
                    .expect("path count overflow");
                endpoint[v.index()] += sigma[v.index()];
            }
        }
    }
    let mut out = doubled;
    for x in &mut out {
        debug_assert!(*x % 2 == 0);
        *x /= 2;
    }
    if include_endpoints {
        for (o, e) in out.iter_mut().zip(endpoint) {
            *o += e;
        }
    }
    out
}

/// Fractional betweenness (pair dependencies) in exact rational arithmetic:
/// each unordered pair `{s, t}` contributes `σ_st(y) / σ_st` to `y`.
pub fn brandes_betweenness(g: &Graph) -> Vec<BigRational> {
    let mut bc = vec![BigRational::zero(); g.universe()];
    let mut delta = vec![BigRational::zero(); g.universe()];
    for s in g.nodes() {
        let (dist, sigma, order) = bfs_counts(g, s);
        for &v in &order {
            delta[v.index()] = BigRational::zero();
        }
        for &w in order.iter().rev() {
            let dw = dist[w.index()].unwrap();
            if dw > 0 {
                let coeff = (BigRational::from_integer(BigInt::from(1)) + &delta[w.index()])
                    / BigRational::from_integer(BigInt::from(sigma[w.index()]));
                for v in g.neighbors(w) {
                    if dist[v.index()] == Some(dw - 1) {
                        delta[v.index()] +=
                            BigRational::from_integer(BigInt::from(sigma[v.index()])) * &coeff;
                    }
                }
            }
            if w != s {
                bc[w.index()] += &delta[w.index()];
            }
        }
    }
    let two = BigRational::from_integer(BigInt::from(2));
    for x in &mut bc {
        *x /= &two;
    }
    bc
}

/// Distance sums, raw betweenness, and both center sets.
#[derive(Clone, Debug)]
pub struct CentralityReport {
    /// Per node: `Σ_s d(s, ·)` within its component; `None` when inactive.
    pub distance_sum: Vec<Option<u64>>,
    /// Per node: raw shortest-path count through it (endpoints excluded).
    pub betweenness: Vec<u128>,
    /// Union over components of the per-component `argmin distance_sum`.
    pub cc_center: NodeSet,
    /// Union over components of the per-component `argmax betweenness`.
    pub cb_center: NodeSet,
}

pub fn centrality_report(g: &Graph) -> CentralityReport {
    let distance_sum = distance_sums(g);
    let betweenness = stress_betweenness(g, false);
    let mut cc_center = NodeSet::empty(g.universe());
    let mut cb_center = NodeSet::empty(g.universe());
    for comp in g.components() {
        let best_sum = comp.iter().map(|v| distance_sum[v.index()].unwrap()).min().unwrap();
        let best_bw = comp.iter().map(|v| betweenness[v.index()]).max().unwrap();
        for v in &comp {
            if distance_sum[v.index()] == Some(best_sum) {
                cc_center.insert(v);
            }
            if betweenness[v.index()] == best_bw {
                cb_center.insert(v);
            }
        }
    }
    CentralityReport {
        distance_sum,
        betweenness,
        cc_center,
        cb_center,
    }
}

/// Per spine node `y`, whether both balance conditions hold:
/// `Σ_{x ∈ I, x ≠ y} τ(x) ≥ τ(y)` and `Σ_{x ∈ I ∩ y.η} τ(x) ≥ τ(y)`.
///
/// The sums range over the whole spine `I`; a single-survivor spine
/// therefore always reports `false` (its neighbor sum is empty).
pub fn balance_conditions(r: &ReductionResult) -> BTreeMap<NodeId, bool> {
    let total: u64 = r.tau_table().map(|(_, t)| t).sum();
    r.tau_table()
        .map(|(y, ty)| {
            let others = total - ty;
            let nbr: u64 = r.spine().neighbors(y).iter().map(|x| r.tau(x)).sum();
            (y, others >= ty && nbr >= ty)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContainmentVerdict {
    /// Centers intersect the spine and sit inside the closed neighborhoods
    /// of the spine's center nodes.
    Contained,
    /// Balance held but a center escapes the spine's reach.
    NotContained,
    /// The balance conditions failed, so no conclusion is claimed.
    HypothesesUnmet,
}

/// Containment analysis of one connected component.
#[derive(Clone, Debug)]
pub struct ComponentContainment {
    pub members: NodeSet,
    /// Balance conditions, restricted to this component's spine nodes.
    pub balance_holds: bool,
    pub cc_center: NodeSet,
    pub cb_center: NodeSet,
    /// `C_C ∩ spine` — the witnesses `x_i`.
    pub cc_spine: NodeSet,
    pub cb_spine: NodeSet,
    /// Center nodes outside `∪_i region(x_i)`; empty when contained.
    pub cc_outside: NodeSet,
    pub cb_outside: NodeSet,
    pub verdict: ContainmentVerdict,
}

#[derive(Clone, Debug)]
pub struct ContainmentReport {
    pub components: Vec<ComponentContainment>,
}

impl ContainmentReport {
    /// `NotContained` dominates, then `HypothesesUnmet`; an empty graph is
    /// vacuously `Contained`.
    pub fn overall(&self) -> ContainmentVerdict {
        let mut verdict = ContainmentVerdict::Contained;
        for c in &self.components {
            match c.verdict {
                ContainmentVerdict::NotContained => return ContainmentVerdict::NotContained,
                ContainmentVerdict::HypothesesUnmet => {
                    verdict = ContainmentVerdict::HypothesesUnmet;
                }
                ContainmentVerdict::Contained => {}
            }
        }
        verdict
    }
}

/// Checks, per connected component of `g`, that the distance and betweenness
/// centers intersect the spine and lie within the closed neighborhoods of
/// the spine center nodes. Components whose spine fails the balance
/// conditions are reported as `HypothesesUnmet` rather than failures.
pub fn center_containment_check(g: &Graph, r: &ReductionResult) -> ContainmentReport {
    let centrality = centrality_report(g);
    let mut components = Vec::new();
    for comp in g.components() {
        let spine_here = r.survivors().intersection(&comp);
        let comp_tau: u64 = spine_here.iter().map(|y| r.tau(y)).sum();
        let balance_holds = spine_here.iter().all(|y| {
            let ty = r.tau(y);
            let nbr: u64 = r.spine().neighbors(y).iter().map(|x| r.tau(x)).sum();
            comp_tau - ty >= ty && nbr >= ty
        });

        let cc_center = centrality.cc_center.intersection(&comp);
        let cb_center = centrality.cb_center.intersection(&comp);
        let cc_spine = cc_center.intersection(&spine_here);
        let cb_spine = cb_center.intersection(&spine_here);

        let reach = |witnesses: &NodeSet| {
            let mut covered = NodeSet::empty(g.universe());
            for x in witnesses {
                covered.union_with(g.neighbors(x));
                covered.insert(x);
            }
            covered
        };
        let cc_outside = cc_center.difference(&reach(&cc_spine));
        let cb_outside = cb_center.difference(&reach(&cb_spine));

        let verdict = if !balance_holds {
            ContainmentVerdict::HypothesesUnmet
        } else if !cc_spine.is_empty()
            && !cb_spine.is_empty()
            && cc_outside.is_empty()
            && cb_outside.is_empty()
        {
            ContainmentVerdict::Contained
        } else {
            ContainmentVerdict::NotContained
        };

        components.push(ComponentContainment {
            members: comp,
            balance_holds,
            cc_center,
            cb_center,
            cc_spine,
            cb_spine,
            cc_outside,
            cb_outside,
            verdict,
        });
    }
    ContainmentReport { components }
}

/// Exact diameter by repeated BFS. `None` when the graph is empty or
/// disconnected (no finite value).
pub fn exact_diameter(g: &Graph) -> Option<u32> {
    let n = g.node_count();
    if n == 0 {
        return None;
    }
    let mut best = 0;
    for s in g.nodes() {
        let (dist, _, order) = bfs_counts(g, s);
        if order.len() < n {
            return None;
        }
        best = best.max(dist.iter().flatten().copied().max().unwrap());
    }
    Some(best)
}

/// Diameter of each connected component, ordered by smallest member.
pub fn component_diameters(g: &Graph) -> Vec<(NodeSet, u32)> {
    g.components()
        .into_iter()
        .map(|comp| {
            let mut best = 0;
            for s in &comp {
                let (dist, _, _) = bfs_counts(g, s);
                best = best.max(
                    comp.iter()
                        .map(|v| dist[v.index()].unwrap())
                        .max()
                        .unwrap(),
                );
            }
            (comp, best)
        })
        .collect()
}

/// Spine-based diameter estimate for one spine component.
///
/// A survivor with `τ(w) > 1` carries a pendant chordal community whose
/// diameter is taken to be `τ(w)/2`; a bare survivor contributes nothing.
/// The estimate maximizes `pend(u) + d_spine(u, v) + pend(v)` over node
/// pairs, breaking ties toward the smaller pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiameterEstimate {
    pub component: NodeSet,
    pub spine_diameter: u32,
    pub endpoints: (NodeId, NodeId),
    pub estimate: Ratio<u64>,
    /// The pendant contributions of the two endpoints.
    pub pendants: (Ratio<u64>, Ratio<u64>),
}

fn pendant(r: &ReductionResult, w: NodeId) -> Ratio<u64> {
    let tau = r.tau(w);
    if tau > 1 {
        Ratio::new(tau, 2)
    } else {
        Ratio::from_integer(0)
    }
}

/// One [`DiameterEstimate`] per spine component, ordered by smallest member.
/// Empty result for an empty spine. A single-survivor component reports the
/// pendant heuristic alone.
pub fn estimate_diameter(r: &ReductionResult) -> Vec<DiameterEstimate> {
    let spine = r.spine();
    let mut out = Vec::new();
    for comp in spine.components() {
        let members: Vec<NodeId> = comp.iter().collect();
        if members.len() == 1 {
            let y = members[0];
            let pend = pendant(r, y);
            out.push(DiameterEstimate {
                component: comp,
                spine_diameter: 0,
                endpoints: (y, y),
                estimate: pend,
                pendants: (pend, Ratio::from_integer(0)),
            });
            continue;
        }
        let mut spine_diameter = 0;
        let mut best: Option<DiameterEstimate> = None;
        for (i, &u) in members.iter().enumerate() {
            let (dist, _, _) = bfs_counts(spine, u);
            for &v in &members[i + 1..] {
                let d = dist[v.index()].unwrap();
                spine_diameter = spine_diameter.max(d);
                let (pu, pv) = (pendant(r, u), pendant(r, v));
                let estimate = pu + Ratio::from_integer(d as u64) + pv;
                let better = match &best {
                    None => true,
                    Some(b) => estimate > b.estimate,
                };
                if better {
                    best = Some(DiameterEstimate {
                        component: comp.clone(),
                        spine_diameter: 0, // patched below
                        endpoints: (u, v),
                        estimate,
                        pendants: (pu, pv),
                    });
                }
            }
        }
        let mut est = best.unwrap();
        est.spine_diameter = spine_diameter;
        out.push(est);
    }
    out
}
