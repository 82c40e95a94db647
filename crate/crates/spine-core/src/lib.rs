//! Reduction of undirected networks to their irreducible spine.
//!
//! Every undirected graph contains a unique (up to isomorphism) irreducible
//! subgraph, obtained by repeatedly deleting nodes whose neighborhood closure
//! is contained in a neighbor's closure. This crate computes that spine and
//! the analyses built on top of it:
//!
//! * [`graph`] — bitset-backed graphs and the closure operators (neighborhood
//!   `η`, region `ρ`, closure `φ`);
//! * [`reduce`] — the subsumption sweep, with `τ` counts and `β` membership
//!   for every survivor;
//! * [`cycle`] — chordless k-cycle enumeration and the cycle-distribution
//!   signature;
//! * [`center`] — distance and betweenness centers, balance conditions, and
//!   spine-based diameter estimates;
//! * [`iso`] — exact isomorphism testing for small graphs;
//! * [`gen`] — graph generators for experiments and tests.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, and the CLI live
//! in the companion `spine-cli` crate.
//!
//! ```
//! use spine_core::{gen, reduce, signature, estimate_diameter};
//!
//! let g = gen::cycle_with_pendant_trees(14, &[(0, 1), (4, 2), (9, 3)]);
//! let r = reduce(&g);
//! assert_eq!(r.survivors().len(), 14); // pendant trees fold into the cycle
//! let sig = signature(r.spine(), 16);
//! assert_eq!(sig.counts.get(&14), Some(&1));
//! let est = &estimate_diameter(&r)[0];
//! assert!(est.estimate >= num_rational::Ratio::from_integer(7));
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod center;
pub mod cycle;
pub mod gen;
pub mod graph;
pub mod iso;
pub mod reduce;
pub mod set;

pub use center::{
    balance_conditions, brandes_betweenness, center_containment_check, centrality_report,
    component_diameters, distance_sums, estimate_diameter, exact_diameter, stress_betweenness,
    CentralityReport, ContainmentReport, ContainmentVerdict, DiameterEstimate,
};
pub use cycle::{
    chordless_cycles, chordless_cycles_from_anchor, connective_complexity, is_chordless,
    longest_cycle_intersection, longest_cycles, signature, Cycle, CycleError, Signature,
};
pub use graph::{Graph, GraphBuilder, GraphError, NodeId};
pub use iso::{isomorphic, IsoError};
pub use reduce::{is_irreducible, reduce, reduce_with_order, subsumes, ReductionResult, SubsumptionEvent};
pub use set::NodeSet;
