//! Exact engine for the injective chromatic number of graphs: bitset graph
//! core, bit-exact graph6 codec, exact invariants (girth, diameter,
//! connectivity, planarity), the branch-and-bound injective solver with an
//! independent cross-validation oracle, isomorph-free small-order generation,
//! the constructed graph families attaining the conjectured bounds, and the
//! bound functions themselves.

pub mod bruteforce;
pub mod canon;
pub mod conjectures;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod metrics;
pub mod oracle;
pub mod planarity;
pub mod smallgen;
pub mod solver;

pub use graph::{Graph, GraphError, VertexId};
