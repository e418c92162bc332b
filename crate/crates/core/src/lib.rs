//! Equalizing the closeness centrality of two vertices by adding edges.
//!
//! The crate is `no_std` (it needs `alloc`) and contains only pure algorithms:
//!
//! * [`graph`]: simple undirected graphs, BFS distances and exact closeness sums,
//! * [`ratio`]: exact ratio and rational arithmetic (no floating point in comparisons),
//! * [`solvers`]: the neighborhood approximation, the trivial `ab` baseline, the
//!   greedy baselines and exhaustive oracles for the ratio and gap objectives,
//! * [`reductions`]: set-cover gadgets and counterexample families with certificates,
//! * [`checks`]: executable validators for the structural lemmas,
//! * [`catalog`]: the exhaustive catalog of small connected graphs.
//!
//! File formats, timing, random instances and the command line live in the `crimp`
//! crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod catalog;
pub mod checks;
pub mod graph;
pub mod instance;
pub mod ratio;
pub mod reductions;
pub mod solvers;

pub use graph::{Edge, EdgeSet, Graph, GraphError, Vertex};
pub use instance::Instance;
pub use ratio::{ExactRatio, Rational};
