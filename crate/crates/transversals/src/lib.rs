//! Exact transversal numbers on small graphs.
//!
//! The crate computes minimum vertex covers, feedback vertex sets and odd
//! cycle transversals together with their independent-set-constrained
//! variants (`ivc`, `ifvs`, `ioct`) on simple undirected graphs with at most
//! 64 vertices. On top of the exact solvers it provides:
//!
//! * structural recognizers (bipartite, near-bipartite, 3-colourable,
//!   induced-subgraph freeness, complete multipartite, almost complete
//!   bipartite) with validated certificates,
//! * constructive procedures that build independent transversals with
//!   machine-checked size bounds,
//! * generators for the extremal gadget families used to separate the
//!   bounded and unbounded regimes, each bundled with its expected
//!   invariants,
//! * a verification harness that checks a catalog of bound statements
//!   exhaustively over all small graphs and runs open-problem
//!   counterexample scans.
//!
//! Start with the `examples/` directory for runnable tours of each
//! capability, or the `transversals` binary for the command-line surface.

pub mod cli;
pub mod constructive;
pub mod gadgets;
pub mod graph;
pub mod harness;
pub mod recognition;
pub mod solvers;

mod error;

pub use error::{Error, Result};
