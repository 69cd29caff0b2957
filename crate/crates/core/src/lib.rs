//! Exact tools for studying Colouring on graph classes defined by two
//! forbidden induced subgraphs.
//!
//! The crate builds the NAE-3SAT list-colouring gadgets and their clique
//! extensions, checks their properties with exhaustive solvers and induced
//! subgraph search, and classifies pairs `(H1, H2)` with a small rule
//! engine whose verdicts carry a citation trace.

pub mod classify;
pub mod error;
pub mod families;
pub mod gadget;
pub mod graph;
pub mod recognize;
pub mod solve;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, Witness};
