//! Exact and constructive tools for metric dimension, determining number and
//! locating-domination on small graphs.

pub mod budget;
pub mod corpus;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod greedy;
pub mod harness;
pub mod invariants;
pub mod matching;
pub mod symmetry;
pub mod trees;
pub mod twins;
pub mod vertex_set;

pub use budget::{InvariantResult, Method, SolverConfig};
pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph, MAX_ORDER};
pub use vertex_set::VertexSet;
