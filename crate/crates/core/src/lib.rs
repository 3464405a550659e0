//! Daisy-free hypergraph workbench.
//!
//! Builds the projective-plane and linear-independence constructions,
//! certifies daisy-freeness and link partiteness with explicit witnesses,
//! audits max-cut link partitions and their potentials, and computes exact
//! Turán numbers of small generalized daisies.

pub mod audit;
pub mod bitset;
pub mod certify;
pub mod canon;
pub mod combinatorics;
pub mod constructions;
pub mod error;
pub mod field;
pub mod graph;
pub mod hgf;
pub mod hypergraph;
pub mod rational;
pub mod search;

pub use error::{Error, Result};
pub use graph::Graph;
pub use hypergraph::Hypergraph;
pub use rational::Rational;
