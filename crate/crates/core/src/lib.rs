//! Enumeration of 1- and 2-factors of regular graphs and digraphs,
//! classification into the 2-factor hierarchy (2-factor hamiltonian,
//! 2-factor isomorphic, strongly pseudo and pseudo 2-factor isomorphic, odd
//! 2-factored), snark checks and the graph constructions that populate
//! those classes.

pub mod connectivity;
pub mod constructions;
pub mod digraphs;
pub mod error;
pub mod graph;
pub mod io;
pub mod iso;
pub mod matchings;
pub mod snarks;
pub mod tables;
pub mod two_factors;

pub use error::{Error, Result};
pub use graph::{Digraph, Edge, EdgeCut, Extent, Graph};
