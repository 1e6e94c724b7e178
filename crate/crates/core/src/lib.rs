//! Exact kernels for edge clique covers, edge-clique graphs and rankwidth.
//!
//! Everything here is `no_std` + `alloc`: graphs are word-packed adjacency
//! sets, solvers are deterministic branch and bound with re-checkable
//! certificates, and rankwidth comes from subset dynamic programming over
//! GF(2) cut-ranks. File formats, clocks and the command line live in the
//! `ecclab` crate.

#![no_std]

extern crate alloc;

pub mod bitset;
pub mod cograph;
pub mod corpus;
pub mod edge_clique;
pub mod error;
pub mod graph;
pub mod rankwidth;
pub mod solvers;
pub mod sweep;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::Graph;
