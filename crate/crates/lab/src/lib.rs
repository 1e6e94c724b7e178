//! File formats, wall-clock budgets, certificates, verification suites and
//! tables on top of `ecclab-core`. The `ecclab` binary is a thin driver over
//! this library.

pub mod budget;
pub mod certificate;
pub mod dimacs;
pub mod error;
pub mod suites;
pub mod tables;

pub use error::{LabError, Result};
