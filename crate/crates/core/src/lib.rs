//! Certified lower bounds on boxicity.
//!
//! Graphs up to 64 vertices are bit-matrix based and support every
//! subset-enumerating operation; larger graphs (up to 4096 vertices) support
//! the closed-form and spectral bounds. All integer-valued results are exact
//! and every bound comes with the evidence it was computed from.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod families;
pub mod graph;
pub mod interval;
pub mod iso;
pub mod method1;
pub mod method2;
pub mod random;
pub mod report;
pub mod spectral;
pub mod subsets;

/// Exact rational numbers used for every closed-form bound.
pub type Rational = num_rational::Ratio<i64>;

pub use error::{Error, Reason, Result};
pub use graph::{BipartiteGraph, Graph, VertexSet};
pub use interval::{IntervalRep, VertexOrder};
pub use report::{BoundReport, BoundValue, Certificate, Status};
