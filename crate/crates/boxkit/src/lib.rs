//! File formats, bound evaluation and experiment sweeps on top of
//! [`boxkit_core`].

pub mod bounds;
pub mod config;
pub mod emit;
pub mod experiment;
pub mod io;
pub mod report;

pub use bounds::{run_bounds, BoundKind, BoundOptions};
pub use config::ExperimentConfig;
pub use experiment::{run_experiment, ExperimentOutput, ResultRow};
