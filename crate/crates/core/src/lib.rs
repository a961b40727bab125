//! Jordan center computation and distance-to-center layering for connected
//! undirected graphs.
//!
//! The core algorithm raises the boolean augmented adjacency matrix (unit
//! diagonal added) to successive powers over the reachability semiring. Row
//! `i` of the `n`th power is free of zeros exactly when every node is within
//! distance `n` of node `i`, so the first such power is the graph radius,
//! the rows that fill there are the center, and the power at which each row
//! fills orders all nodes by eccentricity. The product kernel only computes
//! entries that are still zero, stops each scalar product at the first
//! witness, works on the upper triangle of bit-packed rows, and the radius
//! can be bracketed by repeated squaring and reached exactly via the binary
//! decomposition of the exponent.
//!
//! [`baseline`] holds the Floyd-Warshall and BFS references the fast path is
//! verified and benchmarked against; [`mod@bench`] sweeps graph morphologies
//! and tabulates the comparison.

pub mod baseline;
pub mod bench;
pub mod bitmatrix;
pub mod error;
pub mod graph;
pub mod partition;

pub use baseline::{bfs_eccentricities, floyd_warshall, oracle_partition, DistanceMatrix};
pub use bench::{
    desk_preset, emit_table, median_time, run_benchmark, BenchmarkRecord, TableFormat,
};
pub use bitmatrix::BoolSymMatrix;
pub use error::Error;
pub use graph::{export_dot, Graph, Morphology, ParseWarnings};
pub use partition::{
    assemble_below_radius, doubling_powers, partition, PartitionReport, PartitionResult,
};
