use thiserror::Error;

/// Errors produced by graph construction, matrix kernels and the benchmark
/// harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: expected two labels, found {found}")]
    MalformedLine { line: usize, found: usize },

    #[error("empty graph")]
    EmptyGraph,

    #[error("graph not connected")]
    NotConnected,

    #[error("matrix dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("infeasible morphology: {reason}")]
    InfeasibleMorphology { reason: String },

    #[error("partition covers {covered} nodes but the graph has {nodes}")]
    PartitionMismatch { covered: usize, nodes: usize },

    #[error("benchmark aborted, output mismatch against the oracle for {context}")]
    BenchmarkMismatch { context: String },
}
