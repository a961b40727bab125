//! Benchmark-only crate; see `benches/partition.rs`.
