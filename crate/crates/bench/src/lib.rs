//! Criterion benchmarks for `motivic-core`; see `benches/engine.rs`.
