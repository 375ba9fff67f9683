//! Criterion benchmarks for the scheme construction live in `benches/`.
