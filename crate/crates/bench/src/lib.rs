//! Criterion benchmarks for the chainring crate live under `benches/`.
