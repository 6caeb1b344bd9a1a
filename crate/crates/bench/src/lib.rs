//! Criterion benchmarks for `areal-core`. See `benches/`.
