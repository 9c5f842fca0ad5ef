//! Criterion benchmarks for `ulrich-core`; see `benches/`.
