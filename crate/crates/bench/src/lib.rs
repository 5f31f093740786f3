//! Criterion benchmarks for `subcount-core`; see `benches/census.rs`.
