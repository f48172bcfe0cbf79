//! Criterion benchmarks for `frey-core`; the benches are under `benches/`.
