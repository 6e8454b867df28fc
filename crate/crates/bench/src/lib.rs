//! Benchmarks for the `w6free` searches live in `benches/`.
