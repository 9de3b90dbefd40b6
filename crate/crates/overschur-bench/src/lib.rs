//! Benchmark-only crate; see benches/workbench.rs. Nothing is exported.
