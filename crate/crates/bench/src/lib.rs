//! Exists to carry the benchmark targets; see benches/kernel.rs.
