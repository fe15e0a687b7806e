//! Shared inputs for the criterion benches.

/// Discriminants used across benches: one field per unit-group size.
pub const BENCH_DISCRIMINANTS: [u64; 3] = [3, 4, 7];
