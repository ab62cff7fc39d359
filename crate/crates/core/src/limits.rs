//! Enumeration guards.
//!
//! Everything in this crate is meant to finish on a desk machine. The guards
//! below bound the exhaustive loops; callers can raise them to the hard caps
//! (the CLI exposes this as `--unsafe-large`) but never beyond, because the
//! hard caps protect index packing and memory layout, not just patience.

/// Default bound on redundancy (syndrome bits) for coset tables and any other
/// full syndrome-space enumeration.
pub const TABLE_BITS: usize = 24;

/// Hard cap on redundancy for coset tables.
pub const TABLE_BITS_HARD: usize = 28;

/// Default bound on redundancy for materialized coset graphs (2^20 vertices).
pub const GRAPH_BITS: usize = 20;

/// Hard cap on redundancy for materialized coset graphs.
pub const GRAPH_BITS_HARD: usize = 24;

/// Default bound on vertex count for pair-orbit (distance-transitivity)
/// closure, which touches all ordered vertex pairs.
pub const PAIR_ORBIT_VERTICES: usize = 4096;

/// Hard cap on vertex count for pair-orbit closure.
pub const PAIR_ORBIT_VERTICES_HARD: usize = 8192;
