//! Desk-scale laboratory for completely regular binary linear codes and their
//! coset graphs.
//!
//! The crate builds two concrete families — the "pair" codes `C(m)`, whose
//! parity checks are indexed by the 2-subsets of an `m`-element set, and their
//! even-`m` unions `C[m]` with the covering coset — and then verifies, by
//! exhaustive enumeration rather than by trusting closed forms:
//!
//! * coset weight tables (syndrome-space BFS) and covering radii,
//! * complete regularity and measured intersection arrays,
//! * complete transitivity under the induced symmetric-group action,
//! * coset-graph structure: distance regularity, distance transitivity,
//!   primitivity, antipodality, folding, and the halved-cube identification,
//! * exact spectra by two independent oracles (character sums over the
//!   syndrome group, and the tridiagonal intersection matrix).
//!
//! Closed-form parameter and eigenvalue candidates are treated as data to be
//! audited against measurements, never as ground truth.
//!
//! Everything here is `no_std` + `alloc`; IO, file formats and the CLI live in
//! the companion `crclab` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bits;
pub mod code;
pub mod error;
pub mod families;
pub mod graph;
pub mod limits;
pub mod regularity;
pub mod transitivity;
pub mod uf;

pub use error::Error;
