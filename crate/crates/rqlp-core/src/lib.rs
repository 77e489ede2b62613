//! Dense QLP decomposition, randomized single-pass variants, and evaluators
//! for the associated probabilistic error bounds.
//!
//! The crate is built around a column-major [`matrix::DenseMatrix`] of `f64`
//! and provides:
//!
//! - Householder QR with and without column pivoting ([`qr`]),
//! - the deterministic QLP decomposition and rank-k truncation ([`qlp`]),
//! - randomized QLP variants, including two single-pass algorithms that read
//!   the input through a one-shot row-block stream ([`randqlp`], [`stream`]),
//! - evaluators for the matrix- and singular-value-error bounds of the
//!   randomized variants ([`bounds`]),
//! - synthetic test-matrix generators and error metrics ([`matgen`],
//!   [`metrics`]), backed by a one-sided Jacobi reference SVD ([`svd`]),
//! - a seeded, platform-independent Gaussian source ([`rng`]).
//!
//! Everything is deterministic: identical inputs and seeds produce
//! bit-identical outputs. The crate is `no_std` compatible (with `alloc`);
//! the `std` feature only enables wall-clock timing of decompositions.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod bounds;
pub mod error;
mod fmath;
pub mod matgen;
pub mod matrix;
pub mod metrics;
pub mod qlp;
pub mod qr;
pub mod randqlp;
pub mod rng;
pub mod stream;
pub mod svd;

pub use error::{Error, Result};
pub use matrix::{DenseMatrix, Permutation};
