//! Exact-arithmetic kernels for polyhedral and tropical geometry: rational
//! polyhedral fans, tropicalizations of Laurent hypersurfaces, Minkowski
//! weights, torus-invariant divisors and their intersection numbers, the
//! divisor ↔ strata-weight correspondence, and toric b-divisors (ideal
//! divisors and nef envelopes) on finite refinement towers.
//!
//! All arithmetic is exact: arbitrary-precision integers and rationals, no
//! floating point. Every value is immutable after construction and every
//! operation is a pure function, so values can be shared freely between
//! threads.
//!
//! The crate is `no_std` (it allocates, but performs no IO); the companion
//! `trop-cli` crate carries serialization and the command-line surface.

#![no_std]

extern crate alloc;

pub mod convex;
pub mod error;
pub mod lattice;

pub use error::{Error, Result};
pub use lattice::{Int, LatticeVector, Rat};
