//! Integer codes under the weighted metric.
//!
//! An integer code is a finite subset of `Z/q1 x ... x Z/qn`. Unlike the
//! Hamming setting, coordinates carry different amounts of information, so
//! distances are measured multiplicatively: the distance between two words is
//! the product of the moduli at the coordinates where they differ. This crate
//! provides:
//!
//! - exact big-integer arithmetic (extended gcd, CRT reconstruction, the
//!   residue map) in [`arith`];
//! - the code model (enumerated codes, puncturing/shortening, information
//!   sets, minimum distance, Singleton-type caps) in [`model`];
//! - locality analysis (helper-set certificates, code locality, local repair,
//!   the LRC distance bound, iterative shortening traces) in [`locality`];
//! - code builders (Chinese Remainder codes, products, concatenations, and
//!   integer Tamo-Barg codes with their size bounds) in [`construct`];
//! - certified fixed-point evaluation of logarithms and powers used by the
//!   bound checks in [`precision`].
//!
//! All arithmetic on weights, amplitudes and distances is exact; real-valued
//! quantities (localities, bound right-hand sides) are evaluated as intervals
//! at a configurable precision (256 fractional bits by default) with outward
//! rounding, plus an exact rational fallback for power-related values.
//!
//! The crate is `no_std`-compatible (with `alloc`); the `std` feature (on by
//! default) is only required for the optional `parallel` feature.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod arith;
pub mod construct;
pub mod locality;
pub mod model;
pub mod precision;

pub use arith::{crt_reconstruct, ext_gcd, pairwise_coprime, residue_map, BezoutTriple, ResidueVector};
pub use model::{Caps, Codeword, CoordSet, EnumeratedCode, ModuliVector, Provenance};
pub use precision::LogRatio;
