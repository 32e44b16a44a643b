//! Numerical and exact machinery for dynamical Mahler measures.
//!
//! The crate is organized around a monic integer polynomial `f` of degree
//! `d >= 2` acting on the complex plane by iteration. It provides:
//!
//! - exact and floating polynomial arithmetic ([`poly`]),
//! - orbits, preperiodicity detection, and cycle classification ([`dynamics`]),
//! - the escape-rate potential (Green's function) and canonical heights
//!   ([`potential`]),
//! - equilibrium-measure sampling on Julia sets and quadrature engines for
//!   the dynamical Mahler measure ([`measure`]),
//! - zero-measure certification ([`kronecker`]),
//! - Multibrot membership and integer normal forms ([`multibrot`]),
//! - escape-time rasterization ([`raster`]).
//!
//! The crate is `no_std` (with `alloc`); all IO lives in the companion CLI
//! crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod dynamics;
mod error;
pub mod kronecker;
pub mod measure;
pub mod multibrot;
pub mod poly;
pub mod potential;
pub mod raster;
pub mod rng;

pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;

pub use num_bigint::BigInt;
pub use num_traits;
pub use num_complex::Complex64;
pub use num_rational::BigRational;
