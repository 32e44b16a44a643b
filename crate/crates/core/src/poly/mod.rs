//! Exact and numeric polynomial arithmetic.
//!
//! Univariate polynomials are dense ([`DensePoly`]) with three coefficient
//! rings in use: [`ZPoly`] (arbitrary-precision integers, houses `f` and
//! single-variable `P`), [`QPoly`] (exact rationals, used for exact affine
//! conjugation), and [`CPoly`] (complex doubles, used for numeric
//! root-finding and preimages). Multivariate polynomials are sparse
//! ([`MPoly`]) over the integers.

mod affine;
mod dense;
mod mpoly;
mod roots;

pub use affine::AffineMap;
pub use dense::{chebyshev, CPoly, DensePoly, QPoly, ZPoly};
pub use mpoly::MPoly;
pub use roots::{roots, RootSet};
