//! Exact coincidence site lattices and the colourings induced by sublattices.
//!
//! Everything is computed over arbitrary-precision integers and rationals.
//! Lattices are full-rank Z-spans in Q^d whose basis matrices hold generators
//! as rows; a linear map `A` acts on row vectors as `v ↦ v·Aᵀ`.
//!
//! The dense matrix type and the normal-form algorithms are generic over the
//! scalar (any `num_traits` ring for products, any field for inversion, any
//! signed Euclidean integer for Hermite/Smith forms). The aliases below fix
//! the exact scalar types the lattice code uses.

pub mod coincidence;
pub mod error;
pub mod lattice;
pub mod modules8;
pub mod ratmat;

pub use coincidence::{
    analyze, colour_permutation, csl, is_coincidence, is_colour_coincidence, sigma,
    window_census, ColouringAnalysis, CommensurableMap,
};
pub use error::{Error, Result};
pub use lattice::{Colouring, Lattice};
pub use modules8::Cyc8;
pub use ratmat::Matrix;

/// Arbitrary-precision integer scalar.
pub type Int = num_bigint::BigInt;
/// Always-reduced arbitrary-precision rational with positive denominator.
pub type Rational = num_rational::BigRational;
pub type IntMatrix = Matrix<Int>;
pub type RatMatrix = Matrix<Rational>;
/// Double-precision matrices, used only for display coordinates.
pub type FloatMatrix = Matrix<f64>;
