//! Bit-packed exact linear algebra over GF(2).
//!
//! Vectors pack 64 coordinates per `u64` word; addition is XOR.  Subspaces
//! are kept in reduced row echelon form with strictly increasing pivots,
//! which makes them canonical: two subspaces are equal as sets exactly when
//! their representations are equal bit for bit, so [`Subspace`] works as a
//! hash-map or set key.

mod matrix;
mod subspace;
mod vector;

pub use matrix::{image_basis, kernel_basis, BitMatrix};
pub use subspace::Subspace;
pub use vector::BitVector;
