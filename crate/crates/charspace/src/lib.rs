//! Exact linear algebra over GF(2) for studying the invariant-subspace
//! structure of nilpotent endomorphisms.
//!
//! The crate builds the canonical nilpotent module for a prescribed list of
//! Jordan block sizes, computes heights, exponents and Ulm sequences of
//! vectors, materializes the commutant algebra and its unit group, evaluates
//! the three membership tests (invariant / characteristic / hyperinvariant),
//! enumerates the lattice of hyperinvariant subspaces, and classifies the
//! characteristic subspaces that fail to be hyperinvariant.  A brute-force
//! oracle cross-checks every structural result at small dimensions.
//!
//! All arithmetic is exact; vectors and matrices are bit-packed with 64
//! coordinates per machine word.

pub mod classify;
pub mod commutant;
mod error;
pub mod gf2la;
pub mod hinv_lattice;
pub mod nilmod;
pub mod oracle;
pub(crate) mod par;
pub mod report;
pub mod vexpr;

pub use error::Error;
pub use gf2la::{BitMatrix, BitVector, Subspace};
pub use nilmod::{Height, Indicator, ModuleSpace, SegreChar};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
