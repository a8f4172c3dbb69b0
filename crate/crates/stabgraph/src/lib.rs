//! Quantum error-correcting codes in two equivalent pictures.
//!
//! A *graph code* is a symmetric matrix over a prime field GF(p) whose
//! vertices split into inputs, auxiliaries and outputs; a *stabilizer code*
//! is an isotropic subspace of F^n ⊕ F^n labeling a commuting family of
//! Weyl operators. This crate represents both, converts losslessly between
//! them, and verifies error-correction properties twice over: exactly, by
//! finite-field linear algebra, and numerically, on dense complex matrices
//! realizing the Weyl operators and the code isometry.
//!
//! Modules:
//! - [`field`], [`linalg`]: exact GF(p) scalars, matrices and subspaces.
//! - [`graph`]: the graph-code representation with validation, blocks,
//!   edge lists and DOT export.
//! - [`stabilizer`]: isotropic subspaces, symplectic form, centralizer,
//!   degenerate part and the exhaustive distance search.
//! - [`convert`]: both conversion directions and round-trip checking.
//! - [`weyl`]: dense Weyl operators, code isometries, eigenvalue and
//!   Knill-Laflamme checks, and the numerical distance.
//! - [`io`]: the JSON file formats.
//! - [`sample`]: random codes for property tests.

pub mod convert;
mod error;
pub mod field;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod sample;
pub mod stabilizer;
pub mod weyl;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::Error;
pub use field::{FieldSpec, Scalar};
pub use graph::{GammaBlocks, GraphCode, Violation};
pub use io::CodeFile;
pub use linalg::{GFMatrix, Subspace};
pub use stabilizer::{StabilizerSpace, SymplecticVector};
