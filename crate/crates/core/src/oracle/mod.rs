//! Brute-force ground truth built from explicit matrices.
//!
//! Modules are given by exact rational action matrices for every matrix
//! unit `E_ij` and are checked against the superbracket on construction.

pub mod algebra;
pub mod gl11;
pub mod gt;
pub mod kac;
pub mod module;
pub mod rank;

pub use algebra::{Shape, Unit};
pub use module::MatrixModule;
