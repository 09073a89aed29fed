//! Exact-arithmetic combinatorics and brute-force module computations for
//! the general linear Lie superalgebra `gl(m|n)`.
//!
//! * [`weight`]: weights, roots, the form, atypicality, cores, blocks,
//!   lengths and the principal-block Bruhat order.
//! * [`dimension`]: Weyl dimensions, projective bounds, partition counts,
//!   the Ext-degree window and the Cauchy decomposition of `S(g_1^*)`.
//! * [`invariants`]: closed-form complexity, z-invariant and variety dimensions.
//! * [`ehrhart`]: the lattice-point polytope and quasipolynomial fitting.
//! * [`suzhang`]: the weights `ζ(x)`, `ν`, `μ^(a)` and the pair sets `S(d)`.
//! * [`oracle`]: explicit matrix modules, rank tests and `gl(1|1)` resolutions.
//! * [`linalg`]: dense and sparse exact rational matrices.

pub mod dimension;
pub mod ehrhart;
pub mod error;
pub mod invariants;
pub mod linalg;
pub mod oracle;
pub mod suzhang;
pub mod weight;

pub use error::{Error, Result};
pub use invariants::{InvariantReport, ModuleKind};
pub use linalg::Rational;
pub use weight::{BlockDescriptor, Root, RootPartition, SuperParams, Weight};
