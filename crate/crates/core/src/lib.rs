//! Decides, for a semisimple Lie algebra `g` and a reductive subalgebra `k`,
//! whether a simple infinite-dimensional admissible `(g, k)`-module exists,
//! and emits a re-verifiable certificate of the answer.
//!
//! The non-ideal case is witnessed by a regular element of a Cartan
//! subalgebra of `k`, the parabolic subalgebra it defines, a generic highest
//! weight, and a cohomology vanishing computed from Kostant's formula. The
//! [`oracle`] module recomputes that cohomology from the Chevalley–Eilenberg
//! complex as an independent check.

pub mod certify;
pub mod embedding;
pub mod error;
pub mod genericity;
pub mod kostant;
pub mod lie;
pub mod linalg;
pub mod oracle;
pub mod parabolic;
pub mod rational;

pub use error::{Error, ErrorKind, Result};
