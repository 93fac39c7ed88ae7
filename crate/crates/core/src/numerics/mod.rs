//! Dense complex linear algebra: Kronecker products, the Hilbert-Schmidt
//! inner product, Gram-Schmidt over matrix systems, SVD, hermitean
//! eigendecomposition, and partial traces.
//!
//! Everything here is a pure function over immutable inputs. Eigen- and
//! singular values are always returned sorted nonincreasing so downstream
//! majorization never has to re-sort.

mod eigh;
mod gram_schmidt;
mod jacobi;
mod matrix;
mod svd;

pub use eigh::{eigh, eigh_with};
pub use gram_schmidt::{gram_schmidt, gram_schmidt_with};
pub use matrix::{hs_inner, kron, partial_trace, ComplexMatrix, Subsystem};
pub use svd::{svd, SvdResult};

use thiserror::Error;

/// Failures of the linear-algebra layer.
#[derive(Debug, Error)]
pub enum NumericsError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: String, got: String },
    #[error("matrix entries must be finite")]
    NonFinite,
    #[error("matrix is not hermitean (max |A - A\u{2020}| = {deviation:.3e})")]
    NotHermitean { deviation: f64 },
    #[error("linearly dependent system: member {index} lies in the span of its predecessors")]
    DependentSystem { index: usize },
    #[error("iteration did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
}
