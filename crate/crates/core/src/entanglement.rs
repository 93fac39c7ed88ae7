//! Von Neumann entropy of reduced states and entropy-based linear sorting.
//!
//! Entropies are in bits (log base 2), so a maximally entangled d-level
//! pair scores exactly log₂ d. For a pure bipartite state the reduced-state
//! entropy is the entanglement entropy; for mixed inputs the same recipe is
//! applied verbatim, but the number is not an entanglement measure there.

use thiserror::Error;

use crate::numerics::{eigh_with, partial_trace, ComplexMatrix, NumericsError, Subsystem};
use crate::scalar::{Scalar, Tolerances};
use crate::states::{density_from_pure, PureState, State};

#[derive(Debug, Error)]
pub enum EntanglementError {
    #[error("density matrix trace is {trace:.12}, expected 1")]
    BadTrace { trace: f64 },
    #[error("eigenvalue {eigenvalue:.3e} outside [0, 1] beyond tolerance")]
    EigenvalueRange { eigenvalue: f64 },
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// Entropy failure tagged with the position of the offending state.
#[derive(Debug, Error)]
#[error("state {index}: {source}")]
pub struct LseaError {
    pub index: usize,
    #[source]
    pub source: EntanglementError,
}

/// A state handle paired with its entropy, the sort key of the linear
/// ordering.
#[derive(Clone, Debug, PartialEq)]
pub struct EntropyRecord<T> {
    /// Position of the state in the input collection.
    pub state_id: usize,
    /// Reduced-state von Neumann entropy in bits.
    pub entropy: T,
}

/// `−Σ_k λ_k log₂ λ_k` over the spectrum of a hermitean, trace-one matrix.
/// Eigenvalues at or below the eigenvalue cutoff contribute nothing
/// (`0·log 0 = 0`).
pub fn von_neumann_entropy<T: Scalar>(rho: &ComplexMatrix<T>) -> Result<T, EntanglementError> {
    von_neumann_entropy_with(rho, &Tolerances::standard())
}

pub fn von_neumann_entropy_with<T: Scalar>(
    rho: &ComplexMatrix<T>,
    tol: &Tolerances<T>,
) -> Result<T, EntanglementError> {
    let trace = rho.trace();
    if (trace.re - T::one()).abs() > tol.ortho || trace.im.abs() > tol.ortho {
        return Err(EntanglementError::BadTrace {
            trace: trace.re.to_f64().unwrap_or(f64::NAN),
        });
    }
    let (eigenvalues, _) = eigh_with(rho, tol.ortho)?;
    let mut entropy = T::zero();
    for &lambda in &eigenvalues {
        if lambda < -tol.recon || lambda > T::one() + tol.recon {
            return Err(EntanglementError::EigenvalueRange {
                eigenvalue: lambda.to_f64().unwrap_or(f64::NAN),
            });
        }
        if lambda > tol.eig {
            entropy -= lambda * lambda.log2();
        }
    }
    Ok(entropy.max(T::zero()))
}

/// Entanglement entropy of a pure state: the entropy of its reduced state
/// on subsystem A. Equals `−Σ λ_α² log₂ λ_α²` over the Schmidt
/// coefficients.
pub fn entanglement_entropy<T: Scalar>(psi: &PureState<T>) -> Result<T, EntanglementError> {
    entanglement_entropy_with(psi, &Tolerances::standard())
}

pub fn entanglement_entropy_with<T: Scalar>(
    psi: &PureState<T>,
    tol: &Tolerances<T>,
) -> Result<T, EntanglementError> {
    let rho = density_from_pure(psi);
    let reduced = partial_trace(rho.matrix(), psi.dim_a(), psi.dim_b(), Subsystem::A)?;
    von_neumann_entropy_with(&reduced, tol)
}

/// The reduced-state entropy of either state kind — the sort key used by
/// [`lsea_sort`].
pub fn reduced_entropy<T: Scalar>(state: &State<T>) -> Result<T, EntanglementError> {
    reduced_entropy_with(state, &Tolerances::standard())
}

pub fn reduced_entropy_with<T: Scalar>(
    state: &State<T>,
    tol: &Tolerances<T>,
) -> Result<T, EntanglementError> {
    match state {
        State::Pure(psi) => entanglement_entropy_with(psi, tol),
        State::Density(rho) => {
            let reduced = partial_trace(rho.matrix(), rho.dim_a(), rho.dim_b(), Subsystem::A)?;
            von_neumann_entropy_with(&reduced, tol)
        }
    }
}

/// Linear sorting by entropy: evaluate the reduced-state entropy of every
/// input, then stably sort ascending (least entangled first). The first
/// failing state aborts with its index.
pub fn lsea_sort<T: Scalar>(states: &[State<T>]) -> Result<Vec<EntropyRecord<T>>, LseaError> {
    lsea_sort_with(states, &Tolerances::standard())
}

pub fn lsea_sort_with<T: Scalar>(
    states: &[State<T>],
    tol: &Tolerances<T>,
) -> Result<Vec<EntropyRecord<T>>, LseaError> {
    let mut records = Vec::with_capacity(states.len());
    for (index, state) in states.iter().enumerate() {
        let entropy =
            reduced_entropy_with(state, tol).map_err(|source| LseaError { index, source })?;
        records.push(EntropyRecord {
            state_id: index,
            entropy,
        });
    }
    // stable: ties keep input order
    records.sort_by(|a, b| a.entropy.partial_cmp(&b.entropy).expect("finite entropies"));
    Ok(records)
}
