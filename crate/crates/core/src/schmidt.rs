//! Schmidt decompositions across a bipartite cut.
//!
//! Pure states decompose by SVD of the reshaped amplitude matrix. Density
//! matrices decompose in Hilbert-Schmidt space: expand ρ over a product of
//! hermitean orthonormal operator bases, SVD the coefficient matrix
//! `c_ij = tr(ρ F^A_i ⊗ F^B_j)`, and rotate the bases by the singular
//! factors. The singular values themselves are the canonical coefficients;
//! that choice is what makes `ρ = Σ_α λ_α E^A_α ⊗ E^B_α` hold with
//! HS-orthonormal factor systems.
//!
//! The coefficient sum feeds the one-sided cross-norm entanglement check:
//! separable states never exceed Σλ = 1.

use num_complex::Complex;
use thiserror::Error;

use crate::numerics::{hs_inner, kron, svd, ComplexMatrix, NumericsError};
use crate::scalar::{lit, Scalar};
use crate::states::{DensityState, PureState, State};

#[derive(Debug, Error)]
pub enum SchmidtError {
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error("operator basis has {got} members, expected {expected}")]
    BasisSize { expected: usize, got: usize },
}

/// Schmidt decomposition of a pure state: `|ψ⟩ = Σ_α λ_α |u_α⟩⊗|v_α⟩`.
#[derive(Clone, Debug)]
pub struct PureSchmidt<T> {
    coefficients: Vec<T>,
    left_vectors: Vec<Vec<Complex<T>>>,
    right_vectors: Vec<Vec<Complex<T>>>,
}

impl<T: Scalar> PureSchmidt<T> {
    pub fn rank(&self) -> usize {
        self.coefficients.len()
    }

    /// Strictly positive, nonincreasing; Σλ² = 1.
    pub fn coefficients(&self) -> &[T] {
        &self.coefficients
    }

    pub fn left_vectors(&self) -> &[Vec<Complex<T>>] {
        &self.left_vectors
    }

    pub fn right_vectors(&self) -> &[Vec<Complex<T>>] {
        &self.right_vectors
    }

    /// `Σ_α λ_α |u_α⟩⊗|v_α⟩` as a flat amplitude vector.
    pub fn reconstruct(&self) -> Vec<Complex<T>> {
        let da = self.left_vectors.first().map_or(0, Vec::len);
        let db = self.right_vectors.first().map_or(0, Vec::len);
        let mut amps = vec![Complex::new(T::zero(), T::zero()); da * db];
        for ((lambda, u), v) in self
            .coefficients
            .iter()
            .zip(&self.left_vectors)
            .zip(&self.right_vectors)
        {
            let scale = Complex::new(*lambda, T::zero());
            for i in 0..da {
                for j in 0..db {
                    amps[i * db + j] += scale * u[i] * v[j];
                }
            }
        }
        amps
    }
}

/// Canonical operator Schmidt decomposition of a density matrix:
/// `ρ = Σ_α λ_α E^A_α ⊗ E^B_α` with HS-orthonormal factor systems.
#[derive(Clone, Debug)]
pub struct OperatorSchmidt<T> {
    coefficients: Vec<T>,
    left_ops: Vec<ComplexMatrix<T>>,
    right_ops: Vec<ComplexMatrix<T>>,
    hermitean_basis_used: bool,
}

impl<T: Scalar> OperatorSchmidt<T> {
    pub fn rank(&self) -> usize {
        self.coefficients.len()
    }

    /// Strictly positive, nonincreasing; Σλ² = tr(ρ²).
    pub fn coefficients(&self) -> &[T] {
        &self.coefficients
    }

    pub fn left_ops(&self) -> &[ComplexMatrix<T>] {
        &self.left_ops
    }

    pub fn right_ops(&self) -> &[ComplexMatrix<T>] {
        &self.right_ops
    }

    /// Whether the expansion basis was hermitean, making the factor
    /// operators hermitean as well.
    pub fn hermitean_basis_used(&self) -> bool {
        self.hermitean_basis_used
    }

    /// Sum of the canonical coefficients (the cross-norm statistic).
    pub fn coefficient_sum(&self) -> T {
        self.coefficients.iter().copied().sum()
    }

    /// `Σ_α λ_α E^A_α ⊗ E^B_α`.
    pub fn reconstruct(&self) -> ComplexMatrix<T> {
        let da = self.left_ops.first().map_or(1, ComplexMatrix::rows);
        let db = self.right_ops.first().map_or(1, ComplexMatrix::rows);
        let mut acc = ComplexMatrix::zeros(da * db, da * db);
        for ((lambda, ea), eb) in self
            .coefficients
            .iter()
            .zip(&self.left_ops)
            .zip(&self.right_ops)
        {
            acc = acc.add(&kron(ea, eb).scale_re(*lambda));
        }
        acc
    }

    /// Diagnostic only: true when every factor operator is positive
    /// semidefinite. Not a separability verdict.
    pub fn factors_nonnegative(&self) -> Result<bool, SchmidtError> {
        for op in self.left_ops.iter().chain(&self.right_ops) {
            if !op.is_hermitean(T::tolerances().ortho) {
                return Ok(false);
            }
            let (eigenvalues, _) = crate::numerics::eigh(op)?;
            if eigenvalues
                .last()
                .is_some_and(|e| *e < -T::tolerances().recon)
            {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Uniform (rank, coefficients) view consumed by the ordering layer.
#[derive(Clone, Debug, PartialEq)]
pub struct SchmidtData<T> {
    pub kind: StateKind,
    pub rank: usize,
    pub coefficients: Vec<T>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StateKind {
    Pure,
    Density,
}

impl StateKind {
    pub fn label(self) -> &'static str {
        match self {
            StateKind::Pure => "pure",
            StateKind::Density => "density",
        }
    }
}

/// Outcome of the one-sided cross-norm test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrossNormVerdict {
    /// Σλ exceeds 1: the state is certainly entangled.
    Entangled,
    /// Σλ ≤ 1: no information; separable states and some entangled ones
    /// land here.
    Inconclusive,
}

/// Schmidt decomposition of a pure state via SVD of the reshaped amplitude
/// matrix. Singular values below `rank_tol` (relative to the largest) are
/// treated as zero.
pub fn schmidt_pure<T: Scalar>(psi: &PureState<T>) -> Result<PureSchmidt<T>, SchmidtError> {
    schmidt_pure_with(psi, T::tolerances().rank)
}

pub fn schmidt_pure_with<T: Scalar>(
    psi: &PureState<T>,
    rank_tol: T,
) -> Result<PureSchmidt<T>, SchmidtError> {
    let out = svd(&psi.amplitude_matrix())?;
    let cutoff = out.singular.first().copied().unwrap_or_else(T::zero) * rank_tol;
    let rank = out
        .singular
        .iter()
        .take_while(|s| **s > cutoff)
        .count()
        .max(1);

    let mut left_vectors = Vec::with_capacity(rank);
    let mut right_vectors = Vec::with_capacity(rank);
    for alpha in 0..rank {
        left_vectors.push(
            (0..out.left.rows())
                .map(|i| out.left.get(i, alpha))
                .collect(),
        );
        right_vectors.push(
            (0..out.right.rows())
                .map(|j| out.right.get(j, alpha).conj())
                .collect(),
        );
    }
    Ok(PureSchmidt {
        coefficients: out.singular[..rank].to_vec(),
        left_vectors,
        right_vectors,
    })
}

/// Hermitean orthonormal operator basis of the d×d matrices: the normalized
/// identity followed by the generalized Gell-Mann families (symmetric, then
/// antisymmetric, then diagonal), d² members in a deterministic order.
pub fn hermitean_basis<T: Scalar>(d: usize) -> Vec<ComplexMatrix<T>> {
    let zero = Complex::new(T::zero(), T::zero());
    let mut basis = Vec::with_capacity(d * d);

    let inv_sqrt_d = T::one() / lit::<T>(d as f64).sqrt();
    basis.push(ComplexMatrix::from_fn(d, d, |i, j| {
        if i == j {
            Complex::new(inv_sqrt_d, T::zero())
        } else {
            zero
        }
    }));

    let inv_sqrt2 = T::one() / (T::one() + T::one()).sqrt();
    for j in 0..d {
        for k in (j + 1)..d {
            // (|j⟩⟨k| + |k⟩⟨j|)/√2
            basis.push(ComplexMatrix::from_fn(d, d, |r, c| {
                if (r, c) == (j, k) || (r, c) == (k, j) {
                    Complex::new(inv_sqrt2, T::zero())
                } else {
                    zero
                }
            }));
        }
    }
    for j in 0..d {
        for k in (j + 1)..d {
            // (-i|j⟩⟨k| + i|k⟩⟨j|)/√2
            basis.push(ComplexMatrix::from_fn(d, d, |r, c| {
                if (r, c) == (j, k) {
                    Complex::new(T::zero(), -inv_sqrt2)
                } else if (r, c) == (k, j) {
                    Complex::new(T::zero(), inv_sqrt2)
                } else {
                    zero
                }
            }));
        }
    }
    for l in 1..d {
        // (Σ_{j<l} |j⟩⟨j| − l|l⟩⟨l|) / √(l(l+1))
        let norm = T::one() / lit::<T>((l * (l + 1)) as f64).sqrt();
        basis.push(ComplexMatrix::from_fn(d, d, |r, c| {
            if r != c || r > l {
                zero
            } else if r < l {
                Complex::new(norm, T::zero())
            } else {
                Complex::new(-norm * lit::<T>(l as f64), T::zero())
            }
        }));
    }
    basis
}

/// Canonical operator Schmidt decomposition over the default hermitean
/// bases.
pub fn schmidt_operator<T: Scalar>(
    rho: &DensityState<T>,
) -> Result<OperatorSchmidt<T>, SchmidtError> {
    schmidt_operator_with(rho, T::tolerances().rank)
}

pub fn schmidt_operator_with<T: Scalar>(
    rho: &DensityState<T>,
    rank_tol: T,
) -> Result<OperatorSchmidt<T>, SchmidtError> {
    let basis_a = hermitean_basis::<T>(rho.dim_a());
    let basis_b = hermitean_basis::<T>(rho.dim_b());
    schmidt_operator_with_bases(rho, &basis_a, &basis_b, rank_tol)
}

/// Operator Schmidt decomposition over caller-supplied HS-orthonormal
/// bases. The singular values of the coefficient matrix — and therefore the
/// canonical coefficients — do not depend on the basis choice.
pub fn schmidt_operator_with_bases<T: Scalar>(
    rho: &DensityState<T>,
    basis_a: &[ComplexMatrix<T>],
    basis_b: &[ComplexMatrix<T>],
    rank_tol: T,
) -> Result<OperatorSchmidt<T>, SchmidtError> {
    let (da, db) = (rho.dim_a(), rho.dim_b());
    if basis_a.len() != da * da {
        return Err(SchmidtError::BasisSize {
            expected: da * da,
            got: basis_a.len(),
        });
    }
    if basis_b.len() != db * db {
        return Err(SchmidtError::BasisSize {
            expected: db * db,
            got: basis_b.len(),
        });
    }

    let herm_tol = T::tolerances().ortho;
    let hermitean = basis_a
        .iter()
        .chain(basis_b)
        .all(|f| f.is_hermitean(herm_tol));

    // c_ij = ⟨F^A_i ⊗ F^B_j, ρ⟩; real when ρ and the bases are hermitean,
    // in which case the imaginary roundoff is flushed so the SVD factors
    // stay real and the factor operators hermitean
    let coeff = ComplexMatrix::from_fn(basis_a.len(), basis_b.len(), |i, j| {
        let c = hs_inner(&kron(&basis_a[i], &basis_b[j]), rho.matrix())
            .expect("shapes fixed by construction");
        if hermitean {
            Complex::new(c.re, T::zero())
        } else {
            c
        }
    });

    let out = svd(&coeff)?;
    let cutoff = out.singular.first().copied().unwrap_or_else(T::zero) * rank_tol;
    let rank = out
        .singular
        .iter()
        .take_while(|s| **s > cutoff)
        .count()
        .max(1);

    let mut left_ops = Vec::with_capacity(rank);
    let mut right_ops = Vec::with_capacity(rank);
    for alpha in 0..rank {
        let mut ea = ComplexMatrix::zeros(da, da);
        for (i, f) in basis_a.iter().enumerate() {
            ea = ea.add(&f.scale(out.left.get(i, alpha)));
        }
        left_ops.push(ea);
        let mut eb = ComplexMatrix::zeros(db, db);
        for (j, f) in basis_b.iter().enumerate() {
            eb = eb.add(&f.scale(out.right.get(j, alpha).conj()));
        }
        right_ops.push(eb);
    }

    Ok(OperatorSchmidt {
        coefficients: out.singular[..rank].to_vec(),
        left_ops,
        right_ops,
        hermitean_basis_used: hermitean,
    })
}

/// One-sided cross-norm test: Σλ > 1 certifies entanglement; anything else
/// is inconclusive. Never claims separability.
pub fn cross_norm_check<T: Scalar>(
    rho: &DensityState<T>,
) -> Result<CrossNormVerdict, SchmidtError> {
    cross_norm_check_with(rho, T::tolerances().cross)
}

pub fn cross_norm_check_with<T: Scalar>(
    rho: &DensityState<T>,
    margin: T,
) -> Result<CrossNormVerdict, SchmidtError> {
    let decomposition = schmidt_operator(rho)?;
    if decomposition.coefficient_sum() > T::one() + margin {
        Ok(CrossNormVerdict::Entangled)
    } else {
        Ok(CrossNormVerdict::Inconclusive)
    }
}

/// Uniform Schmidt view of either state kind.
pub fn schmidt_of<T: Scalar>(state: &State<T>) -> Result<SchmidtData<T>, SchmidtError> {
    schmidt_of_with(state, T::tolerances().rank)
}

pub fn schmidt_of_with<T: Scalar>(
    state: &State<T>,
    rank_tol: T,
) -> Result<SchmidtData<T>, SchmidtError> {
    match state {
        State::Pure(psi) => {
            let s = schmidt_pure_with(psi, rank_tol)?;
            Ok(SchmidtData {
                kind: StateKind::Pure,
                rank: s.rank(),
                coefficients: s.coefficients().to_vec(),
            })
        }
        State::Density(rho) => {
            let s = schmidt_operator_with(rho, rank_tol)?;
            Ok(SchmidtData {
                kind: StateKind::Density,
                rank: s.rank(),
                coefficients: s.coefficients().to_vec(),
            })
        }
    }
}
