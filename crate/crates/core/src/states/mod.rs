//! Bipartite state carriers and the test ensembles built from them: qudit
//! Bell states (closed form and gate circuit), seeded non-maximally
//! entangled states, product states, and density matrices.
//!
//! Basis ordering is row-major throughout: `|i⟩_A|j⟩_B ↦ i·d_B + j`.

mod gates;

pub use gates::QuditGateSet;

use num_complex::Complex;
use rand::Rng;
use rand_chacha::{rand_core::SeedableRng, ChaCha8Rng};
use rand_distr::StandardNormal;
use thiserror::Error;

use crate::numerics::{eigh_with, gram_schmidt, kron, ComplexMatrix, NumericsError};
use crate::scalar::{lit, Scalar};

#[derive(Debug, Error)]
pub enum StateError {
    #[error("amplitude vector has squared norm {norm_sqr:.12}, expected 1")]
    NotNormalized { norm_sqr: f64 },
    #[error("density matrix trace is {trace:.12}, expected 1")]
    BadTrace { trace: f64 },
    #[error("density matrix is not positive semidefinite (smallest eigenvalue {eigenvalue:.3e})")]
    NotPositive { eigenvalue: f64 },
    #[error("level count d = {d} is below 2")]
    LevelCount { d: usize },
    #[error("Bell index ({p}, {q}) out of range for d = {d}")]
    BellIndex { d: usize, p: usize, q: usize },
    #[error("mixture weights must be nonnegative and sum to 1 (sum = {sum:.12})")]
    BadWeights { sum: f64 },
    #[error("state dimensions disagree: expected {expected}, got {got}")]
    DimensionMismatch { expected: String, got: String },
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// Unit vector over a bipartite cut `(d_A, d_B)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState<T> {
    dim_a: usize,
    dim_b: usize,
    amplitudes: Vec<Complex<T>>,
}

impl<T: Scalar> PureState<T> {
    /// Validated constructor; the squared norm must be 1 within the default
    /// tolerance.
    pub fn new(
        dim_a: usize,
        dim_b: usize,
        amplitudes: Vec<Complex<T>>,
    ) -> Result<Self, StateError> {
        Self::with_tolerance(dim_a, dim_b, amplitudes, T::tolerances().ortho)
    }

    pub fn with_tolerance(
        dim_a: usize,
        dim_b: usize,
        amplitudes: Vec<Complex<T>>,
        tol: T,
    ) -> Result<Self, StateError> {
        if dim_a == 0 || dim_b == 0 || amplitudes.len() != dim_a * dim_b {
            return Err(StateError::DimensionMismatch {
                expected: format!("{} amplitudes", dim_a * dim_b),
                got: format!("{} amplitudes", amplitudes.len()),
            });
        }
        if amplitudes
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(StateError::Numerics(NumericsError::NonFinite));
        }
        let norm_sqr: T = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sqr - T::one()).abs() > tol {
            return Err(StateError::NotNormalized {
                norm_sqr: norm_sqr.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self {
            dim_a,
            dim_b,
            amplitudes,
        })
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    /// The amplitudes reshaped to a `d_A × d_B` matrix.
    pub fn amplitude_matrix(&self) -> ComplexMatrix<T> {
        ComplexMatrix::from_fn(self.dim_a, self.dim_b, |i, j| {
            self.amplitudes[i * self.dim_b + j]
        })
    }

    /// ⟨self|other⟩.
    pub fn inner(&self, other: &Self) -> Complex<T> {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// |⟨self|other⟩| — global-phase-blind overlap.
    pub fn fidelity(&self, other: &Self) -> T {
        self.inner(other).norm()
    }
}

/// Hermitean, trace-one, positive semidefinite matrix over a bipartite cut.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityState<T> {
    dim_a: usize,
    dim_b: usize,
    matrix: ComplexMatrix<T>,
}

impl<T: Scalar> DensityState<T> {
    /// Validated constructor: hermiticity and unit trace within the default
    /// tolerance, smallest eigenvalue no further below zero than the
    /// reconstruction tolerance.
    pub fn new(dim_a: usize, dim_b: usize, matrix: ComplexMatrix<T>) -> Result<Self, StateError> {
        let t = T::tolerances();
        Self::with_tolerance(dim_a, dim_b, matrix, t.ortho, t.recon)
    }

    pub fn with_tolerance(
        dim_a: usize,
        dim_b: usize,
        matrix: ComplexMatrix<T>,
        tol: T,
        psd_tol: T,
    ) -> Result<Self, StateError> {
        let d = dim_a * dim_b;
        if dim_a == 0 || dim_b == 0 || matrix.rows() != d || matrix.cols() != d {
            return Err(StateError::DimensionMismatch {
                expected: format!("{d}x{d}"),
                got: format!("{}x{}", matrix.rows(), matrix.cols()),
            });
        }
        if !matrix.is_hermitean(tol) {
            return Err(StateError::Numerics(NumericsError::NotHermitean {
                deviation: matrix
                    .max_abs_diff(&matrix.dagger())
                    .to_f64()
                    .unwrap_or(f64::NAN),
            }));
        }
        let trace = matrix.trace();
        if (trace.re - T::one()).abs() > tol || trace.im.abs() > tol {
            return Err(StateError::BadTrace {
                trace: trace.re.to_f64().unwrap_or(f64::NAN),
            });
        }
        let (eigenvalues, _) = eigh_with(&matrix, tol)?;
        if let Some(&smallest) = eigenvalues.last() {
            if smallest < -psd_tol {
                return Err(StateError::NotPositive {
                    eigenvalue: smallest.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        Ok(Self {
            dim_a,
            dim_b,
            matrix,
        })
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    /// Bypasses validation; for exercising error paths in tests only.
    #[cfg(test)]
    pub(crate) fn new_unchecked(dim_a: usize, dim_b: usize, matrix: ComplexMatrix<T>) -> Self {
        Self {
            dim_a,
            dim_b,
            matrix,
        }
    }
}

/// Either state kind, for operations that accept both.
#[derive(Clone, Debug)]
pub enum State<T> {
    Pure(PureState<T>),
    Density(DensityState<T>),
}

impl<T: Scalar> State<T> {
    pub fn dim_a(&self) -> usize {
        match self {
            State::Pure(s) => s.dim_a(),
            State::Density(s) => s.dim_a(),
        }
    }

    pub fn dim_b(&self) -> usize {
        match self {
            State::Pure(s) => s.dim_b(),
            State::Density(s) => s.dim_b(),
        }
    }
}

/// d-level Bell state `(1/√d) Σ_j e^{2πijp/d} |j⟩|(j+q) mod d⟩`.
pub fn bell_state<T: Scalar>(d: usize, p: usize, q: usize) -> Result<PureState<T>, StateError> {
    if d < 2 {
        return Err(StateError::LevelCount { d });
    }
    if p >= d || q >= d {
        return Err(StateError::BellIndex { d, p, q });
    }
    let inv_sqrt_d = T::one() / lit::<T>(d as f64).sqrt();
    let two_pi = T::PI() + T::PI();
    let mut amplitudes = vec![Complex::new(T::zero(), T::zero()); d * d];
    for j in 0..d {
        let angle = two_pi * lit::<T>((j * p % d) as f64) / lit::<T>(d as f64);
        amplitudes[j * d + (j + q) % d] = Complex::from_polar(inv_sqrt_d, angle);
    }
    PureState::new(d, d, amplitudes)
}

/// The same Bell state prepared as a gate circuit on `|00⟩`: apply
/// `(I⊗X)^q`, then `H⊗I`, then `(Z⊗I)^p`, then `CNOT`. Agrees with
/// [`bell_state`] up to global phase.
pub fn bell_state_circuit<T: Scalar>(
    d: usize,
    p: usize,
    q: usize,
) -> Result<PureState<T>, StateError> {
    if d < 2 {
        return Err(StateError::LevelCount { d });
    }
    if p >= d || q >= d {
        return Err(StateError::BellIndex { d, p, q });
    }
    let gates = QuditGateSet::<T>::new(d)?;
    Ok(run_bell_circuit(&gates, gates.h(), p, q))
}

/// Apply the Bell-preparation sequence with `rotation` in place of the
/// Fourier gate. The circuit acts on `|00⟩`; `rotation` acts on subsystem A.
fn run_bell_circuit<T: Scalar>(
    gates: &QuditGateSet<T>,
    rotation: &ComplexMatrix<T>,
    p: usize,
    q: usize,
) -> PureState<T> {
    let d = gates.d();
    let identity = ComplexMatrix::identity(d);
    let mut v = vec![Complex::new(T::zero(), T::zero()); d * d];
    v[0] = Complex::new(T::one(), T::zero());

    let xq = kron(&identity, gates.x());
    for _ in 0..q {
        v = xq.mul_vec(&v);
    }
    v = kron(rotation, &identity).mul_vec(&v);
    let zp = kron(gates.z(), &identity);
    for _ in 0..p {
        v = zp.mul_vec(&v);
    }
    v = gates.cnot().mul_vec(&v);

    PureState::new(d, d, v).expect("unitary circuit preserves the norm")
}

/// Seeded non-maximally entangled state: the Bell circuit with the Fourier
/// gate replaced by a random real orthogonal rotation.
///
/// Deterministic for fixed `(d, q, p, seed)`; the resulting Schmidt
/// coefficients are generically unequal.
pub fn random_entangled_state<T: Scalar>(
    d: usize,
    q: usize,
    p: usize,
    seed: u64,
) -> Result<PureState<T>, StateError> {
    if d < 2 {
        return Err(StateError::LevelCount { d });
    }
    let gates = QuditGateSet::<T>::new(d)?;
    let rotation = random_real_orthogonal(d, seed)?;
    Ok(run_bell_circuit(&gates, &rotation, p % d, q % d))
}

/// Haar-ish random real orthogonal matrix: Gram-Schmidt on Gaussian columns
/// (equivalent to QR with the positive-diagonal sign convention).
fn random_real_orthogonal<T: Scalar>(d: usize, seed: u64) -> Result<ComplexMatrix<T>, StateError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let columns: Vec<ComplexMatrix<T>> = (0..d)
        .map(|_| {
            ComplexMatrix::from_fn(d, 1, |_, _| {
                let g: f64 = rng.sample(StandardNormal);
                Complex::new(lit::<T>(g), T::zero())
            })
        })
        .collect();
    let ortho = gram_schmidt(&columns)?;
    Ok(ComplexMatrix::from_fn(d, d, |i, j| ortho[j].get(i, 0)))
}

/// Tensor product of two unit vectors; always Schmidt rank 1.
pub fn product_state<T: Scalar>(
    psi_a: &[Complex<T>],
    psi_b: &[Complex<T>],
) -> Result<PureState<T>, StateError> {
    for factor in [psi_a, psi_b] {
        let norm_sqr: T = factor.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sqr - T::one()).abs() > T::tolerances().ortho {
            return Err(StateError::NotNormalized {
                norm_sqr: norm_sqr.to_f64().unwrap_or(f64::NAN),
            });
        }
    }
    let mut amplitudes = Vec::with_capacity(psi_a.len() * psi_b.len());
    for a in psi_a {
        for b in psi_b {
            amplitudes.push(a * b);
        }
    }
    PureState::new(psi_a.len(), psi_b.len(), amplitudes)
}

/// Projector `|ψ⟩⟨ψ|` as a density state.
pub fn density_from_pure<T: Scalar>(psi: &PureState<T>) -> DensityState<T> {
    let amps = psi.amplitudes();
    let matrix = ComplexMatrix::from_fn(amps.len(), amps.len(), |i, j| amps[i] * amps[j].conj());
    DensityState {
        dim_a: psi.dim_a(),
        dim_b: psi.dim_b(),
        matrix,
    }
}

/// Convex combination of density states.
pub fn mix<T: Scalar>(
    states: &[DensityState<T>],
    weights: &[T],
) -> Result<DensityState<T>, StateError> {
    if states.is_empty() || states.len() != weights.len() {
        return Err(StateError::DimensionMismatch {
            expected: format!("{} weights", states.len()),
            got: format!("{} weights", weights.len()),
        });
    }
    let sum: T = weights.iter().copied().sum();
    if weights.iter().any(|w| *w < T::zero()) || (sum - T::one()).abs() > T::tolerances().ortho {
        return Err(StateError::BadWeights {
            sum: sum.to_f64().unwrap_or(f64::NAN),
        });
    }
    let (dim_a, dim_b) = (states[0].dim_a(), states[0].dim_b());
    let d = dim_a * dim_b;
    let mut acc = ComplexMatrix::zeros(d, d);
    for (state, &w) in states.iter().zip(weights) {
        if (state.dim_a(), state.dim_b()) != (dim_a, dim_b) {
            return Err(StateError::DimensionMismatch {
                expected: format!("{dim_a}x{dim_b} cut"),
                got: format!("{}x{} cut", state.dim_a(), state.dim_b()),
            });
        }
        acc = acc.add(&state.matrix().scale_re(w));
    }
    DensityState::new(dim_a, dim_b, acc)
}

/// Seeded full-rank random density state (normalized Wishart `GG†/tr`).
pub fn random_density_state<T: Scalar>(
    dim_a: usize,
    dim_b: usize,
    seed: u64,
) -> Result<DensityState<T>, StateError> {
    let d = dim_a * dim_b;
    if d == 0 {
        return Err(StateError::DimensionMismatch {
            expected: "positive dimensions".into(),
            got: format!("{dim_a}x{dim_b}"),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = ComplexMatrix::from_fn(d, d, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex::new(lit::<T>(re), lit::<T>(im))
    });
    let w = g.matmul(&g.dagger());
    let trace = w.trace().re;
    let matrix = w.scale_re(T::one() / trace).hermitize();
    DensityState::new(dim_a, dim_b, matrix)
}

/// Seeded separable density: a convex mixture of at most `max_components`
/// random product densities on the `(dim_a, dim_b)` cut.
pub fn random_separable_mixture<T: Scalar>(
    dim_a: usize,
    dim_b: usize,
    max_components: usize,
    seed: u64,
) -> Result<DensityState<T>, StateError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = rng.gen_range(1..=max_components.max(1));
    let mut components = Vec::with_capacity(count);
    let mut weights_f64 = Vec::with_capacity(count);
    for _ in 0..count {
        let a = random_unit_vector::<T>(dim_a, &mut rng);
        let b = random_unit_vector::<T>(dim_b, &mut rng);
        components.push(density_from_pure(&product_state(&a, &b)?));
        weights_f64.push(rng.gen_range(0.01..1.0));
    }
    let total: f64 = weights_f64.iter().sum();
    let weights: Vec<T> = weights_f64.iter().map(|w| lit::<T>(w / total)).collect();
    mix(&components, &weights)
}

fn random_unit_vector<T: Scalar>(dim: usize, rng: &mut ChaCha8Rng) -> Vec<Complex<T>> {
    let mut v: Vec<Complex<T>> = (0..dim)
        .map(|_| {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            Complex::new(lit::<T>(re), lit::<T>(im))
        })
        .collect();
    let norm: T = v.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
    for z in &mut v {
        *z /= Complex::new(norm, T::zero());
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_util::C64;

    const SQRT_HALF: f64 = std::f64::consts::FRAC_1_SQRT_2;

    fn ket(dim: usize, k: usize) -> Vec<C64> {
        let mut v = vec![C64::new(0.0, 0.0); dim];
        v[k] = C64::new(1.0, 0.0);
        v
    }

    #[test]
    fn qubit_bell_has_equal_corner_amplitudes() {
        let psi: PureState<f64> = bell_state(2, 0, 0).unwrap();
        let amps = psi.amplitudes();
        assert!((amps[0] - C64::new(SQRT_HALF, 0.0)).norm() < 1e-14);
        assert!(amps[1].norm() < 1e-14);
        assert!(amps[2].norm() < 1e-14);
        assert!((amps[3] - C64::new(SQRT_HALF, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn qutrit_bell_diagonal_support() {
        let psi: PureState<f64> = bell_state(3, 0, 0).unwrap();
        let amps = psi.amplitudes();
        let w = 1.0 / 3f64.sqrt();
        for (idx, amp) in amps.iter().enumerate() {
            let (i, j) = (idx / 3, idx % 3);
            if i == j {
                assert!((amp - C64::new(w, 0.0)).norm() < 1e-14);
            } else {
                assert!(amp.norm() < 1e-14);
            }
        }
    }

    #[test]
    fn singlet_from_formula() {
        // d=2, p=1, q=1: (|01⟩ − |10⟩)/√2
        let psi: PureState<f64> = bell_state(2, 1, 1).unwrap();
        let amps = psi.amplitudes();
        assert!((amps[1] - C64::new(SQRT_HALF, 0.0)).norm() < 1e-14);
        assert!((amps[2] - C64::new(-SQRT_HALF, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn bell_index_validation() {
        assert!(matches!(
            bell_state::<f64>(1, 0, 0),
            Err(StateError::LevelCount { .. })
        ));
        assert!(matches!(
            bell_state::<f64>(2, 2, 0),
            Err(StateError::BellIndex { .. })
        ));
        assert!(matches!(
            bell_state::<f64>(2, 0, 5),
            Err(StateError::BellIndex { .. })
        ));
    }

    #[test]
    fn circuit_matches_formula_for_all_small_d() {
        for d in 2..=6 {
            for p in 0..d {
                for q in 0..d {
                    let formula: PureState<f64> = bell_state(d, p, q).unwrap();
                    let circuit = bell_state_circuit(d, p, q).unwrap();
                    let f = formula.fidelity(&circuit);
                    assert!((f - 1.0).abs() < 1e-10, "d={d} p={p} q={q}: fidelity {f}");
                }
            }
        }
    }

    #[test]
    fn circuit_phase_example() {
        // d=2, p=1, q=0 → (|00⟩ − |11⟩)/√2 up to phase
        let psi: PureState<f64> = bell_state_circuit(2, 1, 0).unwrap();
        let expect = PureState::new(
            2,
            2,
            vec![
                C64::new(SQRT_HALF, 0.0),
                C64::new(0.0, 0.0),
                C64::new(0.0, 0.0),
                C64::new(-SQRT_HALF, 0.0),
            ],
        )
        .unwrap();
        assert!((psi.fidelity(&expect) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn bell_family_pairwise_orthogonal() {
        for d in 2..=4 {
            let family: Vec<PureState<f64>> = (0..d)
                .flat_map(|p| (0..d).map(move |q| (p, q)))
                .map(|(p, q)| bell_state(d, p, q).unwrap())
                .collect();
            for (i, a) in family.iter().enumerate() {
                for (j, b) in family.iter().enumerate() {
                    let overlap = a.inner(b).norm();
                    if i == j {
                        assert!((overlap - 1.0).abs() < 1e-10);
                    } else {
                        assert!(overlap < 1e-10, "d={d} pair ({i},{j})");
                    }
                }
            }
        }
    }

    #[test]
    fn random_state_is_deterministic_and_normalized() {
        let a: PureState<f64> = random_entangled_state(3, 1, 2, 77).unwrap();
        let b: PureState<f64> = random_entangled_state(3, 1, 2, 77).unwrap();
        assert_eq!(a.amplitudes(), b.amplitudes());
        for seed in 0..100 {
            let s: PureState<f64> = random_entangled_state(2, 0, 0, seed).unwrap();
            let n: f64 = s.amplitudes().iter().map(|z| z.norm_sqr()).sum();
            assert!((n - 1.0).abs() < 1e-10);
        }
        let c: PureState<f64> = random_entangled_state(3, 1, 2, 78).unwrap();
        assert!(a.amplitudes() != c.amplitudes());
    }

    #[test]
    fn product_state_examples() {
        let p00: PureState<f64> = product_state(&ket(2, 0), &ket(2, 0)).unwrap();
        assert!((p00.amplitudes()[0] - C64::new(1.0, 0.0)).norm() < 1e-15);

        let plus = vec![C64::new(SQRT_HALF, 0.0), C64::new(SQRT_HALF, 0.0)];
        let p = product_state(&plus, &ket(2, 1)).unwrap();
        // (|01⟩ + |11⟩)/√2
        assert!((p.amplitudes()[1] - C64::new(SQRT_HALF, 0.0)).norm() < 1e-14);
        assert!((p.amplitudes()[3] - C64::new(SQRT_HALF, 0.0)).norm() < 1e-14);

        let unnormalized = vec![C64::new(1.0, 0.0), C64::new(1.0, 0.0)];
        assert!(matches!(
            product_state(&unnormalized, &ket(2, 0)),
            Err(StateError::NotNormalized { .. })
        ));
    }

    #[test]
    fn density_from_pure_examples() {
        let rho = density_from_pure(&product_state::<f64>(&ket(2, 0), &ket(2, 0)).unwrap());
        assert!((rho.matrix().get(0, 0) - C64::new(1.0, 0.0)).norm() < 1e-15);
        for i in 1..4 {
            assert!(rho.matrix().get(i, i).norm() < 1e-15);
        }

        let bell = density_from_pure(&bell_state::<f64>(2, 0, 0).unwrap());
        for &(i, j) in &[(0usize, 0usize), (0, 3), (3, 0), (3, 3)] {
            assert!((bell.matrix().get(i, j) - C64::new(0.5, 0.0)).norm() < 1e-14);
        }
        // purity tr(ρ²) = 1
        let sq = bell.matrix().matmul(bell.matrix());
        assert!((sq.trace().re - 1.0).abs() < 1e-10);
    }

    #[test]
    fn mix_examples() {
        let rho = density_from_pure(&bell_state::<f64>(2, 0, 0).unwrap());
        let same = mix(std::slice::from_ref(&rho), &[1.0]).unwrap();
        assert!(same.matrix().max_abs_diff(rho.matrix()) < 1e-14);

        let p00 = density_from_pure(&product_state::<f64>(&ket(2, 0), &ket(2, 0)).unwrap());
        let p11 = density_from_pure(&product_state::<f64>(&ket(2, 1), &ket(2, 1)).unwrap());
        let m = mix(&[p00, p11], &[0.5, 0.5]).unwrap();
        assert!((m.matrix().get(0, 0).re - 0.5).abs() < 1e-14);
        assert!((m.matrix().get(3, 3).re - 0.5).abs() < 1e-14);

        // equal mixture of the four Bell densities is maximally mixed
        let bells: Vec<DensityState<f64>> = [(0, 0), (0, 1), (1, 0), (1, 1)]
            .iter()
            .map(|&(p, q)| density_from_pure(&bell_state(2, p, q).unwrap()))
            .collect();
        let mm = mix(&bells, &[0.25; 4]).unwrap();
        assert!(
            mm.matrix()
                .max_abs_diff(&ComplexMatrix::identity(4).scale_re(0.25))
                < 1e-12
        );
    }

    #[test]
    fn mix_rejects_bad_weights() {
        let rho = density_from_pure(&bell_state::<f64>(2, 0, 0).unwrap());
        assert!(matches!(
            mix(std::slice::from_ref(&rho), &[0.9]),
            Err(StateError::BadWeights { .. })
        ));
        assert!(matches!(
            mix(&[rho.clone(), rho], &[1.5, -0.5]),
            Err(StateError::BadWeights { .. })
        ));
    }

    #[test]
    fn random_density_is_valid_and_deterministic() {
        let a: DensityState<f64> = random_density_state(2, 3, 5).unwrap();
        let b: DensityState<f64> = random_density_state(2, 3, 5).unwrap();
        assert!(a.matrix().max_abs_diff(b.matrix()) == 0.0);
        assert!((a.matrix().trace().re - 1.0).abs() < 1e-10);
    }

    #[test]
    fn separable_mixture_is_valid() {
        for seed in 0..10 {
            let rho: DensityState<f64> = random_separable_mixture(2, 2, 10, seed).unwrap();
            assert!((rho.matrix().trace().re - 1.0).abs() < 1e-10);
            assert!(rho.matrix().is_hermitean(1e-10));
        }
    }
}
