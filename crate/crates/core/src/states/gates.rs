//! Generalized d-level gates: cyclic shift X, clock Z, the discrete-Fourier
//! Hadamard, and the modular-addition CNOT.

use num_complex::Complex;

use super::StateError;
use crate::numerics::ComplexMatrix;
use crate::scalar::{lit, Scalar};

/// The qudit gate family on `d` levels.
///
/// All four members are unitary; `X^d = Z^d = I`. At `d = 2` they reduce to
/// the familiar σx, σz, Hadamard, and CNOT.
#[derive(Clone, Debug)]
pub struct QuditGateSet<T> {
    d: usize,
    x: ComplexMatrix<T>,
    z: ComplexMatrix<T>,
    h: ComplexMatrix<T>,
    cnot: ComplexMatrix<T>,
}

impl<T: Scalar> QuditGateSet<T> {
    pub fn new(d: usize) -> Result<Self, StateError> {
        if d < 2 {
            return Err(StateError::LevelCount { d });
        }
        let zero = Complex::new(T::zero(), T::zero());
        let one = Complex::new(T::one(), T::zero());

        // cyclic shift |j⟩ → |j+1 mod d⟩
        let x = ComplexMatrix::from_fn(d, d, |i, j| if i == (j + 1) % d { one } else { zero });
        // clock: diag(ω^j), ω = e^{2πi/d}
        let z = ComplexMatrix::from_fn(
            d,
            d,
            |i, j| if i == j { omega_power::<T>(d, i) } else { zero },
        );
        // discrete Fourier transform, entries ω^{jk}/√d
        let inv_sqrt_d = T::one() / lit::<T>(d as f64).sqrt();
        let h = ComplexMatrix::from_fn(d, d, |j, k| {
            omega_power::<T>(d, j * k) * Complex::new(inv_sqrt_d, T::zero())
        });
        // |i⟩|j⟩ → |i⟩|(i+j) mod d⟩
        let cnot = ComplexMatrix::from_fn(d * d, d * d, |r, c| {
            let (i, j) = (c / d, c % d);
            if r == i * d + (i + j) % d {
                one
            } else {
                zero
            }
        });
        Ok(Self { d, x, z, h, cnot })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn x(&self) -> &ComplexMatrix<T> {
        &self.x
    }

    pub fn z(&self) -> &ComplexMatrix<T> {
        &self.z
    }

    pub fn h(&self) -> &ComplexMatrix<T> {
        &self.h
    }

    pub fn cnot(&self) -> &ComplexMatrix<T> {
        &self.cnot
    }
}

/// ω^k for ω = e^{2πi/d}.
fn omega_power<T: Scalar>(d: usize, k: usize) -> Complex<T> {
    let two_pi = T::PI() + T::PI();
    let angle = two_pi * lit::<T>((k % d) as f64) / lit::<T>(d as f64);
    Complex::from_polar(T::one(), angle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::ComplexMatrix;
    use crate::test_util::{pauli_x, pauli_z};

    type M = ComplexMatrix<f64>;

    fn assert_unitary(m: &M, tol: f64) {
        let gram = m.dagger().matmul(m);
        assert!(gram.max_abs_diff(&M::identity(m.cols())) < tol);
    }

    #[test]
    fn qubit_gates_reduce_to_paulis() {
        let g: QuditGateSet<f64> = QuditGateSet::new(2).unwrap();
        assert!(g.x().max_abs_diff(&pauli_x()) < 1e-14);
        assert!(g.z().max_abs_diff(&pauli_z()) < 1e-14);
    }

    #[test]
    fn members_unitary_and_cyclic() {
        for d in 2..=6 {
            let g: QuditGateSet<f64> = QuditGateSet::new(d).unwrap();
            for m in [g.x(), g.z(), g.h()] {
                assert_unitary(m, 1e-10);
            }
            assert_unitary(g.cnot(), 1e-10);
            // X^d = Z^d = I
            let mut xp = M::identity(d);
            let mut zp = M::identity(d);
            for _ in 0..d {
                xp = xp.matmul(g.x());
                zp = zp.matmul(g.z());
            }
            assert!(xp.max_abs_diff(&M::identity(d)) < 1e-10, "X^{d} != I");
            assert!(zp.max_abs_diff(&M::identity(d)) < 1e-10, "Z^{d} != I");
        }
    }

    #[test]
    fn rejects_single_level() {
        assert!(matches!(
            QuditGateSet::<f64>::new(1),
            Err(StateError::LevelCount { d: 1 })
        ));
    }
}
