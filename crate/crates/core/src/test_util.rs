//! Shared fixtures for the unit tests.

use num_complex::Complex;
use rand::Rng;
use rand_chacha::{rand_core::SeedableRng, ChaCha8Rng};

use crate::numerics::ComplexMatrix;

pub type C64 = Complex<f64>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rows: usize, cols: usize, r: &mut ChaCha8Rng) -> ComplexMatrix<f64> {
    ComplexMatrix::from_fn(rows, cols, |_, _| {
        C64::new(r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0))
    })
}

pub fn random_hermitean(n: usize, r: &mut ChaCha8Rng) -> ComplexMatrix<f64> {
    let g = random_matrix(n, n, r);
    g.add(&g.dagger()).scale_re(0.5)
}

pub fn pauli_x() -> ComplexMatrix<f64> {
    ComplexMatrix::new(
        2,
        2,
        vec![
            C64::new(0.0, 0.0),
            C64::new(1.0, 0.0),
            C64::new(1.0, 0.0),
            C64::new(0.0, 0.0),
        ],
    )
    .unwrap()
}

pub fn pauli_y() -> ComplexMatrix<f64> {
    ComplexMatrix::new(
        2,
        2,
        vec![
            C64::new(0.0, 0.0),
            C64::new(0.0, -1.0),
            C64::new(0.0, 1.0),
            C64::new(0.0, 0.0),
        ],
    )
    .unwrap()
}

pub fn pauli_z() -> ComplexMatrix<f64> {
    ComplexMatrix::new(
        2,
        2,
        vec![
            C64::new(1.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(-1.0, 0.0),
        ],
    )
    .unwrap()
}
