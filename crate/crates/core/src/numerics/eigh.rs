//! Hermitean eigendecomposition by cyclic complex Jacobi sweeps.

use num_complex::Complex;

use super::jacobi::{make_rotation, rotate_columns, rotate_rows};
use super::{ComplexMatrix, NumericsError};
use crate::scalar::{lit, Scalar};

const MAX_SWEEPS: usize = 64;

/// Eigenvalues (real, sorted nonincreasing) and an orthonormal eigenvector
/// matrix of a hermitean matrix; column `k` of the returned matrix pairs
/// with eigenvalue `k`.
///
/// Inputs further than the hermiticity tolerance from their own adjoint are
/// rejected rather than silently symmetrized.
pub fn eigh<T: Scalar>(h: &ComplexMatrix<T>) -> Result<(Vec<T>, ComplexMatrix<T>), NumericsError> {
    eigh_with(h, T::tolerances().ortho)
}

/// [`eigh`] with an explicit hermiticity tolerance.
pub fn eigh_with<T: Scalar>(
    h: &ComplexMatrix<T>,
    tol: T,
) -> Result<(Vec<T>, ComplexMatrix<T>), NumericsError> {
    if !h.is_square() {
        return Err(NumericsError::Dimension {
            expected: "square matrix".into(),
            got: format!("{}x{}", h.rows(), h.cols()),
        });
    }
    if !h.is_hermitean(tol) {
        return Err(NumericsError::NotHermitean {
            deviation: h.max_abs_diff(&h.dagger()).to_f64().unwrap_or(f64::NAN),
        });
    }

    let n = h.rows();
    // roundoff-level anti-hermitean parts would otherwise leak into the
    // converged diagonal
    let mut a = h.hermitize();
    let mut v = ComplexMatrix::identity(n);
    let scale = a.frobenius_norm();
    let off_target = T::epsilon() * scale * lit::<T>(n as f64);

    let mut converged = false;
    for sweep in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= off_target {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a.get(p, q);
                let b = apq.norm();
                if b.is_zero() {
                    continue;
                }
                let app = a.get(p, p).re;
                let aqq = a.get(q, q).re;
                // once the entry can no longer perturb the diagonal at this
                // precision, flush it to zero
                let g = lit::<T>(100.0) * b;
                if sweep > 3 && app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
                    a.set(p, q, Complex::new(T::zero(), T::zero()));
                    a.set(q, p, Complex::new(T::zero(), T::zero()));
                    continue;
                }
                if let Some(rot) = make_rotation(app, aqq, apq) {
                    rotate_columns(&mut a, p, q, &rot);
                    rotate_rows(&mut a, p, q, &rot);
                    rotate_columns(&mut v, p, q, &rot);
                }
            }
        }
    }
    if !converged && off_diagonal_norm(&a) > off_target {
        return Err(NumericsError::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<T> = (0..n).map(|i| a.get(i, i).re).collect();
    order.sort_by(|&i, &j| diag[j].partial_cmp(&diag[i]).expect("finite eigenvalues"));

    let eigenvalues: Vec<T> = order.iter().map(|&i| diag[i]).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, j| v.get(i, order[j]));
    Ok((eigenvalues, vectors))
}

fn off_diagonal_norm<T: Scalar>(a: &ComplexMatrix<T>) -> T {
    let n = a.rows();
    let mut acc = T::zero();
    for p in 0..n {
        for q in 0..n {
            if p != q {
                acc += a.get(p, q).norm_sqr();
            }
        }
    }
    acc.sqrt()
}
