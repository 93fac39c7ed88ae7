//! Singular value decomposition by one-sided complex Jacobi.
//!
//! Columns of the working copy are rotated pairwise until mutually
//! orthogonal; their norms are then the singular values. The one-sided
//! scheme keeps full relative accuracy on the small, well-conditioned
//! matrices this crate produces (coefficient matrices up to d² = 64).

use num_complex::Complex;

use super::jacobi::{make_rotation, rotate_columns};
use super::{ComplexMatrix, NumericsError};
use crate::scalar::{lit, Scalar};

const MAX_SWEEPS: usize = 64;

/// Economy-size SVD: `left · diag(singular) · right†` reconstructs the
/// input.
///
/// With an `m×n` input and `k = min(m, n)`: `left` is `m×k` and `right` is
/// `n×k`, both with orthonormal columns; `singular` has length `k`, sorted
/// nonincreasing, all nonnegative.
#[derive(Clone, Debug)]
pub struct SvdResult<T> {
    pub left: ComplexMatrix<T>,
    pub singular: Vec<T>,
    pub right: ComplexMatrix<T>,
}

impl<T: Scalar> SvdResult<T> {
    /// `left · diag(singular) · right†`.
    pub fn reconstruct(&self) -> ComplexMatrix<T> {
        let k = self.singular.len();
        ComplexMatrix::from_fn(self.left.rows(), self.right.rows(), |i, j| {
            (0..k)
                .map(|a| {
                    self.left.get(i, a)
                        * Complex::new(self.singular[a], T::zero())
                        * self.right.get(j, a).conj()
                })
                .sum()
        })
    }
}

/// One-sided Jacobi SVD. Fails with [`NumericsError::NoConvergence`] rather
/// than returning an unconverged factorization.
pub fn svd<T: Scalar>(m: &ComplexMatrix<T>) -> Result<SvdResult<T>, NumericsError> {
    if m.rows() < m.cols() {
        // orthogonalize the short side: svd(m†) = U Σ V† gives m = V Σ U†
        let t = svd(&m.dagger())?;
        return Ok(SvdResult {
            left: t.right,
            singular: t.singular,
            right: t.left,
        });
    }

    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut v = ComplexMatrix::identity(cols);

    let mut converged = false;
    for _sweep in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..cols {
            for q in (p + 1)..cols {
                let mut app = T::zero();
                let mut aqq = T::zero();
                let mut apq = Complex::new(T::zero(), T::zero());
                for i in 0..rows {
                    let aip = a.get(i, p);
                    let aiq = a.get(i, q);
                    app += aip.norm_sqr();
                    aqq += aiq.norm_sqr();
                    apq += aip.conj() * aiq;
                }
                if apq.norm() <= T::epsilon() * (app * aqq).sqrt() {
                    continue;
                }
                if let Some(rot) = make_rotation(app, aqq, apq) {
                    rotate_columns(&mut a, p, q, &rot);
                    rotate_columns(&mut v, p, q, &rot);
                    rotated = true;
                }
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(NumericsError::NoConvergence { sweeps: MAX_SWEEPS });
    }

    // column norms are the singular values
    let mut norms: Vec<T> = (0..cols)
        .map(|j| {
            (0..rows)
                .map(|i| a.get(i, j).norm_sqr())
                .fold(T::zero(), |acc, x| acc + x)
                .sqrt()
        })
        .collect();
    let mut order: Vec<usize> = (0..cols).collect();
    order.sort_by(|&i, &j| norms[j].partial_cmp(&norms[i]).expect("finite norms"));
    let a = ComplexMatrix::from_fn(rows, cols, |i, j| a.get(i, order[j]));
    let right = ComplexMatrix::from_fn(cols, cols, |i, j| v.get(i, order[j]));
    norms = order.iter().map(|&i| norms[i]).collect();

    // normalize nonzero columns; complete the rest to an orthonormal set
    let sigma_max = norms.first().copied().unwrap_or_else(T::zero);
    let tiny = sigma_max * T::epsilon() * lit::<T>(rows as f64);
    let mut left = ComplexMatrix::zeros(rows, cols);
    let mut pending = Vec::new();
    for (j, norm) in norms.iter_mut().enumerate() {
        if *norm > tiny && *norm > T::zero() {
            let inv = T::one() / *norm;
            for i in 0..rows {
                left.set(i, j, a.get(i, j) * Complex::new(inv, T::zero()));
            }
        } else {
            *norm = T::zero();
            pending.push(j);
        }
    }
    for j in pending {
        complete_column(&mut left, j);
    }

    Ok(SvdResult {
        left,
        singular: norms,
        right,
    })
}

/// Fill column `j` with a unit vector orthogonal to every other column,
/// chosen deterministically as the basis vector with the largest residual.
fn complete_column<T: Scalar>(u: &mut ComplexMatrix<T>, j: usize) {
    let rows = u.rows();
    let mut best: Option<(T, Vec<Complex<T>>)> = None;
    for k in 0..rows {
        let mut cand: Vec<Complex<T>> = (0..rows)
            .map(|i| Complex::new(if i == k { T::one() } else { T::zero() }, T::zero()))
            .collect();
        for _pass in 0..2 {
            for c in 0..u.cols() {
                if c == j {
                    continue;
                }
                let proj: Complex<T> = (0..rows).map(|i| u.get(i, c).conj() * cand[i]).sum();
                for (i, entry) in cand.iter_mut().enumerate() {
                    *entry -= u.get(i, c) * proj;
                }
            }
        }
        let norm = cand
            .iter()
            .map(|z| z.norm_sqr())
            .fold(T::zero(), |acc, x| acc + x)
            .sqrt();
        if best.as_ref().is_none_or(|(n, _)| norm > *n) {
            best = Some((norm, cand));
        }
    }
    let (norm, cand) = best.expect("at least one basis candidate");
    let inv = T::one() / norm;
    for (i, entry) in cand.into_iter().enumerate() {
        u.set(i, j, entry * Complex::new(inv, T::zero()));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::eigh;
    use crate::test_util::{random_matrix, rng, C64};

    type M = ComplexMatrix<f64>;

    #[test]
    fn identity_singular_values() {
        let r = svd(&M::identity(3)).unwrap();
        for s in &r.singular {
            assert!((s - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn diagonal_singular_values() {
        let mut m = M::zeros(2, 2);
        m.set(0, 0, C64::new(4.0, 0.0));
        m.set(1, 1, C64::new(3.0, 0.0));
        let r = svd(&m).unwrap();
        assert!((r.singular[0] - 4.0).abs() < 1e-14);
        assert!((r.singular[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn singular_values_match_gram_eigenvalues() {
        // independent route: eigenvalues of m†m
        let mut r = rng(7);
        let m = random_matrix(4, 4, &mut r);
        let out = svd(&m).unwrap();
        let gram = m.dagger().matmul(&m);
        let (evals, _) = eigh(&gram).unwrap();
        for (s, e) in out.singular.iter().zip(evals.iter()) {
            assert!((s - e.max(0.0).sqrt()).abs() < 1e-10);
        }
    }

    #[test]
    fn reconstruction_and_orthonormality() {
        let mut r = rng(99);
        for &(rows, cols) in &[(4usize, 4usize), (5, 3), (3, 5)] {
            let m = random_matrix(rows, cols, &mut r);
            let out = svd(&m).unwrap();
            assert!(out.reconstruct().sub(&m).frobenius_norm() < 1e-10);
            let k = rows.min(cols);
            assert_eq!(out.singular.len(), k);
            let gl = out.left.dagger().matmul(&out.left);
            let gr = out.right.dagger().matmul(&out.right);
            assert!(gl.max_abs_diff(&M::identity(k)) < 1e-10);
            assert!(gr.max_abs_diff(&M::identity(k)) < 1e-10);
            for w in out.singular.windows(2) {
                assert!(w[0] >= w[1]);
            }
        }
    }

    #[test]
    fn rank_deficient_still_orthonormal() {
        // rank-1 outer product of two vectors
        let m = M::from_fn(4, 3, |i, j| C64::new((i + 1) as f64 * (j + 1) as f64, 0.0));
        let out = svd(&m).unwrap();
        assert!(out.singular[1].abs() < 1e-10);
        assert!(out.singular[2].abs() < 1e-10);
        let gl = out.left.dagger().matmul(&out.left);
        assert!(gl.max_abs_diff(&M::identity(3)) < 1e-10);
        assert!(out.reconstruct().sub(&m).frobenius_norm() < 1e-10);
    }

    #[test]
    fn zero_matrix() {
        let out = svd(&M::zeros(3, 2)).unwrap();
        assert!(out.singular.iter().all(|s| *s == 0.0));
        let gl = out.left.dagger().matmul(&out.left);
        assert!(gl.max_abs_diff(&M::identity(2)) < 1e-12);
    }
}
