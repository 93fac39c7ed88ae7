//! Gram-Schmidt orthonormalization of matrix systems under the
//! Hilbert-Schmidt inner product.

use num_complex::Complex;

use super::{hs_inner, ComplexMatrix, NumericsError};
use crate::scalar::Scalar;

/// Orthonormalize a linearly independent system of same-shape matrices.
///
/// Modified Gram-Schmidt with one re-orthogonalization pass; the classical
/// single-pass variant loses orthogonality on the d²-sized operator systems
/// this crate feeds it. If every input is hermitean the output system is
/// hermitean as well.
///
/// A member whose residual after projection drops below `drop` times its
/// original norm makes the system numerically dependent and is reported by
/// index.
pub fn gram_schmidt<T: Scalar>(
    system: &[ComplexMatrix<T>],
) -> Result<Vec<ComplexMatrix<T>>, NumericsError> {
    gram_schmidt_with(system, T::tolerances().drop)
}

/// [`gram_schmidt`] with an explicit relative drop tolerance.
pub fn gram_schmidt_with<T: Scalar>(
    system: &[ComplexMatrix<T>],
    drop: T,
) -> Result<Vec<ComplexMatrix<T>>, NumericsError> {
    let Some(first) = system.first() else {
        return Ok(Vec::new());
    };
    let shape = (first.rows(), first.cols());
    for m in system {
        if (m.rows(), m.cols()) != shape {
            return Err(NumericsError::Dimension {
                expected: format!("{}x{}", shape.0, shape.1),
                got: format!("{}x{}", m.rows(), m.cols()),
            });
        }
    }

    let herm_tol = T::tolerances().ortho;
    let all_hermitean = first.is_square() && system.iter().all(|m| m.is_hermitean(herm_tol));

    let mut basis: Vec<ComplexMatrix<T>> = Vec::with_capacity(system.len());
    for (index, input) in system.iter().enumerate() {
        let input_norm = input.frobenius_norm();
        if input_norm <= T::zero() {
            return Err(NumericsError::DependentSystem { index });
        }
        let mut v = input.clone();
        for _pass in 0..2 {
            for f in &basis {
                let coeff = hs_inner(f, &v).expect("shapes checked");
                v = v.sub(&f.scale(coeff));
            }
        }
        let residual = v.frobenius_norm();
        if residual <= drop * input_norm {
            return Err(NumericsError::DependentSystem { index });
        }
        let inv = Complex::new(T::one() / residual, T::zero());
        let mut f = v.scale(inv);
        if all_hermitean {
            // projection coefficients against hermitean members are real up
            // to roundoff; fold the stray anti-hermitean part back in
            f = f.hermitize();
        }
        basis.push(f);
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_util::{pauli_z, C64};

    type M = ComplexMatrix<f64>;

    const SQRT_HALF: f64 = std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn single_identity_normalizes() {
        let out = gram_schmidt(&[M::identity(2)]).unwrap();
        assert_eq!(out.len(), 1);
        assert!(out[0].max_abs_diff(&M::identity(2).scale_re(SQRT_HALF)) < 1e-14);
    }

    #[test]
    fn projection_removes_identity_component() {
        // [I, I + 0.1 σz] → [I/√2, σz/√2] by hand Gram-Schmidt.
        let second = M::identity(2).add(&pauli_z().scale_re(0.1));
        let out = gram_schmidt(&[M::identity(2), second]).unwrap();
        assert!(out[0].max_abs_diff(&M::identity(2).scale_re(SQRT_HALF)) < 1e-14);
        assert!(out[1].max_abs_diff(&pauli_z().scale_re(SQRT_HALF)) < 1e-14);
    }

    #[test]
    fn output_is_orthonormal() {
        let sys = vec![
            M::identity(2),
            M::identity(2).add(&pauli_z().scale_re(0.1)),
            M::new(
                2,
                2,
                vec![
                    C64::new(0.3, 0.1),
                    C64::new(-0.2, 0.4),
                    C64::new(0.7, -0.1),
                    C64::new(0.0, 0.9),
                ],
            )
            .unwrap(),
        ];
        let out = gram_schmidt(&sys).unwrap();
        for i in 0..out.len() {
            for j in 0..out.len() {
                let ip = hs_inner(&out[i], &out[j]).unwrap();
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!(
                    (ip - C64::new(expect, 0.0)).norm() < 1e-10,
                    "pair ({i},{j})"
                );
            }
        }
    }

    #[test]
    fn dependent_system_reports_index() {
        let sys = vec![M::identity(2), M::identity(2).scale_re(2.0)];
        match gram_schmidt(&sys) {
            Err(NumericsError::DependentSystem { index }) => assert_eq!(index, 1),
            other => panic!("expected dependent-system error, got {other:?}"),
        }
    }

    #[test]
    fn zero_matrix_is_dependent() {
        let sys = vec![M::zeros(2, 2)];
        assert!(matches!(
            gram_schmidt(&sys),
            Err(NumericsError::DependentSystem { index: 0 })
        ));
    }
}
