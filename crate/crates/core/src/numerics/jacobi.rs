//! Shared 2x2 rotation kernel for the Jacobi-type decompositions.
//!
//! For a hermitean 2x2 block `[[app, apq], [conj(apq), aqq]]` (`app`, `aqq`
//! real) the unitary
//!
//! ```text
//! J = [[ c,        s       ],
//!      [-s·ᾱ,      c·ᾱ     ]]      ᾱ = conj(apq/|apq|)
//! ```
//!
//! with the classic symmetric-Schur choice of `c`, `s` diagonalizes the
//! block: `J† G J` is diagonal. The same kernel drives both the hermitean
//! eigensolver (two-sided updates) and the one-sided SVD (column updates on
//! the implicit Gram matrix).

use num_complex::Complex;

use super::ComplexMatrix;
use crate::scalar::Scalar;

pub(crate) struct Rotation<T> {
    pub c: T,
    pub s: T,
    /// Unit phase of the off-diagonal entry.
    pub alpha: Complex<T>,
}

/// Rotation annihilating the off-diagonal entry `apq`; `None` when it is
/// already zero.
pub(crate) fn make_rotation<T: Scalar>(app: T, aqq: T, apq: Complex<T>) -> Option<Rotation<T>> {
    let b = apq.norm();
    if b.is_zero() {
        return None;
    }
    let alpha = apq / b;
    let two = T::one() + T::one();
    let tau = (aqq - app) / (two * b);
    let t = if tau >= T::zero() {
        T::one() / (tau + (T::one() + tau * tau).sqrt())
    } else {
        -T::one() / (-tau + (T::one() + tau * tau).sqrt())
    };
    let c = T::one() / (T::one() + t * t).sqrt();
    let s = t * c;
    Some(Rotation { c, s, alpha })
}

/// Right-multiplication `M ← M·J`, touching columns `p` and `q`.
pub(crate) fn rotate_columns<T: Scalar>(
    m: &mut ComplexMatrix<T>,
    p: usize,
    q: usize,
    rot: &Rotation<T>,
) {
    let c = Complex::new(rot.c, T::zero());
    let s = Complex::new(rot.s, T::zero());
    let alpha_bar = rot.alpha.conj();
    for i in 0..m.rows() {
        let mip = m.get(i, p);
        let miq = m.get(i, q);
        m.set(i, p, mip * c - miq * alpha_bar * s);
        m.set(i, q, mip * s + miq * alpha_bar * c);
    }
}

/// Left-multiplication `M ← J†·M`, touching rows `p` and `q`.
pub(crate) fn rotate_rows<T: Scalar>(
    m: &mut ComplexMatrix<T>,
    p: usize,
    q: usize,
    rot: &Rotation<T>,
) {
    let c = Complex::new(rot.c, T::zero());
    let s = Complex::new(rot.s, T::zero());
    let alpha = rot.alpha;
    for j in 0..m.cols() {
        let mpj = m.get(p, j);
        let mqj = m.get(q, j);
        m.set(p, j, mpj * c - mqj * alpha * s);
        m.set(q, j, mpj * s + mqj * alpha * c);
    }
}
