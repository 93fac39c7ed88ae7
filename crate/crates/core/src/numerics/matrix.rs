//! Dense row-major complex matrices and the elementary operations the rest
//! of the crate is built from: Hilbert-Schmidt inner product, Kronecker
//! product, and partial trace.

use num_complex::Complex;

use super::NumericsError;
use crate::scalar::Scalar;

/// Dense complex matrix with row-major storage.
///
/// Entries are required to be finite; validated constructors return
/// [`NumericsError::NonFinite`] otherwise.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<Complex<T>>,
}

impl<T: Scalar> ComplexMatrix<T> {
    /// Validated constructor from row-major entries.
    pub fn new(rows: usize, cols: usize, entries: Vec<Complex<T>>) -> Result<Self, NumericsError> {
        if rows == 0 || cols == 0 {
            return Err(NumericsError::Dimension {
                expected: "positive dimensions".into(),
                got: format!("{rows}x{cols}"),
            });
        }
        if entries.len() != rows * cols {
            return Err(NumericsError::Dimension {
                expected: format!("{} entries", rows * cols),
                got: format!("{} entries", entries.len()),
            });
        }
        if entries
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(NumericsError::NonFinite);
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    /// Build a matrix from a function of the index pair.
    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Complex<T>,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Complex::new(T::zero(), T::zero()); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Complex::new(T::one(), T::zero())
            } else {
                Complex::new(T::zero(), T::zero())
            }
        })
    }

    /// Column vector from a slice of amplitudes.
    pub fn column(entries: &[Complex<T>]) -> Self {
        Self {
            rows: entries.len(),
            cols: 1,
            entries: entries.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex<T> {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: Complex<T>) {
        self.entries[i * self.cols + j] = value;
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    /// Trace of a square matrix.
    pub fn trace(&self) -> Complex<T> {
        debug_assert!(self.is_square());
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in add"
        );
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in sub"
        );
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, factor: Complex<T>) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * factor).collect(),
        }
    }

    pub fn scale_re(&self, factor: T) -> Self {
        self.scale(Complex::new(factor, T::zero()))
    }

    /// Matrix product; panics on inner-dimension mismatch.
    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in matmul");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.get(i, k);
                if aik.re.is_zero() && aik.im.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, cur + aik * other.get(k, j));
                }
            }
        }
        out
    }

    /// Matrix-vector product; panics on dimension mismatch.
    pub fn mul_vec(&self, v: &[Complex<T>]) -> Vec<Complex<T>> {
        assert_eq!(self.cols, v.len(), "shape mismatch in mul_vec");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    pub fn frobenius_norm(&self) -> T {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .fold(T::zero(), |acc, x| acc + x)
            .sqrt()
    }

    /// Largest entrywise absolute difference against `other`.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch"
        );
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(T::zero(), T::max)
    }

    pub fn is_hermitean(&self, tol: T) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in i..self.cols {
                if (self.get(i, j) - self.get(j, i).conj()).norm() > tol {
                    return false;
                }
            }
        }
        true
    }

    /// Hermitean part (A + A†)/2.
    pub fn hermitize(&self) -> Self {
        debug_assert!(self.is_square());
        let half = Complex::new(crate::scalar::lit::<T>(0.5), T::zero());
        self.add(&self.dagger()).scale(half)
    }
}

/// Hilbert-Schmidt inner product `tr(a† b)`.
///
/// Antilinear in the first argument, linear in the second.
pub fn hs_inner<T: Scalar>(
    a: &ComplexMatrix<T>,
    b: &ComplexMatrix<T>,
) -> Result<Complex<T>, NumericsError> {
    if (a.rows, a.cols) != (b.rows, b.cols) {
        return Err(NumericsError::Dimension {
            expected: format!("{}x{}", a.rows, a.cols),
            got: format!("{}x{}", b.rows, b.cols),
        });
    }
    // tr(a† b) = Σ_ij conj(a_ij) b_ij, which avoids forming the product.
    Ok(a.entries
        .iter()
        .zip(&b.entries)
        .map(|(x, y)| x.conj() * y)
        .sum())
}

/// Kronecker product, shape `(rows_a·rows_b, cols_a·cols_b)`.
pub fn kron<T: Scalar>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> ComplexMatrix<T> {
    ComplexMatrix::from_fn(a.rows * b.rows, a.cols * b.cols, |i, j| {
        let (ia, ib) = (i / b.rows, i % b.rows);
        let (ja, jb) = (j / b.cols, j % b.cols);
        a.get(ia, ja) * b.get(ib, jb)
    })
}

/// Which tensor factor a partial trace keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Partial trace of a `(dim_a·dim_b)`-square matrix over the discarded
/// subsystem. Basis convention is row-major: `|i⟩_A|j⟩_B ↦ i·dim_b + j`.
pub fn partial_trace<T: Scalar>(
    rho: &ComplexMatrix<T>,
    dim_a: usize,
    dim_b: usize,
    keep: Subsystem,
) -> Result<ComplexMatrix<T>, NumericsError> {
    let d = dim_a * dim_b;
    if rho.rows != d || rho.cols != d {
        return Err(NumericsError::Dimension {
            expected: format!("{d}x{d}"),
            got: format!("{}x{}", rho.rows, rho.cols),
        });
    }
    let out = match keep {
        Subsystem::A => ComplexMatrix::from_fn(dim_a, dim_a, |i, ip| {
            (0..dim_b)
                .map(|j| rho.get(i * dim_b + j, ip * dim_b + j))
                .sum()
        }),
        Subsystem::B => ComplexMatrix::from_fn(dim_b, dim_b, |j, jp| {
            (0..dim_a)
                .map(|i| rho.get(i * dim_b + j, i * dim_b + jp))
                .sum()
        }),
    };
    Ok(out)
}
