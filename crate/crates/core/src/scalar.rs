//! Floating-point scalar abstraction and the centralized tolerance bundle.
//!
//! Everything numeric in this crate is generic over a real scalar `T`
//! implementing [`Scalar`]; complex entries are `num_complex::Complex<T>`.
//! The concrete instantiations intended for production use are `f64` (the
//! default throughout the tests) and `f32`.

use std::fmt;
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Real scalar underlying all matrix and state arithmetic.
///
/// The per-precision tolerance constants live here so that every module
/// draws its thresholds from a single place.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + NumAssign
    + Sum
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
{
    /// Default tolerance bundle for this precision.
    fn tolerances() -> Tolerances<Self>;
}

/// Centralized numerical thresholds.
///
/// All comparisons in the crate are made against members of this bundle; no
/// operation hides a private epsilon. The default values (for `f64`) are:
///
/// | field        | value  | used for                                           |
/// |--------------|--------|----------------------------------------------------|
/// | `ortho`      | 1e-10  | orthonormality, hermiticity, norm and trace checks  |
/// | `recon`      | 1e-9   | spectral/decomposition reconstruction checks        |
/// | `drop`       | 1e-12  | Gram-Schmidt residual below which a system is dependent |
/// | `rank`       | 1e-10  | relative singular-value cutoff for Schmidt ranks    |
/// | `cross`      | 1e-9   | cross-norm entanglement verdict margin              |
/// | `maj`        | 1e-9   | absolute slack on majorization partial sums         |
/// | `eig`        | 1e-12  | eigenvalue cutoff in the entropy sum                |
/// | `coeff_norm` | 1e-8   | Σλ² = 1 check on pure-state Schmidt data            |
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances<T> {
    pub ortho: T,
    pub recon: T,
    pub drop: T,
    pub rank: T,
    pub cross: T,
    pub maj: T,
    pub eig: T,
    pub coeff_norm: T,
}

impl<T: Scalar> Tolerances<T> {
    /// The per-precision defaults from [`Scalar::tolerances`].
    pub fn standard() -> Self {
        T::tolerances()
    }

    /// Every threshold multiplied by `factor` (must be positive).
    pub fn scaled(self, factor: T) -> Self {
        Tolerances {
            ortho: self.ortho * factor,
            recon: self.recon * factor,
            drop: self.drop * factor,
            rank: self.rank * factor,
            cross: self.cross * factor,
            maj: self.maj * factor,
            eig: self.eig * factor,
            coeff_norm: self.coeff_norm * factor,
        }
    }
}

impl<T: Scalar> Default for Tolerances<T> {
    fn default() -> Self {
        Self::standard()
    }
}

impl Scalar for f64 {
    fn tolerances() -> Tolerances<f64> {
        Tolerances {
            ortho: 1e-10,
            recon: 1e-9,
            drop: 1e-12,
            rank: 1e-10,
            cross: 1e-9,
            maj: 1e-9,
            eig: 1e-12,
            coeff_norm: 1e-8,
        }
    }
}

impl Scalar for f32 {
    fn tolerances() -> Tolerances<f32> {
        Tolerances {
            ortho: 1e-4,
            recon: 1e-3,
            drop: 1e-5,
            rank: 1e-4,
            cross: 1e-3,
            maj: 1e-3,
            eig: 1e-6,
            coeff_norm: 1e-2,
        }
    }
}

/// Shorthand for `T::from_f64(x).unwrap()`, for literals known to convert.
pub(crate) fn lit<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("literal representable in scalar type")
}
