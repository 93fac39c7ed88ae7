//! Ordering of bipartite quantum states by entanglement content.
//!
//! Two orderings are provided over states of a composite system A⊗B:
//!
//! - a total order by the von Neumann entropy of the reduced state
//!   ([`entanglement`]), and
//! - a semiorder from the canonical Schmidt decomposition — rank first,
//!   then majorization of squared coefficients ([`schmidt`], [`order`]) —
//!   under which incomparable pairs are legal and the sorted result is a
//!   poset of rank buckets holding chains.
//!
//! Pure states decompose by SVD of the reshaped amplitude vector; density
//! matrices decompose in Hilbert–Schmidt space over hermitean operator
//! bases. [`states`] constructs the usual test ensembles (qudit Bell
//! states, seeded partially entangled states, product states, separable
//! mixtures) and [`numerics`] supplies the dense complex linear algebra
//! underneath.
//!
//! Everything is generic over the real scalar through [`Scalar`]
//! (`f64` and `f32` ship with tolerance bundles); the aliases below pin
//! the common double-precision types.
//!
//! # Example
//!
//! ```
//! use entsort_core::entanglement::entanglement_entropy;
//! use entsort_core::order::{chain_merge_sort, SdOracle};
//! use entsort_core::schmidt::schmidt_of;
//! use entsort_core::states::{bell_state, random_entangled_state, State, StateError};
//!
//! // a maximally entangled qutrit pair scores log2(3) bits
//! let bell = bell_state::<f64>(3, 0, 0)?;
//! assert!((entanglement_entropy(&bell)? - 3f64.log2()).abs() < 1e-10);
//!
//! // poset-sort a seeded ensemble together with the Bell state
//! let mut states: Vec<State<f64>> = (0..8)
//!     .map(|seed| Ok(State::Pure(random_entangled_state(3, 0, 0, seed)?)))
//!     .collect::<Result<_, StateError>>()?;
//! states.push(State::Pure(bell));
//!
//! let data = states.iter().map(schmidt_of).collect::<Result<Vec<_>, _>>()?;
//! let poset = chain_merge_sort(&data, SdOracle::default())?;
//! assert_eq!(poset.buckets.len(), 1); // every d=3 state here has rank 3
//! assert!(poset.query_count > 0);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod entanglement;
pub mod numerics;
pub mod order;
pub mod scalar;
pub mod schmidt;
pub mod states;

#[cfg(test)]
pub(crate) mod test_util;

pub use scalar::{Scalar, Tolerances};

/// Concrete double-precision aliases.
pub type Matrix64 = numerics::ComplexMatrix<f64>;
pub type PureState64 = states::PureState<f64>;
pub type DensityState64 = states::DensityState<f64>;
/// Concrete single-precision aliases.
pub type Matrix32 = numerics::ComplexMatrix<f32>;
pub type PureState32 = states::PureState<f32>;
pub type DensityState32 = states::DensityState<f32>;
