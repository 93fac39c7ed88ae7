//! The pairwise comparison oracle inducing the entanglement semiorder.

use super::OrderError;
use crate::scalar::Scalar;
use crate::schmidt::{SchmidtData, StateKind};

/// Outcome of one oracle query.
///
/// `Precedes` means the first state is no less entangled than the second:
/// a strictly larger Schmidt rank, or — at equal rank — squared
/// coefficients majorized by the second state's. Equal coefficient vectors
/// compare as `Precedes` in both directions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    /// First argument precedes (ρ₁ ≺ ρ₂).
    Precedes,
    /// Second argument precedes (ρ₂ ≺ ρ₁).
    Succeeds,
    /// Neither majorizes the other.
    NonComparable,
}

/// Anything that can answer semiorder queries over Schmidt data. The
/// receiver is mutable so wrappers can count or cache.
pub trait QueryOracle<T: Scalar> {
    fn query(&mut self, a: &SchmidtData<T>, b: &SchmidtData<T>) -> Result<Comparison, OrderError>;
}

/// The Schmidt-data oracle: rank comparison first, then majorization of
/// squared coefficients at equal rank.
#[derive(Clone, Copy, Debug)]
pub struct SdOracle<T> {
    /// Absolute slack on each partial-sum comparison.
    pub maj_tol: T,
    /// Allowed deviation of Σλ² from 1 for pure-state data.
    pub norm_tol: T,
}

impl<T: Scalar> Default for SdOracle<T> {
    fn default() -> Self {
        let t = T::tolerances();
        Self {
            maj_tol: t.maj,
            norm_tol: t.coeff_norm,
        }
    }
}

impl<T: Scalar> SdOracle<T> {
    pub fn compare(
        &self,
        a: &SchmidtData<T>,
        b: &SchmidtData<T>,
    ) -> Result<Comparison, OrderError> {
        self.validate(a)?;
        self.validate(b)?;

        if a.rank > b.rank {
            return Ok(Comparison::Precedes);
        }
        if b.rank > a.rank {
            return Ok(Comparison::Succeeds);
        }

        // equal rank: compare cumulative sums of squared coefficients
        let mut sum_a = T::zero();
        let mut sum_b = T::zero();
        let mut a_majorized = true; // every prefix of a ≤ prefix of b
        let mut b_majorized = true;
        for (ca, cb) in a.coefficients.iter().zip(&b.coefficients) {
            sum_a += *ca * *ca;
            sum_b += *cb * *cb;
            if sum_a > sum_b + self.maj_tol {
                a_majorized = false;
            }
            if sum_b > sum_a + self.maj_tol {
                b_majorized = false;
            }
        }
        if a_majorized {
            Ok(Comparison::Precedes)
        } else if b_majorized {
            Ok(Comparison::Succeeds)
        } else {
            Ok(Comparison::NonComparable)
        }
    }

    fn validate(&self, data: &SchmidtData<T>) -> Result<(), OrderError> {
        debug_assert_eq!(data.rank, data.coefficients.len());
        debug_assert!(
            data.coefficients.windows(2).all(|w| w[0] >= w[1])
                && data.coefficients.iter().all(|c| *c > T::zero()),
            "Schmidt coefficients must be positive and nonincreasing"
        );
        if data.kind == StateKind::Pure {
            let sum_sqr: T = data.coefficients.iter().map(|c| *c * *c).sum();
            if (sum_sqr - T::one()).abs() > self.norm_tol {
                return Err(OrderError::NotNormalized {
                    sum_sqr: sum_sqr.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        Ok(())
    }
}

impl<T: Scalar> QueryOracle<T> for SdOracle<T> {
    fn query(&mut self, a: &SchmidtData<T>, b: &SchmidtData<T>) -> Result<Comparison, OrderError> {
        self.compare(a, b)
    }
}

/// One-shot query with the default tolerances.
pub fn sd_query_oracle<T: Scalar>(
    a: &SchmidtData<T>,
    b: &SchmidtData<T>,
) -> Result<Comparison, OrderError> {
    SdOracle::default().compare(a, b)
}

/// Wrapper counting every query that passes through it.
#[derive(Clone, Debug)]
pub struct QueryCounter<O> {
    inner: O,
    count: u64,
}

impl<O> QueryCounter<O> {
    pub fn new(inner: O) -> Self {
        Self { inner, count: 0 }
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn reset(&mut self) {
        self.count = 0;
    }

    pub fn into_inner(self) -> O {
        self.inner
    }
}

impl<T: Scalar, O: QueryOracle<T>> QueryOracle<T> for QueryCounter<O> {
    fn query(&mut self, a: &SchmidtData<T>, b: &SchmidtData<T>) -> Result<Comparison, OrderError> {
        self.count += 1;
        self.inner.query(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pure(coeff_sqr: &[f64]) -> SchmidtData<f64> {
        let mut coefficients: Vec<f64> = coeff_sqr.iter().map(|c| c.sqrt()).collect();
        coefficients.sort_by(|a, b| b.partial_cmp(a).unwrap());
        SchmidtData {
            kind: StateKind::Pure,
            rank: coefficients.len(),
            coefficients,
        }
    }

    #[test]
    fn higher_rank_precedes() {
        let bell = pure(&[0.5, 0.5]);
        let sep = pure(&[1.0]);
        assert_eq!(sd_query_oracle(&bell, &sep).unwrap(), Comparison::Precedes);
        assert_eq!(sd_query_oracle(&sep, &bell).unwrap(), Comparison::Succeeds);
    }

    #[test]
    fn equal_data_precedes_reflexively() {
        let s = pure(&[0.6, 0.4]);
        assert_eq!(sd_query_oracle(&s, &s).unwrap(), Comparison::Precedes);
    }

    #[test]
    fn crossing_partial_sums_are_non_comparable() {
        // cumsums (0.5, 0.9, 1.0) vs (0.6, 0.85, 1.0) cross
        let a = pure(&[0.5, 0.4, 0.1]);
        let b = pure(&[0.6, 0.25, 0.15]);
        assert_eq!(sd_query_oracle(&a, &b).unwrap(), Comparison::NonComparable);
        assert_eq!(sd_query_oracle(&b, &a).unwrap(), Comparison::NonComparable);
    }

    #[test]
    fn majorized_vector_precedes() {
        // cumsums (0.5, 0.75, 1.0) ≤ (0.6, 0.8, 1.0)
        let a = pure(&[0.5, 0.25, 0.25]);
        let b = pure(&[0.6, 0.2, 0.2]);
        assert_eq!(sd_query_oracle(&a, &b).unwrap(), Comparison::Precedes);
        assert_eq!(sd_query_oracle(&b, &a).unwrap(), Comparison::Succeeds);
    }

    #[test]
    fn non_normalized_pure_data_is_rejected() {
        let bad = SchmidtData {
            kind: StateKind::Pure,
            rank: 2,
            coefficients: vec![0.7, 0.5],
        };
        let good = pure(&[0.5, 0.5]);
        assert!(matches!(
            sd_query_oracle(&bad, &good),
            Err(OrderError::NotNormalized { .. })
        ));
    }

    #[test]
    fn density_data_skips_normalization() {
        // operator coefficients of a mixed state need not square-sum to 1
        let mixed = SchmidtData {
            kind: StateKind::Density,
            rank: 1,
            coefficients: vec![0.5],
        };
        assert_eq!(
            sd_query_oracle(&mixed, &mixed).unwrap(),
            Comparison::Precedes
        );
    }

    #[test]
    fn counter_counts_and_resets() {
        let mut counter = QueryCounter::new(SdOracle::<f64>::default());
        assert_eq!(counter.count(), 0);
        let a = pure(&[0.5, 0.5]);
        let b = pure(&[0.9, 0.1]);
        counter.query(&a, &b).unwrap();
        counter.query(&b, &a).unwrap();
        assert_eq!(counter.count(), 2);
        counter.reset();
        assert_eq!(counter.count(), 0);
    }
}
