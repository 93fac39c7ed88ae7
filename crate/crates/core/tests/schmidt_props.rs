//! Decomposition invariants over seeded random states.

use entsort_core::numerics::{eigh, partial_trace, Subsystem};
use entsort_core::schmidt::{schmidt_operator, schmidt_pure};
use entsort_core::states::{
    density_from_pure, random_density_state, random_entangled_state, random_separable_mixture,
};

#[test]
fn pure_coefficients_square_to_reduced_spectrum() {
    for seed in 0..40u64 {
        let d = 2 + (seed % 3) as usize;
        let psi = random_entangled_state::<f64>(d, (seed % d as u64) as usize, 0, seed).unwrap();
        let s = schmidt_pure(&psi).unwrap();

        let sum_sq: f64 = s.coefficients().iter().map(|l| l * l).sum();
        assert!((sum_sq - 1.0).abs() < 1e-10, "seed {seed}");

        let rho = density_from_pure(&psi);
        let reduced = partial_trace(rho.matrix(), d, d, Subsystem::A).unwrap();
        let (evals, _) = eigh(&reduced).unwrap();
        // compare sorted multisets; eigh pads with (near-)zeros beyond rank
        for (k, e) in evals.iter().enumerate() {
            let lambda_sq = s.coefficients().get(k).map(|l| l * l).unwrap_or(0.0);
            assert!((lambda_sq - e).abs() < 1e-9, "seed {seed} position {k}");
        }
        assert!(s.rank() <= d);
    }
}

#[test]
fn operator_reconstruction_over_random_densities() {
    for seed in 0..25u64 {
        let (da, db) = match seed % 4 {
            0 => (2, 2),
            1 => (2, 3),
            2 => (3, 2),
            _ => (3, 3),
        };
        let rho = random_density_state::<f64>(da, db, seed).unwrap();
        let s = schmidt_operator(&rho).unwrap();
        let err = s.reconstruct().sub(rho.matrix()).frobenius_norm();
        assert!(err <= 1e-8, "seed {seed}: reconstruction error {err}");
        assert!(s.rank() <= da * da * db * db);
    }
}

#[test]
fn operator_rank_of_pure_projector_is_squared() {
    for seed in 0..15u64 {
        let psi = random_entangled_state::<f64>(3, 0, (seed % 3) as usize, seed).unwrap();
        let pure = schmidt_pure(&psi).unwrap();
        let op = schmidt_operator(&density_from_pure(&psi)).unwrap();
        assert_eq!(op.rank(), pure.rank().pow(2), "seed {seed}");

        let mut products: Vec<f64> = pure
            .coefficients()
            .iter()
            .flat_map(|a| pure.coefficients().iter().map(move |b| a * b))
            .collect();
        products.sort_by(|a, b| b.partial_cmp(a).unwrap());
        for (got, expect) in op.coefficients().iter().zip(&products) {
            assert!((got - expect).abs() < 1e-9, "seed {seed}");
        }
    }
}

#[test]
fn separable_mixtures_respect_cross_norm_bound() {
    for seed in 100..140u64 {
        let rho = random_separable_mixture::<f64>(2, 2, 10, seed).unwrap();
        let sum = schmidt_operator(&rho).unwrap().coefficient_sum();
        assert!(sum <= 1.0 + 1e-9, "seed {seed}: Σλ = {sum}");
    }
}
