//! The full pipeline instantiated at f32, exercising the generic scalar
//! layer at its loosened tolerances.

use entsort_core::entanglement::entanglement_entropy;
use entsort_core::order::{chain_merge_sort, SdOracle};
use entsort_core::schmidt::{schmidt_of, schmidt_pure};
use entsort_core::states::{bell_state, bell_state_circuit, random_entangled_state, State};
use entsort_core::{PureState32, Tolerances};

#[test]
fn single_precision_pipeline() {
    let tol = Tolerances::<f32>::standard();

    let bell: PureState32 = bell_state(3, 1, 2).unwrap();
    let circuit: PureState32 = bell_state_circuit(3, 1, 2).unwrap();
    assert!((bell.fidelity(&circuit) - 1.0).abs() < tol.ortho);

    let s = schmidt_pure(&bell).unwrap();
    assert_eq!(s.rank(), 3);
    for lambda in s.coefficients() {
        assert!((lambda - 1.0 / 3.0f32.sqrt()).abs() < tol.ortho);
    }

    let e = entanglement_entropy(&bell).unwrap();
    assert!((e - 3.0f32.log2()).abs() < tol.recon);

    let states: Vec<State<f32>> = (0..8)
        .map(|seed| State::Pure(random_entangled_state(2, 0, 0, seed).unwrap()))
        .collect();
    let data: Vec<_> = states.iter().map(|s| schmidt_of(s).unwrap()).collect();
    let poset = chain_merge_sort(&data, SdOracle::default()).unwrap();
    let total: usize = poset.buckets.iter().map(|b| b.members.len()).sum();
    assert_eq!(total, 8);
}
