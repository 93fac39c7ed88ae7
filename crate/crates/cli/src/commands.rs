//! Command implementations behind the CLI surface. Everything here is a
//! plain function over in-memory data so the integration tests can drive
//! the commands without spawning processes.

use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use entsort_core::entanglement::{lsea_sort, reduced_entropy_with, EntanglementError, LseaError};
use entsort_core::order::{chain_merge_sort, OrderError, SdOracle};
use entsort_core::schmidt::{
    cross_norm_check_with, schmidt_of_with, CrossNormVerdict, SchmidtData, SchmidtError,
};
use entsort_core::states::{
    bell_state, product_state, random_entangled_state, random_separable_mixture, State, StateError,
};
use entsort_core::Tolerances;

use crate::format::{StateFile, StateRecord};

#[derive(Debug, Error)]
pub enum CommandError {
    #[error("no state with id {id:?} in the input")]
    MissingId { id: String },
    #[error("sizes must be nonempty and strictly ascending")]
    BadSizes,
    #[error(transparent)]
    State(#[from] StateError),
    #[error(transparent)]
    Schmidt(#[from] SchmidtError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Entropy(#[from] EntanglementError),
    #[error(transparent)]
    Lsea(#[from] LseaError),
}

/// One state that could not be processed; the run continues without it.
#[derive(Clone, Debug, Serialize)]
pub struct StateFailure {
    pub id: String,
    pub error: String,
}

// ---------------------------------------------------------------------------
// generate

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenerateKind {
    Bell,
    Random,
    Product,
    Mixture,
}

#[derive(Clone, Debug)]
pub struct GenerateSpec {
    pub kind: GenerateKind,
    pub d: usize,
    pub count: usize,
    pub seed: u64,
}

/// Build a deterministic ensemble file. Bell and product specs enumerate
/// `(p, q)` cyclically; random and mixture specs derive one seed per state
/// from the base seed.
pub fn generate(spec: &GenerateSpec) -> Result<StateFile, CommandError> {
    let d = spec.d;
    if d < 2 {
        return Err(CommandError::State(StateError::LevelCount { d }));
    }
    let mut records = Vec::with_capacity(spec.count);
    for k in 0..spec.count {
        let idx = k % (d * d);
        let (p, q) = (idx / d, idx % d);
        let state_seed = spec.seed.wrapping_add(k as u64);
        let record = match spec.kind {
            GenerateKind::Bell => {
                let psi = bell_state::<f64>(d, p, q)?;
                StateRecord::from_state(format!("bell-{k:04}-p{p}-q{q}"), &State::Pure(psi))
            }
            GenerateKind::Random => {
                let psi = random_entangled_state::<f64>(d, q, p, state_seed)?;
                StateRecord::from_state(format!("random-{k:04}"), &State::Pure(psi))
            }
            GenerateKind::Product => {
                let psi = product_state::<f64>(&basis_vector(d, p), &basis_vector(d, q))?;
                StateRecord::from_state(format!("product-{k:04}-{p}{q}"), &State::Pure(psi))
            }
            GenerateKind::Mixture => {
                let rho = random_separable_mixture::<f64>(d, d, 10, state_seed)?;
                StateRecord::from_state(format!("mixture-{k:04}"), &State::Density(rho))
            }
        };
        records.push(record);
    }
    Ok(StateFile::new(records))
}

fn basis_vector(dim: usize, k: usize) -> Vec<num_complex::Complex<f64>> {
    let mut v = vec![num_complex::Complex::new(0.0, 0.0); dim];
    v[k] = num_complex::Complex::new(1.0, 0.0);
    v
}

// ---------------------------------------------------------------------------
// loading

pub struct LoadedStates {
    pub ids: Vec<String>,
    pub states: Vec<State<f64>>,
    pub failures: Vec<StateFailure>,
}

/// Deserialize every record, applying norm/trace validation; invalid
/// records are reported and skipped.
pub fn load_states(file: &StateFile, tol: &Tolerances<f64>) -> LoadedStates {
    let mut ids = Vec::new();
    let mut states = Vec::new();
    let mut failures = Vec::new();
    for record in &file.records {
        match record.to_state(tol) {
            Ok(state) => {
                ids.push(record.id.clone());
                states.push(state);
            }
            Err(error) => failures.push(StateFailure {
                id: record.id.clone(),
                error: error.to_string(),
            }),
        }
    }
    LoadedStates {
        ids,
        states,
        failures,
    }
}

// ---------------------------------------------------------------------------
// schmidt

#[derive(Clone, Debug, Serialize)]
pub struct SchmidtReport {
    pub id: String,
    pub kind: &'static str,
    pub rank: usize,
    pub coefficients: Vec<f64>,
    pub coefficient_sum: f64,
    /// Pure states only: entanglement entropy in bits.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entropy: Option<f64>,
    /// Density states only: cross-norm verdict.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cross_norm: Option<&'static str>,
}

pub fn schmidt_report(
    file: &StateFile,
    id: &str,
    tol: &Tolerances<f64>,
) -> Result<SchmidtReport, CommandError> {
    let record = file
        .find(id)
        .ok_or_else(|| CommandError::MissingId { id: id.to_string() })?;
    let state = record.to_state(tol)?;
    let data = schmidt_of_with(&state, tol.rank)?;
    let coefficient_sum = data.coefficients.iter().sum();

    let (entropy, cross_norm) = match &state {
        State::Pure(_) => (Some(reduced_entropy_with(&state, tol)?), None),
        State::Density(rho) => {
            let verdict = match cross_norm_check_with(rho, tol.cross)? {
                CrossNormVerdict::Entangled => "entangled",
                CrossNormVerdict::Inconclusive => "inconclusive",
            };
            (None, Some(verdict))
        }
    };

    Ok(SchmidtReport {
        id: id.to_string(),
        kind: data.kind.label(),
        rank: data.rank,
        coefficients: data.coefficients,
        coefficient_sum,
        entropy,
        cross_norm,
    })
}

// ---------------------------------------------------------------------------
// sort-linear

#[derive(Clone, Debug, Serialize)]
pub struct LinearRow {
    pub id: String,
    pub entropy: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct LinearReport {
    pub rows: Vec<LinearRow>,
    pub failures: Vec<StateFailure>,
}

/// Entropy of every loadable state, stably sorted ascending. Failures are
/// collected, not fatal.
pub fn sort_linear(file: &StateFile, tol: &Tolerances<f64>) -> LinearReport {
    let loaded = load_states(file, tol);
    let mut failures = loaded.failures;
    let mut rows = Vec::with_capacity(loaded.states.len());
    for (id, state) in loaded.ids.iter().zip(&loaded.states) {
        match reduced_entropy_with(state, tol) {
            Ok(entropy) => rows.push(LinearRow {
                id: id.clone(),
                entropy,
            }),
            Err(error) => failures.push(StateFailure {
                id: id.clone(),
                error: error.to_string(),
            }),
        }
    }
    rows.sort_by(|a, b| a.entropy.partial_cmp(&b.entropy).expect("finite entropies"));
    LinearReport { rows, failures }
}

// ---------------------------------------------------------------------------
// sort-poset

#[derive(Clone, Debug, Serialize)]
pub struct PosetBucketReport {
    pub rank: usize,
    pub chains: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PosetReport {
    pub buckets: Vec<PosetBucketReport>,
    pub query_count: u64,
    pub failures: Vec<StateFailure>,
}

/// Rank buckets and chains over every loadable state, plus the number of
/// oracle queries spent.
pub fn sort_poset(file: &StateFile, tol: &Tolerances<f64>) -> Result<PosetReport, CommandError> {
    let loaded = load_states(file, tol);
    let mut failures = loaded.failures;
    let mut ids = Vec::new();
    let mut data: Vec<SchmidtData<f64>> = Vec::new();
    for (id, state) in loaded.ids.iter().zip(&loaded.states) {
        match schmidt_of_with(state, tol.rank) {
            Ok(d) => {
                ids.push(id.clone());
                data.push(d);
            }
            Err(error) => failures.push(StateFailure {
                id: id.clone(),
                error: error.to_string(),
            }),
        }
    }

    let oracle = SdOracle {
        maj_tol: tol.maj,
        norm_tol: tol.coeff_norm,
    };
    let result = chain_merge_sort(&data, oracle)?;
    let buckets = result
        .buckets
        .iter()
        .map(|bucket| PosetBucketReport {
            rank: bucket.rank,
            chains: bucket
                .index
                .chains()
                .iter()
                .map(|chain| chain.iter().map(|&s| ids[s].clone()).collect())
                .collect(),
        })
        .collect();

    Ok(PosetReport {
        buckets,
        query_count: result.query_count,
        failures,
    })
}

// ---------------------------------------------------------------------------
// bench

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BenchMode {
    Linear,
    Poset,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub n_registers: usize,
    pub wall_time_seconds: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub query_count: Option<u64>,
}

/// Time the sort (generation excluded) over seeded random ensembles of the
/// given sizes. Each size is measured `reps` times; the reported wall time
/// is the median.
pub fn bench(
    mode: BenchMode,
    sizes: &[usize],
    d: usize,
    seed: u64,
    reps: usize,
) -> Result<Vec<BenchRow>, CommandError> {
    if sizes.is_empty() || sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CommandError::BadSizes);
    }
    let reps = reps.max(1);
    let mut rows = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let states: Vec<State<f64>> = (0..n)
            .map(|k| {
                let idx = k % (d * d);
                let (p, q) = (idx / d, idx % d);
                random_entangled_state::<f64>(d, q, p, seed.wrapping_add(k as u64)).map(State::Pure)
            })
            .collect::<Result<_, _>>()?;

        let mut times = Vec::with_capacity(reps);
        let mut query_count = None;
        for _ in 0..reps {
            match mode {
                BenchMode::Linear => {
                    let start = Instant::now();
                    let records = lsea_sort(&states)?;
                    times.push(start.elapsed());
                    debug_assert_eq!(records.len(), n);
                }
                BenchMode::Poset => {
                    let start = Instant::now();
                    let data: Vec<SchmidtData<f64>> = states
                        .iter()
                        .map(schmidt_of_with_default)
                        .collect::<Result<_, _>>()?;
                    let result = chain_merge_sort(&data, SdOracle::default())?;
                    times.push(start.elapsed());
                    query_count = Some(result.query_count);
                }
            }
        }
        times.sort();
        rows.push(BenchRow {
            n_registers: n,
            wall_time_seconds: times[times.len() / 2].as_secs_f64(),
            query_count,
        });
    }
    Ok(rows)
}

fn schmidt_of_with_default(state: &State<f64>) -> Result<SchmidtData<f64>, SchmidtError> {
    schmidt_of_with(state, Tolerances::<f64>::standard().rank)
}
