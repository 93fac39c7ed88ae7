//! Rank partitioning and incremental chain-merge construction of the
//! entanglement poset.
//!
//! States are bucketed by Schmidt rank; inside a bucket the semiorder is
//! materialized as a chain decomposition. Each new state runs two binary
//! searches per existing chain — largest element it dominates, smallest
//! element dominating it — and is placed where it keeps some chain totally
//! ordered, or opens a new chain. Equal states chain in input order.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand_chacha::{rand_core::SeedableRng, ChaCha8Rng};

use super::oracle::{Comparison, QueryCounter, QueryOracle};
use super::OrderError;
use crate::scalar::Scalar;
use crate::schmidt::SchmidtData;

/// States sharing one Schmidt rank, in input order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankBucket {
    pub rank: usize,
    pub members: Vec<usize>,
}

/// Group state ids by Schmidt rank, buckets sorted by increasing rank.
pub fn rank_partition<T: Scalar>(data: &[SchmidtData<T>]) -> Vec<RankBucket> {
    let mut by_rank: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (id, d) in data.iter().enumerate() {
        by_rank.entry(d.rank).or_default().push(id);
    }
    by_rank
        .into_iter()
        .map(|(rank, members)| RankBucket { rank, members })
        .collect()
}

/// Chain decomposition of one rank bucket plus per-state dominance records.
///
/// Chains hold state ids ordered ascending by the semiorder: consecutive
/// elements satisfy `oracle(earlier, later) = Precedes`. For every inserted
/// state the structure records, per chain existing at insertion time, the
/// id of the largest chain element then known to precede it. Ids rather
/// than positions are stored because later mid-chain insertions shift
/// positions; a recorded dominator remains a true dominator forever.
#[derive(Clone, Debug, Default)]
pub struct ChainMergeIndex {
    chains: Vec<Vec<usize>>,
    dominance: BTreeMap<usize, Vec<Option<usize>>>,
}

impl ChainMergeIndex {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn chains(&self) -> &[Vec<usize>] {
        &self.chains
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    /// Number of states across all chains.
    pub fn len(&self) -> usize {
        self.chains.iter().map(Vec::len).sum()
    }

    /// Dominance row of `state`: entry `c` is the id of the largest element
    /// of chain `c` that preceded the state when it was inserted. Rows do
    /// not cover chains created after the state's insertion.
    pub fn dominance_ids(&self, state: usize) -> Option<&[Option<usize>]> {
        self.dominance.get(&state).map(Vec::as_slice)
    }

    /// The recorded dominator of `state` in `chain`, as a position in the
    /// final chain layout.
    pub fn dominance_position(&self, state: usize, chain: usize) -> Option<usize> {
        let id = (*self.dominance.get(&state)?.get(chain)?)?;
        self.chains[chain].iter().position(|&x| x == id)
    }
}

/// Insert `s` into the decomposition.
///
/// Runs the two binary searches against every chain (their outcomes feed
/// the dominance table), then places `s`: appended to the first chain whose
/// top it dominates, inserted where it sits between comparable neighbours,
/// or opening a new chain when it fits nowhere.
pub fn chain_insert<T: Scalar, O: QueryOracle<T>>(
    index: &mut ChainMergeIndex,
    s: usize,
    data: &[SchmidtData<T>],
    oracle: &mut O,
) -> Result<(), OrderError> {
    // per chain: (insertion position if the chain stays totally ordered,
    // id of the largest dominated element)
    let mut fits: Vec<Option<usize>> = Vec::with_capacity(index.chains.len());
    let mut dominance_row: Vec<Option<usize>> = Vec::with_capacity(index.chains.len());

    for chain in &index.chains {
        // I2: elements preceding s form a prefix; count them
        let dominated = prefix_len(chain, |id| {
            Ok(oracle.query(&data[id], &data[s])? == Comparison::Precedes)
        })?;
        // I1: elements dominating s form a suffix; find its start
        let dominating_from = suffix_start(chain, |id| {
            Ok(oracle.query(&data[s], &data[id])? == Comparison::Precedes)
        })?;

        dominance_row.push(dominated.checked_sub(1).map(|j| chain[j]));
        // the gap [dominated, dominating_from) holds elements incomparable
        // with s; insertion keeps the chain a chain only when it is empty
        fits.push((dominating_from <= dominated).then_some(dominated));
    }

    let extends_top = index
        .chains
        .iter()
        .zip(&fits)
        .position(|(chain, fit)| *fit == Some(chain.len()));
    let slot = extends_top.or_else(|| fits.iter().position(Option::is_some));

    match slot {
        Some(c) => {
            let pos = fits[c].expect("selected chain fits");
            index.chains[c].insert(pos, s);
        }
        None => index.chains.push(vec![s]),
    }
    index.dominance.insert(s, dominance_row);
    Ok(())
}

/// Length of the leading run where the (monotone) predicate holds.
fn prefix_len(
    chain: &[usize],
    mut pred: impl FnMut(usize) -> Result<bool, OrderError>,
) -> Result<usize, OrderError> {
    let mut lo = 0;
    let mut hi = chain.len();
    while lo < hi {
        let mid = (lo + hi) / 2;
        if pred(chain[mid])? {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// First index of the trailing run where the (monotone) predicate holds;
/// `chain.len()` when it never does.
fn suffix_start(
    chain: &[usize],
    mut pred: impl FnMut(usize) -> Result<bool, OrderError>,
) -> Result<usize, OrderError> {
    let mut lo = 0;
    let mut hi = chain.len();
    while lo < hi {
        let mid = (lo + hi) / 2;
        if pred(chain[mid])? {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(lo)
}

/// One rank bucket with its chain decomposition.
#[derive(Clone, Debug)]
pub struct SortedBucket {
    pub rank: usize,
    /// Bucket members in input order.
    pub members: Vec<usize>,
    pub index: ChainMergeIndex,
}

/// Output of [`chain_merge_sort`]: buckets by increasing rank, each with
/// its chain decomposition, plus the total number of oracle queries spent.
#[derive(Clone, Debug)]
pub struct PosetResult {
    pub buckets: Vec<SortedBucket>,
    pub query_count: u64,
}

/// Construction options. The default processes bucket members in input
/// order, which makes results fully deterministic; a seeded shuffle is
/// available for experiments on insertion-order sensitivity.
#[derive(Clone, Copy, Debug, Default)]
pub struct ChainMergeOptions {
    pub shuffle_seed: Option<u64>,
}

/// Partition by rank, then build each bucket's chain decomposition by
/// incremental insertion. Every oracle call is counted.
pub fn chain_merge_sort<T: Scalar, O: QueryOracle<T>>(
    data: &[SchmidtData<T>],
    oracle: O,
) -> Result<PosetResult, OrderError> {
    chain_merge_sort_with(data, oracle, ChainMergeOptions::default())
}

pub fn chain_merge_sort_with<T: Scalar, O: QueryOracle<T>>(
    data: &[SchmidtData<T>],
    oracle: O,
    options: ChainMergeOptions,
) -> Result<PosetResult, OrderError> {
    let mut counter = QueryCounter::new(oracle);
    let mut buckets = Vec::new();
    for bucket in rank_partition(data) {
        let mut order = bucket.members.clone();
        if let Some(seed) = options.shuffle_seed {
            order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed ^ bucket.rank as u64));
        }
        let mut index = ChainMergeIndex::new();
        for s in order {
            chain_insert(&mut index, s, data, &mut counter)?;
        }
        buckets.push(SortedBucket {
            rank: bucket.rank,
            members: bucket.members,
            index,
        });
    }
    Ok(PosetResult {
        buckets,
        query_count: counter.count(),
    })
}
