//! The entanglement semiorder: a pairwise query oracle over Schmidt data
//! and poset sorting by chain-merge with query-count instrumentation.
//!
//! The induced relation is a semiorder, not a total order — incomparable
//! pairs are legal outcomes, and the poset structure (rank buckets holding
//! chains) is the faithful result of sorting under it.

mod chain;
mod oracle;

pub use chain::{
    chain_insert, chain_merge_sort, chain_merge_sort_with, rank_partition, ChainMergeIndex,
    ChainMergeOptions, PosetResult, RankBucket, SortedBucket,
};
pub use oracle::{sd_query_oracle, Comparison, QueryCounter, QueryOracle, SdOracle};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum OrderError {
    #[error("pure-state Schmidt coefficients must satisfy Σλ² = 1 (got {sum_sqr:.10})")]
    NotNormalized { sum_sqr: f64 },
}
