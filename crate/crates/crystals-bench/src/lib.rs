//! Shared setup for the benchmarks: the models and seeds they exercise.

use crystals::cartan::{DominantPartition, Rank};

pub fn rank(n: usize) -> Rank {
    Rank::new(n).unwrap()
}

pub fn partition(n: usize, parts: &[i64]) -> DominantPartition {
    DominantPartition::new(rank(n), parts).unwrap()
}
