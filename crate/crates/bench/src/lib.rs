//! Instances shared by the benchmarks.

use paraug::corpus::random_instance;
use paraug::{CyclicMop, ParityColoring};

/// Seeded random MOP with a random even coloring.
pub fn instance(n: usize, seed: u64) -> (CyclicMop, ParityColoring) {
    random_instance(n, seed)
}
