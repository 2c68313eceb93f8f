//! Algorithms for cyclic maximal outerplane hosts.

mod characterize;
pub mod dp;
mod matching;

pub use characterize::{
    check_augmentable, construct_augmentation, diagonals_parallel, AugmentabilityWitness, Blocked,
};
pub use dp::{dp_tables, min_augmentation_dp, Cost, DpTables, INFINITY};
pub use matching::{
    star_all_but_two, zigzag_decomposition, zigzag_matching, zigzag_matchings, MatchingKind,
    ZigzagResult,
};
