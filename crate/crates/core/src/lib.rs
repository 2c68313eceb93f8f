//! Plane graph augmentation under parity constraints.
//!
//! A host graph is drawn in the plane and every vertex carries a parity
//! constraint. Vertices whose current degree has the wrong parity are *red*.
//! An augmentation adds edges, drawn without crossings, until every red
//! vertex has odd added degree and every blue vertex even added degree.
//!
//! Vertex ids are 0-based throughout the library; the JSON formats in
//! [`io`] use 1-based ids.

pub mod chords;
pub mod corpus;
pub mod embed;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod mop;
pub mod oracle;
pub mod reduction;
pub mod verify;

pub use chords::chords_interleave;
pub use error::{Error, Result};
pub use geometry::{GeometricGraph, Point};
pub use graph::{Augmentation, CyclicMop, Edge, ParityColoring, PlaneGraph};
pub use mop::{
    check_augmentable, construct_augmentation, diagonals_parallel, min_augmentation_dp,
    star_all_but_two, zigzag_decomposition, zigzag_matching, AugmentabilityWitness,
};
pub use verify::{
    path_eulerian_check, verify_augmentation, verify_geometric_augmentation,
    verify_plane_augmentation, Verdict, Violation,
};
