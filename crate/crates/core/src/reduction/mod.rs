//! Hardness gadgets: planar 3-SAT formulas compiled into plane graphs with
//! parity constraints, plus the transforms for the all-red and Eulerian
//! variants.

mod assign;
mod build;
mod cnf;
mod compile;
mod connectivity;
pub mod gadgets;
mod tjoin;
mod transforms;

pub use assign::{assignment_to_augmentation, place, polygon_matching};
pub use build::{Assembled, Builder};
pub use cnf::{example_formula, Cnf3Instance, Occurrence, EXAMPLE_TEXT};
pub use compile::{
    compile, ClauseLayout, GadgetInstance, Layout, RibbonWire, VariableLayout, Variant,
};
pub use connectivity::three_connectivity_check;
pub use tjoin::{minimum_t_join, odd_vertices, tree_t_join, MAX_EXACT_T};
pub use transforms::{
    all_red_transform, duplicate_faces, eulerian_transform, eulerize, recolor_all, recolor_faces,
    triangle_sparse_t_join, Transformed,
};
