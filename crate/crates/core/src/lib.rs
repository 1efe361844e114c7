//! Exact enumeration of Tamari intervals and of the faces of the cellular
//! diagonal of the associahedron, closed-form product formulas for their
//! counts, and a truncated power-series kernel for the generating functions.

pub mod catalytic;
pub mod diagonal;
pub mod equation;
pub mod error;
pub mod formulas;
pub mod fusy_humbert;
pub mod lagrange;
pub mod lattice;
pub mod mpoly;
pub mod paths;
pub mod pde;
pub mod poset;
pub mod report;
pub mod schroeder;
pub mod series;
pub mod stats;
pub mod telescoping;
pub mod trees;
pub mod verify;
pub mod zpoly;

pub use error::{Error, Result};
pub use poset::{Budget, Hasse, DEFAULT_BUDGET};
pub use stats::{Grid, StatTable};
pub use trees::{
    agree, all_trees, canopy_by, decompose_interval, reassemble, tamari_leq, BinaryTree, CanopyRule, CanopyVector,
    Shape, Sign,
};
