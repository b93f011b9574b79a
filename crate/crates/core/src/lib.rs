//! Graphs, the transforms `co`, `L`, `R`, `K`, the boundary classes built from
//! them, exact solvers and checked bi-reductions between graph problems.
//!
//! Graphs have at most 64 vertices and store adjacency as bit rows.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod classes;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod iso;
pub mod reductions;
pub mod solvers;
pub mod transforms;
pub mod weighted;

pub use classes::{AnyGraph, ClassId};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use reductions::{Reduction, ReductionId};
pub use solvers::{Instance, Problem};
pub use weighted::{Weight, WeightedGraph};
