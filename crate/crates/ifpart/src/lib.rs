//! Plane-graph combinatorics around vertex partitions into an independent
//! set and a forest: embedding core, cycle-structure taxonomy, coloring
//! procedures, exact search, reducible-configuration machinery and a corpus
//! harness.

pub mod cycle_structures;
pub mod plane_graph;

pub use plane_graph::{CycleRef, FaceId, GraphError, PlaneGraph};
