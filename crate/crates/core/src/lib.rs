//! Minimum geodesic transversals.
//!
//! A geodesic transversal of a graph is a vertex set meeting every maximal
//! geodesic (shortest path that cannot be extended at either end). This crate
//! provides an exact branch-and-bound oracle for small graphs, linear-time
//! solvers for trees and spread cacti, the closed formula for cycles with
//! pendant leaves, the 3-geodesic reduction gadget, and geodesic centrality.

pub mod error;
pub mod families;
pub mod generate;
pub mod geodesics;
pub mod graph;
pub mod oracle;
pub mod structure;
pub mod tree;
pub mod cycle;
pub mod cactus;
pub mod reduction;
mod ring;

pub use error::{Error, ParseErrorKind, Result};
pub use graph::{parse_edge_list, Graph, Vertex};
