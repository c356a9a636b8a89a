//! Rainbow-subgraph workbench for edge-colored complete graphs.
//!
//! The crate builds every constructive object involved (Turán-type extremal
//! graphs, bounded-degree bounded-matching extremal families, lower-bound
//! edge-colorings of `K_n`), searches colorings for rainbow copies of stars,
//! matchings and friendship graphs, and provides brute-force oracles that
//! compute Turán numbers, the Chvátal–Hanson function `f(ν, Δ)` and
//! anti-Ramsey numbers exactly on small instances.

pub mod acceptance;
pub mod bits;
pub mod error;
pub mod graph;
pub mod catalog;
pub mod colorings;
pub mod matching;
pub mod oracles;
pub mod rainbow;

pub use error::{Error, Result};
pub use graph::{Edge, Graph};
