//! Construction and certification of triangle-free uniquely 3-edge colorable
//! cubic graphs.
//!
//! The crate covers exhaustive 3-edge coloring and Hamilton cycle enumeration,
//! the star (Y) product of cubic graphs and its inverse along 3-edge cuts,
//! canonical labeling, family generation from `P(9,2)`, and embedding and
//! subdivision certificates for genus bounds.

pub mod error;
pub mod coloring;
pub mod graph;
pub mod hamilton;
pub mod product;
pub mod topology;

pub use error::{Error, Result};
pub use graph::CubicGraph;
