//! Status and radius of trees and connected graphs.
//!
//! The crate computes the classical centrality quantities (status, radius,
//! center, median, centroid), constructs and recognizes the extremal tree
//! families that attain the sharp bounds for fixed order and maximum degree,
//! implements the leaf-relocation transformation with centroid prediction,
//! and ships an exhaustive verification harness over all non-isomorphic
//! trees at small orders.

pub mod centrality;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod spanning;
pub mod transform;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, Tree};
