//! Supply node connectivity of interdependent networks.
//!
//! A demand network whose nodes draw from supply nodes is transformed into a
//! colored graph, one color per supply. The supply node connectivity is the
//! minimum number of colors whose nodes contain a node cut. The crate
//! provides the transformation, exact and polynomial-time cut algorithms,
//! interdependence assignment strategies and experiment generators.

mod error;

pub mod assignment;
pub mod colored;
pub mod exact;
pub mod experiments;
pub mod graph;
pub mod poly;

pub use colored::{
    ColorCutResult, ColoredGraph, CutMode, DependencySystem, Direction, Method, Transformed,
};
pub use error::{Error, Result};
pub use graph::{CutKind, Graph, NodeCut, StConnectivity};
