//! Product set-labelings of graphs.
//!
//! A product set-labeling assigns each vertex a distinct finite set of positive
//! integers and each edge the product set of its endpoint labels. This crate
//! provides the exact set algebra, a graph model, classifiers for the strong,
//! geometric, isogeometric, like-geometric and uniform classes, constructive
//! labelers for those classes and brute-force oracles that check the
//! characterizations on small instances.

pub mod constructors;
pub mod graph;
pub mod labeling;
pub mod oracle;
pub mod setalgebra;
