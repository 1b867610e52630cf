//! Connectivity-refined neighbor graphs and a UMAP-style embedding pipeline.
//!
//! The crate builds exact k-NN and mutual k-NN graphs under euclidean, cosine
//! or jaccard distance, repairs disconnection with nearest-neighbor or
//! minimum-spanning-tree edges, derives local neighborhoods either from direct
//! adjacency or from shortest-path search, converts them into a fuzzy
//! simplicial set, optimizes a low-dimensional layout with edge-sampled SGD,
//! and scores the result with KMeans clustering metrics (NMI, accuracy,
//! purity, ARI).
//!
//! Entry points: [`pipeline::run_variant`] for a single method configuration,
//! [`pipeline::grid_search`] for the hyperparameter grid, and the `mumap`
//! binary for the command-line surface.

pub mod cli;
pub mod connectivity;
pub mod data;
pub mod error;
pub mod eval;
pub mod fuzzy;
pub mod graph;
pub mod knn;
pub mod layout;
pub mod neighborhood;
pub mod pipeline;
pub mod synthetic;

pub use error::{Error, Result};
pub use graph::{NeighborGraph, WeightedGraph};
