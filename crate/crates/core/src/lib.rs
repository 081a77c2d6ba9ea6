//! Multiparking functions on graphs, their bijection with spanning forests,
//! and exact Tutte polynomial computations built on top of them.

// vertices are 1..=n and index slot-0-padded vectors
#![allow(clippy::needless_range_loop)]

pub mod activity;
pub mod bijection;
pub mod census;
pub mod error;
pub mod graph;
pub mod orders;
pub mod parking;
pub mod tutte;

pub use error::{Error, Result};
pub use graph::{Adjacency, Digraph, Graph};
pub use orders::{ChoiceOrder, RootedForest};
pub use parking::{ExtNat, VertexFunction};
