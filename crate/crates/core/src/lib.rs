// SPDX-License-Identifier: Apache-2.0

pub mod characterize;
pub mod coloring;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod solver;

pub use coloring::{EdgeColoring, TreeKind, TreeWitness};
pub use error::{Error, Graph6Error, Result};
pub use graph::Graph;
