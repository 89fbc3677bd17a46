//! Diamond-colored modular and distributive lattices, their vertex-colored
//! posets of irreducibles, and the colored Birkhoff correspondence.

pub mod birkhoff;
pub mod error;
pub mod graph;
pub mod lattice;
pub mod paths;
pub mod report;
pub mod substructure;

pub use error::{Error, Result};
pub use graph::{Color, ColorSet, EdgeColoredPoset, Poset, Recoloring, VertexColoredPoset};
pub use report::Report;
