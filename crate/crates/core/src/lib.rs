//! Spanning simplicial complexes of graphs, with the Jahangir family J(2,m)
//! as the worked case: spanning-tree facets, cycle catalogs, f-vectors,
//! Hilbert series of the face ring, and quasi-linear quotient orderings of
//! the facet ideal, each paired with an exhaustive oracle.

pub mod cli;
pub mod complex;
pub mod cycles;
pub mod edge_set;
pub mod error;
pub mod face_ring;
pub mod formula;
pub mod graph;
pub mod hilbert;
pub mod spanning;

pub use edge_set::EdgeSet;
pub use error::{Error, Result};
pub use graph::{EdgeLabel, Graph};
