//! Incidence model: complexes, flags, vertex-figures and axiom validation.

mod figure;
mod flags;
mod skeletal;
mod validate;

pub use figure::{catalog, graph_identify, isomorphic, vertex_figure, GraphName, VertexFigureGraph};
pub use flags::{orbit_count, orbit_labels, Flag, FlagAdjacent, FlagStructure};
pub use skeletal::{Corner, Face, SkeletalComplex};
pub use validate::{validate, AxiomResult, Mode, ValidationReport};

use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComplexError {
    #[error("edge with coincident endpoints")]
    DegenerateEdge,
    #[error("boundary vertex: {0}")]
    BoundaryVertex(String),
    #[error("boundary: {0}")]
    Boundary(String),
}
