//! Petrie duals, word traces (Petrie polygons, holes, 2-zigzags), blends and coverings.

mod blend;
mod covering;
mod petrie;
mod trace;

pub use blend::{blend, blend_generators, planar_generators, plane_normal, BlendComponent};
pub use covering::{covering_check, helix_translations, CoveringWitness, Projection};
pub use petrie::{petrie_dual, petrie_dual_with};
pub use trace::{trace, trace_flags, TraceLength, TraceWord, WordTrace};

use alloc::string::String;

use crate::classify::ClassifyError;
use crate::complex::ComplexError;
use crate::orbit::OrbitError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OpsError {
    #[error("not a polyhedron")]
    NotPolyhedron,
    #[error("not bipartite-compatible: {0}")]
    NotBipartite(String),
    #[error("zero parameter")]
    ZeroParameter,
    #[error("not planar: {0}")]
    NotPlanar(String),
    #[error("projection misses target vertices: {0}")]
    ProjectionMisses(String),
    #[error("no flag symmetries at the base flag")]
    NotRegular,
    #[error("patch too small: {0}")]
    RegionTooSmall(String),
    #[error(transparent)]
    Orbit(#[from] OrbitError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}
