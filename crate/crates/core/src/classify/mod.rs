//! Polygon taxonomy, Schläfli types, mirror vectors, flag orbits and the regular/chiral verdict.

mod dual;
mod polygon;
mod report;
mod study;
mod symmetry;

pub use dual::{dual_congruence_check, signed_permutations, DualWitness};
pub use polygon::{classify_polygon, PolygonClass, PolygonKind};
pub use report::{classify_study, face_descriptor, ClassificationReport};
pub use study::{quotient_region, Study};
pub use symmetry::{
    find_flag_symmetries, flag_symmetry, mirror_vector, schlafli, verdict, FlagSymmetries, MirrorVector, Schlafli,
    SymmetryVerdict, VerdictKind, REFLECTION_TARGETS, ROTATION_TARGETS,
};

use alloc::string::String;

use crate::complex::{vertex_figure, ComplexError, SkeletalComplex};
use crate::geometry::GeometryError;
use crate::orbit::{FaceDescriptor, OrbitError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("not a regular polygon: {0}")]
    NotRegularPolygon(String),
    #[error("generator {0} is not an involution")]
    NotInvolution(usize),
    #[error("generator {0} has no fixed points")]
    NoFixedPoints(usize),
    #[error("not a polyhedron")]
    NotPolyhedron,
    #[error("generator {0} does not descend to the quotient")]
    GeneratorsDoNotDescend(usize),
    #[error("not equivelar: {0}")]
    NotEquivelar(String),
    #[error("region mismatch")]
    RegionMismatch,
    #[error("patch too small")]
    RegionTooSmall,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Orbit(#[from] OrbitError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// The vertex-figure at `v` as a polygon, when it is a single cycle.
pub fn vertex_figure_polygon(complex: &SkeletalComplex, v: usize) -> Result<FaceDescriptor, ClassifyError> {
    let fig = vertex_figure(complex, v)?;
    fig.cycle_order()
        .map(FaceDescriptor::Finite)
        .ok_or_else(|| ClassifyError::NotRegularPolygon(String::from("vertex-figure is not a single cycle")))
}
