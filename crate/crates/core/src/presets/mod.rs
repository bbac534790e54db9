//! Catalog of structures: generator-driven and constructive presets.

mod catalog;
mod chiral;
mod constructive;
mod regular;

pub use catalog::{PresetId, Structure};
pub use chiral::{p2_family, p_family};
pub use constructive::{build_k_complex, cubic_two_skeleton, KComplex};
pub use regular::{regular_generators, regular_structure, RegularPreset};

use alloc::string::String;

use crate::classify::ClassifyError;
use crate::complex::ComplexError;
use crate::ops::OpsError;
use crate::orbit::OrbitError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresetError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
    #[error(transparent)]
    Orbit(#[from] OrbitError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Ops(#[from] OpsError),
}
