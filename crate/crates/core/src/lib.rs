#![cfg_attr(not(feature = "std"), no_std)]
//! Exact construction and classification of skeletal polyhedra and
//! polygonal complexes in Euclidean 3-space.

extern crate alloc;

pub mod classify;
pub mod complex;
pub mod geometry;
pub mod nets;
pub mod ops;
pub mod orbit;
pub mod presets;
