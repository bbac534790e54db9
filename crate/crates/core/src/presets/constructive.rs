use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::complex::SkeletalComplex;
use crate::geometry::{Lattice, Vec3};
use crate::orbit::{FaceDescriptor, Region};

use super::PresetError;

/// Polygonal complexes built directly from the cubical tessellation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KComplex {
    /// Petrie quadrilaterals of the tetrahedra inscribed in every cube.
    K1,
    /// All Petrie hexagons of alternate cubes.
    K4,
    /// One Petrie hexagon in every cube.
    K5,
}

impl KComplex {
    pub fn name(self) -> &'static str {
        match self {
            KComplex::K1 => "K1_12",
            KComplex::K4 => "K4_12",
            KComplex::K5 => "K5_12",
        }
    }
}

/// Minimal corners of the unit cubes that can meet the region.
fn cubes_near(region: &Region) -> Vec<[i64; 3]> {
    let c = region.center();
    let r = region.radius();
    let bound = |i: usize| {
        let lo = (&c.0[i] - r).floor().to_integer().to_i64().unwrap_or(0) - 1;
        let hi = (&c.0[i] + r).ceil().to_integer().to_i64().unwrap_or(0);
        (lo, hi)
    };
    let (b0, b1, b2) = (bound(0), bound(1), bound(2));
    let mut out = Vec::new();
    for i in b0.0..=b0.1 {
        for j in b1.0..=b1.1 {
            for k in b2.0..=b2.1 {
                out.push([i, j, k]);
            }
        }
    }
    out
}

fn corner(base: [i64; 3], bits: [i64; 3]) -> Vec3 {
    Vec3::from_ints(base[0] + bits[0], base[1] + bits[1], base[2] + bits[2])
}

/// The Petrie hexagon of the unit cube at `base` avoiding the corner `skip` and its antipode.
fn petrie_hexagon(base: [i64; 3], skip: [i64; 3]) -> FaceDescriptor {
    let far = [1 - skip[0], 1 - skip[1], 1 - skip[2]];
    let mut bits = skip;
    bits[0] = 1 - bits[0];
    let mut cycle = Vec::with_capacity(6);
    let mut axis = 0;
    for _ in 0..6 {
        cycle.push(corner(base, bits));
        axis = (axis + 1) % 3;
        bits[axis] = 1 - bits[axis];
        if bits == skip || bits == far {
            bits[axis] = 1 - bits[axis];
            axis = (axis + 1) % 3;
            bits[axis] = 1 - bits[axis];
        }
    }
    FaceDescriptor::Finite(cycle)
}

fn tetrahedron_petrie_squares(base: [i64; 3]) -> [FaceDescriptor; 3] {
    let parity = |b: [i64; 3]| (base[0] + base[1] + base[2] + b[0] + b[1] + b[2]).rem_euclid(2) == 0;
    let tet: Vec<Vec3> = (0..8)
        .map(|m| [m & 1, (m >> 1) & 1, (m >> 2) & 1])
        .filter(|&b| parity(b))
        .map(|b| corner(base, b))
        .collect();
    let cyc = |i: usize, j: usize, k: usize, l: usize| {
        FaceDescriptor::Finite(alloc::vec![tet[i].clone(), tet[j].clone(), tet[k].clone(), tet[l].clone()])
    };
    [cyc(0, 1, 2, 3), cyc(0, 1, 3, 2), cyc(0, 2, 1, 3)]
}

fn parity_class(base: [i64; 3], bits: [i64; 3]) -> [i64; 3] {
    [(base[0] + bits[0]).rem_euclid(2), (base[1] + bits[1]).rem_euclid(2), (base[2] + bits[2]).rem_euclid(2)]
}

pub fn build_k_complex(which: KComplex, region: &Region) -> Result<SkeletalComplex, PresetError> {
    let mut faces = Vec::new();
    for base in cubes_near(region) {
        match which {
            KComplex::K1 => faces.extend(tetrahedron_petrie_squares(base)),
            KComplex::K4 => {
                if (base[0] + base[1] + base[2]).rem_euclid(2) == 0 {
                    for skip in [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]] {
                        faces.push(petrie_hexagon(base, skip));
                    }
                }
            }
            KComplex::K5 => {
                let skip = (0..8)
                    .map(|m| [m & 1, (m >> 1) & 1, (m >> 2) & 1])
                    .find(|&b| parity_class(base, b) == [0, 0, 1])
                    .expect("every cube has one corner of each parity");
                faces.push(petrie_hexagon(base, skip));
            }
        }
    }
    let periods = match which {
        KComplex::K1 | KComplex::K4 => Lattice::face_centered(),
        KComplex::K5 => Lattice::body_centered(),
    };
    Ok(SkeletalComplex::from_faces(faces, Some(region.clone()), periods)?)
}

/// Vertices, edges and square faces of the unit cubical tessellation.
pub fn cubic_two_skeleton(region: &Region) -> Result<SkeletalComplex, PresetError> {
    let mut faces = Vec::new();
    for base in cubes_near(region) {
        for (a, b) in [(0, 1), (1, 2), (0, 2)] {
            let mut e1 = [0; 3];
            let mut e2 = [0; 3];
            e1[a] = 1;
            e2[b] = 1;
            faces.push(FaceDescriptor::Finite(alloc::vec![
                corner(base, [0, 0, 0]),
                corner(base, e1),
                corner(base, [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]]),
                corner(base, e2),
            ]));
        }
    }
    Ok(SkeletalComplex::from_faces(faces, Some(region.clone()), Lattice::cubic())?)
}
