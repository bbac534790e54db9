use alloc::vec;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::classify::{find_flag_symmetries, Study};
use crate::complex::SkeletalComplex;
use crate::geometry::{Isometry, Lattice, Rational, Vec3};
use crate::orbit::{FaceDescriptor, Generator, GeneratorSet, Region};

use super::PresetError;

/// Radius of the patch the planar generators are read from.
const DERIVATION_RADIUS: i64 = 6;

/// The three regular plane tessellations and the three Platonic solids with cubic symmetry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RegularPreset {
    Square44,
    Triangle36,
    Hexagon63,
    Tetrahedron,
    Cube,
    Octahedron,
}

impl RegularPreset {
    pub const ALL: [RegularPreset; 6] = [
        RegularPreset::Square44,
        RegularPreset::Triangle36,
        RegularPreset::Hexagon63,
        RegularPreset::Tetrahedron,
        RegularPreset::Cube,
        RegularPreset::Octahedron,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RegularPreset::Square44 => "sq44",
            RegularPreset::Triangle36 => "tri36",
            RegularPreset::Hexagon63 => "hex63",
            RegularPreset::Tetrahedron => "tet",
            RegularPreset::Cube => "cube",
            RegularPreset::Octahedron => "oct",
        }
    }

    pub fn is_planar(self) -> bool {
        matches!(self, RegularPreset::Square44 | RegularPreset::Triangle36 | RegularPreset::Hexagon63)
    }

    /// Translation lattice; trivial for the solids.
    pub fn periods(self) -> Lattice {
        match self {
            RegularPreset::Square44 => Lattice::from_int_rows(&[[1, 0, 0], [0, 1, 0]]),
            RegularPreset::Triangle36 => Lattice::from_int_rows(&[[1, -1, 0], [1, 0, -1]]),
            RegularPreset::Hexagon63 => Lattice::from_int_rows(&[[2, -1, -1], [1, 1, -2]]),
            _ => Lattice::trivial(),
        }
    }
}

fn v(x: i64, y: i64, z: i64) -> Vec3 {
    Vec3::from_ints(x, y, z)
}

fn finite(faces: &[&[Vec3]]) -> Vec<FaceDescriptor> {
    faces.iter().map(|f| FaceDescriptor::Finite(f.to_vec())).collect()
}

/// Integer range covering `center ± reach` in one coordinate.
fn span(center: &Rational, reach: &Rational) -> core::ops::RangeInclusive<i64> {
    let lo = (center - reach).floor().to_integer().to_i64().expect("small coordinates");
    let hi = (center + reach).ceil().to_integer().to_i64().expect("small coordinates");
    lo..=hi
}

fn hexagon(c: &Vec3) -> Vec<Vec3> {
    [v(1, -1, 0), v(1, 0, -1), v(0, 1, -1), v(-1, 1, 0), v(-1, 0, 1), v(0, -1, 1)].iter().map(|d| c + d).collect()
}

fn planar_faces(which: RegularPreset, region: &Region) -> Vec<FaceDescriptor> {
    let c = region.center();
    let reach = region.radius() + Rational::from_integer(3.into());
    let mut faces = Vec::new();
    match which {
        RegularPreset::Square44 => {
            for i in span(&c.0[0], &reach) {
                for j in span(&c.0[1], &reach) {
                    faces.push(FaceDescriptor::Finite(vec![v(i, j, 0), v(i + 1, j, 0), v(i + 1, j + 1, 0), v(i, j + 1, 0)]));
                }
            }
        }
        RegularPreset::Triangle36 => {
            let (a, b) = (v(1, -1, 0), v(1, 0, -1));
            for i in span(&-&c.0[1], &reach) {
                for j in span(&-&c.0[2], &reach) {
                    let p = v(i + j, -i, -j);
                    faces.push(FaceDescriptor::Finite(vec![p.clone(), &p + &a, &p + &b]));
                    faces.push(FaceDescriptor::Finite(vec![&p + &a, &(&p + &a) + &b, &p + &b]));
                }
            }
        }
        RegularPreset::Hexagon63 => {
            let zero = Rational::from_integer(0.into());
            let reach = &reach + c.max_norm();
            for i in span(&zero, &reach) {
                for j in span(&zero, &reach) {
                    faces.push(FaceDescriptor::Finite(hexagon(&v(2 * i + j, j - i, -i - 2 * j))));
                }
            }
        }
        _ => unreachable!("planar presets only"),
    }
    faces
}

/// The structure itself, built from coordinates; `region` is ignored for the solids.
pub fn regular_structure(which: RegularPreset, region: &Region) -> Result<SkeletalComplex, PresetError> {
    let faces = match which {
        RegularPreset::Tetrahedron => {
            let p = [v(1, 1, 1), v(1, -1, -1), v(-1, 1, -1), v(-1, -1, 1)];
            finite(&[&[p[0].clone(), p[1].clone(), p[2].clone()], &[p[0].clone(), p[1].clone(), p[3].clone()], &[
                p[0].clone(),
                p[2].clone(),
                p[3].clone(),
            ], &[p[1].clone(), p[2].clone(), p[3].clone()]])
        }
        RegularPreset::Cube => {
            let mut faces = Vec::new();
            for axis in 0..3 {
                for s in [-1, 1] {
                    let corner = |a: i64, b: i64| {
                        let mut c = [0i64; 3];
                        c[axis] = s;
                        c[(axis + 1) % 3] = a;
                        c[(axis + 2) % 3] = b;
                        v(c[0], c[1], c[2])
                    };
                    faces.push(FaceDescriptor::Finite(vec![corner(1, 1), corner(-1, 1), corner(-1, -1), corner(1, -1)]));
                }
            }
            faces
        }
        RegularPreset::Octahedron => {
            let mut faces = Vec::new();
            for sx in [-1, 1] {
                for sy in [-1, 1] {
                    for sz in [-1, 1] {
                        faces.push(FaceDescriptor::Finite(vec![v(sx, 0, 0), v(0, sy, 0), v(0, 0, sz)]));
                    }
                }
            }
            faces
        }
        planar => {
            let faces = planar_faces(planar, region);
            return Ok(SkeletalComplex::from_faces(faces, Some(region.clone()), planar.periods())?);
        }
    };
    Ok(SkeletalComplex::from_faces(faces, None, Lattice::trivial())?)
}

/// Generators `R0, R1, R2` read off the structure at its base flag, moved so the base
/// vertex lies in the fundamental cell; the base face is generated by the word `R0R1`.
pub fn regular_generators(which: RegularPreset) -> Result<GeneratorSet, PresetError> {
    let complex = regular_structure(which, &Region::centered(DERIVATION_RADIUS))?;
    let flags = Study::of_complex_auto(complex, 4)?.flags;
    let reflections = find_flag_symmetries(&flags, 0)?
        .reflections
        .ok_or_else(|| PresetError::InvalidParameters(alloc::format!("{} has no flag reflections", which.name())))?;
    let found = flags.lifted_vertex(0, &Vec3::zero());
    let (base, _) = which.periods().reduce(&found);
    let to = Isometry::translation_by(&base - &found);
    let back = to.inverse();
    let reflections: Vec<Isometry> = reflections.iter().map(|r| to.compose(r).compose(&back)).collect();
    let other = reflections[0].apply(&base);
    let generators = reflections
        .into_iter()
        .enumerate()
        .map(|(i, isometry)| Generator { name: alloc::format!("R{i}"), isometry })
        .collect();
    Ok(GeneratorSet::new(generators, base, other, "R0R1")?)
}
