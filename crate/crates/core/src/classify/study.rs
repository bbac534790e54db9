use alloc::vec::Vec;

use num_traits::{One, Signed};

use crate::complex::{FlagStructure, SkeletalComplex};
use crate::geometry::{q, Lattice, Rational, Vec3};
use crate::orbit::{build_quotient, wythoff_patch, GeneratorSet, OrbitError, Region};

/// Smallest region whose vertices represent every class modulo `sublattice`.
///
/// `anchor` is a vertex; `thickness` bounds how far vertices stray from the
/// affine span of the lattice through it.
pub fn quotient_region(sublattice: &Lattice, anchor: &Vec3, thickness: &Rational) -> Option<Region> {
    let basis = sublattice.basis();
    if basis.is_empty() {
        return None;
    }
    let half = crate::geometry::frac(1, 2);
    if basis.len() == 3 {
        let mut side = Vec::with_capacity(3);
        for axis in 0..3 {
            let coords = sublattice.coordinates(&Vec3::unit(axis));
            let n = coords.0.iter().fold(num_bigint::BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
            side.push(Rational::from_integer(n));
        }
        let center = anchor + &Vec3::new(&side[0] * &half, &side[1] * &half, &side[2] * &half);
        let radius = side.iter().max().cloned().expect("three sides") * &half;
        return Some(Region::new(center, radius).expect("positive radius"));
    }
    let sum = basis.iter().fold(Vec3::zero(), |acc, b| &acc + b);
    let extent = (0..3)
        .map(|axis| basis.iter().map(|b| b.0[axis].abs()).fold(Rational::from_integer(0.into()), |a, x| a + x))
        .max()
        .expect("three axes");
    let center = anchor + &sum.scale(&half);
    Some(Region::new(center, extent * &half + thickness).expect("positive radius"))
}

/// A structure together with its finite quotient and flags.
#[derive(Clone, Debug)]
pub struct Study {
    pub complex: SkeletalComplex,
    pub flags: FlagStructure,
    pub scale: i64,
}

impl Study {
    /// Quotient of an existing complex modulo `scale` times its translation lattice.
    pub fn of_complex(complex: SkeletalComplex, scale: i64) -> Result<Self, OrbitError> {
        let sub = if complex.is_finite() { Lattice::trivial() } else { complex.periods().scaled(scale) };
        let quotient = build_quotient(&complex, &sub)?;
        Ok(Study { complex, flags: FlagStructure::new(quotient), scale })
    }

    /// Quotient at the smallest scale up to `max_scale` that avoids self-identification.
    pub fn of_complex_auto(complex: SkeletalComplex, max_scale: i64) -> Result<Self, OrbitError> {
        let mut scale = 1;
        loop {
            match Self::of_complex(complex.clone(), scale) {
                Err(OrbitError::SelfIdentification(_)) if scale < max_scale && !complex.is_finite() => scale += 1,
                other => return other,
            }
        }
    }

    /// Builds a patch just large enough for the quotient at the given scale.
    pub fn from_generators(gens: &GeneratorSet, scale: i64) -> Result<Self, OrbitError> {
        let lattice = gens.translation_lattice()?;
        let thickness = (gens.base_edge_other() - gens.base_vertex()).max_norm() + q(1);
        let region = quotient_region(&lattice.scaled(scale), gens.base_vertex(), &thickness)
            .unwrap_or_else(|| Region::centered(1));
        let complex = wythoff_patch(gens, &region)?;
        Self::of_complex(complex, scale)
    }

    /// Same as [`from_generators`](Self::from_generators) for a structure built directly from a region.
    pub fn from_builder<E>(
        periods: &Lattice,
        anchor: &Vec3,
        thickness: &Rational,
        scale: i64,
        build: impl FnOnce(&Region) -> Result<SkeletalComplex, E>,
    ) -> Result<Self, E>
    where
        E: From<OrbitError>,
    {
        let region = quotient_region(&periods.scaled(scale), anchor, thickness).ok_or(OrbitError::BadRegion)?;
        let complex = build(&region)?;
        Ok(Self::of_complex(complex, scale)?)
    }
}
