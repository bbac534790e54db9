use alloc::vec;

use num_traits::Zero;

use crate::geometry::{Isometry, Mat3, Rational, Vec3};
use crate::orbit::{Generator, GeneratorSet};

use super::PresetError;

fn iso(rows: [[i64; 3]; 3], t: Vec3) -> Isometry {
    Isometry::new(Mat3::from_ints(rows), t).expect("signed permutation matrices are orthogonal")
}

/// Finite-faced chiral family with parameters `a`, `b`.
pub fn p_family(a: i64, b: i64) -> Result<GeneratorSet, PresetError> {
    if a == 0 && b == 0 {
        return Err(PresetError::InvalidParameters("a and b are both zero".into()));
    }
    if a != 0 && b != 0 && num_integer::gcd(a, b) != 1 {
        return Err(PresetError::InvalidParameters("a and b must be relatively prime".into()));
    }
    let s1 = iso([[0, -1, 0], [0, 0, 1], [1, 0, 0]], Vec3::from_ints(0, -b, -a));
    let s2 = iso([[0, 0, -1], [-1, 0, 0], [0, -1, 0]], Vec3::zero());
    let t = iso([[-1, 0, 0], [0, 1, 0], [0, 0, -1]], Vec3::from_ints(a, 0, b));
    let set = GeneratorSet::new(
        vec![
            Generator { name: "S1".into(), isometry: s1 },
            Generator { name: "S2".into(), isometry: s2 },
            Generator { name: "T".into(), isometry: t },
        ],
        Vec3::zero(),
        Vec3::from_ints(a, 0, b),
        "S1",
    )?;
    Ok(set)
}

/// Helix-faced chiral family with rational parameters `c`, `d`.
pub fn p2_family(c: Rational, d: Rational) -> Result<GeneratorSet, PresetError> {
    if c.is_zero() && d.is_zero() {
        return Err(PresetError::InvalidParameters("c and d are both zero".into()));
    }
    let s1 = Isometry::new(
        Mat3::from_ints([[0, 0, -1], [0, 1, 0], [1, 0, 0]]),
        Vec3::new(d.clone(), c.clone(), -c.clone()),
    )
    .expect("orthogonal");
    let s2 = iso([[0, 1, 0], [0, 0, 1], [1, 0, 0]], Vec3::zero());
    let t = Isometry::new(Mat3::from_ints([[0, 1, 0], [1, 0, 0], [0, 0, -1]]), Vec3::new(c.clone(), -c.clone(), d.clone()))
        .expect("orthogonal");
    let set = GeneratorSet::new(
        vec![
            Generator { name: "S1".into(), isometry: s1 },
            Generator { name: "S2".into(), isometry: s2 },
            Generator { name: "T".into(), isometry: t },
        ],
        Vec3::zero(),
        Vec3::new(c.clone(), -c, d),
        "S1",
    )?;
    Ok(set)
}
