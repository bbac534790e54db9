use alloc::vec::Vec;
use core::fmt;

use num_traits::One;

use super::vector::{rank, solve_affine, Mat3, Vec3};
use super::GeometryError;

/// Exact affine isometry `x ↦ linear·x + translation`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Isometry {
    linear: Mat3,
    translation: Vec3,
}

/// Result of [`Isometry::order_or_translation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderOrTranslation {
    Finite(u32),
    Translation(u32, Vec3),
    Exceeded,
}

/// Dimension of the fixed-point set of an isometry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FixedSpace {
    Dim(u8),
    Empty,
}

impl fmt::Display for FixedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixedSpace::Dim(d) => write!(f, "{d}"),
            FixedSpace::Empty => f.write_str("empty"),
        }
    }
}

impl Isometry {
    pub fn new(linear: Mat3, translation: Vec3) -> Result<Self, GeometryError> {
        if !linear.is_orthogonal() {
            return Err(GeometryError::NotOrthogonal);
        }
        Ok(Isometry { linear, translation })
    }

    pub fn identity() -> Self {
        Isometry { linear: Mat3::identity(), translation: Vec3::zero() }
    }

    pub fn translation_by(v: Vec3) -> Self {
        Isometry { linear: Mat3::identity(), translation: v }
    }

    pub fn linear(&self) -> &Mat3 {
        &self.linear
    }

    pub fn translation(&self) -> &Vec3 {
        &self.translation
    }

    pub fn apply(&self, p: &Vec3) -> Vec3 {
        &self.linear.mul_vec(p) + &self.translation
    }

    pub fn apply_linear(&self, v: &Vec3) -> Vec3 {
        self.linear.mul_vec(v)
    }

    pub fn det(&self) -> i8 {
        if self.linear.det().is_one() {
            1
        } else {
            -1
        }
    }

    /// `self ∘ other`: `other` is applied first.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        Isometry {
            linear: &self.linear * &other.linear,
            translation: &self.linear.mul_vec(&other.translation) + &self.translation,
        }
    }

    pub fn inverse(&self) -> Isometry {
        let lt = self.linear.transpose();
        let t = -&lt.mul_vec(&self.translation);
        Isometry { linear: lt, translation: t }
    }

    pub fn pow(&self, n: i64) -> Isometry {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut result = Isometry::identity();
        let mut sq = base;
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                result = result.compose(&sq);
            }
            sq = sq.compose(&sq);
            k >>= 1;
        }
        result
    }

    pub fn is_identity(&self) -> bool {
        self.linear.is_identity() && self.translation.is_zero()
    }

    pub fn is_translation(&self) -> bool {
        self.linear.is_identity()
    }

    pub fn is_involution(&self) -> bool {
        !self.is_identity() && self.compose(self).is_identity()
    }

    pub fn order_or_translation(&self, max_n: u32) -> OrderOrTranslation {
        let mut g = self.clone();
        for n in 1..=max_n {
            if g.is_translation() {
                if g.translation.is_zero() {
                    return OrderOrTranslation::Finite(n);
                }
                return OrderOrTranslation::Translation(n, g.translation);
            }
            g = self.compose(&g);
        }
        OrderOrTranslation::Exceeded
    }

    pub fn fixed_space_dim(&self) -> FixedSpace {
        let a = self.linear.sub_identity();
        match solve_affine(&a, &(-&self.translation)) {
            Some((_, dim)) => FixedSpace::Dim(dim as u8),
            None => FixedSpace::Empty,
        }
    }
}

impl fmt::Display for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.linear.0;
        write!(
            f,
            "[[{}, {}, {}], [{}, {}, {}], [{}, {}, {}]] + {}",
            m[0][0], m[0][1], m[0][2], m[1][0], m[1][1], m[1][2], m[2][0], m[2][1], m[2][2], self.translation
        )
    }
}

/// The unique isometry taking each source point to its target, if any.
pub fn solve_isometry(pairs: &[(Vec3, Vec3)]) -> Result<Option<Isometry>, GeometryError> {
    let Some((p0, q0)) = pairs.first() else {
        return Err(GeometryError::Underdetermined);
    };
    let mut src: Vec<Vec3> = Vec::new();
    let mut dst: Vec<Vec3> = Vec::new();
    for (p, t) in &pairs[1..] {
        let d = p - p0;
        let mut trial = src.clone();
        trial.push(d.clone());
        if rank(&trial) == trial.len() {
            src = trial;
            dst.push(t - q0);
            if src.len() == 3 {
                break;
            }
        }
    }
    if src.len() < 3 {
        return Err(GeometryError::Underdetermined);
    }
    let s = Mat3::from_columns([&src[0], &src[1], &src[2]]);
    let d = Mat3::from_columns([&dst[0], &dst[1], &dst[2]]);
    let m = &d * &s.inverse().expect("independent columns");
    if !m.is_orthogonal() {
        return Ok(None);
    }
    let t = q0 - &m.mul_vec(p0);
    let g = Isometry { linear: m, translation: t };
    if pairs.iter().all(|(p, t)| g.apply(p) == *t) {
        Ok(Some(g))
    } else {
        Ok(None)
    }
}

/// Isometries from a frame that may be planar: both orientations are tried when the sources span a plane.
pub fn solve_isometry_planar(pairs: &[(Vec3, Vec3)]) -> Vec<Isometry> {
    match solve_isometry(pairs) {
        Ok(Some(g)) => return alloc::vec![g],
        Ok(None) => return Vec::new(),
        Err(_) => {}
    }
    let Some((p0, q0)) = pairs.first() else {
        return Vec::new();
    };
    let mut src: Vec<Vec3> = Vec::new();
    let mut dst: Vec<Vec3> = Vec::new();
    for (p, t) in &pairs[1..] {
        let d = p - p0;
        let mut trial = src.clone();
        trial.push(d.clone());
        if rank(&trial) == trial.len() {
            src = trial;
            dst.push(t - q0);
            if src.len() == 2 {
                break;
            }
        }
    }
    if src.len() < 2 {
        return Vec::new();
    }
    let ns = src[0].cross(&src[1]);
    let nd = dst[0].cross(&dst[1]);
    if nd.is_zero() || ns.norm_sq() != nd.norm_sq() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for target in [nd.clone(), -&nd] {
        let mut extended = pairs.to_vec();
        extended.push((p0 + &ns, q0 + &target));
        if let Ok(Some(g)) = solve_isometry(&extended) {
            out.push(g);
        }
    }
    out
}

/// Reflection in the plane through `point` with normal `normal`.
pub fn plane_reflection(point: &Vec3, normal: &Vec3) -> Isometry {
    let nn = normal.norm_sq();
    let mut m = Mat3::identity();
    for i in 0..3 {
        for j in 0..3 {
            let two = super::q(2);
            m.0[i][j] -= &two * &normal.0[i] * &normal.0[j] / &nn;
        }
    }
    let t = point - &m.mul_vec(point);
    Isometry { linear: m, translation: t }
}

impl Default for Isometry {
    fn default() -> Self {
        Isometry::identity()
    }
}
