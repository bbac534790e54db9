use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Signed;

use crate::geometry::{rank, solve_isometry_planar, Isometry, Rational, Vec3};
use crate::orbit::FaceDescriptor;

use super::ClassifyError;

/// Geometric type of a regular polygon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PolygonKind {
    Convex { p: usize },
    Star { p: usize, density: usize },
    Skew { p: usize },
    Linear,
    Zigzag,
    /// Helix whose projection along its axis is a regular `k`-gon.
    Helical { k: usize },
}

impl PolygonKind {
    pub fn is_finite(self) -> bool {
        matches!(self, PolygonKind::Convex { .. } | PolygonKind::Star { .. } | PolygonKind::Skew { .. })
    }

    pub fn is_planar(self) -> bool {
        !matches!(self, PolygonKind::Skew { .. } | PolygonKind::Helical { .. })
    }

    /// Compact notation: `4`, `6_s`, `5/2`, `∞_l`, `∞_z`, `∞_h4`.
    pub fn symbol(self) -> String {
        match self {
            PolygonKind::Convex { p } => alloc::format!("{p}"),
            PolygonKind::Star { p, density } => alloc::format!("{p}/{density}"),
            PolygonKind::Skew { p } => alloc::format!("{p}_s"),
            PolygonKind::Linear => "∞_l".into(),
            PolygonKind::Zigzag => "∞_z".into(),
            PolygonKind::Helical { k } => alloc::format!("∞_h{k}"),
        }
    }
}

impl fmt::Display for PolygonKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolygonKind::Convex { p } => write!(f, "convex {p}-gon"),
            PolygonKind::Star { p, density } => write!(f, "planar star {p}-gon of density {density}"),
            PolygonKind::Skew { p } => write!(f, "skew {p}-gon"),
            PolygonKind::Linear => f.write_str("linear apeirogon"),
            PolygonKind::Zigzag => f.write_str("planar zigzag"),
            PolygonKind::Helical { k } => write!(f, "helix over a {k}-gon"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonClass {
    pub kind: PolygonKind,
    /// Isometry advancing every vertex one step along the polygon.
    pub witness: Option<Isometry>,
}

fn sample(f: &FaceDescriptor, n: usize) -> Vec<Vec3> {
    (0..n as i64).map(|j| f.vertex_at(j)).collect()
}

/// Isometry sending each `pts[i]` to `image(i)`.
fn shift_isometry(pts: &[Vec3], image: impl Fn(usize) -> Vec3) -> Option<Isometry> {
    let pairs: Vec<(Vec3, Vec3)> = (0..pts.len()).map(|i| (pts[i].clone(), image(i))).collect();
    solve_isometry_planar(&pairs).into_iter().next()
}

fn not_regular(detail: impl Into<String>) -> ClassifyError {
    ClassifyError::NotRegularPolygon(detail.into())
}

fn uniform<T: PartialEq>(items: impl IntoIterator<Item = T>) -> bool {
    let mut it = items.into_iter();
    match it.next() {
        None => true,
        Some(first) => it.all(|x| x == first),
    }
}

pub fn classify_polygon(f: &FaceDescriptor) -> Result<PolygonClass, ClassifyError> {
    if f.period_len() < 2 || (f.is_finite() && f.period_len() < 3) {
        return Err(not_regular("too few vertices"));
    }
    match f {
        FaceDescriptor::Finite(v) => classify_finite(v),
        FaceDescriptor::Infinite { period, translation } => classify_infinite(f, period.len(), translation),
    }
}

fn classify_finite(v: &[Vec3]) -> Result<PolygonClass, ClassifyError> {
    let n = v.len();
    let edge = |i: usize| &v[(i + 1) % n] - &v[i % n];
    if !uniform((0..n).map(|i| edge(i).norm_sq())) || !uniform((0..n).map(|i| edge(i).dot(&edge(i + 1)))) {
        return Err(not_regular("unequal sides or angles"));
    }
    let witness = shift_isometry(v, |i| v[(i + 1) % n].clone())
        .ok_or_else(|| not_regular("no isometry cycles the vertices"))?;
    let mirrored: Vec<Vec3> = (0..n).map(|i| v[(n - i) % n].clone()).collect();
    if shift_isometry(v, |i| mirrored[i].clone()).is_none() {
        return Err(not_regular("no isometry reverses the vertices"));
    }
    let diffs: Vec<Vec3> = v.iter().map(|p| p - &v[0]).collect();
    let kind = if rank(&diffs) == 3 {
        PolygonKind::Skew { p: n }
    } else {
        let density = winding(v).unsigned_abs() as usize;
        match density {
            0 => return Err(not_regular("planar polygon does not wind around its center")),
            1 => PolygonKind::Convex { p: n },
            d => PolygonKind::Star { p: n, density: d },
        }
    };
    Ok(PolygonClass { kind, witness: Some(witness) })
}

/// Winding number of a planar polygon about its centroid.
fn winding(v: &[Vec3]) -> i64 {
    let n = v.len();
    let normal = (1..n - 1)
        .map(|i| (&v[i] - &v[0]).cross(&(&v[i + 1] - &v[0])))
        .find(|c| !c.is_zero())
        .unwrap_or_else(Vec3::zero);
    let drop = (0..3).max_by_key(|&i| normal.0[i].abs()).unwrap_or(2);
    let (a, b) = match drop {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let centroid = v.iter().fold(Vec3::zero(), |acc, p| &acc + p).scale(&Rational::new(1.into(), (n as i64).into()));
    let pt = |p: &Vec3| (&p.0[a] - &centroid.0[a], &p.0[b] - &centroid.0[b]);
    let mut w = 0i64;
    for i in 0..n {
        let (x0, y0) = pt(&v[i]);
        let (x1, y1) = pt(&v[(i + 1) % n]);
        let side = &x0 * &y1 - &x1 * &y0;
        if !y0.is_positive() && y1.is_positive() && side.is_positive() {
            w += 1;
        } else if !y1.is_positive() && y0.is_positive() && side.is_negative() {
            w -= 1;
        }
    }
    w
}

fn classify_infinite(f: &FaceDescriptor, m: usize, tau: &Vec3) -> Result<PolygonClass, ClassifyError> {
    let pts = sample(f, 2 * m + 3);
    let diffs: Vec<Vec3> = pts.iter().map(|p| p - &pts[0]).collect();
    let steps: Vec<Vec3> = pts.windows(2).map(|w| &w[1] - &w[0]).collect();
    if !uniform(steps.iter().map(Vec3::norm_sq)) || !uniform(steps.windows(2).map(|w| w[0].dot(&w[1]))) {
        return Err(not_regular("unequal sides or angles"));
    }
    let advance = |i: usize| f.vertex_at(i as i64 + 1);
    match rank(&diffs) {
        1 => {
            if !uniform(steps.iter().cloned()) {
                return Err(not_regular("collinear but unevenly spaced"));
            }
            Ok(PolygonClass { kind: PolygonKind::Linear, witness: Some(Isometry::translation_by(steps[0].clone())) })
        }
        2 => {
            let hops: Vec<Vec3> = pts.windows(3).map(|w| &w[2] - &w[0]).collect();
            if !uniform(hops) {
                return Err(not_regular("planar apeirogon that is not a zigzag"));
            }
            let witness = shift_isometry(&pts[..pts.len() - 1], advance)
                .ok_or_else(|| not_regular("no isometry advances the zigzag"))?;
            Ok(PolygonClass { kind: PolygonKind::Zigzag, witness: Some(witness) })
        }
        _ => {
            let tt = tau.norm_sq();
            let flat = |e: &Vec3| e - &tau.scale(&(e.dot(tau) / &tt));
            let rise: Vec<Rational> = steps.iter().map(|e| e.dot(tau)).collect();
            let proj: Vec<Vec3> = steps.iter().map(flat).collect();
            let turns: Vec<(Rational, Vec3)> = proj.windows(2).map(|w| (w[0].dot(&w[1]), w[0].cross(&w[1]))).collect();
            if !uniform(rise) || !uniform(proj.iter().map(Vec3::norm_sq)) || !uniform(turns) {
                return Err(not_regular("projection along the axis is not a regular polygon traversed uniformly"));
            }
            let base = flat(&pts[0]);
            let k = (1..=m).find(|&j| flat(&pts[j]) == base).expect("the period closes the projection");
            let witness = shift_isometry(&pts[..pts.len() - 1], advance)
                .ok_or_else(|| not_regular("no isometry advances the helix"))?;
            Ok(PolygonClass { kind: PolygonKind::Helical { k }, witness: Some(witness) })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: i64, y: i64, z: i64) -> Vec3 {
        Vec3::from_ints(x, y, z)
    }

    #[test]
    fn square_is_convex() {
        let f = FaceDescriptor::Finite(alloc::vec![v(0, 0, 0), v(1, 0, 0), v(1, 1, 0), v(0, 1, 0)]);
        assert_eq!(classify_polygon(&f).unwrap().kind, PolygonKind::Convex { p: 4 });
    }

    #[test]
    fn doubly_wound_square_has_winding_two() {
        let sq = [v(0, 0, 0), v(1, 0, 0), v(1, 1, 0), v(0, 1, 0)];
        let twice: Vec<Vec3> = sq.iter().chain(sq.iter()).cloned().collect();
        assert_eq!(winding(&twice), 2);
    }

    #[test]
    fn tetrahedron_petrie_square_is_skew() {
        let f = FaceDescriptor::Finite(alloc::vec![v(0, 0, 0), v(1, 1, 0), v(0, 1, 1), v(1, 0, 1)]);
        assert_eq!(classify_polygon(&f).unwrap().kind, PolygonKind::Skew { p: 4 });
    }

    #[test]
    fn zigzag_and_linear() {
        let z = FaceDescriptor::Infinite { period: alloc::vec![v(0, 0, 0), v(1, 1, 0)], translation: v(2, 0, 0) };
        assert_eq!(classify_polygon(&z).unwrap().kind, PolygonKind::Zigzag);
        let l = FaceDescriptor::Infinite { period: alloc::vec![v(0, 0, 0), v(1, 0, 0)], translation: v(2, 0, 0) };
        assert_eq!(classify_polygon(&l).unwrap().kind, PolygonKind::Linear);
    }

    #[test]
    fn square_helix() {
        let h = FaceDescriptor::Infinite {
            period: alloc::vec![v(0, 0, 0), v(1, 0, 1), v(1, 1, 2), v(0, 1, 3)],
            translation: v(0, 0, 4),
        };
        let c = classify_polygon(&h).unwrap();
        assert_eq!(c.kind, PolygonKind::Helical { k: 4 });
        let w = c.witness.unwrap();
        assert_eq!(w.apply(&v(1, 1, 2)), v(0, 1, 3));
        assert_eq!(w.pow(4).translation(), &v(0, 0, 4));
    }

    #[test]
    fn irregular_quadrilateral_rejected() {
        let f = FaceDescriptor::Finite(alloc::vec![v(0, 0, 0), v(2, 0, 0), v(2, 1, 0), v(0, 1, 0)]);
        assert!(classify_polygon(&f).is_err());
    }
}
