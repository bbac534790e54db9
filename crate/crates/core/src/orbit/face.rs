use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::Zero;

use crate::geometry::{q, Isometry, Rational, Vec3};

use super::Region;

/// A polygon given by its vertex cycle, or by one period and a translation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FaceDescriptor {
    Finite(Vec<Vec3>),
    Infinite { period: Vec<Vec3>, translation: Vec3 },
}

impl FaceDescriptor {
    pub fn is_finite(&self) -> bool {
        matches!(self, FaceDescriptor::Finite(_))
    }

    /// Vertices listed in the descriptor (the whole cycle or one period).
    pub fn listed(&self) -> &[Vec3] {
        match self {
            FaceDescriptor::Finite(v) => v,
            FaceDescriptor::Infinite { period, .. } => period,
        }
    }

    pub fn period_len(&self) -> usize {
        self.listed().len()
    }

    pub fn translation(&self) -> Option<&Vec3> {
        match self {
            FaceDescriptor::Finite(_) => None,
            FaceDescriptor::Infinite { translation, .. } => Some(translation),
        }
    }

    /// The `j`-th vertex along the face, indices taken cyclically or along the period.
    pub fn vertex_at(&self, j: i64) -> Vec3 {
        let m = self.period_len() as i64;
        match self {
            FaceDescriptor::Finite(v) => v[j.rem_euclid(m) as usize].clone(),
            FaceDescriptor::Infinite { period, translation } => {
                let (k, i) = j.div_mod_floor(&m);
                let base = &period[i as usize];
                if k == 0 {
                    base.clone()
                } else {
                    base + &translation.scale(&q(k))
                }
            }
        }
    }

    pub fn apply(&self, g: &Isometry) -> FaceDescriptor {
        match self {
            FaceDescriptor::Finite(v) => FaceDescriptor::Finite(v.iter().map(|p| g.apply(p)).collect()),
            FaceDescriptor::Infinite { period, translation } => FaceDescriptor::Infinite {
                period: period.iter().map(|p| g.apply(p)).collect(),
                translation: g.apply_linear(translation),
            },
        }
    }

    pub fn translate(&self, t: &Vec3) -> FaceDescriptor {
        self.apply(&Isometry::translation_by(t.clone()))
    }

    /// Orientation-blind canonical form.
    pub fn canonical(&self) -> FaceDescriptor {
        match self {
            FaceDescriptor::Finite(v) => FaceDescriptor::Finite(canonical_cycle(v)),
            FaceDescriptor::Infinite { period, translation } => {
                let (period, translation) = if translation.is_lex_positive() {
                    (period.clone(), translation.clone())
                } else {
                    let m = period.len() as i64;
                    let rev: Vec<Vec3> = (0..m).map(|j| self.vertex_at(-j)).collect();
                    (rev, -translation)
                };
                let oriented = FaceDescriptor::Infinite { period, translation: translation.clone() };
                let tt = translation.norm_sq();
                let m = oriented.period_len() as i64;
                let reduced: Vec<(Vec3, Rational)> = oriented
                    .listed()
                    .iter()
                    .map(|x| {
                        let s = (x.dot(&translation) / &tt).floor();
                        (x - &translation.scale(&s), s)
                    })
                    .collect();
                let (start, _) = reduced.iter().enumerate().min_by(|a, b| a.1 .0.cmp(&b.1 .0)).expect("nonempty period");
                let shift = translation.scale(&reduced[start].1);
                let period = (0..m).map(|j| &oriented.vertex_at(start as i64 + j) - &shift).collect();
                FaceDescriptor::Infinite { period, translation }
            }
        }
    }

    /// Range of vertex indices `j` whose positions may lie in `region` (conservative, widened by one).
    pub fn index_range(&self, region: &Region) -> Option<(i64, i64)> {
        let m = self.period_len() as i64;
        match self {
            FaceDescriptor::Finite(_) => Some((0, m - 1)),
            FaceDescriptor::Infinite { period, translation } => {
                let mut lo: Option<Rational> = None;
                let mut hi: Option<Rational> = None;
                for x in period {
                    let mut x_lo: Option<Rational> = None;
                    let mut x_hi: Option<Rational> = None;
                    for (i, t) in translation.0.iter().enumerate() {
                        if t.is_zero() {
                            continue;
                        }
                        let a = (&region.center().0[i] - region.radius() - &x.0[i]) / t;
                        let b = (&region.center().0[i] + region.radius() - &x.0[i]) / t;
                        let (a, b) = if a <= b { (a, b) } else { (b, a) };
                        x_lo = Some(x_lo.map_or(a.clone(), |l| l.max(a)));
                        x_hi = Some(x_hi.map_or(b.clone(), |h| h.min(b)));
                    }
                    let (x_lo, x_hi) = (x_lo?, x_hi?);
                    if x_lo > x_hi {
                        continue;
                    }
                    lo = Some(lo.map_or(x_lo.clone(), |l| l.min(x_lo)));
                    hi = Some(hi.map_or(x_hi.clone(), |h| h.max(x_hi)));
                }
                let (lo, hi) = (lo?, hi?);
                let lo = lo.floor().to_integer();
                let hi = hi.ceil().to_integer();
                let lo = i64::try_from(lo).ok()? - 1;
                let hi = i64::try_from(hi).ok()? + 1;
                if lo > hi {
                    return None;
                }
                Some((lo * m, (hi + 1) * m - 1))
            }
        }
    }

    /// Whether some vertex of the face lies in `region`.
    pub fn meets(&self, region: &Region) -> bool {
        match self.index_range(region) {
            None => false,
            Some((a, b)) => (a..=b).any(|j| region.contains(&self.vertex_at(j))),
        }
    }

    /// Index `j` with `vertex_at(j) == p`, if `p` is a vertex of the face.
    pub fn index_of(&self, p: &Vec3) -> Option<i64> {
        match self {
            FaceDescriptor::Finite(v) => v.iter().position(|x| x == p).map(|i| i as i64),
            FaceDescriptor::Infinite { period, translation } => {
                let tt = translation.norm_sq();
                let m = period.len() as i64;
                period.iter().enumerate().find_map(|(i, x)| {
                    let d = p - x;
                    let k = d.dot(translation) / &tt;
                    if !k.is_integer() || translation.scale(&k) != d {
                        return None;
                    }
                    let k = i64::try_from(k.to_integer()).ok()?;
                    Some(k * m + i as i64)
                })
            }
        }
    }

    /// Vertices with indices in `[a, b]`.
    pub fn walk(&self, a: i64, b: i64) -> Vec<Vec3> {
        (a..=b).map(|j| self.vertex_at(j)).collect()
    }
}

fn canonical_cycle(v: &[Vec3]) -> Vec<Vec3> {
    let n = v.len();
    let (start, _) = v.iter().enumerate().min_by(|a, b| a.1.cmp(b.1)).expect("nonempty cycle");
    let fwd: Vec<Vec3> = (0..n).map(|i| v[(start + i) % n].clone()).collect();
    let bwd: Vec<Vec3> = (0..n).map(|i| v[(start + n - i) % n].clone()).collect();
    if fwd <= bwd {
        fwd
    } else {
        bwd
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Vec<Vec3> {
        alloc::vec![
            Vec3::from_ints(1, 0, 0),
            Vec3::from_ints(1, 1, 0),
            Vec3::from_ints(0, 1, 0),
            Vec3::from_ints(0, 0, 0),
        ]
    }

    #[test]
    fn finite_canonical_is_orientation_blind() {
        let a = FaceDescriptor::Finite(square()).canonical();
        let mut r = square();
        r.reverse();
        r.rotate_left(2);
        assert_eq!(a, FaceDescriptor::Finite(r).canonical());
        assert_eq!(a.listed()[0], Vec3::from_ints(0, 0, 0));
    }

    #[test]
    fn infinite_canonical_is_anchor_blind() {
        let zig = FaceDescriptor::Infinite {
            period: alloc::vec![Vec3::from_ints(0, 0, 0), Vec3::from_ints(1, 1, 0)],
            translation: Vec3::from_ints(2, 0, 0),
        };
        let shifted = FaceDescriptor::Infinite {
            period: alloc::vec![Vec3::from_ints(5, 1, 0), Vec3::from_ints(4, 0, 0)],
            translation: Vec3::from_ints(-2, 0, 0),
        };
        assert_eq!(zig.canonical(), shifted.canonical());
    }

    #[test]
    fn infinite_walk_and_range() {
        let zig = FaceDescriptor::Infinite {
            period: alloc::vec![Vec3::from_ints(0, 0, 0), Vec3::from_ints(1, 1, 0)],
            translation: Vec3::from_ints(2, 0, 0),
        };
        assert_eq!(zig.vertex_at(-1), Vec3::from_ints(-1, 1, 0));
        let region = Region::new(Vec3::zero(), q(3)).unwrap();
        let (a, b) = zig.index_range(&region).unwrap();
        let inside: Vec<Vec3> = (a..=b).map(|j| zig.vertex_at(j)).filter(|p| region.contains(p)).collect();
        assert_eq!(inside.len(), 7);
        assert!(zig.meets(&region));
    }
}
