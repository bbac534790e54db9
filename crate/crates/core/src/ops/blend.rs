use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::classify::find_flag_symmetries;
use crate::complex::SkeletalComplex;
use crate::geometry::{frac, plane_reflection, q, rank, Lattice, Rational, Vec3};
use crate::orbit::{wythoff_patch, FaceDescriptor, Generator, GeneratorSet, Region};

use super::trace::polyhedral_flags;
use super::OpsError;

/// The linear regular polygon blended with a planar polyhedron.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlendComponent {
    /// Vertices alternately raised and lowered by this amount along the normal.
    Segment(Rational),
    /// Faces rise by this amount per step.
    Apeirogon(Rational),
}

impl BlendComponent {
    fn parameter(&self) -> &Rational {
        match self {
            BlendComponent::Segment(h) | BlendComponent::Apeirogon(h) => h,
        }
    }
}

/// A vertex of the planar structure and the lexicographically positive primitive normal of its plane.
pub(crate) fn plane_of(planar: &SkeletalComplex) -> Result<(Vec3, Vec3), OpsError> {
    let v = planar.vertices();
    let anchor = v.first().ok_or_else(|| OpsError::NotPlanar(String::from("no vertices")))?;
    let diffs: Vec<Vec3> = v.iter().map(|p| p - anchor).collect();
    if rank(&diffs) != 2 {
        return Err(OpsError::NotPlanar(format!("vertices span {} dimensions", rank(&diffs))));
    }
    let a = diffs.iter().find(|d| !d.is_zero()).expect("rank two");
    let normal = diffs.iter().map(|d| a.cross(d)).find(|c| !c.is_zero()).expect("rank two");
    let normal = normal.primitive().expect("nonzero");
    Ok((anchor.clone(), if normal.is_lex_positive() { normal } else { -&normal }))
}

fn not_bipartite(detail: impl Into<String>) -> OpsError {
    OpsError::NotBipartite(detail.into())
}

/// Lexicographically positive primitive normal of the plane containing a planar structure.
pub fn plane_normal(planar: &SkeletalComplex) -> Result<Vec3, OpsError> {
    plane_of(planar).map(|(_, n)| n)
}

/// Two-coloring of the vertex graph; every edge joins the two colors and the
/// vertex nearest the center of the patch is colored `true`.
fn two_coloring(planar: &SkeletalComplex) -> Result<Vec<bool>, OpsError> {
    let n = planar.vertices().len();
    let mut color: Vec<Option<bool>> = vec![None; n];
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            let cx = color[x].expect("queued vertices are colored");
            for &y in planar.neighbors(x) {
                match color[y] {
                    None => {
                        color[y] = Some(!cx);
                        queue.push_back(y);
                    }
                    Some(cy) if cy == cx => {
                        return Err(not_bipartite(format!("edge {} {} joins equal colors", planar.vertices()[x], planar.vertices()[y])))
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let mut color: Vec<bool> = color.into_iter().map(|c| c.expect("all colored")).collect();
    let center = planar.region().map_or_else(Vec3::zero, |r| r.center().clone());
    let raised = (0..n).min_by_key(|&i| ((&planar.vertices()[i] - &center).max_norm(), planar.vertices()[i].clone()));
    if raised.is_some_and(|i| !color[i]) {
        color.iter_mut().for_each(|c| *c = !*c);
    }
    Ok(color)
}

/// Color of every vertex of a face, extended along the face from a colored vertex.
fn face_parity(planar: &SkeletalComplex, color: &[bool], f: &FaceDescriptor) -> Result<bool, OpsError> {
    let m = f.period_len() as i64;
    if f.is_finite() && m % 2 == 1 {
        return Err(not_bipartite(format!("face with {m} vertices cannot alternate")));
    }
    let mut parity = None;
    for j in -3 * m..3 * m {
        if let Some(id) = planar.vertex_id(&f.vertex_at(j)) {
            let p = color[id] ^ (j.rem_euclid(2) == 1);
            match parity {
                None => parity = Some(p),
                Some(q) if q != p => return Err(not_bipartite("face does not alternate colors")),
                Some(_) => {}
            }
        }
    }
    parity.ok_or_else(|| not_bipartite("face has no vertex in the patch"))
}

fn lift(p: &Vec3, up: bool, step: &Vec3) -> Vec3 {
    if up {
        p + step
    } else {
        p - step
    }
}

/// Translations of the planar structure that preserve the coloring.
fn color_preserving(planar: &SkeletalComplex, color: &[bool]) -> Result<Lattice, OpsError> {
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for b in planar.periods().basis() {
        let flips = planar
            .vertices()
            .iter()
            .enumerate()
            .find_map(|(i, v)| planar.vertex_id(&(v + b)).map(|j| color[i] != color[j]))
            .ok_or_else(|| OpsError::RegionTooSmall(format!("no vertex pair differing by {b}")))?;
        if flips {
            odd.push(b.clone());
        } else {
            even.push(b.clone());
        }
    }
    if let Some(first) = odd.first().cloned() {
        even.push(first.scale(&q(2)));
        even.extend(odd.iter().skip(1).map(|b| b - &first));
    }
    Ok(Lattice::from_generators(&even))
}

fn segment_blend(planar: &SkeletalComplex, h: &Rational) -> Result<SkeletalComplex, OpsError> {
    let (_, normal) = plane_of(planar)?;
    let step = normal.scale(h);
    let color = two_coloring(planar)?;
    let mut faces = Vec::with_capacity(planar.faces().len());
    for face in planar.faces() {
        let f = &face.descriptor;
        let up0 = face_parity(planar, &color, f)?;
        let m = f.period_len();
        faces.push(match f {
            FaceDescriptor::Finite(v) => {
                FaceDescriptor::Finite(v.iter().enumerate().map(|(j, p)| lift(p, up0 ^ (j % 2 == 1), &step)).collect())
            }
            FaceDescriptor::Infinite { translation, .. } => {
                let reps = if m % 2 == 0 { 1 } else { 2 };
                let period =
                    (0..reps * m).map(|j| lift(&f.vertex_at(j as i64), up0 ^ (j % 2 == 1), &step)).collect();
                FaceDescriptor::Infinite { period, translation: translation.scale(&q(reps as i64)) }
            }
        });
    }
    let region = match planar.region() {
        None => None,
        Some(r) => {
            let reach = step.max_norm();
            let shrunk = r.shrunk(&reach).filter(|s| s.radius() > &reach);
            Some(shrunk.ok_or_else(|| OpsError::RegionTooSmall(String::from("patch thinner than the lift")))?)
        }
    };
    Ok(SkeletalComplex::from_faces(faces, region, color_preserving(planar, &color)?)?)
}

/// Reflections `R0, R1, R2` of a regular planar polyhedron at its base flag.
pub fn planar_generators(planar: &SkeletalComplex) -> Result<GeneratorSet, OpsError> {
    plane_of(planar)?;
    let flags = polyhedral_flags(planar)?;
    let r = find_flag_symmetries(&flags, 0)?.reflections.ok_or(OpsError::NotRegular)?;
    let zero = Vec3::zero();
    let base = flags.lifted_vertex(0, &zero);
    let (n, s) = flags.lifted_step(0, &zero, 0).ok_or(OpsError::NotPolyhedron)?;
    let other = flags.lifted_vertex(n, &s);
    let gens = r
        .into_iter()
        .enumerate()
        .map(|(i, isometry)| Generator { name: format!("R{i}"), isometry })
        .collect();
    Ok(GeneratorSet::new(gens, base, other, "R0R1")?)
}

/// Generators of the blend of a planar regular polyhedron given by reflections
/// `R0, R1, R2` that fix the normal of its plane.
pub fn blend_generators(planar: &GeneratorSet, normal: &Vec3, component: &BlendComponent) -> Result<GeneratorSet, OpsError> {
    let h = component.parameter();
    if h.is_zero() {
        return Err(OpsError::ZeroParameter);
    }
    let r = |name: &str| {
        planar.get(name).cloned().ok_or_else(|| OpsError::NotPlanar(format!("missing generator {name}")))
    };
    let (r0, r1, r2) = (r("R0")?, r("R1")?, r("R2")?);
    let base = planar.base_vertex();
    let flip = plane_reflection(base, normal);
    let (r0, r1, base) = match component {
        BlendComponent::Segment(_) => (r0.compose(&flip), r1, base + &normal.scale(h)),
        BlendComponent::Apeirogon(_) => {
            let mid = plane_reflection(&(base + &normal.scale(&(h * frac(1, 2)))), normal);
            (r0.compose(&mid), r1.compose(&flip), base.clone())
        }
    };
    let other = r0.apply(&base);
    let gens: Vec<Generator> = [r0, r1, r2]
        .into_iter()
        .enumerate()
        .map(|(i, isometry)| Generator { name: format!("R{i}"), isometry })
        .collect();
    Ok(GeneratorSet::new(gens, base, other, "R0R1")?)
}

/// Blend of a planar polyhedron with a segment or a linear apeirogon.
pub fn blend(planar: &SkeletalComplex, component: &BlendComponent) -> Result<SkeletalComplex, OpsError> {
    if component.parameter().is_zero() {
        return Err(OpsError::ZeroParameter);
    }
    match component {
        BlendComponent::Segment(h) => segment_blend(planar, &h.abs()),
        BlendComponent::Apeirogon(_) => {
            let (_, normal) = plane_of(planar)?;
            let gens = blend_generators(&planar_generators(planar)?, &normal, component)?;
            let region = planar.region().cloned().unwrap_or_else(|| Region::centered(3));
            Ok(wythoff_patch(&gens, &region)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use alloc::collections::BTreeMap;

    use super::*;
    use crate::classify::{classify_polygon, schlafli, verdict, PolygonKind, Study, VerdictKind};
    use crate::presets::{regular_generators, RegularPreset};

    fn planar(which: RegularPreset, radius: i64) -> SkeletalComplex {
        wythoff_patch(&regular_generators(which).unwrap(), &Region::centered(radius)).unwrap()
    }

    #[test]
    fn square_segment_blend() {
        let b = blend(&planar(RegularPreset::Square44, 4), &BlendComponent::Segment(q(1))).unwrap();
        assert!(b.vertices().iter().all(|v| v.0[2] == q(1) || v.0[2] == q(-1)));
        for f in b.faces() {
            assert_eq!(classify_polygon(&f.descriptor).unwrap().kind, PolygonKind::Skew { p: 4 });
        }
        let flat: BTreeMap<(Rational, Rational), usize> =
            b.vertices().iter().map(|v| ((v.0[0].clone(), v.0[1].clone()), 0)).collect();
        assert_eq!(flat.len(), b.vertices().len());
        let st = Study::of_complex_auto(b, 4).unwrap();
        assert_eq!(verdict(&st.flags, &[]).unwrap().kind, VerdictKind::Regular);
        let s = schlafli(&st.flags).unwrap();
        assert_eq!((s.p, s.q), (Some(4), 4));
    }

    #[test]
    fn segment_blend_matches_generator_route() {
        let sq = planar(RegularPreset::Square44, 4);
        let direct = blend(&sq, &BlendComponent::Segment(q(1))).unwrap();
        let gens = blend_generators(&planar_generators(&sq).unwrap(), &Vec3::unit(2), &BlendComponent::Segment(q(1))).unwrap();
        let routed = wythoff_patch(&gens, direct.region().unwrap()).unwrap();
        assert_eq!(routed.faces(), direct.faces());
    }

    #[test]
    fn zero_and_odd_faces_rejected() {
        let sq = planar(RegularPreset::Square44, 3);
        assert_eq!(blend(&sq, &BlendComponent::Segment(q(0))), Err(OpsError::ZeroParameter));
        assert_eq!(blend(&sq, &BlendComponent::Apeirogon(q(0))), Err(OpsError::ZeroParameter));
        let tri = planar(RegularPreset::Triangle36, 3);
        assert!(matches!(blend(&tri, &BlendComponent::Segment(q(1))), Err(OpsError::NotBipartite(_))));
    }

    #[test]
    fn helices_meet_along_every_fourth_edge() {
        let b = blend(&planar(RegularPreset::Square44, 4), &BlendComponent::Apeirogon(q(1))).unwrap();
        let origin = b.vertex_id(&Vec3::zero()).unwrap();
        let face = &b.faces()[b.corners(origin)[0].face];
        assert_eq!(classify_polygon(&face.descriptor).unwrap().kind, PolygonKind::Helical { k: 4 });
        let start = face.descriptor.index_of(&Vec3::zero()).unwrap();
        let mut shared: BTreeMap<usize, Vec<i64>> = BTreeMap::new();
        for j in start - 4..start + 4 {
            let x = b.vertex_id(&face.descriptor.vertex_at(j)).unwrap();
            let y = b.vertex_id(&face.descriptor.vertex_at(j + 1)).unwrap();
            for other in b.faces_at_edge(x, y) {
                if b.faces()[other] != *face {
                    shared.entry(other).or_default().push(j);
                }
            }
        }
        assert!(!shared.is_empty());
        for steps in shared.values() {
            assert_eq!(steps.len(), 2);
            assert_eq!(steps[1] - steps[0], 4);
        }
    }
}
