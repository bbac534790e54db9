//! Wythoff-style orbit construction of skeletal structures from symmetry generators.

mod face;
mod quotient;

pub use face::FaceDescriptor;
pub use quotient::{build_quotient, QEdge, QFace, QuotientComplex};

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::Signed;

use crate::complex::{ComplexError, SkeletalComplex};
use crate::geometry::{q, Isometry, Lattice, Mat3, OrderOrTranslation, Rational, Vec3};

/// Default cap on the number of group elements visited by [`wythoff_patch`].
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

const MAX_POINT_GROUP: usize = 48;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrbitError {
    #[error("invalid generator set: {0}")]
    InvalidGenerators(String),
    #[error("unknown generator {0:?} in word")]
    UnknownGenerator(String),
    #[error("degenerate face: {0}")]
    DegenerateFace(String),
    #[error("explosion: orbit exceeded {0} elements")]
    Explosion(usize),
    #[error("region radius must be positive")]
    BadRegion,
    #[error("not periodic: {0}")]
    NotPeriodic(String),
    #[error("self-identification: {0}")]
    SelfIdentification(String),
    #[error("region too small: {0}")]
    RegionTooSmall(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// Axis-aligned box `{x : |x - center|∞ ≤ radius}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    center: Vec3,
    radius: Rational,
}

impl Region {
    pub fn new(center: Vec3, radius: Rational) -> Result<Self, OrbitError> {
        if !radius.is_positive() {
            return Err(OrbitError::BadRegion);
        }
        Ok(Region { center, radius })
    }

    pub fn centered(radius: i64) -> Self {
        Region::new(Vec3::zero(), q(radius)).expect("positive radius")
    }

    pub fn center(&self) -> &Vec3 {
        &self.center
    }

    pub fn radius(&self) -> &Rational {
        &self.radius
    }

    pub fn contains(&self, p: &Vec3) -> bool {
        (p - &self.center).max_norm() <= self.radius
    }

    pub fn strictly_contains(&self, p: &Vec3) -> bool {
        (p - &self.center).max_norm() < self.radius
    }

    pub fn expanded(&self, by: &Rational) -> Region {
        Region { center: self.center.clone(), radius: &self.radius + by }
    }

    /// Shrinks the box; `None` when nothing would remain.
    pub fn shrunk(&self, by: &Rational) -> Option<Region> {
        Region::new(self.center.clone(), &self.radius - by).ok()
    }
}

/// A named symmetry used as a generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub isometry: Isometry,
}

/// Symmetry generators plus the base flag data of the construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    generators: Vec<Generator>,
    base_vertex: Vec3,
    base_edge_other: Vec3,
    face_generator: String,
}

impl GeneratorSet {
    pub fn new(
        generators: Vec<Generator>,
        base_vertex: Vec3,
        base_edge_other: Vec3,
        face_generator: &str,
    ) -> Result<Self, OrbitError> {
        if generators.is_empty() {
            return Err(OrbitError::InvalidGenerators("no generators".to_string()));
        }
        if base_vertex == base_edge_other {
            return Err(OrbitError::InvalidGenerators("base vertex equals the other end of the base edge".to_string()));
        }
        let mut names = BTreeSet::new();
        for g in &generators {
            if g.name.is_empty() || !names.insert(g.name.clone()) {
                return Err(OrbitError::InvalidGenerators(alloc::format!("bad or repeated name {:?}", g.name)));
            }
        }
        let set = GeneratorSet { generators, base_vertex, base_edge_other, face_generator: face_generator.to_string() };
        set.word(face_generator)?;
        Ok(set)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn base_vertex(&self) -> &Vec3 {
        &self.base_vertex
    }

    pub fn base_edge_other(&self) -> &Vec3 {
        &self.base_edge_other
    }

    pub fn face_generator(&self) -> &str {
        &self.face_generator
    }

    pub fn get(&self, name: &str) -> Option<&Isometry> {
        self.generators.iter().find(|g| g.name == name).map(|g| &g.isometry)
    }

    /// Evaluates a word of generator names; the leftmost letter acts first.
    pub fn word(&self, word: &str) -> Result<Isometry, OrbitError> {
        let mut rest = word;
        let mut acc = Isometry::identity();
        while !rest.is_empty() {
            let g = self
                .generators
                .iter()
                .filter(|g| rest.starts_with(g.name.as_str()))
                .max_by_key(|g| g.name.len())
                .ok_or_else(|| OrbitError::UnknownGenerator(rest.to_string()))?;
            acc = g.isometry.compose(&acc);
            rest = &rest[g.name.len()..];
        }
        Ok(acc)
    }

    pub fn face_isometry(&self) -> Isometry {
        self.word(&self.face_generator).expect("checked at construction")
    }

    /// Point group with one representative isometry per linear part.
    pub fn point_group(&self) -> Result<BTreeMap<Mat3, Isometry>, OrbitError> {
        let mut reps: BTreeMap<Mat3, Isometry> = BTreeMap::new();
        let mut queue = VecDeque::new();
        reps.insert(Mat3::identity(), Isometry::identity());
        queue.push_back(Isometry::identity());
        while let Some(r) = queue.pop_front() {
            for g in &self.generators {
                let h = r.compose(&g.isometry);
                if !reps.contains_key(h.linear()) {
                    if reps.len() >= MAX_POINT_GROUP {
                        return Err(OrbitError::Explosion(MAX_POINT_GROUP));
                    }
                    reps.insert(h.linear().clone(), h.clone());
                    queue.push_back(h);
                }
            }
        }
        Ok(reps)
    }

    /// Translation subgroup of the generated group, via Schreier generators.
    pub fn translation_lattice(&self) -> Result<Lattice, OrbitError> {
        let reps = self.point_group()?;
        let mut translations = Vec::new();
        for r in reps.values() {
            for g in &self.generators {
                let h = r.compose(&g.isometry);
                let back = &reps[h.linear()];
                let t = h.compose(&back.inverse());
                debug_assert!(t.is_translation());
                if !t.translation().is_zero() {
                    translations.push(t.translation().clone());
                }
            }
        }
        Ok(Lattice::from_generators(&translations))
    }

    /// Largest max-norm displacement of the base vertex by a generator or its inverse.
    pub fn displacement(&self) -> Rational {
        let v = &self.base_vertex;
        let mut d = (&self.base_edge_other - v).max_norm();
        for g in &self.generators {
            for h in [g.isometry.clone(), g.isometry.inverse()] {
                let e = (&h.apply(v) - v).max_norm();
                if e > d {
                    d = e;
                }
            }
        }
        d
    }
}

/// The base face: the orbit of the base vertex under the face generator.
pub fn build_base_face(gen: &GeneratorSet) -> Result<FaceDescriptor, OrbitError> {
    let f = gen.face_isometry();
    let v0 = gen.base_vertex();
    if f.apply(v0) == *v0 {
        return Err(OrbitError::DegenerateFace("face generator fixes the base vertex".to_string()));
    }
    match f.order_or_translation(1024) {
        OrderOrTranslation::Finite(_) => {
            let mut cycle = alloc::vec![v0.clone()];
            let mut p = f.apply(v0);
            while p != *v0 {
                cycle.push(p.clone());
                p = f.apply(&p);
            }
            if cycle.len() < 3 {
                return Err(OrbitError::DegenerateFace(alloc::format!("{} distinct vertices", cycle.len())));
            }
            Ok(FaceDescriptor::Finite(cycle))
        }
        OrderOrTranslation::Translation(n, _) => {
            let n = n as usize;
            let mut orbit = alloc::vec![v0.clone()];
            for _ in 1..2 * n {
                let next = f.apply(orbit.last().expect("nonempty"));
                orbit.push(next);
            }
            let k = (1..=n)
                .find(|&k| {
                    let w = &orbit[k] - &orbit[0];
                    (0..n).all(|j| &orbit[j + k] - &orbit[j] == w)
                })
                .expect("the full period always works");
            if k < 2 {
                return Err(OrbitError::DegenerateFace("collinear orbit".to_string()));
            }
            let translation = &orbit[k] - &orbit[0];
            Ok(FaceDescriptor::Infinite { period: orbit[..k].to_vec(), translation })
        }
        OrderOrTranslation::Exceeded => Err(OrbitError::DegenerateFace("face generator has no finite order or translation power".to_string())),
    }
}

/// Enumerates the orbits of the base vertex, edge and face that meet `region`.
///
/// When the generated group is finite the whole structure is returned and the region is dropped.
pub fn wythoff_patch(gen: &GeneratorSet, region: &Region) -> Result<SkeletalComplex, OrbitError> {
    wythoff_patch_capped(gen, region, DEFAULT_ELEMENT_CAP)
}

pub fn wythoff_patch_capped(gen: &GeneratorSet, region: &Region, cap: usize) -> Result<SkeletalComplex, OrbitError> {
    let base_face = build_base_face(gen)?;
    let periods = gen.translation_lattice()?;
    let finite = periods.rank() == 0;
    let v0 = gen.base_vertex();
    let search = region.expanded(&(gen.displacement() * q(2)));
    let (star_edges, star_faces) = base_star(gen, &base_face, &periods)?;
    let stab = vertex_stabilizer(gen, &periods)?;
    let mut step_by_target: BTreeMap<Vec3, Isometry> = BTreeMap::new();
    for g in gen.generators() {
        for s in [g.isometry.clone(), g.isometry.inverse()] {
            for sigma in &stab {
                let e = sigma.compose(&s);
                step_by_target.entry(e.apply(v0)).or_insert(e);
            }
        }
    }
    step_by_target.remove(v0);
    let steps: Vec<Isometry> = step_by_target.into_values().collect();

    let mut seen: BTreeSet<Vec3> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(v0.clone());
    queue.push_back(Isometry::identity());
    let mut edges: BTreeSet<(Vec3, Vec3)> = BTreeSet::new();
    let mut faces: BTreeSet<FaceDescriptor> = BTreeSet::new();
    while let Some(h) = queue.pop_front() {
        let hv = h.apply(v0);
        if finite || region.contains(&hv) {
            for u in &star_edges {
                let hu = h.apply(u);
                edges.insert(if hv < hu { (hv.clone(), hu) } else { (hu, hv.clone()) });
            }
            for f in &star_faces {
                faces.insert(f.apply(&h).canonical());
            }
        }
        for s in &steps {
            let next = h.compose(s);
            let p = next.apply(v0);
            if !finite && !search.contains(&p) {
                continue;
            }
            if seen.insert(p) {
                if seen.len() > cap {
                    return Err(OrbitError::Explosion(cap));
                }
                queue.push_back(next);
            }
        }
    }
    let region = (!finite).then(|| region.clone());
    Ok(SkeletalComplex::assemble(edges, faces, region, periods)?)
}

/// Stabilizer of the base vertex, from the point group and the translation lattice.
pub fn vertex_stabilizer(gen: &GeneratorSet, periods: &Lattice) -> Result<Vec<Isometry>, OrbitError> {
    let v0 = gen.base_vertex();
    let mut out = Vec::new();
    for r in gen.point_group()?.values() {
        let t = v0 - &r.apply(v0);
        if periods.contains(&t) {
            out.push(Isometry::translation_by(t).compose(r));
        }
    }
    Ok(out)
}

/// Edge ends and faces at the base vertex.
fn base_star(gen: &GeneratorSet, base_face: &FaceDescriptor, periods: &Lattice) -> Result<(Vec<Vec3>, Vec<FaceDescriptor>), OrbitError> {
    let stab = vertex_stabilizer(gen, periods)?;
    let v0 = gen.base_vertex();
    let mut ends = BTreeSet::new();
    let mut faces = BTreeSet::new();
    let face_isometry = gen.face_isometry();
    ends.extend(reversed_edge_ends(gen, periods)?);
    let m = base_face.period_len() as i64;
    for g in &stab {
        ends.insert(g.apply(gen.base_edge_other()));
        let mut k = Isometry::identity();
        for _ in 0..m {
            let image = base_face.apply(&g.compose(&k)).canonical();
            if image.index_of(v0).is_some() {
                faces.insert(image);
            }
            k = k.compose(&face_isometry.inverse());
        }
    }
    Ok((ends.into_iter().collect(), faces.into_iter().collect()))
}

/// Other ends of edges `g(base edge)` with `g` carrying the far end onto the base vertex.
fn reversed_edge_ends(gen: &GeneratorSet, periods: &Lattice) -> Result<Vec<Vec3>, OrbitError> {
    let v0 = gen.base_vertex();
    let u0 = gen.base_edge_other();
    let mut out = Vec::new();
    for r in gen.point_group()?.values() {
        let t = v0 - &r.apply(u0);
        if periods.contains(&t) {
            out.push(Isometry::translation_by(t).compose(r).apply(v0));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube_gens() -> GeneratorSet {
        let r0 = Isometry::new(Mat3::from_ints([[-1, 0, 0], [0, 1, 0], [0, 0, 1]]), Vec3::zero()).unwrap();
        let r1 = Isometry::new(Mat3::from_ints([[0, 1, 0], [1, 0, 0], [0, 0, 1]]), Vec3::zero()).unwrap();
        let r2 = Isometry::new(Mat3::from_ints([[1, 0, 0], [0, 0, 1], [0, 1, 0]]), Vec3::zero()).unwrap();
        GeneratorSet::new(
            alloc::vec![
                Generator { name: "R0".into(), isometry: r0 },
                Generator { name: "R1".into(), isometry: r1 },
                Generator { name: "R2".into(), isometry: r2 },
            ],
            Vec3::from_ints(1, 1, 1),
            Vec3::from_ints(-1, 1, 1),
            "R0R1",
        )
        .unwrap()
    }

    fn square_tiling_gens() -> GeneratorSet {
        let r0 = Isometry::new(Mat3::from_ints([[-1, 0, 0], [0, 1, 0], [0, 0, 1]]), Vec3::from_ints(1, 0, 0)).unwrap();
        let r1 = Isometry::new(Mat3::from_ints([[0, 1, 0], [1, 0, 0], [0, 0, 1]]), Vec3::zero()).unwrap();
        let r2 = Isometry::new(Mat3::from_ints([[1, 0, 0], [0, -1, 0], [0, 0, 1]]), Vec3::zero()).unwrap();
        GeneratorSet::new(
            alloc::vec![
                Generator { name: "R0".into(), isometry: r0 },
                Generator { name: "R1".into(), isometry: r1 },
                Generator { name: "R2".into(), isometry: r2 },
            ],
            Vec3::zero(),
            Vec3::from_ints(1, 0, 0),
            "R0R1",
        )
        .unwrap()
    }

    #[test]
    fn cube_patch_counts() {
        let c = wythoff_patch(&cube_gens(), &Region::centered(2)).unwrap();
        assert_eq!(c.counts(), (8, 12, 6));
        assert!(c.is_finite());
    }

    #[test]
    fn square_tiling_vertex_count() {
        for n in 1..=3 {
            let c = wythoff_patch(&square_tiling_gens(), &Region::centered(n)).unwrap();
            let inside = c.vertices().iter().filter(|p| Region::centered(n).contains(p)).count();
            assert_eq!(inside as i64, (2 * n + 1) * (2 * n + 1));
        }
    }

    #[test]
    fn square_tiling_lattice() {
        let l = square_tiling_gens().translation_lattice().unwrap();
        assert_eq!(l.rank(), 2);
        assert!(l.contains(&Vec3::from_ints(1, 0, 0)));
        assert!(l.contains(&Vec3::from_ints(0, 1, 0)));
        assert!(!l.contains(&Vec3::from_ints(0, 0, 1)));
    }

    #[test]
    fn word_order() {
        let g = cube_gens();
        let w = g.word("R0R1").unwrap();
        let manual = g.get("R1").unwrap().compose(g.get("R0").unwrap());
        assert_eq!(w, manual);
        assert!(g.word("R9").is_err());
    }

    #[test]
    fn invalid_sets_rejected() {
        assert!(GeneratorSet::new(Vec::new(), Vec3::zero(), Vec3::unit(0), "R0").is_err());
        let g = cube_gens();
        assert!(GeneratorSet::new(g.generators().to_vec(), Vec3::zero(), Vec3::zero(), "R0R1").is_err());
    }

    #[test]
    fn explosion_cap() {
        assert!(matches!(
            wythoff_patch_capped(&square_tiling_gens(), &Region::centered(6), 20),
            Err(OrbitError::Explosion(20))
        ));
    }
}
