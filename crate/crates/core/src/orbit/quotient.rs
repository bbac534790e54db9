use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::complex::SkeletalComplex;
use crate::geometry::{q, Isometry, Lattice, Vec3};

use super::{FaceDescriptor, OrbitError};

const MAX_FACE_WRAP: i64 = 64;

/// An edge class `{rep(a), rep(b) + shift}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct QEdge {
    pub a: usize,
    pub b: usize,
    pub shift: Vec3,
}

/// A face class: its closed walk of vertex classes and one geometric lift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QFace {
    pub cycle: Vec<usize>,
    /// Positions of the walk; `lift[0]` is the representative of `cycle[0]`.
    pub lift: Vec<Vec3>,
    /// `lift[n]` would equal `lift[0] + closing`.
    pub closing: Vec3,
    /// Edge class between positions `i` and `i + 1`.
    pub edges: Vec<usize>,
    /// Period translation of the original face when it is infinite.
    pub translation: Option<Vec3>,
}

impl QFace {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn is_infinite(&self) -> bool {
        self.translation.is_some()
    }
}

pub(crate) type WalkKey = Vec<(usize, Vec3)>;

/// A periodic structure modulo a sublattice of its translations.
#[derive(Clone, Debug)]
pub struct QuotientComplex {
    lattice: Lattice,
    reps: Vec<Vec3>,
    cell_index: BTreeMap<Vec3, usize>,
    edges: Vec<QEdge>,
    edge_index: BTreeMap<(usize, usize, Vec3), usize>,
    faces: Vec<QFace>,
    face_index: BTreeMap<WalkKey, usize>,
}

impl QuotientComplex {
    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn vertex_count(&self) -> usize {
        self.reps.len()
    }

    pub fn rep(&self, class: usize) -> &Vec3 {
        &self.reps[class]
    }

    pub fn reps(&self) -> &[Vec3] {
        &self.reps
    }

    pub fn edges(&self) -> &[QEdge] {
        &self.edges
    }

    pub fn faces(&self) -> &[QFace] {
        &self.faces
    }

    /// Class of a vertex position and the lattice vector carrying the representative onto it.
    pub fn locate(&self, p: &Vec3) -> Option<(usize, Vec3)> {
        let (cell, _) = self.lattice.reduce(p);
        let c = *self.cell_index.get(&cell)?;
        Some((c, p - &self.reps[c]))
    }

    /// Edge class of the segment `{x, y}`.
    pub fn edge_between(&self, x: &Vec3, y: &Vec3) -> Option<usize> {
        let (a, lx) = self.locate(x)?;
        let (b, ly) = self.locate(y)?;
        let key = edge_key(a, b, &ly - &lx);
        self.edge_index.get(&key).copied()
    }

    /// Face class of a closed walk given by positions and closing translation.
    pub fn face_of_walk(&self, positions: &[Vec3], closing: &Vec3) -> Option<usize> {
        let key = self.walk_key(positions, closing)?;
        self.face_index.get(&key).copied()
    }

    pub(crate) fn walk_key(&self, positions: &[Vec3], closing: &Vec3) -> Option<WalkKey> {
        let n = positions.len();
        let mut seq = Vec::with_capacity(n);
        for i in 0..n {
            let (c, _) = self.locate(&positions[i])?;
            let next = if i + 1 < n { positions[i + 1].clone() } else { &positions[0] + closing };
            seq.push((c, &next - &positions[i]));
        }
        Some(canonical_walk(&seq))
    }

    /// Whether `g` maps the periodic structure onto itself.
    pub fn is_symmetry(&self, g: &Isometry) -> bool {
        if !self.lattice.is_preserved_by(g.linear()) {
            return false;
        }
        if self.reps.iter().any(|p| self.locate(&g.apply(p)).is_none()) {
            return false;
        }
        let edges_ok = self.edges.iter().all(|e| {
            let x = &self.reps[e.a];
            let y = &self.reps[e.b] + &e.shift;
            self.edge_between(&g.apply(x), &g.apply(&y)).is_some()
        });
        edges_ok && self.faces.iter().all(|f| self.image_face(f, g).is_some())
    }

    /// Face class of `g(f)`.
    pub fn image_face(&self, f: &QFace, g: &Isometry) -> Option<usize> {
        let lifted: Vec<Vec3> = f.lift.iter().map(|p| g.apply(p)).collect();
        self.face_of_walk(&lifted, &g.apply_linear(&f.closing))
    }

    /// Euler characteristic `V - E + F` of the quotient.
    pub fn euler_characteristic(&self) -> i64 {
        self.reps.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }
}

fn edge_key(a: usize, b: usize, shift: Vec3) -> (usize, usize, Vec3) {
    let fwd = (a, b, shift.clone());
    let bwd = (b, a, -shift);
    if fwd <= bwd {
        fwd
    } else {
        bwd
    }
}

fn canonical_walk(seq: &[(usize, Vec3)]) -> WalkKey {
    let n = seq.len();
    let rev: Vec<(usize, Vec3)> = (0..n)
        .map(|i| {
            let c = seq[(n - i) % n].0;
            let step = -&seq[(2 * n - i - 1) % n].1;
            (c, step)
        })
        .collect();
    let mut best: Option<WalkKey> = None;
    for s in [seq, &rev[..]] {
        for r in 0..n {
            if best.as_ref().is_some_and(|b| s[r].0 > b[0].0) {
                continue;
            }
            let cand: WalkKey = (0..n).map(|i| s[(r + i) % n].clone()).collect();
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.expect("nonempty walk")
}

fn face_walk(face: &FaceDescriptor, start: &Vec3, lattice: &Lattice) -> Result<(Vec<Vec3>, Vec3), OrbitError> {
    let j0 = face.index_of(start).expect("corner vertex lies on its face");
    match face {
        FaceDescriptor::Finite(v) => Ok((face.walk(j0, j0 + v.len() as i64 - 1), Vec3::zero())),
        FaceDescriptor::Infinite { period, translation } => {
            let k = (1..=MAX_FACE_WRAP)
                .find(|&k| lattice.contains(&translation.scale(&q(k))))
                .ok_or_else(|| OrbitError::SelfIdentification("no multiple of a face period lies in the sublattice".to_string()))?;
            let n = k * period.len() as i64;
            Ok((face.walk(j0, j0 + n - 1), translation.scale(&q(k))))
        }
    }
}

/// Quotient of a periodic complex (or patch of one) by a sublattice of its translations.
pub fn build_quotient(complex: &SkeletalComplex, sublattice: &Lattice) -> Result<QuotientComplex, OrbitError> {
    if !complex.periods().contains_lattice(sublattice) {
        return Err(OrbitError::NotPeriodic("sublattice is not contained in the translation lattice".to_string()));
    }
    if !complex.is_finite() && sublattice.rank() < complex.periods().rank() {
        return Err(OrbitError::NotPeriodic("sublattice rank is below the period rank".to_string()));
    }
    let verts = complex.vertices();
    let mut cell_index: BTreeMap<Vec3, usize> = BTreeMap::new();
    let mut rep_ids: Vec<usize> = Vec::new();
    let mut member_class: Vec<Option<usize>> = alloc::vec![None; verts.len()];
    for (vi, p) in verts.iter().enumerate() {
        if !complex.in_region(p) {
            continue;
        }
        let (cell, _) = sublattice.reduce(p);
        let c = *cell_index.entry(cell).or_insert_with(|| {
            rep_ids.push(vi);
            rep_ids.len() - 1
        });
        member_class[vi] = Some(c);
    }
    let reps: Vec<Vec3> = rep_ids.iter().map(|&v| verts[v].clone()).collect();
    let mut quotient = QuotientComplex {
        lattice: sublattice.clone(),
        reps,
        cell_index,
        edges: Vec::new(),
        edge_index: BTreeMap::new(),
        faces: Vec::new(),
        face_index: BTreeMap::new(),
    };

    let mut edge_keys: BTreeSet<(usize, usize, Vec3)> = BTreeSet::new();
    let mut face_walks: BTreeMap<WalkKey, (Vec<usize>, Vec<Vec3>, Vec3, Option<Vec3>)> = BTreeMap::new();
    for (c, &vi) in rep_ids.iter().enumerate() {
        let x = &verts[vi];
        for &w in complex.neighbors(vi) {
            let y = &verts[w];
            let (b, ly) = quotient
                .locate(y)
                .ok_or_else(|| OrbitError::RegionTooSmall(alloc::format!("no representative for the class of {y}")))?;
            if b == c {
                return Err(OrbitError::SelfIdentification(alloc::format!("edge {x} - {y} collapses")));
            }
            edge_keys.insert(edge_key(c, b, ly));
        }
        for corner in complex.corners(vi) {
            let face = &complex.faces()[corner.face].descriptor;
            let (walk, closing) = face_walk(face, x, sublattice)?;
            let mut cycle = Vec::with_capacity(walk.len());
            for p in &walk {
                let (cls, _) = quotient
                    .locate(p)
                    .ok_or_else(|| OrbitError::RegionTooSmall(alloc::format!("no representative for the class of {p}")))?;
                cycle.push(cls);
            }
            let distinct: BTreeSet<usize> = cycle.iter().copied().collect();
            if distinct.len() != cycle.len() {
                return Err(OrbitError::SelfIdentification("a face meets a translate of itself".to_string()));
            }
            let key = quotient.walk_key(&walk, &closing).expect("classes located");
            face_walks
                .entry(key)
                .or_insert_with(|| (cycle, walk, closing, face.translation().cloned()));
        }
    }

    check_periodicity(complex, &quotient, &member_class, &rep_ids)?;

    for (i, key) in edge_keys.iter().enumerate() {
        quotient.edges.push(QEdge { a: key.0, b: key.1, shift: key.2.clone() });
        quotient.edge_index.insert(key.clone(), i);
    }
    for (i, (key, (cycle, lift, closing, translation))) in face_walks.into_iter().enumerate() {
        let n = lift.len();
        let mut edges = Vec::with_capacity(n);
        for j in 0..n {
            let next = if j + 1 < n { lift[j + 1].clone() } else { &lift[0] + &closing };
            let e = quotient
                .edge_between(&lift[j], &next)
                .ok_or_else(|| OrbitError::NotPeriodic("a face side is not an edge".to_string()))?;
            edges.push(e);
        }
        quotient.faces.push(QFace { cycle, lift, closing, edges, translation });
        quotient.face_index.insert(key, i);
    }
    Ok(quotient)
}

/// Every in-region vertex must carry a translate of its representative's star.
fn check_periodicity(
    complex: &SkeletalComplex,
    quotient: &QuotientComplex,
    member_class: &[Option<usize>],
    rep_ids: &[usize],
) -> Result<(), OrbitError> {
    let verts = complex.vertices();
    let star = |v: usize, shift: &Vec3| -> (BTreeSet<Vec3>, BTreeSet<FaceDescriptor>) {
        let nbrs = complex.neighbors(v).iter().map(|&w| &verts[w] - shift).collect();
        let faces = complex
            .corners(v)
            .iter()
            .map(|c| complex.faces()[c.face].descriptor.translate(&-shift).canonical())
            .collect();
        (nbrs, faces)
    };
    let rep_stars: Vec<_> = rep_ids.iter().map(|&v| star(v, &Vec3::zero())).collect();
    for (v, class) in member_class.iter().enumerate() {
        let Some(c) = class else { continue };
        if rep_ids[*c] == v {
            continue;
        }
        let shift = &verts[v] - quotient.rep(*c);
        if star(v, &shift) != rep_stars[*c] {
            return Err(OrbitError::NotPeriodic(alloc::format!("star of {} differs from its translate", verts[v])));
        }
    }
    Ok(())
}
