use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::geometry::{Lattice, Vec3};
use crate::orbit::{FaceDescriptor, Region};

use super::ComplexError;

/// A face as stored in a complex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Face {
    pub descriptor: FaceDescriptor,
    /// Some vertex lies outside the region, or the face is infinite.
    pub truncated: bool,
}

/// A face passing through a vertex, with its two neighbors on that face.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Corner {
    pub face: usize,
    pub prev: Vec3,
    pub next: Vec3,
}

/// Vertices, edges and faces of a finite structure or of a patch of an infinite one.
#[derive(Clone, Debug)]
pub struct SkeletalComplex {
    vertices: Vec<Vec3>,
    index: BTreeMap<Vec3, usize>,
    edges: Vec<[usize; 2]>,
    faces: Vec<Face>,
    region: Option<Region>,
    periods: Lattice,
    adjacency: Vec<Vec<usize>>,
    corners: Vec<Vec<Corner>>,
}

impl PartialEq for SkeletalComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
            && self.edges == other.edges
            && self.faces == other.faces
            && self.region == other.region
            && self.periods.basis() == other.periods.basis()
    }
}

impl SkeletalComplex {
    /// Builds a complex from geometric elements, keeping what meets `region`.
    ///
    /// With `region = None` everything is kept and the structure is taken as complete.
    pub fn assemble(
        edges: impl IntoIterator<Item = (Vec3, Vec3)>,
        faces: impl IntoIterator<Item = FaceDescriptor>,
        region: Option<Region>,
        periods: Lattice,
    ) -> Result<Self, ComplexError> {
        let inside = |p: &Vec3| region.as_ref().map_or(true, |r| r.contains(p));
        let mut edge_set: BTreeSet<(Vec3, Vec3)> = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(ComplexError::DegenerateEdge);
            }
            if inside(&a) || inside(&b) {
                edge_set.insert(if a < b { (a, b) } else { (b, a) });
            }
        }
        let mut face_set: BTreeSet<FaceDescriptor> = BTreeSet::new();
        for f in faces {
            let keep = match &region {
                None => true,
                Some(r) => f.meets(r),
            };
            if keep {
                face_set.insert(f.canonical());
            }
        }
        let mut vertex_set: BTreeSet<Vec3> = BTreeSet::new();
        for (a, b) in &edge_set {
            vertex_set.insert(a.clone());
            vertex_set.insert(b.clone());
        }
        Self::from_sets(vertex_set, edge_set, face_set, region, periods)
    }

    /// Builds a complex whose edges are exactly the edges of the given faces.
    pub fn from_faces(
        faces: impl IntoIterator<Item = FaceDescriptor>,
        region: Option<Region>,
        periods: Lattice,
    ) -> Result<Self, ComplexError> {
        let faces: Vec<FaceDescriptor> = faces.into_iter().collect();
        let mut edges = Vec::new();
        for f in &faces {
            let (a, b) = match &region {
                Some(r) if !f.is_finite() => match f.index_range(&r.expanded(&edge_reach(f))) {
                    Some(range) => range,
                    None => continue,
                },
                _ => (0, f.period_len() as i64 - 1),
            };
            for j in a..=b {
                edges.push((f.vertex_at(j), f.vertex_at(j + 1)));
            }
        }
        Self::assemble(edges, faces, region, periods)
    }

    fn from_sets(
        vertex_set: BTreeSet<Vec3>,
        edge_set: BTreeSet<(Vec3, Vec3)>,
        face_set: BTreeSet<FaceDescriptor>,
        region: Option<Region>,
        periods: Lattice,
    ) -> Result<Self, ComplexError> {
        let vertices: Vec<Vec3> = vertex_set.into_iter().collect();
        let index: BTreeMap<Vec3, usize> = vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let mut edges: Vec<[usize; 2]> = edge_set.iter().map(|(a, b)| sorted_pair(index[a], index[b])).collect();
        edges.sort();
        let mut adjacency = alloc::vec![Vec::new(); vertices.len()];
        for &[a, b] in &edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for adj in adjacency.iter_mut() {
            adj.sort_unstable();
        }
        let faces: Vec<Face> = face_set
            .into_iter()
            .map(|descriptor| {
                let truncated = match (&region, &descriptor) {
                    (None, _) => false,
                    (Some(_), FaceDescriptor::Infinite { .. }) => true,
                    (Some(r), FaceDescriptor::Finite(v)) => v.iter().any(|p| !r.contains(p)),
                };
                Face { descriptor, truncated }
            })
            .collect();
        let mut corners = alloc::vec![Vec::new(); vertices.len()];
        let hull = bounding_region(&vertices);
        for (fi, face) in faces.iter().enumerate() {
            let range = match (&face.descriptor, &hull) {
                (FaceDescriptor::Finite(v), _) => Some((0, v.len() as i64 - 1)),
                (d, Some(h)) => d.index_range(h),
                (_, None) => None,
            };
            let Some((a, b)) = range else { continue };
            for j in a..=b {
                let p = face.descriptor.vertex_at(j);
                if let Some(&vi) = index.get(&p) {
                    corners[vi].push(Corner {
                        face: fi,
                        prev: face.descriptor.vertex_at(j - 1),
                        next: face.descriptor.vertex_at(j + 1),
                    });
                }
            }
        }
        for c in corners.iter_mut() {
            c.sort();
            c.dedup();
        }
        Ok(SkeletalComplex { vertices, index, edges, faces, region, periods, adjacency, corners })
    }

    pub fn vertices(&self) -> &[Vec3] {
        &self.vertices
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn region(&self) -> Option<&Region> {
        self.region.as_ref()
    }

    pub fn periods(&self) -> &Lattice {
        &self.periods
    }

    pub fn is_finite(&self) -> bool {
        self.region.is_none()
    }

    pub fn vertex_id(&self, p: &Vec3) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn corners(&self, v: usize) -> &[Corner] {
        &self.corners[v]
    }

    pub fn has_edge(&self, a: &Vec3, b: &Vec3) -> bool {
        match (self.vertex_id(a), self.vertex_id(b)) {
            (Some(i), Some(j)) => self.adjacency[i].binary_search(&j).is_ok(),
            _ => false,
        }
    }

    pub fn edge_id(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&sorted_pair(a, b)).ok()
    }

    /// Whether `p` lies in the region (always true for complete structures).
    pub fn in_region(&self, p: &Vec3) -> bool {
        self.region.as_ref().map_or(true, |r| r.contains(p))
    }

    pub fn strictly_inside(&self, p: &Vec3) -> bool {
        self.region.as_ref().map_or(true, |r| r.strictly_contains(p))
    }

    /// Vertex strictly inside with every neighbor strictly inside.
    pub fn is_interior_vertex(&self, v: usize) -> bool {
        self.strictly_inside(&self.vertices[v]) && self.adjacency[v].iter().all(|&w| self.strictly_inside(&self.vertices[w]))
    }

    pub fn interior_vertices(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| self.is_interior_vertex(v)).collect()
    }

    /// Edge with both endpoints interior.
    pub fn is_interior_edge(&self, e: usize) -> bool {
        let [a, b] = self.edges[e];
        self.is_interior_vertex(a) && self.is_interior_vertex(b)
    }

    /// Faces containing the edge `{a, b}`.
    pub fn faces_at_edge(&self, a: usize, b: usize) -> Vec<usize> {
        let pb = &self.vertices[b];
        let mut out: Vec<usize> = self.corners[a]
            .iter()
            .filter(|c| c.prev == *pb || c.next == *pb)
            .map(|c| c.face)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn vertex_degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Same structure with its faces replaced.
    pub fn with_faces(&self, faces: impl IntoIterator<Item = FaceDescriptor>) -> Result<Self, ComplexError> {
        let mut face_set = BTreeSet::new();
        for f in faces {
            let keep = self.region.as_ref().map_or(true, |r| f.meets(r));
            if keep {
                face_set.insert(f.canonical());
            }
        }
        let vertex_set = self.vertices.iter().cloned().collect();
        let edge_set = self
            .edges
            .iter()
            .map(|&[a, b]| (self.vertices[a].clone(), self.vertices[b].clone()))
            .collect();
        Self::from_sets(vertex_set, edge_set, face_set, self.region.clone(), self.periods.clone())
    }

    /// Counts of vertices, edges and faces.
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.vertices.len(), self.edges.len(), self.faces.len())
    }
}

fn sorted_pair(a: usize, b: usize) -> [usize; 2] {
    if a < b {
        [a, b]
    } else {
        [b, a]
    }
}

fn edge_reach(f: &FaceDescriptor) -> crate::geometry::Rational {
    let p = f.listed();
    let mut reach = crate::geometry::q(0);
    for j in 0..p.len() as i64 {
        let d = (&f.vertex_at(j + 1) - &f.vertex_at(j)).max_norm();
        if d > reach {
            reach = d;
        }
    }
    reach
}

/// Smallest box containing the points, widened by one unit.
fn bounding_region(points: &[Vec3]) -> Option<Region> {
    let first = points.first()?;
    let mut lo = first.clone();
    let mut hi = first.clone();
    for p in points {
        for i in 0..3 {
            if p.0[i] < lo.0[i] {
                lo.0[i] = p.0[i].clone();
            }
            if p.0[i] > hi.0[i] {
                hi.0[i] = p.0[i].clone();
            }
        }
    }
    let center = (&lo + &hi).scale(&crate::geometry::frac(1, 2));
    let radius = (&hi - &center).max_norm() + crate::geometry::q(1);
    Region::new(center, radius).ok()
}
