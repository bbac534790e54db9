use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::complex::SkeletalComplex;
use crate::geometry::{Isometry, Lattice, Vec3};
use crate::orbit::{build_quotient, FaceDescriptor};

use super::OpsError;

const SEARCH_LIMIT: usize = 1 << 20;

/// How the vertices of the covering structure are sent to the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Projection {
    /// A map applied to coordinates.
    Affine(Isometry),
    /// Identification modulo a lattice of translations, followed by the combinatorial
    /// map onto the target found by search.
    Compression(Lattice),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringWitness {
    /// Vertex (or class representative) and its image in the target.
    pub vertex_map: Vec<(Vec3, Vec3)>,
    /// Edges of a covering face per edge of its image.
    pub collapse: usize,
}

/// Lattice generated by the translations of the infinite faces.
pub fn helix_translations(p: &SkeletalComplex) -> Lattice {
    let t: BTreeSet<Vec3> = p.faces().iter().filter_map(|f| f.descriptor.translation().cloned()).collect();
    Lattice::from_generators(&t.into_iter().collect::<Vec<_>>())
}

/// Combinatorial data of the covering side: nodes, their neighbors and face cycles.
struct Domain {
    reps: Vec<Vec3>,
    neighbors: Vec<Vec<usize>>,
    checked: Vec<bool>,
    faces: Vec<Vec<usize>>,
}

struct Target<'a> {
    complex: &'a SkeletalComplex,
    faces: BTreeSet<Vec<usize>>,
}

impl<'a> Target<'a> {
    fn new(complex: &'a SkeletalComplex) -> Self {
        let faces = complex
            .faces()
            .iter()
            .filter_map(|f| match &f.descriptor {
                FaceDescriptor::Finite(v) if !f.truncated => {
                    let ids: Option<Vec<usize>> = v.iter().map(|p| complex.vertex_id(p)).collect();
                    ids.map(|c| canonical_cycle(&c))
                }
                _ => None,
            })
            .collect();
        Target { complex, faces }
    }
}

fn canonical_cycle(c: &[usize]) -> Vec<usize> {
    let n = c.len();
    let mut best: Option<Vec<usize>> = None;
    for rev in [false, true] {
        for r in 0..n {
            let cand: Vec<usize> =
                (0..n).map(|i| if rev { c[(r + n - i) % n] } else { c[(r + i) % n] }).collect();
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// Collapse ratio of a face cycle under `phi`, if it wraps onto a target face.
fn face_ratio(cycle: &[usize], phi: &[usize], target: &Target) -> Option<usize> {
    let img: Vec<usize> = cycle.iter().map(|&c| phi[c]).collect();
    let n = img.len();
    (3..=n).filter(|m| n % m == 0).find_map(|m| {
        let wraps = (0..n).all(|i| img[i] == img[i % m]);
        (wraps && target.faces.contains(&canonical_cycle(&img[..m]))).then_some(n / m)
    })
}

fn verify(domain: &Domain, phi: &[usize], target: &Target) -> Option<usize> {
    let t = target.complex;
    for (x, nbrs) in domain.neighbors.iter().enumerate() {
        let tx = phi[x];
        let images: BTreeSet<usize> = nbrs.iter().map(|&y| phi[y]).collect();
        if images.iter().any(|ty| !t.neighbors(tx).contains(ty)) {
            return None;
        }
        if domain.checked[x] && (images.len() != nbrs.len() || nbrs.len() != t.vertex_degree(tx)) {
            return None;
        }
    }
    let mut ratio = None;
    let mut hit = BTreeSet::new();
    for cycle in &domain.faces {
        let r = face_ratio(cycle, phi, target)?;
        if *ratio.get_or_insert(r) != r {
            return None;
        }
        let img: Vec<usize> = cycle[..cycle.len() / r].iter().map(|&c| phi[c]).collect();
        hit.insert(canonical_cycle(&img));
    }
    if domain.checked.iter().all(|&c| c) && hit.len() != target.faces.len() {
        return None;
    }
    ratio
}

fn witness(domain: &Domain, phi: &[usize], target: &Target, collapse: usize) -> CoveringWitness {
    let vertex_map =
        domain.reps.iter().zip(phi).map(|(x, &y)| (x.clone(), target.complex.vertices()[y].clone())).collect();
    CoveringWitness { vertex_map, collapse }
}

fn affine_domain(p: &SkeletalComplex, g: &Isometry, target: &Target) -> Result<(Domain, Vec<usize>), OpsError> {
    let t = target.complex;
    let mut phi = Vec::with_capacity(p.vertices().len());
    let mut hit = BTreeSet::new();
    for v in p.vertices() {
        let y = g.apply(v);
        let id = t.vertex_id(&y).ok_or_else(|| OpsError::ProjectionMisses(format!("{v} maps to {y}")))?;
        hit.insert(id);
        phi.push(id);
    }
    if let Some(missed) = (0..t.vertices().len()).find(|&i| t.is_interior_vertex(i) && !hit.contains(&i)) {
        return Err(OpsError::ProjectionMisses(format!("{} has no preimage", t.vertices()[missed])));
    }
    let faces = p
        .faces()
        .iter()
        .filter(|f| !f.truncated)
        .filter_map(|f| match &f.descriptor {
            FaceDescriptor::Finite(v) => v.iter().map(|x| p.vertex_id(x)).collect::<Option<Vec<_>>>(),
            FaceDescriptor::Infinite { .. } => None,
        })
        .collect();
    let domain = Domain {
        reps: p.vertices().to_vec(),
        neighbors: (0..p.vertices().len()).map(|v| p.neighbors(v).to_vec()).collect(),
        checked: (0..p.vertices().len()).map(|v| p.is_interior_vertex(v) && t.is_interior_vertex(phi[v])).collect(),
        faces,
    };
    Ok((domain, phi))
}

fn quotient_domain(p: &SkeletalComplex, lattice: &Lattice) -> Result<Domain, OpsError> {
    let q = build_quotient(p, lattice)?;
    let mut neighbors = vec![Vec::new(); q.vertex_count()];
    for e in q.edges() {
        neighbors[e.a].push(e.b);
        neighbors[e.b].push(e.a);
    }
    Ok(Domain {
        reps: q.reps().to_vec(),
        neighbors,
        checked: vec![true; q.vertex_count()],
        faces: q.faces().iter().map(|f| f.cycle.clone()).collect(),
    })
}

/// Depth-first search for a vertex map from the domain onto the target that verifies.
fn search(domain: &Domain, target: &Target) -> Result<Option<(Vec<usize>, usize)>, OpsError> {
    let n = domain.reps.len();
    let t = target.complex;
    if n < t.vertices().len() {
        return Err(OpsError::ProjectionMisses(String::from("fewer vertex classes than target vertices")));
    }
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in &domain.neighbors[x] {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
    }
    let mut phi = vec![usize::MAX; n];
    let mut budget = SEARCH_LIMIT;
    fn consistent(domain: &Domain, phi: &[usize], x: usize, t: &SkeletalComplex) -> bool {
        domain.neighbors[x].iter().all(|&y| phi[y] == usize::MAX || (phi[y] != phi[x] && t.neighbors(phi[x]).contains(&phi[y])))
    }
    fn go(
        k: usize,
        order: &[usize],
        parent: &[usize],
        domain: &Domain,
        target: &Target,
        phi: &mut Vec<usize>,
        budget: &mut usize,
    ) -> Option<(Vec<usize>, usize)> {
        if k == order.len() {
            return verify(domain, phi, target).map(|r| (phi.clone(), r));
        }
        let t = target.complex;
        let x = order[k];
        let candidates: Vec<usize> = match parent[x] {
            usize::MAX => (0..t.vertices().len()).collect(),
            p => t.neighbors(phi[p]).to_vec(),
        };
        for c in candidates {
            if *budget == 0 {
                return None;
            }
            *budget -= 1;
            phi[x] = c;
            if consistent(domain, phi, x, t) {
                if let Some(found) = go(k + 1, order, parent, domain, target, phi, budget) {
                    return Some(found);
                }
            }
        }
        phi[x] = usize::MAX;
        None
    }
    Ok(go(0, &order, &parent, domain, target, &mut phi, &mut budget))
}

/// Whether `projection` induces a covering of `target` by `p`, with a witness when it does.
pub fn covering_check(
    p: &SkeletalComplex,
    target: &SkeletalComplex,
    projection: &Projection,
) -> Result<Option<CoveringWitness>, OpsError> {
    let tgt = Target::new(target);
    match projection {
        Projection::Affine(g) => {
            let (domain, phi) = affine_domain(p, g, &tgt)?;
            Ok(verify(&domain, &phi, &tgt).map(|r| witness(&domain, &phi, &tgt, r)))
        }
        Projection::Compression(lattice) => {
            if !target.is_finite() {
                return Err(OpsError::ProjectionMisses(String::from("compression needs a finite target")));
            }
            let domain = quotient_domain(p, lattice)?;
            Ok(search(&domain, &tgt)?.map(|(phi, r)| witness(&domain, &phi, &tgt, r)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::Study;
    use crate::geometry::q;
    use crate::orbit::{wythoff_patch, Region};
    use crate::presets::{p2_family, regular_generators, RegularPreset};

    fn finite(which: RegularPreset) -> SkeletalComplex {
        Study::from_generators(&regular_generators(which).unwrap(), 1).unwrap().complex
    }

    #[test]
    fn identity_covers_cube() {
        let cube = finite(RegularPreset::Cube);
        let w = covering_check(&cube, &cube, &Projection::Affine(Isometry::identity())).unwrap().unwrap();
        assert_eq!(w.collapse, 1);
        assert!(w.vertex_map.iter().all(|(a, b)| a == b));
    }

    #[test]
    fn affine_miss_is_an_error() {
        let cube = finite(RegularPreset::Cube);
        let oct = finite(RegularPreset::Octahedron);
        assert!(matches!(
            covering_check(&cube, &oct, &Projection::Affine(Isometry::identity())),
            Err(OpsError::ProjectionMisses(_))
        ));
    }

    #[test]
    fn helix_faced_compress_onto_cube() {
        let cube = finite(RegularPreset::Cube);
        let tet = finite(RegularPreset::Tetrahedron);
        for (c, d) in [(1, 1), (1, 0)] {
            let patch = wythoff_patch(&p2_family(q(c), q(d)).unwrap(), &Region::centered(4)).unwrap();
            let l = helix_translations(&patch);
            let w = covering_check(&patch, &cube, &Projection::Compression(l.clone())).unwrap();
            assert!(w.is_some(), "P2({c},{d})");
            assert_eq!(covering_check(&patch, &tet, &Projection::Compression(l)).unwrap(), None);
        }
    }
}
