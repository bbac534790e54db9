use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::complex::SkeletalComplex;
use crate::geometry::{q, Isometry, Mat3, Rational, Vec3};
use crate::orbit::{FaceDescriptor, Region};

use super::ClassifyError;

/// An isometry carrying the face centers of one structure onto the vertices of another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualWitness {
    pub isometry: Isometry,
    /// Face centers verified inside the safe region.
    pub checked: usize,
}

/// The 48 signed permutation matrices.
pub fn signed_permutations() -> Vec<Mat3> {
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut out = Vec::with_capacity(48);
    for p in perms {
        for signs in 0..8 {
            let mut rows = [[0i64; 3]; 3];
            for (i, &j) in p.iter().enumerate() {
                rows[i][j] = if signs >> i & 1 == 1 { -1 } else { 1 };
            }
            out.push(Mat3::from_ints(rows));
        }
    }
    out
}

fn centroid(points: &[Vec3]) -> Vec3 {
    let n = Rational::from_integer((points.len() as i64).into());
    points.iter().fold(Vec3::zero(), |acc, p| &acc + p).scale(&(q(1) / n))
}

fn max_edge(c: &SkeletalComplex) -> Rational {
    c.edges()
        .iter()
        .map(|&[a, b]| (&c.vertices()[a] - &c.vertices()[b]).max_norm())
        .max()
        .unwrap_or_else(|| q(1))
}

fn within(region: Option<&Region>, p: &Vec3) -> bool {
    region.map_or(true, |r| r.contains(p))
}

/// Whether the face centers of `a` form, up to a signed permutation and a
/// translation, the vertex set of `b`, with adjacent faces going to adjacent vertices.
pub fn dual_congruence_check(a: &SkeletalComplex, b: &SkeletalComplex) -> Result<Option<DualWitness>, ClassifyError> {
    if a.is_finite() != b.is_finite() {
        return Ok(None);
    }
    if a.region() != b.region() {
        return Err(ClassifyError::RegionMismatch);
    }
    if a.faces().iter().any(|f| !f.descriptor.is_finite()) {
        return Ok(None);
    }
    let margin = max_edge(a).max(max_edge(b)) * q(2);
    let (outer, inner) = match a.region() {
        None => (None, None),
        Some(r) => {
            let outer = r.shrunk(&margin).ok_or(ClassifyError::RegionTooSmall)?;
            let inner = outer.shrunk(&margin).ok_or(ClassifyError::RegionTooSmall)?;
            (Some(outer), Some(inner))
        }
    };

    let mut centers: Vec<Vec3> = Vec::new();
    let mut center_of: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, f) in a.faces().iter().enumerate() {
        if f.truncated {
            continue;
        }
        center_of.insert(i, centers.len());
        centers.push(centroid(f.descriptor.listed()));
    }
    let center_set: BTreeSet<&Vec3> = centers.iter().collect();
    let mut by_edge: BTreeMap<(Vec3, Vec3), Vec<usize>> = BTreeMap::new();
    for (&fi, &ci) in &center_of {
        let FaceDescriptor::Finite(v) = &a.faces()[fi].descriptor else { continue };
        for j in 0..v.len() {
            let (x, y) = (v[j].clone(), v[(j + 1) % v.len()].clone());
            by_edge.entry(if x < y { (x, y) } else { (y, x) }).or_default().push(ci);
        }
    }
    let adjacent: Vec<(usize, usize)> = by_edge
        .values()
        .flat_map(|cs| {
            let mut pairs = Vec::new();
            for i in 0..cs.len() {
                for j in i + 1..cs.len() {
                    pairs.push((cs[i], cs[j]));
                }
            }
            pairs
        })
        .collect();
    let Some(c0) = centers.iter().min_by_key(|c| match a.region() {
        Some(r) => (*c - r.center()).max_norm(),
        None => q(0),
    }) else {
        return Ok(None);
    };

    let candidates: Vec<&Vec3> = match b.region() {
        None => b.vertices().iter().collect(),
        Some(r) => {
            let reach = margin.clone() + q(1);
            let near = Region::new(r.center().clone(), reach).expect("positive");
            b.vertices().iter().filter(|y| near.contains(y)).collect()
        }
    };
    let b_vertices: BTreeSet<&Vec3> = b.vertices().iter().collect();

    for m in signed_permutations() {
        for y in &candidates {
            let t = *y - &m.mul_vec(c0);
            let g = Isometry::new(m.clone(), t).expect("signed permutations are orthogonal");
            let images: Vec<Vec3> = centers.iter().map(|c| g.apply(c)).collect();
            let forward = images.iter().all(|p| !within(outer.as_ref(), p) || b_vertices.contains(p));
            if !forward {
                continue;
            }
            let inv = g.inverse();
            let backward = b
                .vertices()
                .iter()
                .filter(|y| within(inner.as_ref(), y))
                .all(|y| center_set.contains(&inv.apply(y)));
            if !backward {
                continue;
            }
            let edges_ok = adjacent.iter().all(|&(i, j)| {
                let (p, r) = (&images[i], &images[j]);
                !(within(outer.as_ref(), p) && within(outer.as_ref(), r)) || b.has_edge(p, r)
            });
            if edges_ok {
                let checked = images.iter().filter(|p| within(outer.as_ref(), p)).count();
                return Ok(Some(DualWitness { isometry: g, checked }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forty_eight_distinct_orthogonal() {
        let all = signed_permutations();
        assert_eq!(all.len(), 48);
        assert!(all.iter().all(Mat3::is_orthogonal));
        let set: BTreeSet<&Mat3> = all.iter().collect();
        assert_eq!(set.len(), 48);
    }
}
