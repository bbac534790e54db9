use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::geometry::{Isometry, Vec3};
use crate::orbit::QuotientComplex;

use super::ComplexError;

/// An incident vertex-edge-face triple on a quotient, addressed by face position.
///
/// The vertex is `cycle[pos]`; the edge runs from it in direction `dir`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Flag {
    pub face: usize,
    pub pos: usize,
    pub forward: bool,
}

/// Result of [`FlagStructure::adjacent`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FlagAdjacent {
    One(Flag),
    Many(Vec<Flag>),
}

/// All flags of a quotient with the adjacency maps ρ₀, ρ₁ and the face exchange ρ₂.
#[derive(Clone, Debug)]
pub struct FlagStructure {
    quotient: QuotientComplex,
    offsets: Vec<usize>,
    rho0: Vec<usize>,
    rho1: Vec<usize>,
    rho2: Vec<Vec<usize>>,
}

impl FlagStructure {
    pub fn new(quotient: QuotientComplex) -> Self {
        let mut offsets = Vec::with_capacity(quotient.faces().len() + 1);
        let mut total = 0;
        for f in quotient.faces() {
            offsets.push(total);
            total += f.len();
        }
        offsets.push(total);
        let n = 2 * total;
        let mut fs = FlagStructure { quotient, offsets, rho0: Vec::new(), rho1: Vec::new(), rho2: Vec::new() };
        let mut rho0 = Vec::with_capacity(n);
        let mut rho1 = Vec::with_capacity(n);
        let mut by_vertex_edge: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for id in 0..n {
            let f = fs.flag(id);
            let len = fs.quotient.faces()[f.face].len();
            let other = if f.forward { (f.pos + 1) % len } else { (f.pos + len - 1) % len };
            rho0.push(fs.id(Flag { face: f.face, pos: other, forward: !f.forward }));
            rho1.push(fs.id(Flag { forward: !f.forward, ..f }));
            by_vertex_edge.entry((fs.vertex(f), fs.edge(f))).or_default().push(id);
        }
        let mut rho2 = alloc::vec![Vec::new(); n];
        for group in by_vertex_edge.values() {
            for &a in group {
                rho2[a] = group.iter().copied().filter(|&b| b != a).collect();
            }
        }
        fs.rho0 = rho0;
        fs.rho1 = rho1;
        fs.rho2 = rho2;
        fs
    }

    pub fn quotient(&self) -> &QuotientComplex {
        &self.quotient
    }

    pub fn len(&self) -> usize {
        self.rho0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rho0.is_empty()
    }

    pub fn id(&self, f: Flag) -> usize {
        2 * (self.offsets[f.face] + f.pos) + usize::from(!f.forward)
    }

    pub fn flag(&self, id: usize) -> Flag {
        let slot = id / 2;
        let face = self.offsets.partition_point(|&o| o <= slot) - 1;
        Flag { face, pos: slot - self.offsets[face], forward: id % 2 == 0 }
    }

    pub fn vertex(&self, f: Flag) -> usize {
        self.quotient.faces()[f.face].cycle[f.pos]
    }

    pub fn edge(&self, f: Flag) -> usize {
        let face = &self.quotient.faces()[f.face];
        if f.forward {
            face.edges[f.pos]
        } else {
            face.edges[(f.pos + face.len() - 1) % face.len()]
        }
    }

    pub fn rho0(&self, id: usize) -> usize {
        self.rho0[id]
    }

    pub fn rho1(&self, id: usize) -> usize {
        self.rho1[id]
    }

    /// The other flags sharing this flag's vertex and edge.
    pub fn rho2_all(&self, id: usize) -> &[usize] {
        &self.rho2[id]
    }

    /// ρ₂ when each edge lies in exactly two faces.
    pub fn rho2(&self, id: usize) -> Option<usize> {
        match self.rho2[id].as_slice() {
            [x] => Some(*x),
            _ => None,
        }
    }

    /// Whether every (vertex, edge) pair lies in exactly two flags.
    pub fn is_polyhedral(&self) -> bool {
        self.rho2.iter().all(|r| r.len() == 1)
    }

    /// Faces per edge, when constant.
    pub fn faces_per_edge(&self) -> Option<usize> {
        let r = self.rho2.first()?.len() + 1;
        self.rho2.iter().all(|x| x.len() + 1 == r).then_some(r)
    }

    pub fn adjacent(&self, f: Flag, i: usize) -> Result<FlagAdjacent, ComplexError> {
        let face = self
            .quotient
            .faces()
            .get(f.face)
            .ok_or_else(|| ComplexError::Boundary(alloc::format!("no face {}", f.face)))?;
        if f.pos >= face.len() {
            return Err(ComplexError::Boundary(alloc::format!("no position {} on face {}", f.pos, f.face)));
        }
        let id = self.id(f);
        match i {
            0 => Ok(FlagAdjacent::One(self.flag(self.rho0[id]))),
            1 => Ok(FlagAdjacent::One(self.flag(self.rho1[id]))),
            2 => match self.rho2[id].as_slice() {
                [x] => Ok(FlagAdjacent::One(self.flag(*x))),
                many => Ok(FlagAdjacent::Many(many.iter().map(|&x| self.flag(x)).collect())),
            },
            _ => Err(ComplexError::Boundary(alloc::format!("no adjacency of rank {i}"))),
        }
    }

    /// Vertex of the flag on the stored lift of its face.
    pub fn position(&self, id: usize) -> &Vec3 {
        let f = self.flag(id);
        &self.quotient.faces()[f.face].lift[f.pos]
    }

    /// One adjacency step on a geometric flag, given as a quotient flag plus the
    /// lattice vector carrying its stored lift into place.
    pub fn lifted_step(&self, id: usize, shift: &Vec3, rank: u8) -> Option<(usize, Vec3)> {
        match rank {
            0 => {
                let f = self.flag(id);
                let face = &self.quotient.faces()[f.face];
                let len = face.len();
                let (pos, shift) = match (f.forward, f.pos) {
                    (true, p) if p + 1 == len => (0, shift + &face.closing),
                    (true, p) => (p + 1, shift.clone()),
                    (false, 0) => (len - 1, shift - &face.closing),
                    (false, p) => (p - 1, shift.clone()),
                };
                Some((self.id(Flag { face: f.face, pos, forward: !f.forward }), shift))
            }
            1 => Some((self.rho1[id], shift.clone())),
            2 => {
                let other = self.rho2(id)?;
                Some((other, &(shift + self.position(id)) - self.position(other)))
            }
            _ => None,
        }
    }

    /// Lifted form of [`apply_word`](Self::apply_word).
    pub fn lifted_word(&self, id: usize, shift: &Vec3, word: &[u8]) -> Option<(usize, Vec3)> {
        word.iter().try_fold((id, shift.clone()), |(x, s), &r| self.lifted_step(x, &s, r))
    }

    /// Geometric vertex of a lifted flag.
    pub fn lifted_vertex(&self, id: usize, shift: &Vec3) -> Vec3 {
        self.position(id) + shift
    }

    /// Flag permutation induced by a symmetry of the quotient, if `g` is one.
    pub fn permutation(&self, g: &Isometry) -> Option<Vec<usize>> {
        let q = &self.quotient;
        if !q.lattice().is_preserved_by(g.linear()) {
            return None;
        }
        let face_images: Vec<usize> = q.faces().iter().map(|f| q.image_face(f, g)).collect::<Option<_>>()?;
        let mut perm = Vec::with_capacity(self.len());
        for id in 0..self.len() {
            let f = self.flag(id);
            let x = g.apply(self.position(id));
            let (n1, s1) = self.lifted_step(id, &Vec3::zero(), 0)?;
            let y = g.apply(&self.lifted_vertex(n1, &s1));
            let target = face_images[f.face];
            let (cls, _) = q.locate(&x)?;
            let tf = &q.faces()[target];
            let pos = tf.cycle.iter().position(|&c| c == cls)?;
            let shift = &x - &tf.lift[pos];
            let mut found = None;
            for forward in [true, false] {
                let cand = self.id(Flag { face: target, pos, forward });
                let (m, s) = self.lifted_step(cand, &shift, 0)?;
                if self.lifted_vertex(m, &s) == y {
                    found = Some(cand);
                    break;
                }
            }
            perm.push(found?);
        }
        Some(perm)
    }

    /// Applies a word in ρ₀, ρ₁, ρ₂ (given as ranks, leftmost first); ρ₂ must be single-valued.
    pub fn apply_word(&self, id: usize, word: &[u8]) -> Option<usize> {
        word.iter().try_fold(id, |x, &r| match r {
            0 => Some(self.rho0[x]),
            1 => Some(self.rho1[x]),
            2 => self.rho2(x),
            _ => None,
        })
    }
}

/// Orbit labels (least member) of the group generated by permutations of `0..n`.
pub fn orbit_labels(n: usize, perms: &[&[usize]]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for p in perms {
        for (x, &y) in p.iter().enumerate() {
            let (a, b) = (find(&mut parent, x), find(&mut parent, y));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|x| find(&mut parent, x)).collect()
}

pub fn orbit_count(labels: &[usize]) -> usize {
    labels.iter().enumerate().filter(|(i, &l)| *i == l).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_labels_merge() {
        let a = [1, 0, 2, 3];
        let b = [0, 1, 3, 2];
        let labels = orbit_labels(4, &[&a, &b]);
        assert_eq!(labels, alloc::vec![0, 0, 2, 2]);
        assert_eq!(orbit_count(&labels), 2);
    }
}
