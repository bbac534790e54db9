use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::vector::{complete_basis, rank, Mat3, Vec3};
use super::{q, GeometryError, Rational};

/// A discrete subgroup of translations, of rank 0 to 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    basis: Vec<Vec3>,
    name: Option<String>,
    frame: Mat3,
    frame_inv: Mat3,
}

impl Lattice {
    pub fn new(basis: Vec<Vec3>) -> Result<Self, GeometryError> {
        if basis.len() > 3 || rank(&basis) != basis.len() {
            return Err(GeometryError::DependentBasis);
        }
        let full = complete_basis(&basis);
        let frame = Mat3::from_columns([&full[0], &full[1], &full[2]]);
        let frame_inv = frame.inverse().expect("completed basis is invertible");
        Ok(Lattice { basis, name: None, frame, frame_inv })
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = Some(String::from(name));
        self
    }

    pub fn trivial() -> Self {
        Lattice::new(Vec::new()).expect("empty basis")
    }

    pub fn cubic() -> Self {
        Self::from_int_rows(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]).named("Λ1")
    }

    pub fn face_centered() -> Self {
        Self::from_int_rows(&[[1, 1, 0], [-1, 1, 0], [0, -1, 1]]).named("Λ2")
    }

    pub fn body_centered() -> Self {
        Self::from_int_rows(&[[2, 0, 0], [0, 2, 0], [1, 1, 1]]).named("Λ3")
    }

    pub fn from_int_rows(rows: &[[i64; 3]]) -> Self {
        Lattice::new(rows.iter().map(|r| Vec3::from_ints(r[0], r[1], r[2])).collect()).expect("independent rows")
    }

    /// The lattice spanned by arbitrary rational vectors, in canonical Hermite form.
    pub fn from_generators(vectors: &[Vec3]) -> Self {
        Lattice::new(hermite_basis(vectors)).expect("hermite rows are independent")
    }

    pub fn basis(&self) -> &[Vec3] {
        &self.basis
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn scaled(&self, k: i64) -> Lattice {
        Lattice::new(self.basis.iter().map(|b| b.scale(&q(k))).collect()).expect("scaling keeps independence")
    }

    /// Coordinates of `v` in the completed frame.
    pub fn coordinates(&self, v: &Vec3) -> Vec3 {
        self.frame_inv.mul_vec(v)
    }

    pub fn contains(&self, v: &Vec3) -> bool {
        self.integer_coordinates(v).is_some()
    }

    /// Lattice coordinates of a lattice vector.
    pub fn integer_coordinates(&self, v: &Vec3) -> Option<Vec<BigInt>> {
        let c = self.coordinates(v);
        let r = self.rank();
        if c.0[r..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut out = Vec::with_capacity(r);
        for x in &c.0[..r] {
            if !x.is_integer() {
                return None;
            }
            out.push(x.to_integer());
        }
        Some(out)
    }

    pub fn combine(&self, coeffs: &[i64]) -> Vec3 {
        self.basis.iter().zip(coeffs).fold(Vec3::zero(), |acc, (b, &k)| &acc + &b.scale(&q(k)))
    }

    /// Splits `p` into a representative in the half-open fundamental cell and a lattice vector.
    pub fn reduce(&self, p: &Vec3) -> (Vec3, Vec3) {
        let c = self.coordinates(p);
        let mut shift = Vec3::zero();
        for (i, b) in self.basis.iter().enumerate() {
            let f = c.0[i].floor();
            if !f.is_zero() {
                shift = &shift + &b.scale(&f);
            }
        }
        (p - &shift, shift)
    }

    /// Whether every vector of `other` lies in this lattice.
    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    /// Volume of a fundamental cell for full-rank lattices.
    pub fn covolume(&self) -> Option<Rational> {
        (self.rank() == 3).then(|| self.frame.det().abs())
    }

    /// Whether a linear map sends the lattice onto itself.
    pub fn is_preserved_by(&self, m: &Mat3) -> bool {
        self.basis.iter().all(|b| self.contains(&m.mul_vec(b)))
    }
}

/// Canonical basis (row Hermite form) of the Z-span of rational vectors.
pub fn hermite_basis(vectors: &[Vec3]) -> Vec<Vec3> {
    let den = vectors
        .iter()
        .flat_map(|v| v.0.iter())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scale = Rational::from_integer(den.clone());
    let mut pool: Vec<[BigInt; 3]> = vectors
        .iter()
        .map(|v| {
            let s = v.scale(&scale);
            [s.0[0].to_integer(), s.0[1].to_integer(), s.0[2].to_integer()]
        })
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let mut rows: Vec<([BigInt; 3], usize)> = Vec::new();
    for col in 0..3 {
        loop {
            let mut nz: Vec<usize> = (0..pool.len()).filter(|&i| !pool[i][col].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            nz.sort_by(|&a, &b| pool[a][col].abs().cmp(&pool[b][col].abs()));
            let p = nz[0];
            if nz.len() == 1 {
                let mut pivot = pool.swap_remove(p);
                if pivot[col].is_negative() {
                    pivot = pivot.map(|x| -x);
                }
                rows.push((pivot, col));
                break;
            }
            let pivot = pool[p].clone();
            for &i in &nz[1..] {
                let f = pool[i][col].div_floor(&pivot[col]);
                for k in 0..3 {
                    let d = &f * &pivot[k];
                    pool[i][k] -= d;
                }
            }
            pool.retain(|r| r.iter().any(|x| !x.is_zero()));
        }
    }
    for i in 0..rows.len() {
        let (pivot, col) = rows[i].clone();
        for row in rows.iter_mut().take(i) {
            let f = row.0[col].div_floor(&pivot[col]);
            if !f.is_zero() {
                for k in 0..3 {
                    let d = &f * &pivot[k];
                    row.0[k] -= d;
                }
            }
        }
    }
    rows.into_iter()
        .map(|(r, _)| Vec3(r.map(|x| Rational::new(x, den.clone()))))
        .collect()
}

/// Point sets tested for exact membership.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexSetSpec {
    Lattice(Lattice),
    /// `base` minus the coset `offset + removed`.
    Difference { base: Lattice, offset: Vec3, removed: Lattice },
    /// Union of the cosets `offset + lattice`.
    Union { lattice: Lattice, offsets: Vec<Vec3> },
}

impl VertexSetSpec {
    pub fn lambda1() -> Self {
        VertexSetSpec::Lattice(Lattice::cubic())
    }

    pub fn lambda2() -> Self {
        VertexSetSpec::Lattice(Lattice::face_centered())
    }

    pub fn lambda3() -> Self {
        VertexSetSpec::Lattice(Lattice::body_centered())
    }

    pub fn v_set() -> Self {
        VertexSetSpec::Difference {
            base: Lattice::cubic(),
            offset: Vec3::from_ints(0, 0, 1),
            removed: Lattice::body_centered(),
        }
    }

    pub fn w_set() -> Self {
        VertexSetSpec::Union {
            lattice: Lattice::face_centered().scaled(2),
            offsets: alloc::vec![Vec3::zero(), Vec3::from_ints(1, -1, 1)],
        }
    }

    pub fn member(&self, v: &Vec3) -> bool {
        match self {
            VertexSetSpec::Lattice(l) => l.contains(v),
            VertexSetSpec::Difference { base, offset, removed } => base.contains(v) && !removed.contains(&(v - offset)),
            VertexSetSpec::Union { lattice, offsets } => offsets.iter().any(|o| lattice.contains(&(v - o))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listed_membership() {
        assert!(VertexSetSpec::lambda2().member(&Vec3::from_ints(1, 1, 0)));
        assert!(!VertexSetSpec::lambda2().member(&Vec3::from_ints(1, 0, 0)));
        assert!(!VertexSetSpec::v_set().member(&Vec3::from_ints(0, 0, 1)));
        assert!(VertexSetSpec::v_set().member(&Vec3::from_ints(0, 0, 0)));
        assert!(VertexSetSpec::w_set().member(&Vec3::from_ints(1, -1, 1)));
        assert!(!VertexSetSpec::w_set().member(&Vec3::from_ints(1, 1, 0)));
    }

    #[test]
    fn hermite_of_redundant_generators() {
        let l = Lattice::from_generators(&[
            Vec3::from_ints(2, 0, 0),
            Vec3::from_ints(0, 2, 0),
            Vec3::from_ints(1, 1, 1),
            Vec3::from_ints(3, 1, 1),
            Vec3::from_ints(0, 0, 2),
        ]);
        assert_eq!(l.rank(), 3);
        assert!(l.contains_lattice(&Lattice::body_centered()));
        assert!(Lattice::body_centered().contains_lattice(&l));
        assert_eq!(l.covolume(), Some(q(4)));
    }

    #[test]
    fn hermite_rational_and_low_rank() {
        let half = Rational::new(1.into(), 2.into());
        let l = Lattice::from_generators(&[Vec3::new(half.clone(), half.clone(), q(0)), Vec3::from_ints(1, 1, 0)]);
        assert_eq!(l.rank(), 1);
        assert_eq!(l.basis()[0], Vec3::new(half.clone(), half, q(0)));
        assert_eq!(Lattice::from_generators(&[]).rank(), 0);
    }

    #[test]
    fn reduce_into_cell() {
        let l = Lattice::from_int_rows(&[[4, 0, 0], [0, 4, 0]]);
        let (rep, shift) = l.reduce(&Vec3::from_ints(-1, 9, 5));
        assert_eq!(rep, Vec3::from_ints(3, 1, 5));
        assert_eq!(shift, Vec3::from_ints(-4, 8, 0));
        assert!(l.contains(&shift));
    }
}
