use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{q, Rational};

/// A point or displacement in E³ with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vec3(pub [Rational; 3]);

impl Vec3 {
    pub fn new(x1: Rational, x2: Rational, x3: Rational) -> Self {
        Vec3([x1, x2, x3])
    }

    pub fn from_ints(x1: i64, x2: i64, x3: i64) -> Self {
        Vec3([q(x1), q(x2), q(x3)])
    }

    pub fn zero() -> Self {
        Vec3([Rational::zero(), Rational::zero(), Rational::zero()])
    }

    pub fn unit(axis: usize) -> Self {
        let mut v = Self::zero();
        v.0[axis] = Rational::one();
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &Vec3) -> Rational {
        &self.0[0] * &other.0[0] + &self.0[1] * &other.0[1] + &self.0[2] * &other.0[2]
    }

    pub fn cross(&self, other: &Vec3) -> Vec3 {
        let [a1, a2, a3] = &self.0;
        let [b1, b2, b3] = &other.0;
        Vec3([a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1])
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    pub fn scale(&self, s: &Rational) -> Vec3 {
        Vec3([&self.0[0] * s, &self.0[1] * s, &self.0[2] * s])
    }

    pub fn max_norm(&self) -> Rational {
        self.0.iter().map(|c| c.abs()).max().unwrap_or_else(Rational::zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    /// Integer coordinates, when every coordinate is an integer that fits `i64`.
    pub fn to_i64(&self) -> Option<[i64; 3]> {
        let mut out = [0i64; 3];
        for (o, c) in out.iter_mut().zip(self.0.iter()) {
            if !c.is_integer() {
                return None;
            }
            *o = i64::try_from(c.to_integer()).ok()?;
        }
        Some(out)
    }

    /// Smallest positive multiple with coprime integer coordinates.
    pub fn primitive(&self) -> Option<Vec3> {
        if self.is_zero() {
            return None;
        }
        let den = self.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.0.iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        Some(Vec3([
            Rational::from_integer(&ints[0] / &g),
            Rational::from_integer(&ints[1] / &g),
            Rational::from_integer(&ints[2] / &g),
        ]))
    }

    /// The canonical `"p/q"` key of each coordinate.
    pub fn key(&self) -> [String; 3] {
        [
            alloc::format!("{}", self.0[0]),
            alloc::format!("{}", self.0[1]),
            alloc::format!("{}", self.0[2]),
        ]
    }

    pub fn is_lex_positive(&self) -> bool {
        for c in &self.0 {
            if c.is_positive() {
                return true;
            }
            if c.is_negative() {
                return false;
            }
        }
        false
    }
}

impl fmt::Display for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

impl Add for &Vec3 {
    type Output = Vec3;
    fn add(self, rhs: &Vec3) -> Vec3 {
        Vec3([&self.0[0] + &rhs.0[0], &self.0[1] + &rhs.0[1], &self.0[2] + &rhs.0[2]])
    }
}

impl Sub for &Vec3 {
    type Output = Vec3;
    fn sub(self, rhs: &Vec3) -> Vec3 {
        Vec3([&self.0[0] - &rhs.0[0], &self.0[1] - &rhs.0[1], &self.0[2] - &rhs.0[2]])
    }
}

impl Neg for &Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3([-&self.0[0], -&self.0[1], -&self.0[2]])
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, rhs: Vec3) -> Vec3 {
        &self + &rhs
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, rhs: Vec3) -> Vec3 {
        &self - &rhs
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        -&self
    }
}

/// Row-major 3×3 rational matrix.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mat3(pub [[Rational; 3]; 3]);

impl Mat3 {
    pub fn identity() -> Self {
        Self::from_ints([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    pub fn zero() -> Self {
        Self::from_ints([[0; 3]; 3])
    }

    pub fn from_ints(rows: [[i64; 3]; 3]) -> Self {
        Mat3(rows.map(|r| r.map(q)))
    }

    pub fn from_columns(cols: [&Vec3; 3]) -> Self {
        let mut m = Self::zero();
        for (j, c) in cols.iter().enumerate() {
            for i in 0..3 {
                m.0[i][j] = c.0[i].clone();
            }
        }
        m
    }

    pub fn column(&self, j: usize) -> Vec3 {
        Vec3([self.0[0][j].clone(), self.0[1][j].clone(), self.0[2][j].clone()])
    }

    pub fn transpose(&self) -> Mat3 {
        let mut t = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                t.0[i][j] = self.0[j][i].clone();
            }
        }
        t
    }

    pub fn det(&self) -> Rational {
        let m = &self.0;
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    pub fn inverse(&self) -> Option<Mat3> {
        let d = self.det();
        if d.is_zero() {
            return None;
        }
        let m = &self.0;
        let cof = |a: usize, b: usize, c: usize, e: usize| &m[a][b] * &m[c][e] - &m[a][e] * &m[c][b];
        let adj = [
            [cof(1, 1, 2, 2), -cof(0, 1, 2, 2), cof(0, 1, 1, 2)],
            [-cof(1, 0, 2, 2), cof(0, 0, 2, 2), -cof(0, 0, 1, 2)],
            [cof(1, 0, 2, 1), -cof(0, 0, 2, 1), cof(0, 0, 1, 1)],
        ];
        Some(Mat3(adj.map(|r| r.map(|x| x / &d))))
    }

    pub fn mul_vec(&self, v: &Vec3) -> Vec3 {
        let row = |i: usize| &self.0[i][0] * &v.0[0] + &self.0[i][1] * &v.0[1] + &self.0[i][2] * &v.0[2];
        Vec3([row(0), row(1), row(2)])
    }

    pub fn is_orthogonal(&self) -> bool {
        (&self.transpose() * self) == Mat3::identity()
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat3::identity()
    }

    pub fn sub_identity(&self) -> Mat3 {
        let mut m = self.clone();
        for i in 0..3 {
            m.0[i][i] -= Rational::one();
        }
        m
    }
}

impl Mul for &Mat3 {
    type Output = Mat3;
    fn mul(self, rhs: &Mat3) -> Mat3 {
        let mut out = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                out.0[i][j] = &self.0[i][0] * &rhs.0[0][j] + &self.0[i][1] * &rhs.0[1][j] + &self.0[i][2] * &rhs.0[2][j];
            }
        }
        out
    }
}

/// Rank of a list of vectors.
pub fn rank(vectors: &[Vec3]) -> usize {
    echelon(vectors).len()
}

/// Row echelon form of the given rows (zero rows dropped).
pub fn echelon(vectors: &[Vec3]) -> Vec<Vec3> {
    let mut rows: Vec<Vec3> = vectors.to_vec();
    let mut out = Vec::new();
    for col in 0..3 {
        let Some(p) = rows.iter().position(|r| !r.0[col].is_zero()) else {
            continue;
        };
        let pivot = rows.swap_remove(p);
        for r in rows.iter_mut() {
            if !r.0[col].is_zero() {
                let f = &r.0[col] / &pivot.0[col];
                *r = &*r - &pivot.scale(&f);
            }
        }
        out.push(pivot);
    }
    out
}

/// Extends independent vectors to a basis of Q³ with standard unit vectors.
pub fn complete_basis(vectors: &[Vec3]) -> Vec<Vec3> {
    let mut out = vectors.to_vec();
    for axis in 0..3 {
        if out.len() == 3 {
            break;
        }
        let mut trial = out.clone();
        trial.push(Vec3::unit(axis));
        if rank(&trial) == trial.len() {
            out = trial;
        }
    }
    out
}

/// Solves `m x = b`; returns a particular solution and the dimension of the solution space.
pub fn solve_affine(m: &Mat3, b: &Vec3) -> Option<(Vec3, usize)> {
    let mut rows: Vec<[Rational; 4]> = (0..3)
        .map(|i| [m.0[i][0].clone(), m.0[i][1].clone(), m.0[i][2].clone(), b.0[i].clone()])
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..3 {
        let Some(p) = (r..3).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let lead = rows[r][col].clone();
        for x in rows[r].iter_mut() {
            *x = &*x / &lead;
        }
        for i in 0..3 {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                let pivot_row = rows[r].clone();
                for (x, pv) in rows[i].iter_mut().zip(pivot_row.iter()) {
                    *x -= &f * pv;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[3].is_zero()) {
        return None;
    }
    let mut x = Vec3::zero();
    for (i, &col) in pivots.iter().enumerate() {
        x.0[col] = rows[i][3].clone();
    }
    Some((x, 3 - pivots.len()))
}
