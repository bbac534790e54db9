//! Exact rational linear algebra: vectors, affine isometries, lattices.

mod isometry;
mod lattice;
mod vector;

pub use isometry::{plane_reflection, solve_isometry, solve_isometry_planar, FixedSpace, Isometry, OrderOrTranslation};
pub use lattice::{hermite_basis, Lattice, VertexSetSpec};
pub use vector::{complete_basis, echelon, rank, solve_affine, Mat3, Vec3};

use num_bigint::BigInt;

/// Arbitrary-precision fraction in lowest terms.
pub type Rational = num_rational::BigRational;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational, GeometryError> {
    let s = s.trim();
    let bad = || GeometryError::BadRational(alloc::string::String::from(s));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error("linear part is not orthogonal")]
    NotOrthogonal,
    #[error("underdetermined: source points do not affinely span space")]
    Underdetermined,
    #[error("basis vectors are linearly dependent")]
    DependentBasis,
    #[error("cannot parse rational {0:?}")]
    BadRational(alloc::string::String),
}
