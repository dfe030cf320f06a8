//! Exact arithmetic foundation: integer polynomials, the localisation at
//! `2x+1`, dense matrices, and the push-forward calculus on finite maps.

pub mod fmap;
pub mod loc;
pub mod matrix;
pub mod poly;

pub use fmap::{dot, FiniteMap};
pub use loc::{denom_poly, LocElem};
pub use matrix::{ExactMatrix, Ring};
pub use poly::PolyZ;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Convenience constructor for exact rationals.
pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
