//! Minimal exponents and log canonical thresholds of affine cones over
//! complete intersections.
//!
//! Three independent routes compute the same number:
//!
//! * [`exponent`]: the closed form `min_i i + (n - d_1 - ... - d_i)/d_i`,
//!   together with the weighted upper bound and the lct / rationality
//!   predicates;
//! * [`resolution`]: a monomial chart simulation of the explicit strong
//!   factorizing resolution, producing the exceptional divisor ledger
//!   `(a_j, k_j)` and the bound `min (k_j + 1)/a_j`;
//! * [`newton`]: the Newton polyhedron diagonal value `c` computed by an exact
//!   simplex, giving `1/c` for nondegenerate isolated hypersurface singularities.
//!
//! [`poly`] supplies sparse polynomials over the rationals and the auxiliary
//! hypersurfaces built from a complete intersection.
//!
//! All algorithms are generic over [`Scalar`], an exact ordered field.

pub mod error;
pub mod exponent;
pub mod newton;
pub mod poly;
pub mod resolution;
pub mod scalar;
mod simplex;

use num_rational::{BigRational, Ratio};

pub use error::{Error, Result};
pub use scalar::{decimal_approx, Fraction, Scalar};

/// Arbitrary-precision rational; the default value type.
pub type Rational = BigRational;
/// Word-sized rational for fast bounded scans.
pub type Rational64 = Ratio<i64>;

pub type Poly = poly::Poly<Rational>;
pub type WeightVector = poly::WeightVector<Rational>;
pub type AlphaTable = exponent::AlphaTable<Rational>;
pub type WeightedProfile = exponent::WeightedProfile<Rational>;
pub type DiagonalResult = newton::DiagonalResult<Rational>;

pub use exponent::{DegreeProfile, Exponent};
pub use newton::MonomialSupport;
pub use resolution::{DivisorLedger, ResolutionReport};
