//! Exact Grassmann-Cayley algebra of step 3.
//!
//! Join/meet expressions over formal points expand into canonical bracket
//! polynomials ([`cayley`]), or evaluate numerically over homogeneous
//! coordinates ([`exterior`]). The [`verify`] harness decides identities
//! between such expressions, scans permutation actions and checks Pappus
//! configurations. Everything is exact; the math is generic over
//! [`Scalar`], and the aliases below fix the scalar to big rationals.

pub mod bracket_ring;
pub mod cayley;
pub mod dsl;
pub mod exterior;
mod scalar;
mod step;
pub mod verify;

pub use scalar::{parse_rational, Scalar};
pub use step::{Step, StepError};

pub use bracket_ring::{Bracket, BracketMonomial, FormalPoint, PointSet, Sign, Var};
pub use cayley::{CayleyExpr, Permutation};
pub use dsl::{parse, print, SyntaxError};

/// Exact arbitrary-precision rational; the scalar used throughout the harness.
pub type Rational = num_rational::BigRational;

pub type Point = exterior::HomogeneousPoint<Rational>;
pub type Line = exterior::PluckerLine<Rational>;
pub type NumericValue = exterior::NumericValue<Rational>;
pub type BracketPolynomial = bracket_ring::BracketPolynomial<Rational>;
pub type CoordinatePolynomial = bracket_ring::CoordinatePolynomial<Rational>;
pub type StepValue = cayley::StepValue<Rational>;
