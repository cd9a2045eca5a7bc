//! The symbolic bracket ring over formal points.
//!
//! Brackets are kept in canonical form (arguments increasing in the
//! declared point order, permutation sign absorbed into the coefficient).
//! Two bracket polynomials that agree as functions of generic points may
//! still differ term-wise by Grassmann-Plücker syzygies; [`equal_mod_syzygies`]
//! decides that by expanding into coordinate polynomials.

mod coords;
mod point;
mod poly;
mod text;

pub use coords::{
    coordinate_expand, coordinate_expand_with, determinant, equal_mod_syzygies, generic_coords, CoordMonomial,
    CoordinatePolynomial, Var,
};
pub use point::{FormalPoint, PointSet, PointSetError, PAPPUS_POINTS};
pub use poly::{Bracket, BracketMonomial, BracketPolynomial, Sign};
pub use text::{parse_polynomial, PolynomialParseError};
