use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_traits::{FromPrimitive, Num, Signed};

/// Coefficient field for every computation in the crate.
///
/// Anything exact enough for `is_zero` to be meaningful works; the harness
/// uses [`crate::Rational`]. Blanket-implemented.
pub trait Scalar: Clone + Debug + Display + PartialEq + Num + Signed + FromPrimitive + Send + Sync + 'static {
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("scalar type must represent i64")
    }
}

impl<T> Scalar for T where T: Clone + Debug + Display + PartialEq + Num + Signed + FromPrimitive + Send + Sync + 'static {}

/// Parses `"p"` or `"p/q"` into a reduced rational. A zero denominator is rejected.
pub fn parse_rational(text: &str) -> Option<crate::Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num = num_bigint::BigInt::from_str(num).ok()?;
    let den = num_bigint::BigInt::from_str(den).ok()?;
    if num_traits::Zero::is_zero(&den) {
        return None;
    }
    Some(crate::Rational::new(num, den))
}
