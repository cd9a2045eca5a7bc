//! Symbolic evaluation of join/meet expressions over formal points.

mod cramer;
mod demo;
mod eval;
mod expr;
mod permutation;
mod raw;

pub use cramer::cramer_relation;
pub use demo::{collinearity_reduce_demo, CollinearityReduction};
pub use eval::{eval_symbolic, EvalError, StepValue};
pub use expr::CayleyExpr;
pub use permutation::Permutation;
pub use raw::{normalize_raw, raw_expansion_terms, RawTerm};

/// Left-hand side of the Pappus join/meet identity.
pub const PAPPUS_LHS: &str = "(bc' ^ b'c) v (ca' ^ c'a) v (ab' ^ a'b)";
/// Right-hand side of the Pappus join/meet identity.
pub const PAPPUS_RHS: &str = "(c'b ^ b'c) v (ca' ^ ab) v (ab' ^ a'c')";
