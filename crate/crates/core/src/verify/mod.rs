//! Theorem harness: identity checks, the permutation scan, configuration
//! generators and the Pappus demonstrations.
//!
//! Randomized routines are deterministic in their seed. Work fans out over
//! rayon, each trial drawing from its own ChaCha stream, and results are
//! merged in index order.

mod config;
mod identity;
mod pappus;
pub mod random;
mod report;
mod scan;

use thiserror::Error;

use crate::cayley::EvalError;
use crate::exterior::NumericError;
use crate::Step;

pub use config::{random_pappus_config, validate_pappus_hypotheses, Configuration, Provenance, SAMPLING_RETRIES};
pub use identity::{check_identity_numeric, check_identity_symbolic, numeric_trial_config, NumericCheck, SignSpec};
pub use pappus::{
    pappus_check, pappus_intersections, parametrized_pappus_check, parametrized_substitution, ParametrizedSide,
};
pub use report::{CheckReport, Details, Mode, Verdict, Witness, SCHEMA_VERSION};
pub use scan::{permutation_scan, PermutationScan, ScanRow};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("sides have different steps ({lhs} vs {rhs})")]
    StepMismatch { lhs: Step, rhs: Step },
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error("no admissible configuration after {attempts} draws")]
    DegenerateSampling { attempts: usize },
    #[error("degenerate meet: {0}")]
    DegenerateMeet(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Seed of the `index`-th derived run (splitmix64 of the pair).
pub fn derive_seed(root: u64, index: u64) -> u64 {
    let mut z = root.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
