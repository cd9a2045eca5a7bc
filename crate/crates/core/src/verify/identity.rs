use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{CheckReport, Configuration, Details, Mode, Provenance, Verdict, VerifyError, Witness};
use crate::bracket_ring::{PointSet, Sign};
use crate::cayley::{eval_symbolic, CayleyExpr};
use crate::exterior::{eval_numeric, HomogeneousPoint};
use crate::{NumericValue, Rational, Scalar, StepValue};

/// Which relation between the two sides is being asserted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignSpec {
    Plus,
    Minus,
    Either,
}

impl SignSpec {
    fn candidates(self) -> &'static [Sign] {
        match self {
            SignSpec::Plus => &[Sign::Plus],
            SignSpec::Minus => &[Sign::Minus],
            SignSpec::Either => &[Sign::Plus, Sign::Minus],
        }
    }
}

impl FromStr for SignSpec {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "+" | "plus" => Ok(SignSpec::Plus),
            "-" | "minus" => Ok(SignSpec::Minus),
            "either" | "+-" | "±" => Ok(SignSpec::Either),
            other => Err(format!("unknown sign `{other}` (expected +, - or either)")),
        }
    }
}

fn point_set(lhs: &CayleyExpr, rhs: &CayleyExpr) -> Result<PointSet, VerifyError> {
    let set = PointSet::pappus()
        .extended_with(lhs)
        .and_then(|s| s.extended_with(rhs))
        .map_err(|e| VerifyError::Eval(e.into()))?;
    Ok(set)
}

/// Decides `lhs = ±rhs` as functions of generic points, by full coordinate expansion.
pub fn check_identity_symbolic(lhs: &CayleyExpr, rhs: &CayleyExpr, sign: SignSpec) -> Result<CheckReport, VerifyError> {
    let points = point_set(lhs, rhs)?;
    let l: StepValue = eval_symbolic(lhs, &points)?;
    let r: StepValue = eval_symbolic(rhs, &points)?;
    if l.step() != r.step() {
        return Err(VerifyError::StepMismatch {
            lhs: l.step(),
            rhs: r.step(),
        });
    }
    let matched = sign.candidates().iter().copied().find(|s| match s {
        Sign::Plus => l.equivalent(&r),
        Sign::Minus => l.equivalent(&r.neg()),
    });
    Ok(CheckReport {
        verdict: Verdict::from_bool(matched.is_some()),
        mode: Mode::Symbolic,
        seed: None,
        details: Details::Symbolic {
            step: l.step(),
            matched_sign: matched,
            lhs_terms: l.term_count(),
            rhs_terms: r.term_count(),
        },
    })
}

/// Parameters of [`check_identity_numeric`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NumericCheck {
    pub trials: u64,
    pub seed: u64,
    /// Coordinates are uniform integers in `[-bound, bound]`.
    pub bound: u64,
    pub sign: SignSpec,
}

impl Default for NumericCheck {
    fn default() -> Self {
        NumericCheck {
            trials: 100,
            seed: 0,
            bound: 1_000_000,
            sign: SignSpec::Plus,
        }
    }
}

/// Configuration of trial `trial`: stream `trial` of the ChaCha generator
/// seeded with `seed`, one nonzero integer point per name.
pub fn numeric_trial_config(names: &[String], seed: u64, trial: u64, bound: u64) -> Configuration {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let bound = i64::try_from(bound).unwrap_or(i64::MAX);
    let mut config = Configuration::new(Provenance {
        generator: "numeric_trial_config".into(),
        seed: Some(seed),
        index: Some(trial),
    });
    for name in names {
        let point = loop {
            let coords = [(); 3].map(|_| Rational::from_int(rng.gen_range(-bound..=bound)));
            if let Some(p) = HomogeneousPoint::from_coords(coords) {
                break p;
            }
        };
        config.set(name, point);
    }
    config
}

/// Randomized check of `lhs = ±rhs` on integer configurations. A wrong
/// identity survives one trial with probability at most
/// `degree / (2·bound + 1)`.
pub fn check_identity_numeric(
    lhs: &CayleyExpr,
    rhs: &CayleyExpr,
    params: NumericCheck,
) -> Result<CheckReport, VerifyError> {
    let mut names = lhs.atoms();
    for n in rhs.atoms() {
        if !names.contains(&n) {
            names.push(n);
        }
    }
    let outcomes: Vec<(Configuration, NumericValue, NumericValue)> = (0..params.trials)
        .into_par_iter()
        .map(|trial| {
            let config = numeric_trial_config(&names, params.seed, trial, params.bound);
            let l = eval_numeric(lhs, &config)?;
            let r = eval_numeric(rhs, &config)?;
            Ok((config, l, r))
        })
        .collect::<Result<_, VerifyError>>()?;

    if let Some((_, l, r)) = outcomes.iter().find(|(_, l, r)| l.step() != r.step()) {
        return Err(VerifyError::StepMismatch {
            lhs: l.step(),
            rhs: r.step(),
        });
    }
    let holds = |sign: Sign, l: &NumericValue, r: &NumericValue| match sign {
        Sign::Plus => l == r,
        Sign::Minus => *l == r.neg(),
    };
    let matched = params
        .sign
        .candidates()
        .iter()
        .copied()
        .find(|&s| outcomes.iter().all(|(_, l, r)| holds(s, l, r)));
    let step = match outcomes.first() {
        Some((_, l, _)) => l.step(),
        None => {
            let probe = point_set(lhs, rhs)?;
            eval_symbolic::<Rational>(lhs, &probe)?.step()
        }
    };
    let witness = match matched {
        Some(_) => None,
        None => outcomes
            .iter()
            .enumerate()
            .find(|(_, (_, l, r))| params.sign.candidates().iter().all(|&s| !holds(s, l, r)))
            .or_else(|| {
                let first = params.sign.candidates()[0];
                outcomes.iter().enumerate().find(|(_, (_, l, r))| !holds(first, l, r))
            })
            .map(|(trial, (config, l, r))| {
                Box::new(Witness {
                    trial: trial as u64,
                    configuration: config.clone(),
                    lhs: l.to_string(),
                    rhs: r.to_string(),
                })
            }),
    };
    Ok(CheckReport {
        verdict: Verdict::from_bool(matched.is_some()),
        mode: Mode::Numeric,
        seed: Some(params.seed),
        details: Details::Numeric {
            step,
            matched_sign: matched,
            trials: params.trials,
            bound: params.bound,
            witness,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::{PAPPUS_LHS, PAPPUS_RHS};
    use crate::parse;

    fn e(text: &str) -> CayleyExpr {
        parse(text).unwrap()
    }

    #[test]
    fn symbolic_checks() {
        let r = check_identity_symbolic(&e(PAPPUS_LHS), &e(PAPPUS_RHS), SignSpec::Plus).unwrap();
        assert!(r.passed());
        let swapped = e(PAPPUS_LHS).apply_permutation(
            &crate::Permutation::transposition(crate::bracket_ring::PAPPUS_POINTS, "b", "c'").unwrap(),
        );
        let r = check_identity_symbolic(&e(PAPPUS_LHS), &swapped, SignSpec::Minus).unwrap();
        assert!(r.passed());
        let r = check_identity_symbolic(&e("abc"), &e("acb"), SignSpec::Plus).unwrap();
        assert!(!r.passed());
        let r = check_identity_symbolic(&e("abc"), &e("acb"), SignSpec::Either).unwrap();
        assert!(matches!(
            r.details,
            Details::Symbolic {
                matched_sign: Some(Sign::Minus),
                ..
            }
        ));
    }

    #[test]
    fn step_mismatch_is_an_error() {
        let err = check_identity_symbolic(&e("ab"), &e("abc"), SignSpec::Plus).unwrap_err();
        assert!(matches!(err, VerifyError::StepMismatch { .. }));
        let err = check_identity_numeric(&e("ab"), &e("abc"), NumericCheck::default()).unwrap_err();
        assert!(matches!(err, VerifyError::StepMismatch { .. }));
    }

    #[test]
    fn numeric_checks() {
        let params = NumericCheck {
            trials: 20,
            ..NumericCheck::default()
        };
        assert!(check_identity_numeric(&e("abc"), &e("abc"), params).unwrap().passed());
        assert!(check_identity_numeric(&e(PAPPUS_LHS), &e(PAPPUS_RHS), params)
            .unwrap()
            .passed());
        let fail = check_identity_numeric(&e("abc"), &e("abc'"), NumericCheck { seed: 7, ..params }).unwrap();
        assert!(!fail.passed());
        let Details::Numeric { witness: Some(w), .. } = &fail.details else {
            panic!("missing witness")
        };
        assert_eq!(w.trial, 0);
        // replay
        let names = vec!["a".to_string(), "b".into(), "c".into(), "c'".into()];
        assert_eq!(numeric_trial_config(&names, 7, w.trial, params.bound), w.configuration);
    }

    #[test]
    fn numeric_sign_handling() {
        let params = NumericCheck {
            trials: 10,
            sign: SignSpec::Minus,
            ..NumericCheck::default()
        };
        assert!(check_identity_numeric(&e("abc"), &e("acb"), params).unwrap().passed());
        let either = NumericCheck {
            sign: SignSpec::Either,
            ..params
        };
        let r = check_identity_numeric(&e("ab ^ cd"), &e("cd ^ ab"), either).unwrap();
        assert!(matches!(
            r.details,
            Details::Numeric {
                matched_sign: Some(_),
                ..
            }
        ));
    }

    #[test]
    fn trial_configs_are_per_stream() {
        let names = vec!["a".to_string(), "b".into()];
        let c0 = numeric_trial_config(&names, 3, 0, 100);
        assert_eq!(c0, numeric_trial_config(&names, 3, 0, 100));
        assert_ne!(c0, numeric_trial_config(&names, 3, 1, 100));
        assert_ne!(c0, numeric_trial_config(&names, 4, 0, 100));
    }
}
