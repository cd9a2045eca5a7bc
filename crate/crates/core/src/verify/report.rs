use std::fmt;

use serde_json::{json, Value};

use super::Configuration;
use crate::bracket_ring::Sign;
use crate::{Point, Rational, Step};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(pass: bool) -> Self {
        if pass {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Symbolic,
    Numeric,
    Parametrized,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Symbolic => "symbolic",
            Mode::Numeric => "numeric",
            Mode::Parametrized => "parametrized",
        })
    }
}

/// A failing numeric trial, replayable from the report's seed and `trial`.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub trial: u64,
    pub configuration: Configuration,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq)]
#[allow(clippy::large_enum_variant)] // built once per report
pub enum Details {
    Symbolic {
        step: Step,
        matched_sign: Option<Sign>,
        lhs_terms: usize,
        rhs_terms: usize,
    },
    Numeric {
        step: Step,
        matched_sign: Option<Sign>,
        trials: u64,
        bound: u64,
        witness: Option<Box<Witness>>,
    },
    Pappus {
        configuration: Configuration,
        /// `ab'∩a'b`, `bc'∩b'c`, `ca'∩c'a`, each scaled to a last nonzero coordinate of 1.
        intersections: [Point; 3],
        bracket: Rational,
    },
    Parametrized {
        sides: Vec<super::ParametrizedSide>,
        variables: usize,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport {
    pub verdict: Verdict,
    pub mode: Mode,
    pub seed: Option<u64>,
    pub details: Details,
}

fn sign_json(sign: Option<Sign>) -> Value {
    sign.map_or(Value::Null, |s| json!(s.to_string()))
}

fn point_json(p: &Point) -> Value {
    json!(p.coords().iter().map(ToString::to_string).collect::<Vec<_>>())
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> Value {
        let details = match &self.details {
            Details::Symbolic {
                step,
                matched_sign,
                lhs_terms,
                rhs_terms,
            } => json!({
                "step": step.grade(),
                "matched_sign": sign_json(*matched_sign),
                "lhs_terms": lhs_terms,
                "rhs_terms": rhs_terms,
            }),
            Details::Numeric {
                step,
                matched_sign,
                trials,
                bound,
                witness,
            } => json!({
                "step": step.grade(),
                "matched_sign": sign_json(*matched_sign),
                "trials": trials,
                "bound": bound,
                "witness": witness.as_ref().map_or(Value::Null, |w| json!({
                    "trial": w.trial,
                    "configuration": w.configuration.to_json(),
                    "lhs": w.lhs,
                    "rhs": w.rhs,
                })),
            }),
            Details::Pappus {
                configuration,
                intersections,
                bracket,
            } => json!({
                "configuration": configuration.to_json(),
                "intersections": intersections.iter().map(point_json).collect::<Vec<_>>(),
                "bracket": bracket.to_string(),
            }),
            Details::Parametrized { sides, variables } => json!({
                "variables": variables,
                "sides": sides.iter().map(|s| json!({
                    "expression": s.expression,
                    "bracket_terms": s.bracket_terms,
                    "generic_terms": s.generic_terms,
                    "substituted_terms": s.substituted_terms,
                })).collect::<Vec<_>>(),
            }),
        };
        json!({
            "schema": SCHEMA_VERSION,
            "verdict": self.verdict.to_string(),
            "mode": self.mode.to_string(),
            "seed": self.seed,
            "details": details,
        })
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.verdict, self.mode)?;
        if let Some(seed) = self.seed {
            write!(f, " seed={seed}")?;
        }
        match &self.details {
            Details::Symbolic {
                step,
                matched_sign,
                lhs_terms,
                rhs_terms,
            } => {
                write!(f, " {step}, lhs terms={lhs_terms}, rhs terms={rhs_terms}")?;
                if let Some(s) = matched_sign {
                    write!(f, ", sign {s}")?;
                }
            }
            Details::Numeric {
                step,
                matched_sign,
                trials,
                bound,
                witness,
            } => {
                write!(f, " {step}, trials={trials}, bound={bound}")?;
                if let Some(s) = matched_sign {
                    write!(f, ", sign {s}")?;
                }
                if let Some(w) = witness {
                    write!(
                        f,
                        "\nwitness (trial {}): {}\n  lhs = {}\n  rhs = {}",
                        w.trial, w.configuration, w.lhs, w.rhs
                    )?;
                }
            }
            Details::Pappus {
                configuration,
                intersections,
                bracket,
            } => {
                write!(f, "\nconfiguration: {configuration}")?;
                for (label, p) in ["ab'^a'b", "bc'^b'c", "ca'^c'a"].iter().zip(intersections) {
                    write!(f, "\n{label} = {p}")?;
                }
                write!(f, "\nbracket = {bracket}")?;
            }
            Details::Parametrized { sides, variables } => {
                write!(f, " variables={variables}")?;
                for s in sides {
                    write!(
                        f,
                        "\n{}: {} bracket terms, {} generic coordinate terms, {} after substitution",
                        s.expression, s.bracket_terms, s.generic_terms, s.substituted_terms
                    )?;
                }
            }
        }
        Ok(())
    }
}
