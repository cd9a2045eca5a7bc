use std::fmt;

use super::{CayleyExpr, EvalError};
use crate::bracket_ring::{BracketPolynomial, PointSet};
use crate::{Scalar, Step};

/// A signed product of brackets exactly as the distributive expansion
/// produces it: argument order preserved, nothing canonicalized or cancelled.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RawTerm {
    pub negative: bool,
    pub factors: Vec<[String; 3]>,
}

impl RawTerm {
    fn one() -> Self {
        RawTerm {
            negative: false,
            factors: Vec::new(),
        }
    }

    fn times(&self, other: &RawTerm) -> RawTerm {
        RawTerm {
            negative: self.negative != other.negative,
            factors: self.factors.iter().chain(&other.factors).cloned().collect(),
        }
    }

    fn with_bracket(mut self, x: &str, y: &str, z: &str, negate: bool) -> RawTerm {
        self.factors.push([x.to_string(), y.to_string(), z.to_string()]);
        self.negative ^= negate;
        self
    }

    /// The canonical polynomial of this single term.
    pub fn normalize<S: Scalar>(&self, points: &PointSet) -> Result<BracketPolynomial<S>, EvalError> {
        let lookup = |n: &String| points.get(n).ok_or_else(|| EvalError::UnknownPoint(n.clone()));
        let sign = if self.negative { -S::one() } else { S::one() };
        let mut out = BracketPolynomial::constant(sign);
        for [x, y, z] in &self.factors {
            out = &out * &BracketPolynomial::bracket(lookup(x)?, lookup(y)?, lookup(z)?);
        }
        Ok(out)
    }
}

impl fmt::Display for RawTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.negative { "-" } else { "+" })?;
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for [x, y, z] in &self.factors {
            write!(f, "[{x}{y}{z}]")?;
        }
        Ok(())
    }
}

enum Raw {
    Scalar(Vec<RawTerm>),
    Point(Vec<(RawTerm, String)>),
    Line(Vec<(RawTerm, [String; 2])>),
    Top(Vec<RawTerm>),
}

impl Raw {
    fn step(&self) -> Step {
        match self {
            Raw::Scalar(_) => Step::Scalar,
            Raw::Point(_) => Step::Point,
            Raw::Line(_) => Step::Line,
            Raw::Top(_) => Step::Top,
        }
    }

    /// Multiplies every coefficient by the scalar `factor`, keeping operand order.
    fn scaled(&self, factor: &[RawTerm], factor_first: bool) -> Raw {
        fn product<K: Clone>(items: &[(RawTerm, K)], factor: &[RawTerm], factor_first: bool) -> Vec<(RawTerm, K)> {
            if factor_first {
                factor
                    .iter()
                    .flat_map(|f| items.iter().map(move |(c, k)| (f.times(c), k.clone())))
                    .collect()
            } else {
                items
                    .iter()
                    .flat_map(|(c, k)| factor.iter().map(move |f| (c.times(f), k.clone())))
                    .collect()
            }
        }
        let plain = |terms: &[RawTerm]| -> Vec<RawTerm> {
            let keyed: Vec<(RawTerm, ())> = terms.iter().map(|t| (t.clone(), ())).collect();
            product(&keyed, factor, factor_first)
                .into_iter()
                .map(|(t, _)| t)
                .collect()
        };
        match self {
            Raw::Scalar(t) => Raw::Scalar(plain(t)),
            Raw::Top(t) => Raw::Top(plain(t)),
            Raw::Point(t) => Raw::Point(product(t, factor, factor_first)),
            Raw::Line(t) => Raw::Line(product(t, factor, factor_first)),
        }
    }

    fn join(&self, other: &Raw) -> Result<Raw, EvalError> {
        let step = self.step().join(other.step())?;
        Ok(match (self, other) {
            (Raw::Scalar(f), x) => x.scaled(f, true),
            (x, Raw::Scalar(f)) => x.scaled(f, false),
            (Raw::Point(ps), Raw::Point(qs)) => Raw::Line(
                ps.iter()
                    .flat_map(|(c, p)| qs.iter().map(move |(d, q)| (c.times(d), [p.clone(), q.clone()])))
                    .collect(),
            ),
            (Raw::Point(ps), Raw::Line(ls)) => Raw::Top(
                ps.iter()
                    .flat_map(|(c, p)| {
                        ls.iter()
                            .map(move |(d, [x, y])| c.times(d).with_bracket(p, x, y, false))
                    })
                    .collect(),
            ),
            (Raw::Line(ls), Raw::Point(ps)) => Raw::Top(
                ls.iter()
                    .flat_map(|(d, [x, y])| ps.iter().map(move |(c, p)| d.times(c).with_bracket(x, y, p, false)))
                    .collect(),
            ),
            _ => unreachable!("join passed the step check as {step}"),
        })
    }

    fn meet(&self, other: &Raw) -> Result<Raw, EvalError> {
        let step = self.step().meet(other.step())?;
        Ok(match (self, other) {
            (Raw::Top(f), x) => x.scaled(f, true),
            (x, Raw::Top(f)) => x.scaled(f, false),
            (Raw::Line(ls), Raw::Line(ms)) => {
                let mut out = Vec::new();
                for (c, [x, y]) in ls {
                    for (d, [u, v]) in ms {
                        let cd = c.times(d);
                        out.push((cd.clone().with_bracket(x, y, v, false), u.clone()));
                        out.push((cd.with_bracket(x, y, u, true), v.clone()));
                    }
                }
                Raw::Point(out)
            }
            (Raw::Line(ls), Raw::Point(ps)) => Raw::Scalar(
                ls.iter()
                    .flat_map(|(d, [x, y])| ps.iter().map(move |(c, p)| d.times(c).with_bracket(x, y, p, false)))
                    .collect(),
            ),
            (Raw::Point(ps), Raw::Line(ls)) => Raw::Scalar(
                ps.iter()
                    .flat_map(|(c, p)| {
                        ls.iter()
                            .map(move |(d, [x, y])| c.times(d).with_bracket(x, y, p, false))
                    })
                    .collect(),
            ),
            _ => unreachable!("meet passed the step check as {step}"),
        })
    }
}

fn eval_raw(expr: &CayleyExpr) -> Result<Raw, EvalError> {
    match expr {
        CayleyExpr::Atom(name) => Ok(Raw::Point(vec![(RawTerm::one(), name.clone())])),
        CayleyExpr::Join(children) => {
            let mut iter = children.iter();
            let mut acc = eval_raw(iter.next().expect("joins have at least two children"))?;
            for child in iter {
                acc = acc.join(&eval_raw(child)?)?;
            }
            Ok(acc)
        }
        CayleyExpr::Meet(l, r) => eval_raw(l)?.meet(&eval_raw(r)?),
    }
}

/// The distributed bracket products of a step-0 or step-3 expression before
/// canonicalization, in expansion order (later operands vary fastest).
pub fn raw_expansion_terms(expr: &CayleyExpr) -> Result<Vec<RawTerm>, EvalError> {
    match eval_raw(expr)? {
        Raw::Scalar(terms) | Raw::Top(terms) => Ok(terms),
        other => Err(EvalError::NotBracketValued(other.step())),
    }
}

/// Sum of the canonical forms of `terms`.
pub fn normalize_raw<S: Scalar>(terms: &[RawTerm], points: &PointSet) -> Result<BracketPolynomial<S>, EvalError> {
    let mut out = BracketPolynomial::zero();
    for t in terms {
        out = out + t.normalize(points)?;
    }
    Ok(out)
}
