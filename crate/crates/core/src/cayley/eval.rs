use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use super::CayleyExpr;
use crate::bracket_ring::{
    coordinate_expand, BracketPolynomial, CoordinatePolynomial, FormalPoint, PointSet, PointSetError,
};
use crate::exterior::{self, NumericError, NumericValue, PointAssignment};
use crate::{Scalar, Step, StepError};

type Poly<S> = BracketPolynomial<S>;

/// Symbolic value of a Cayley expression, tagged by step.
///
/// Point and line combinations carry bracket-polynomial coefficients and
/// never store a zero coefficient. Line keys are strictly increasing
/// pairs; reordering signs are absorbed into the coefficient. `Top` is the
/// coefficient of the unit extensor of the plane.
#[derive(Clone, Debug, PartialEq)]
pub enum StepValue<S> {
    Scalar(Poly<S>),
    Point(BTreeMap<FormalPoint, Poly<S>>),
    Line(BTreeMap<(FormalPoint, FormalPoint), Poly<S>>),
    Top(Poly<S>),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error(transparent)]
    Step(#[from] StepError),
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("point `{0}` repeats")]
    DuplicatePoint(String),
    #[error("expression has {0}, expected a bracket-valued step (0 or 3)")]
    NotBracketValued(Step),
    #[error(transparent)]
    PointSet(#[from] PointSetError),
}

fn accumulate<K: Ord, S: Scalar>(map: &mut BTreeMap<K, Poly<S>>, key: K, coefficient: Poly<S>) {
    if coefficient.is_zero() {
        return;
    }
    let sum = match map.remove(&key) {
        Some(existing) => existing + coefficient,
        None => coefficient,
    };
    if !sum.is_zero() {
        map.insert(key, sum);
    }
}

fn accumulate_line<S: Scalar>(
    map: &mut BTreeMap<(FormalPoint, FormalPoint), Poly<S>>,
    p: &FormalPoint,
    q: &FormalPoint,
    coefficient: Poly<S>,
) {
    match p.cmp(q) {
        std::cmp::Ordering::Less => accumulate(map, (p.clone(), q.clone()), coefficient),
        std::cmp::Ordering::Greater => accumulate(map, (q.clone(), p.clone()), -coefficient),
        std::cmp::Ordering::Equal => {}
    }
}

impl<S: Scalar> StepValue<S> {
    pub fn point(p: FormalPoint) -> Self {
        StepValue::Point(BTreeMap::from([(p, Poly::one())]))
    }

    pub fn zero(step: Step) -> Self {
        match step {
            Step::Scalar => StepValue::Scalar(Poly::zero()),
            Step::Point => StepValue::Point(BTreeMap::new()),
            Step::Line => StepValue::Line(BTreeMap::new()),
            Step::Top => StepValue::Top(Poly::zero()),
        }
    }

    pub fn step(&self) -> Step {
        match self {
            StepValue::Scalar(_) => Step::Scalar,
            StepValue::Point(_) => Step::Point,
            StepValue::Line(_) => Step::Line,
            StepValue::Top(_) => Step::Top,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            StepValue::Scalar(f) | StepValue::Top(f) => f.is_zero(),
            StepValue::Point(m) => m.is_empty(),
            StepValue::Line(m) => m.is_empty(),
        }
    }

    /// The bracket polynomial of a step-0 or step-3 value.
    pub fn as_polynomial(&self) -> Option<&Poly<S>> {
        match self {
            StepValue::Scalar(f) | StepValue::Top(f) => Some(f),
            _ => None,
        }
    }

    /// Number of stored terms (monomials for steps 0 and 3, basis entries otherwise).
    pub fn term_count(&self) -> usize {
        match self {
            StepValue::Scalar(f) | StepValue::Top(f) => f.len(),
            StepValue::Point(m) => m.len(),
            StepValue::Line(m) => m.len(),
        }
    }

    /// Every coefficient multiplied by `factor`.
    pub fn scale(&self, factor: &Poly<S>) -> Self {
        fn scale_map<K: Ord + Clone, S: Scalar>(m: &BTreeMap<K, Poly<S>>, factor: &Poly<S>) -> BTreeMap<K, Poly<S>> {
            let mut out = BTreeMap::new();
            for (k, c) in m {
                accumulate(&mut out, k.clone(), c * factor);
            }
            out
        }
        match self {
            StepValue::Scalar(f) => StepValue::Scalar(f * factor),
            StepValue::Top(f) => StepValue::Top(f * factor),
            StepValue::Point(m) => StepValue::Point(scale_map(m, factor)),
            StepValue::Line(m) => StepValue::Line(scale_map(m, factor)),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&Poly::constant(-S::one()))
    }

    /// Sum of two values of the same step.
    pub fn add(&self, other: &Self) -> Result<Self, StepError> {
        Ok(match (self, other) {
            (StepValue::Scalar(f), StepValue::Scalar(g)) => StepValue::Scalar(f + g),
            (StepValue::Top(f), StepValue::Top(g)) => StepValue::Top(f + g),
            (StepValue::Point(m), StepValue::Point(n)) => {
                let mut out = m.clone();
                for (k, c) in n {
                    accumulate(&mut out, k.clone(), c.clone());
                }
                StepValue::Point(out)
            }
            (StepValue::Line(m), StepValue::Line(n)) => {
                let mut out = m.clone();
                for (k, c) in n {
                    accumulate(&mut out, k.clone(), c.clone());
                }
                StepValue::Line(out)
            }
            // reported as an overflow of the larger step; sums only arise between equal steps
            _ => {
                return Err(StepError::JoinOverflow {
                    left: self.step(),
                    right: other.step(),
                })
            }
        })
    }

    /// Join; grades add.
    pub fn join(&self, other: &Self) -> Result<Self, StepError> {
        let step = self.step().join(other.step())?;
        Ok(match (self, other) {
            (StepValue::Scalar(f), x) | (x, StepValue::Scalar(f)) => x.scale(f),
            (StepValue::Point(ps), StepValue::Point(qs)) => {
                let mut out = BTreeMap::new();
                for (p, f) in ps {
                    for (q, g) in qs {
                        accumulate_line(&mut out, p, q, f * g);
                    }
                }
                StepValue::Line(out)
            }
            (StepValue::Point(ps), StepValue::Line(ls)) => {
                let mut out = Poly::zero();
                for (p, f) in ps {
                    for ((x, y), g) in ls {
                        out = out + &(f * g) * &Poly::bracket(p, x, y);
                    }
                }
                StepValue::Top(out)
            }
            (StepValue::Line(ls), StepValue::Point(ps)) => {
                let mut out = Poly::zero();
                for ((x, y), g) in ls {
                    for (p, f) in ps {
                        out = out + &(g * f) * &Poly::bracket(x, y, p);
                    }
                }
                StepValue::Top(out)
            }
            _ => unreachable!(
                "join of {} and {} passed the step check as {step}",
                self.step(),
                other.step()
            ),
        })
    }

    /// Meet; the result has step `j + k − 3`. Two lines `x∨y`, `u∨v` meet in
    /// `[x y v]·u − [x y u]·v`, extended bilinearly.
    pub fn meet(&self, other: &Self) -> Result<Self, StepError> {
        let step = self.step().meet(other.step())?;
        Ok(match (self, other) {
            (StepValue::Top(f), x) | (x, StepValue::Top(f)) => x.scale(f),
            (StepValue::Line(ls), StepValue::Line(ms)) => {
                let mut out = BTreeMap::new();
                for ((x, y), f) in ls {
                    for ((u, v), g) in ms {
                        let fg = f * g;
                        accumulate(&mut out, u.clone(), &fg * &Poly::bracket(x, y, v));
                        accumulate(&mut out, v.clone(), -(&fg * &Poly::bracket(x, y, u)));
                    }
                }
                StepValue::Point(out)
            }
            (StepValue::Line(ls), StepValue::Point(ps)) | (StepValue::Point(ps), StepValue::Line(ls)) => {
                let mut out = Poly::zero();
                for ((x, y), g) in ls {
                    for (p, f) in ps {
                        out = out + &(g * f) * &Poly::bracket(x, y, p);
                    }
                }
                StepValue::Scalar(out)
            }
            _ => unreachable!(
                "meet of {} and {} passed the step check as {step}",
                self.step(),
                other.step()
            ),
        })
    }

    /// Relabels formal points through `f`, re-canonicalizing keys and brackets.
    pub fn map_points<F>(&self, f: &mut F) -> Self
    where
        F: FnMut(&FormalPoint) -> FormalPoint,
    {
        match self {
            StepValue::Scalar(p) => StepValue::Scalar(p.map_points(&mut *f)),
            StepValue::Top(p) => StepValue::Top(p.map_points(&mut *f)),
            StepValue::Point(m) => {
                let mut out = BTreeMap::new();
                for (p, c) in m {
                    accumulate(&mut out, f(p), c.map_points(&mut *f));
                }
                StepValue::Point(out)
            }
            StepValue::Line(m) => {
                let mut out = BTreeMap::new();
                for ((p, q), c) in m {
                    accumulate_line(&mut out, &f(p), &f(q), c.map_points(&mut *f));
                }
                StepValue::Line(out)
            }
        }
    }

    /// Coordinate polynomials of the value over generic points: one
    /// component for steps 0 and 3, three (homogeneous or Plücker
    /// coordinates) for steps 1 and 2.
    pub fn coordinate_components(&self) -> Vec<CoordinatePolynomial<S>> {
        use crate::bracket_ring::generic_coords;
        match self {
            StepValue::Scalar(f) | StepValue::Top(f) => vec![coordinate_expand(f)],
            StepValue::Point(m) => {
                let mut out = vec![CoordinatePolynomial::zero(); 3];
                for (p, c) in m {
                    let coefficient = coordinate_expand(c);
                    for (slot, x) in out.iter_mut().zip(generic_coords::<S>(p)) {
                        *slot = &*slot + &(&coefficient * &x);
                    }
                }
                out
            }
            StepValue::Line(m) => {
                let mut out = vec![CoordinatePolynomial::zero(); 3];
                for ((p, q), c) in m {
                    let coefficient = coordinate_expand(c);
                    let (x, y) = (generic_coords::<S>(p), generic_coords::<S>(q));
                    for (slot, (i, j)) in out.iter_mut().zip([(0, 1), (0, 2), (1, 2)]) {
                        let minor = &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
                        *slot = &*slot + &(&coefficient * &minor);
                    }
                }
                out
            }
        }
    }

    /// Whether the two values agree as functions of generic points.
    /// Values of different steps are never equivalent.
    pub fn equivalent(&self, other: &Self) -> bool {
        if self.step() != other.step() {
            return false;
        }
        if self == other {
            return true;
        }
        match (self, other) {
            (StepValue::Scalar(f), StepValue::Scalar(g)) | (StepValue::Top(f), StepValue::Top(g)) => {
                crate::bracket_ring::equal_mod_syzygies(f, g)
            }
            _ => self
                .add(&other.neg())
                .expect("same step")
                .coordinate_components()
                .iter()
                .all(CoordinatePolynomial::is_zero),
        }
    }

    /// Numeric value obtained by substituting coordinates into the expansion.
    pub fn evaluate<A>(&self, assignment: &A) -> Result<NumericValue<S>, NumericError>
    where
        A: PointAssignment<S> + ?Sized,
    {
        let poly = |f: &Poly<S>| f.evaluate(assignment).map_err(NumericError::UnassignedAtom);
        let coords = |p: &FormalPoint| {
            assignment
                .point(p.name())
                .ok_or_else(|| NumericError::UnassignedAtom(p.name().to_string()))
        };
        let zero3 = || [S::zero(), S::zero(), S::zero()];
        Ok(match self {
            StepValue::Scalar(f) => NumericValue::Scalar(poly(f)?),
            StepValue::Top(f) => NumericValue::Top(poly(f)?),
            StepValue::Point(m) => {
                let mut acc = zero3();
                for (p, c) in m {
                    let value = poly(c)?;
                    for (slot, x) in acc.iter_mut().zip(coords(p)?.coords()) {
                        *slot = slot.clone() + value.clone() * x.clone();
                    }
                }
                exterior::HomogeneousPoint::from_coords(acc)
                    .map_or(NumericValue::Zero(Step::Point), NumericValue::Point)
            }
            StepValue::Line(m) => {
                let mut acc = zero3();
                for ((p, q), c) in m {
                    let value = poly(c)?;
                    if let Some(line) = exterior::join_pp(coords(p)?, coords(q)?) {
                        for (slot, x) in acc.iter_mut().zip(line.coords()) {
                            *slot = slot.clone() + value.clone() * x.clone();
                        }
                    }
                }
                exterior::PluckerLine::from_coords(acc).map_or(NumericValue::Zero(Step::Line), NumericValue::Line)
            }
        })
    }

    pub fn to_json(&self) -> Value {
        match self {
            StepValue::Scalar(f) | StepValue::Top(f) => json!({
                "step": self.step().grade(),
                "polynomial": f.to_json(),
            }),
            StepValue::Point(m) => json!({
                "step": 1,
                "terms": m.iter().map(|(p, c)| json!({
                    "extensor": [p.name()],
                    "coefficient": c.to_json(),
                })).collect::<Vec<_>>(),
            }),
            StepValue::Line(m) => json!({
                "step": 2,
                "terms": m.iter().map(|((p, q), c)| json!({
                    "extensor": [p.name(), q.name()],
                    "coefficient": c.to_json(),
                })).collect::<Vec<_>>(),
            }),
        }
    }
}

impl<S: Scalar> fmt::Display for StepValue<S> {
    /// Steps 0 and 3 print their polynomial; steps 1 and 2 print
    /// `(coefficient)extensor` terms joined by ` + `, e.g. `(+[bb'c'])c + (-[bcc'])b'`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = match self {
            StepValue::Scalar(p) | StepValue::Top(p) => return write!(f, "{p}"),
            StepValue::Point(m) => m.iter().map(|(p, c)| format!("({c}){p}")).collect(),
            StepValue::Line(m) => m.iter().map(|((p, q), c)| format!("({c}){p}{q}")).collect(),
        };
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// Full multilinear expansion of `expr`; every atom must be declared in `points`.
pub fn eval_symbolic<S: Scalar>(expr: &CayleyExpr, points: &PointSet) -> Result<StepValue<S>, EvalError> {
    match expr {
        CayleyExpr::Atom(name) => points
            .get(name)
            .cloned()
            .map(StepValue::point)
            .ok_or_else(|| EvalError::UnknownPoint(name.clone())),
        CayleyExpr::Join(children) => {
            let mut iter = children.iter();
            let first = iter.next().expect("joins have at least two children");
            let mut acc = eval_symbolic(first, points)?;
            for child in iter {
                acc = acc.join(&eval_symbolic(child, points)?)?;
            }
            Ok(acc)
        }
        CayleyExpr::Meet(left, right) => {
            let l = eval_symbolic(left, points)?;
            let r = eval_symbolic(right, points)?;
            Ok(l.meet(&r)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket_ring::parse_polynomial;
    use crate::cayley::{PAPPUS_LHS, PAPPUS_RHS};
    use crate::{parse, Rational};

    fn eval(text: &str) -> crate::StepValue {
        eval_symbolic(&parse(text).unwrap(), &PointSet::pappus()).unwrap()
    }

    fn poly(text: &str) -> crate::BracketPolynomial {
        parse_polynomial(text, &PointSet::pappus()).unwrap()
    }

    fn pt(name: &str) -> FormalPoint {
        PointSet::pappus().get(name).unwrap().clone()
    }

    #[test]
    fn meet_of_two_lines_matches_first_expansion() {
        let v = eval("bc' ^ b'c");
        let expected = StepValue::Point(BTreeMap::from([
            (pt("b'"), poly("[bc'c]")),
            (pt("c"), poly("-[bc'b']")),
        ]));
        assert_eq!(v, expected);
        assert_eq!(v.to_string(), "(+[bb'c'])c + (-[bcc'])b'");
    }

    #[test]
    fn single_bracket() {
        assert_eq!(eval("abc"), StepValue::Top(poly("[abc]")));
        assert_eq!(eval("acb"), StepValue::Top(poly("-[abc]")));
    }

    #[test]
    fn pappus_lhs_collapses_to_two_monomials() {
        let v = eval(PAPPUS_LHS);
        let expected = poly("[bc'c][ca'a][ab'b][b'c'a'] - [bc'b'][ca'c'][ab'a'][cab]");
        assert_eq!(v, StepValue::Top(expected));
        assert_eq!(v.to_string(), "-[abc][aa'b'][bb'c'][ca'c'] +[abb'][aca'][bcc'][a'b'c']");
    }

    #[test]
    fn both_sides_of_the_identity_agree() {
        assert!(eval(PAPPUS_LHS).equivalent(&eval(PAPPUS_RHS)));
        assert!(!eval(PAPPUS_LHS).equivalent(&eval(PAPPUS_RHS).neg()));
    }

    #[test]
    fn join_is_antisymmetric() {
        let pq = eval("ab'");
        assert_eq!(eval("b'a"), pq.neg());
        assert!(eval("aa").is_zero());
        assert_eq!(eval("aa").step(), Step::Line);
    }

    #[test]
    fn step_errors() {
        let set = PointSet::pappus();
        let err = eval_symbolic::<Rational>(&parse("ab v bc").unwrap(), &set).unwrap_err();
        assert!(matches!(err, EvalError::Step(StepError::JoinOverflow { .. })));
        let err = eval_symbolic::<Rational>(&parse("abc v a").unwrap(), &set).unwrap_err();
        assert!(matches!(err, EvalError::Step(StepError::JoinOverflow { .. })));
        let err = eval_symbolic::<Rational>(&parse("a ^ b").unwrap(), &set).unwrap_err();
        assert!(matches!(err, EvalError::Step(StepError::MeetUnderflow { .. })));
        let err = eval_symbolic::<Rational>(&parse("ad").unwrap(), &set).unwrap_err();
        assert_eq!(err, EvalError::UnknownPoint("d".into()));
    }

    #[test]
    fn top_meet_scales() {
        let v = eval("abc ^ a'b'");
        let expected = eval("a'b'").scale(&poly("[abc]"));
        assert_eq!(v, expected);
        assert_eq!(eval("abc ^ a'b'c'"), StepValue::Top(poly("[abc][a'b'c']")));
        assert_eq!(eval("ab ^ c"), StepValue::Scalar(poly("[abc]")));
        assert_eq!(eval("c ^ ab"), StepValue::Scalar(poly("[abc]")));
    }

    #[test]
    fn step_one_equivalence_sees_cramer_relation() {
        // [x u v]y − [y u v]x equals the adopted meet of x∨y and u∨v
        let adopted = eval("ab ^ a'b'");
        let alternative = StepValue::Point(BTreeMap::from([
            (pt("b"), poly("[aa'b']")),
            (pt("a"), poly("-[ba'b']")),
        ]));
        assert_ne!(adopted, alternative);
        assert!(adopted.equivalent(&alternative));
        assert!(!adopted.equivalent(&alternative.neg()));
    }
}
