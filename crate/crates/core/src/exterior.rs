//! Numeric step-3 exterior algebra over exact scalars.
//!
//! Points carry homogeneous coordinates, lines carry Plücker coordinates
//! `(p01, p02, p12)` over the basis `e0∧e1, e0∧e2, e1∧e2`, and the top step
//! is a single coefficient of `e0∧e1∧e2`. The zero extensor is never stored
//! inside a point or a line; operations that can degenerate return `Option`
//! or [`NumericValue::Zero`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::cayley::CayleyExpr;
use crate::{Scalar, Step, StepError};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomogeneousPoint<S>([S; 3]);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PluckerLine<S>([S; 3]);

fn all_zero<S: Scalar>(v: &[S; 3]) -> bool {
    v.iter().all(|c| c.is_zero())
}

fn cross<S: Scalar>(u: &[S; 3], v: &[S; 3]) -> [S; 3] {
    [
        u[1].clone() * v[2].clone() - u[2].clone() * v[1].clone(),
        u[2].clone() * v[0].clone() - u[0].clone() * v[2].clone(),
        u[0].clone() * v[1].clone() - u[1].clone() * v[0].clone(),
    ]
}

fn dot<S: Scalar>(u: &[S; 3], v: &[S; 3]) -> S {
    u[0].clone() * v[0].clone() + u[1].clone() * v[1].clone() + u[2].clone() * v[2].clone()
}

fn scaled<S: Scalar>(s: &S, v: &[S; 3]) -> [S; 3] {
    [
        s.clone() * v[0].clone(),
        s.clone() * v[1].clone(),
        s.clone() * v[2].clone(),
    ]
}

fn wedge<S: Scalar>(p: &[S; 3], q: &[S; 3]) -> [S; 3] {
    [
        p[0].clone() * q[1].clone() - p[1].clone() * q[0].clone(),
        p[0].clone() * q[2].clone() - p[2].clone() * q[0].clone(),
        p[1].clone() * q[2].clone() - p[2].clone() * q[1].clone(),
    ]
}

/// Linear form `ℓ` with `ℓ·z = [x y z]` for the line `x∨y` with the given Plücker coordinates.
fn covector<S: Scalar>(plucker: &[S; 3]) -> [S; 3] {
    [plucker[2].clone(), -plucker[1].clone(), plucker[0].clone()]
}

impl<S: Scalar> HomogeneousPoint<S> {
    /// Returns `None` for the zero triple.
    pub fn new(x0: S, x1: S, x2: S) -> Option<Self> {
        Self::from_coords([x0, x1, x2])
    }

    pub fn from_coords(coords: [S; 3]) -> Option<Self> {
        (!all_zero(&coords)).then_some(Self(coords))
    }

    pub fn from_ints(x0: i64, x1: i64, x2: i64) -> Option<Self> {
        Self::new(S::from_int(x0), S::from_int(x1), S::from_int(x2))
    }

    pub fn coords(&self) -> &[S; 3] {
        &self.0
    }

    pub fn into_coords(self) -> [S; 3] {
        self.0
    }

    /// Projective equality: the coordinate triples are proportional.
    pub fn is_proportional(&self, other: &Self) -> bool {
        all_zero(&wedge(&self.0, &other.0))
    }

    /// Representative whose last nonzero coordinate is 1.
    pub fn normalized(&self) -> Self {
        let pivot = self
            .0
            .iter()
            .rev()
            .find(|c| !c.is_zero())
            .expect("points are nonzero")
            .clone();
        Self(self.0.clone().map(|c| c / pivot.clone()))
    }
}

impl<S: Scalar> PluckerLine<S> {
    /// Returns `None` for the zero bivector.
    pub fn from_coords(coords: [S; 3]) -> Option<Self> {
        (!all_zero(&coords)).then_some(Self(coords))
    }

    pub fn coords(&self) -> &[S; 3] {
        &self.0
    }

    /// Coefficients `(u0, u1, u2)` of the line equation `u0 x0 + u1 x1 + u2 x2 = 0`.
    pub fn equation(&self) -> [S; 3] {
        covector(&self.0)
    }

    pub fn is_proportional(&self, other: &Self) -> bool {
        all_zero(&wedge(&self.0, &other.0))
    }

    pub fn contains(&self, p: &HomogeneousPoint<S>) -> bool {
        meet_lp(self, p).is_zero()
    }
}

impl<S: Scalar> fmt::Display for HomogeneousPoint<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

impl<S: Scalar> fmt::Display for PluckerLine<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}, {}>", self.0[0], self.0[1], self.0[2])
    }
}

/// The line `p∨q`, or `None` when `p` and `q` are projectively equal.
pub fn join_pp<S: Scalar>(p: &HomogeneousPoint<S>, q: &HomogeneousPoint<S>) -> Option<PluckerLine<S>> {
    PluckerLine::from_coords(wedge(&p.0, &q.0))
}

/// Determinant of the matrix with rows `p`, `q`, `r`.
pub fn bracket<S: Scalar>(p: &HomogeneousPoint<S>, q: &HomogeneousPoint<S>, r: &HomogeneousPoint<S>) -> S {
    dot(&cross(&q.0, &r.0), &p.0)
}

/// Meet of two lines. For `l = x∨y`, `m = u∨v` this is exactly
/// `[x y v]·u − [x y u]·v`; `None` when the lines coincide.
pub fn meet_ll<S: Scalar>(l: &PluckerLine<S>, m: &PluckerLine<S>) -> Option<HomogeneousPoint<S>> {
    HomogeneousPoint::from_coords(cross(&covector(&l.0), &covector(&m.0)))
}

/// `[x y p]` for `l = x∨y`; zero iff `p` lies on `l`.
pub fn meet_lp<S: Scalar>(l: &PluckerLine<S>, p: &HomogeneousPoint<S>) -> S {
    dot(&covector(&l.0), &p.0)
}

/// Result of numerically evaluating a Cayley expression.
///
/// `Scalar` and `Top` keep zero values; `Zero` is the zero extensor of
/// step 1 or 2.
#[derive(Clone, Debug, PartialEq)]
pub enum NumericValue<S> {
    Scalar(S),
    Point(HomogeneousPoint<S>),
    Line(PluckerLine<S>),
    /// Coefficient of the unit extensor `e0∧e1∧e2`.
    Top(S),
    Zero(Step),
}

impl<S: Scalar> NumericValue<S> {
    pub fn step(&self) -> Step {
        match self {
            NumericValue::Scalar(_) => Step::Scalar,
            NumericValue::Point(_) => Step::Point,
            NumericValue::Line(_) => Step::Line,
            NumericValue::Top(_) => Step::Top,
            NumericValue::Zero(step) => *step,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            NumericValue::Scalar(s) | NumericValue::Top(s) => s.is_zero(),
            NumericValue::Zero(_) => true,
            _ => false,
        }
    }

    pub(crate) fn from_components(step: Step, coords: Components<S>) -> Self {
        match coords {
            Components::Single(s) if step == Step::Scalar => NumericValue::Scalar(s),
            Components::Single(s) => NumericValue::Top(s),
            Components::Triple(v) => match step {
                Step::Point => {
                    HomogeneousPoint::from_coords(v).map_or(NumericValue::Zero(Step::Point), NumericValue::Point)
                }
                _ => PluckerLine::from_coords(v).map_or(NumericValue::Zero(Step::Line), NumericValue::Line),
            },
        }
    }

    fn components(&self) -> Components<S> {
        match self {
            NumericValue::Scalar(s) | NumericValue::Top(s) => Components::Single(s.clone()),
            NumericValue::Point(p) => Components::Triple(p.0.clone()),
            NumericValue::Line(l) => Components::Triple(l.0.clone()),
            NumericValue::Zero(_) => Components::Triple([S::zero(), S::zero(), S::zero()]),
        }
    }

    pub fn neg(&self) -> Self {
        let step = self.step();
        match self.components() {
            Components::Single(s) => Self::from_components(step, Components::Single(-s)),
            Components::Triple(v) => Self::from_components(step, Components::Triple(v.map(|c| -c))),
        }
    }
}

impl<S: Scalar> fmt::Display for NumericValue<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumericValue::Scalar(s) => write!(f, "scalar {s}"),
            NumericValue::Point(p) => write!(f, "point {p}"),
            NumericValue::Line(l) => write!(f, "line {l}"),
            NumericValue::Top(s) => write!(f, "top {s}"),
            NumericValue::Zero(step) => write!(f, "zero ({step})"),
        }
    }
}

pub(crate) enum Components<S> {
    Single(S),
    Triple([S; 3]),
}

/// Join of two numeric values; grades add.
pub fn join_values<S: Scalar>(a: &NumericValue<S>, b: &NumericValue<S>) -> Result<NumericValue<S>, StepError> {
    let step = a.step().join(b.step())?;
    let value = match (a.step(), a.components(), b.step(), b.components()) {
        (Step::Scalar, Components::Single(s), _, Components::Single(t))
        | (_, Components::Single(s), Step::Scalar, Components::Single(t)) => Components::Single(s * t),
        (Step::Scalar, Components::Single(s), _, Components::Triple(v))
        | (_, Components::Triple(v), Step::Scalar, Components::Single(s)) => Components::Triple(scaled(&s, &v)),
        (Step::Point, Components::Triple(p), Step::Point, Components::Triple(q)) => Components::Triple(wedge(&p, &q)),
        (Step::Point, Components::Triple(p), Step::Line, Components::Triple(l))
        | (Step::Line, Components::Triple(l), Step::Point, Components::Triple(p)) => {
            Components::Single(dot(&covector(&l), &p))
        }
        _ => unreachable!("step check admits only the cases above"),
    };
    Ok(NumericValue::from_components(step, value))
}

/// Meet of two numeric values; the result has step `j + k − 3`.
pub fn meet_values<S: Scalar>(a: &NumericValue<S>, b: &NumericValue<S>) -> Result<NumericValue<S>, StepError> {
    let step = a.step().meet(b.step())?;
    let value = match (a.step(), a.components(), b.step(), b.components()) {
        (Step::Top, Components::Single(s), _, Components::Single(t))
        | (_, Components::Single(t), Step::Top, Components::Single(s)) => Components::Single(s * t),
        (Step::Top, Components::Single(s), _, Components::Triple(v))
        | (_, Components::Triple(v), Step::Top, Components::Single(s)) => Components::Triple(scaled(&s, &v)),
        (Step::Line, Components::Triple(l), Step::Line, Components::Triple(m)) => {
            Components::Triple(cross(&covector(&l), &covector(&m)))
        }
        (Step::Line, Components::Triple(l), Step::Point, Components::Triple(p))
        | (Step::Point, Components::Triple(p), Step::Line, Components::Triple(l)) => {
            Components::Single(dot(&covector(&l), &p))
        }
        _ => unreachable!("step check admits only the cases above"),
    };
    Ok(NumericValue::from_components(step, value))
}

/// Source of coordinates for the atoms of an expression.
pub trait PointAssignment<S> {
    fn point(&self, name: &str) -> Option<&HomogeneousPoint<S>>;
}

impl<S> PointAssignment<S> for BTreeMap<String, HomogeneousPoint<S>> {
    fn point(&self, name: &str) -> Option<&HomogeneousPoint<S>> {
        self.get(name)
    }
}

impl<S> PointAssignment<S> for HashMap<String, HomogeneousPoint<S>> {
    fn point(&self, name: &str) -> Option<&HomogeneousPoint<S>> {
        self.get(name)
    }
}

impl<S> PointAssignment<S> for [(&str, HomogeneousPoint<S>)] {
    fn point(&self, name: &str) -> Option<&HomogeneousPoint<S>> {
        self.iter().find(|(n, _)| *n == name).map(|(_, p)| p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error(transparent)]
    Step(#[from] StepError),
    #[error("point `{0}` has no coordinates")]
    UnassignedAtom(String),
}

/// Evaluates `expr` with the step arithmetic of the algebra.
pub fn eval_numeric<S, A>(expr: &CayleyExpr, assignment: &A) -> Result<NumericValue<S>, NumericError>
where
    S: Scalar,
    A: PointAssignment<S> + ?Sized,
{
    match expr {
        CayleyExpr::Atom(name) => assignment
            .point(name)
            .cloned()
            .map(NumericValue::Point)
            .ok_or_else(|| NumericError::UnassignedAtom(name.clone())),
        CayleyExpr::Join(children) => {
            let mut iter = children.iter();
            let first = iter.next().expect("joins have at least two children");
            let mut acc = eval_numeric(first, assignment)?;
            for child in iter {
                acc = join_values(&acc, &eval_numeric(child, assignment)?)?;
            }
            Ok(acc)
        }
        CayleyExpr::Meet(left, right) => {
            let l = eval_numeric(left, assignment)?;
            let r = eval_numeric(right, assignment)?;
            Ok(meet_values(&l, &r)?)
        }
    }
}
