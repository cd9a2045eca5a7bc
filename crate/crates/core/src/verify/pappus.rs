use std::sync::Arc;

use super::{CheckReport, Configuration, Details, Mode, Verdict, VerifyError};
use crate::bracket_ring::{coordinate_expand, coordinate_expand_with, generic_coords, FormalPoint, PointSet, Var};
use crate::cayley::{eval_symbolic, CayleyExpr, PAPPUS_LHS, PAPPUS_RHS};
use crate::exterior::{bracket, join_pp, meet_ll};
use crate::{parse, CoordinatePolynomial, Point, Rational, StepValue};

fn lookup<'a>(config: &'a Configuration, name: &str) -> Result<&'a Point, VerifyError> {
    config
        .get(name)
        .ok_or_else(|| VerifyError::InvalidConfig(format!("point `{name}` is missing")))
}

/// `ab'∩a'b`, `bc'∩b'c`, `ca'∩c'a`, in that order.
pub fn pappus_intersections(config: &Configuration) -> Result<[Point; 3], VerifyError> {
    let line = |x: &str, y: &str| {
        join_pp(lookup(config, x)?, lookup(config, y)?)
            .ok_or_else(|| VerifyError::DegenerateMeet(format!("{x} and {y} coincide, so {x}{y} is not a line")))
    };
    let meet = |(x, y): (&str, &str), (u, v): (&str, &str)| {
        meet_ll(&line(x, y)?, &line(u, v)?)
            .ok_or_else(|| VerifyError::DegenerateMeet(format!("lines {x}{y} and {u}{v} coincide")))
    };
    Ok([
        meet(("a", "b'"), ("a'", "b"))?,
        meet(("b", "c'"), ("b'", "c"))?,
        meet(("c", "a'"), ("c'", "a"))?,
    ])
}

/// PASS iff the three cross-joint intersections have bracket exactly zero.
/// Does not check the hypotheses; see [`super::validate_pappus_hypotheses`].
pub fn pappus_check(config: &Configuration) -> Result<CheckReport, VerifyError> {
    let [x, y, z] = pappus_intersections(config)?;
    let value = bracket(&x, &y, &z);
    Ok(CheckReport {
        verdict: Verdict::from_bool(num_traits::Zero::is_zero(&value)),
        mode: Mode::Numeric,
        seed: config.provenance.seed,
        details: Details::Pappus {
            configuration: config.clone(),
            intersections: [x.normalized(), y.normalized(), z.normalized()],
            bracket: value,
        },
    })
}

/// Per-expression outcome of the parametrized check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParametrizedSide {
    pub expression: String,
    /// Monomials of the canonical bracket expansion.
    pub bracket_terms: usize,
    /// Terms over fully generic coordinates (no collinearity imposed).
    pub generic_terms: usize,
    /// Terms after substituting `c = a + t·b`, `c' = a' + t'·b'`; zero means PASS.
    pub substituted_terms: usize,
}

/// Coordinates of the parametrized family: `a, b, a', b'` generic,
/// `c = a + t·b` and `c' = a' + t'·b'` with parameters `t`, `t'`.
pub fn parametrized_substitution(p: &FormalPoint, points: &PointSet) -> [CoordinatePolynomial; 3] {
    let on_line = |base: &str, dir: &str, param: &str| {
        let base = generic_coords::<Rational>(points.get(base).expect("pappus point"));
        let dir = generic_coords::<Rational>(points.get(dir).expect("pappus point"));
        let t = CoordinatePolynomial::var(Var::Param(Arc::from(param)));
        [0, 1, 2].map(|i| &base[i] + &(&t * &dir[i]))
    };
    match p.name() {
        "c" => on_line("a", "b", "t"),
        "c'" => on_line("a'", "b'", "t'"),
        _ => generic_coords(p),
    }
}

fn parametrized_side(expr: &CayleyExpr, points: &PointSet) -> Result<ParametrizedSide, VerifyError> {
    let value: StepValue = eval_symbolic(expr, points)?;
    let poly = value.as_polynomial().ok_or(VerifyError::StepMismatch {
        lhs: value.step(),
        rhs: crate::Step::Top,
    })?;
    let substituted = coordinate_expand_with(poly, |p| parametrized_substitution(p, points));
    Ok(ParametrizedSide {
        expression: crate::dsl::print(expr),
        bracket_terms: poly.len(),
        generic_terms: coordinate_expand(poly).len(),
        substituted_terms: substituted.len(),
    })
}

/// Deterministic proof of Pappus for the generic parametrized family: both
/// sides of the join/meet identity expand to the zero polynomial in the
/// 12 base coordinates and the parameters `t`, `t'`.
pub fn parametrized_pappus_check() -> Result<CheckReport, VerifyError> {
    let points = PointSet::pappus();
    let sides = [PAPPUS_LHS, PAPPUS_RHS]
        .iter()
        .map(|text| parametrized_side(&parse(text).expect("fixed expression"), &points))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CheckReport {
        verdict: Verdict::from_bool(sides.iter().all(|s| s.substituted_terms == 0)),
        mode: Mode::Parametrized,
        seed: None,
        details: Details::Parametrized { sides, variables: 14 },
    })
}
