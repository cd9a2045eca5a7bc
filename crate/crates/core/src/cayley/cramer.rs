use std::collections::BTreeMap;

use super::{EvalError, StepValue};
use crate::bracket_ring::{BracketPolynomial, FormalPoint};
use crate::Scalar;

/// `[q r s]·p − [p r s]·q + [p q s]·r − [p q r]·s`, a point combination that
/// vanishes identically for any four points of the plane.
///
/// Joining it with further points yields bracket syzygies.
pub fn cramer_relation<S: Scalar>(
    p: &FormalPoint,
    q: &FormalPoint,
    r: &FormalPoint,
    s: &FormalPoint,
) -> Result<StepValue<S>, EvalError> {
    let args = [p, q, r, s];
    for (i, x) in args.iter().enumerate() {
        if args[i + 1..].contains(x) {
            return Err(EvalError::DuplicatePoint(x.name().to_string()));
        }
    }
    let terms = [
        (p, BracketPolynomial::bracket(q, r, s)),
        (q, -BracketPolynomial::bracket(p, r, s)),
        (r, BracketPolynomial::bracket(p, q, s)),
        (s, -BracketPolynomial::bracket(p, q, r)),
    ];
    Ok(StepValue::Point(
        terms
            .into_iter()
            .map(|(point, c)| (point.clone(), c))
            .collect::<BTreeMap<_, _>>(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket_ring::{equal_mod_syzygies, parse_polynomial, PointSet};
    use crate::exterior::{HomogeneousPoint, NumericValue};
    use crate::{Rational, Step};

    fn pt(name: &str) -> FormalPoint {
        PointSet::pappus().get(name).unwrap().clone()
    }

    fn poly(text: &str) -> crate::BracketPolynomial {
        parse_polynomial(text, &PointSet::pappus()).unwrap()
    }

    fn joined(rel: &crate::StepValue, with: [&str; 2]) -> crate::BracketPolynomial {
        let v = rel
            .join(&StepValue::point(pt(with[0])))
            .unwrap()
            .join(&StepValue::point(pt(with[1])))
            .unwrap();
        v.as_polynomial().unwrap().clone()
    }

    #[test]
    fn generates_relation_04() {
        let rel = cramer_relation::<Rational>(&pt("a"), &pt("a'"), &pt("b"), &pt("b'")).unwrap();
        let f = joined(&rel, ["b'", "c'"]);
        let eq04 = poly("[aa'b'][bb'c'] + [a'bb'][ab'c'] + [bab'][a'b'c']");
        assert!(f == eq04 || f == -eq04.clone(), "{f}");
        assert!(equal_mod_syzygies(&f, &crate::BracketPolynomial::zero()));
    }

    #[test]
    fn generates_relation_05() {
        let rel = cramer_relation::<Rational>(&pt("a"), &pt("b"), &pt("c"), &pt("c'")).unwrap();
        let f = joined(&rel, ["a'", "c"]);
        let eq05 = poly("[cac'][bca'] + [cbc'][caa'] + [cc'a'][abc]");
        assert!(f == eq05 || f == -eq05.clone(), "{f}");
        assert!(equal_mod_syzygies(&f, &crate::BracketPolynomial::zero()));
    }

    #[test]
    fn vanishes_numerically() {
        let rel = cramer_relation::<Rational>(&pt("a"), &pt("b"), &pt("c"), &pt("a'")).unwrap();
        let config = [
            ("a", HomogeneousPoint::from_ints(3, -1, 7).unwrap()),
            ("b", HomogeneousPoint::from_ints(2, 5, 1).unwrap()),
            ("c", HomogeneousPoint::from_ints(-4, 0, 9).unwrap()),
            ("a'", HomogeneousPoint::from_ints(1, 1, -6).unwrap()),
        ];
        assert_eq!(rel.evaluate(&config[..]), Ok(NumericValue::Zero(Step::Point)));
        assert!(rel.coordinate_components().iter().all(|c| c.is_zero()));
    }

    #[test]
    fn rejects_repeated_points() {
        let err = cramer_relation::<Rational>(&pt("a"), &pt("b"), &pt("a"), &pt("c")).unwrap_err();
        assert_eq!(err, EvalError::DuplicatePoint("a".into()));
    }
}
