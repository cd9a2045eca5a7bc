use std::collections::BTreeMap;

use super::{eval_symbolic, EvalError, StepValue};
use crate::bracket_ring::{Bracket, BracketMonomial, BracketPolynomial, PointSet, Sign};
use crate::{parse, Scalar};

/// Outcome of reducing the right-hand side of the Pappus identity under the
/// collinearity hypotheses.
#[derive(Clone, Debug)]
pub struct CollinearityReduction<S> {
    /// `(c'b ^ b'c) v c v b'`; zero identically.
    pub reduced: StepValue<S>,
    /// `ca' ^ ab` as evaluated.
    pub ca_ab: StepValue<S>,
    /// `ab' ^ a'c'` as evaluated.
    pub ab_ac: StepValue<S>,
    /// `ca' ^ ab` is equivalent to `sign·[aba']·c + [abc]·a'`.
    pub ca_ab_sign: Option<Sign>,
    /// `ab' ^ a'c'` is equivalent to `sign·[aa'c']·b' + (·)·a`.
    pub ab_ac_sign: Option<Sign>,
}

impl<S> CollinearityReduction<S> {
    pub fn holds(&self) -> bool
    where
        S: Scalar,
    {
        self.reduced.is_zero() && self.ca_ab_sign.is_some() && self.ab_ac_sign.is_some()
    }
}

/// Checks the reduction of the right-hand side used in the proof of
/// Pappus' theorem.
///
/// The adopted meet convention expands `ca' ^ ab` over `a` and `b`; it is
/// compared, modulo syzygies, with the split over `c` and `a'`
/// (`[x u v]·y − [y u v]·x`), whose `a'` coefficient `[cab]` dies when `a, b, c`
/// are collinear. The recorded sign is that of the `c` coefficient against
/// the canonical bracket on `{a, a', b}`; likewise for `ab' ^ a'c'`.
pub fn collinearity_reduce_demo<S: Scalar>() -> Result<CollinearityReduction<S>, EvalError> {
    let points = PointSet::pappus();
    let eval = |text: &str| eval_symbolic::<S>(&parse(text).expect("fixed expressions parse"), &points);
    let p = |n: &str| points.get(n).expect("pappus point").clone();

    let reduced = eval("(c'b ^ b'c) v c v b'")?;
    let ca_ab = eval("ca' ^ ab")?;
    let ab_ac = eval("ab' ^ a'c'")?;

    let split = |x: &str, y: &str, u: &str, v: &str| -> StepValue<S> {
        StepValue::Point(BTreeMap::from([
            (p(y), BracketPolynomial::bracket(&p(x), &p(u), &p(v))),
            (p(x), -BracketPolynomial::bracket(&p(y), &p(u), &p(v))),
        ]))
    };

    let sign_of = |value: &StepValue<S>, split: &StepValue<S>, key: &str, bracket: [&str; 3]| -> Option<Sign> {
        if !value.equivalent(split) {
            return None;
        }
        let StepValue::Point(m) = split else { return None };
        let (sign, b) = Bracket::normalize(&p(bracket[0]), &p(bracket[1]), &p(bracket[2]))?;
        let coefficient = m.get(&p(key))?;
        let unit = BracketPolynomial::term(BracketMonomial::from_factors([b]), S::one());
        if *coefficient == unit {
            Some(sign)
        } else if *coefficient == -unit {
            Some(-sign)
        } else {
            None
        }
    };

    let ca_split = split("c", "a'", "a", "b");
    let ab_split = split("a", "b'", "a'", "c'");
    Ok(CollinearityReduction {
        ca_ab_sign: sign_of(&ca_ab, &ca_split, "c", ["a", "b", "a'"]),
        ab_ac_sign: sign_of(&ab_ac, &ab_split, "b'", ["a", "a'", "c'"]),
        reduced,
        ca_ab,
        ab_ac,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Rational, Step};

    #[test]
    fn right_hand_side_reduces_to_zero() {
        let demo = collinearity_reduce_demo::<Rational>().unwrap();
        assert_eq!(demo.reduced.step(), Step::Top);
        assert!(demo.reduced.is_zero());
        assert!(demo.holds());
    }

    #[test]
    fn recorded_signs() {
        let demo = collinearity_reduce_demo::<Rational>().unwrap();
        // c-coefficient is −[a'ab] = −[aba'], opposite to the c[a'ab] reading
        assert_eq!(demo.ca_ab_sign, Some(Sign::Minus));
        // b'-coefficient is +[aa'c'], opposite to −b'[aa'c']
        assert_eq!(demo.ab_ac_sign, Some(Sign::Plus));
    }

    #[test]
    fn meets_have_two_terms() {
        let demo = collinearity_reduce_demo::<Rational>().unwrap();
        assert_eq!(demo.ca_ab.term_count(), 2);
        assert_eq!(demo.ab_ac.term_count(), 2);
        assert_eq!(demo.ca_ab.to_string(), "(+[bca'])a + (-[aca'])b");
    }
}
