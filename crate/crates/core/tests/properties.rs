use gcalg::bracket_ring::{coordinate_expand, equal_mod_syzygies, PAPPUS_POINTS};
use gcalg::cayley::{cramer_relation, eval_symbolic};
use gcalg::exterior::{bracket, join_pp, meet_ll, meet_lp, HomogeneousPoint};
use gcalg::StepValue;
use gcalg::{parse, print, Bracket, BracketPolynomial, FormalPoint, Point, PointSet, Rational, Sign};
use itertools::Itertools;
use proptest::prelude::*;
use proptest::strategy::ValueTree;

fn pt(i: usize) -> FormalPoint {
    PointSet::pappus().get(PAPPUS_POINTS[i]).unwrap().clone()
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn point_strategy() -> impl Strategy<Value = Point> {
    prop::array::uniform3(-20i64..=20).prop_filter_map("nonzero", |[x, y, z]| HomogeneousPoint::from_ints(x, y, z))
}

fn assignment_strategy() -> impl Strategy<Value = Vec<(&'static str, Point)>> {
    prop::array::uniform6(point_strategy()).prop_map(|pts| PAPPUS_POINTS.iter().copied().zip(pts).collect::<Vec<_>>())
}

/// Sum of up to four terms, each a small integer times up to two brackets.
fn poly_strategy() -> impl Strategy<Value = BracketPolynomial> {
    let bracket = prop::array::uniform3(0usize..6);
    let term = (-5i64..=5, prop::collection::vec(bracket, 0..=2));
    prop::collection::vec(term, 0..=4).prop_map(|terms| {
        let mut f = BracketPolynomial::zero();
        for (c, brackets) in terms {
            let mut t = BracketPolynomial::constant(q(c));
            for [x, y, z] in brackets {
                t = &t * &BracketPolynomial::bracket(&pt(x), &pt(y), &pt(z));
            }
            f = f + t;
        }
        f
    })
}

fn syzygy() -> BracketPolynomial {
    // Cramer's relation on a, b, c, a' joined with b' and c'.
    let syz = cramer_relation::<Rational>(&pt(0), &pt(1), &pt(2), &pt(3))
        .unwrap()
        .join(&StepValue::point(pt(4)))
        .unwrap()
        .join(&StepValue::point(pt(5)))
        .unwrap();
    syz.as_polynomial().unwrap().clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_normalization_sign_matches_determinant(
        idx in prop::sample::subsequence((0usize..6).collect::<Vec<_>>(), 3),
        pts in assignment_strategy(),
    ) {
        let coords = |p: &FormalPoint| pts.iter().find(|(n, _)| *n == p.name()).unwrap().1.clone();
        for perm in idx.iter().permutations(3) {
            let (x, y, z) = (pt(*perm[0]), pt(*perm[1]), pt(*perm[2]));
            let (sign, canonical) = Bracket::normalize(&x, &y, &z).unwrap();
            let [cx, cy, cz] = canonical.points().clone();
            let direct = bracket(&coords(&x), &coords(&y), &coords(&z));
            prop_assert_eq!(direct, sign.apply(bracket(&coords(&cx), &coords(&cy), &coords(&cz))));
        }
    }

    #[test]
    fn repeated_bracket_arguments_annihilate(i in 0usize..6, j in 0usize..6) {
        prop_assert!(Bracket::normalize(&pt(i), &pt(i), &pt(j)).is_none());
        prop_assert!(Bracket::normalize(&pt(j), &pt(i), &pt(i)).is_none());
        prop_assert!(BracketPolynomial::bracket(&pt(i), &pt(j), &pt(i)).is_zero());
    }

    #[test]
    fn bracket_ring_laws(f in poly_strategy(), g in poly_strategy(), h in poly_strategy()) {
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &BracketPolynomial::one(), f.clone());
        prop_assert!((&f * &BracketPolynomial::zero()).is_zero());
    }

    #[test]
    fn coordinate_expansion_is_a_ring_homomorphism(f in poly_strategy(), g in poly_strategy()) {
        prop_assert_eq!(coordinate_expand(&(&f + &g)), &coordinate_expand(&f) + &coordinate_expand(&g));
        prop_assert_eq!(coordinate_expand(&(&f * &g)), &coordinate_expand(&f) * &coordinate_expand(&g));
    }

    #[test]
    fn syzygy_equivalence_laws(f in poly_strategy(), g in poly_strategy(), c in -3i64..=3) {
        prop_assert!(equal_mod_syzygies(&f, &f));
        prop_assert_eq!(equal_mod_syzygies(&f, &g), equal_mod_syzygies(&g, &f));
        let shifted = &f + &(&syzygy() * &BracketPolynomial::constant(q(c)));
        prop_assert!(equal_mod_syzygies(&f, &shifted));
        prop_assert!(equal_mod_syzygies(&(&f * &g), &(&shifted * &g)));
    }

    #[test]
    fn bracket_is_multilinear_and_alternating(
        p in point_strategy(), r in point_strategy(), y in point_strategy(), z in point_strategy(),
        alpha in -9i64..=9, beta in -9i64..=9,
    ) {
        let combo = p.coords().iter().zip(r.coords()).map(|(a, b)| q(alpha) * a + q(beta) * b).collect::<Vec<_>>();
        if let Some(mixed) = HomogeneousPoint::from_coords([combo[0].clone(), combo[1].clone(), combo[2].clone()]) {
            prop_assert_eq!(bracket(&mixed, &y, &z), q(alpha) * bracket(&p, &y, &z) + q(beta) * bracket(&r, &y, &z));
        }
        prop_assert_eq!(bracket(&p, &y, &z), -bracket(&y, &p, &z));
        prop_assert_eq!(bracket(&p, &y, &z), bracket(&y, &z, &p));
    }

    #[test]
    fn meet_of_lines_follows_the_shuffle(x in point_strategy(), y in point_strategy(), u in point_strategy(), v in point_strategy()) {
        let (Some(l), Some(m)) = (join_pp(&x, &y), join_pp(&u, &v)) else { return Ok(()) };
        let xyv = bracket(&x, &y, &v);
        let xyu = bracket(&x, &y, &u);
        let expected: Vec<Rational> = u.coords().iter().zip(v.coords())
            .map(|(uc, vc)| &xyv * uc - &xyu * vc)
            .collect();
        match meet_ll(&l, &m) {
            Some(p) => prop_assert_eq!(p.coords().to_vec(), expected),
            None => prop_assert!(expected.iter().all(|c| *c == q(0))),
        }
    }

    #[test]
    fn meet_lies_on_both_lines(x in point_strategy(), y in point_strategy(), u in point_strategy(), v in point_strategy()) {
        let (Some(l), Some(m)) = (join_pp(&x, &y), join_pp(&u, &v)) else { return Ok(()) };
        if let Some(p) = meet_ll(&l, &m) {
            prop_assert_eq!(meet_lp(&l, &p), q(0));
            prop_assert_eq!(meet_lp(&m, &p), q(0));
            prop_assert!(l.contains(&p) && m.contains(&p));
        }
        prop_assert!(l.contains(&x) && l.contains(&y));
    }

    #[test]
    fn symbolic_join_and_meet_are_antisymmetric(i in 0usize..6, j in 0usize..6, k in 0usize..6, l in 0usize..6) {
        let set = PointSet::pappus();
        let n = |i: usize| PAPPUS_POINTS[i];
        let e = |text: String| eval_symbolic::<Rational>(&parse(&text).unwrap(), &set).unwrap();
        prop_assert_eq!(e(format!("{}{}", n(i), n(j))), e(format!("{}{}", n(j), n(i))).neg());
        let lm = e(format!("{}{} ^ {}{}", n(i), n(j), n(k), n(l)));
        let ml = e(format!("{}{} ^ {}{}", n(k), n(l), n(i), n(j)));
        // The two expansions differ by Cramer's relation, so compare as functions.
        prop_assert!(lm.equivalent(&ml.neg()));
    }

    #[test]
    fn symbolic_expansion_is_multilinear_numerically(
        pts in assignment_strategy(), extra in point_strategy(), alpha in -5i64..=5, beta in -5i64..=5,
    ) {
        // Substituting a = α·a₀ + β·a₁ into the expansion of "(ab' ^ a'b) v b'c" is linear in a.
        let expansion = eval_symbolic::<Rational>(&parse("(ab' ^ a'b) v b'c").unwrap(), &PointSet::pappus()).unwrap();
        let with_a = |a: Point| {
            let mut assignment = pts.clone();
            assignment[0].1 = a;
            expansion.evaluate(assignment.as_slice()).unwrap()
        };
        let scalar = |v: gcalg::NumericValue| match v {
            gcalg::NumericValue::Top(s) => s,
            other => panic!("unexpected {other}"),
        };
        let a0 = pts[0].1.clone();
        let combo: Vec<Rational> = a0.coords().iter().zip(extra.coords()).map(|(x, y)| q(alpha) * x + q(beta) * y).collect();
        if let Some(mixed) = HomogeneousPoint::from_coords([combo[0].clone(), combo[1].clone(), combo[2].clone()]) {
            prop_assert_eq!(
                scalar(with_a(mixed)),
                q(alpha) * scalar(with_a(a0)) + q(beta) * scalar(with_a(extra))
            );
        }
    }

    #[test]
    fn unicode_and_ascii_spellings_agree(seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let expr = gcalg::verify::random::random_untyped_expression(&mut rng, &PAPPUS_POINTS, 4);
        let ascii = print(&expr);
        let unicode = ascii.replace('\'', "′").replace(" v ", " ∨ ").replace('^', "∧");
        prop_assert_eq!(parse(&unicode).unwrap(), parse(&ascii).unwrap());
    }

    #[test]
    fn syntax_errors_point_inside_the_input(input in "[abc'()v^∧∨ x#]{0,12}") {
        if let Err(err) = parse(&input) {
            prop_assert!(err.span.start <= err.span.end);
            prop_assert!(err.span.end <= input.len());
            prop_assert!(input.is_char_boundary(err.span.start) && input.is_char_boundary(err.span.end));
            prop_assert!(!err.expected.is_empty());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// A syzygy-equivalence verdict is never contradicted by evaluation.
    #[test]
    fn syzygy_equivalence_is_sound(f in poly_strategy(), g in poly_strategy(), c in -2i64..=2, pick in any::<bool>()) {
        let g = if pick { &f + &(&syzygy() * &BracketPolynomial::constant(q(c))) } else { g };
        let equal = equal_mod_syzygies(&f, &g);
        let mut runner = proptest::test_runner::TestRunner::deterministic();
        for _ in 0..20 {
            let pts = assignment_strategy().new_tree(&mut runner).unwrap().current();
            let (fv, gv) = (f.evaluate(pts.as_slice()).unwrap(), g.evaluate(pts.as_slice()).unwrap());
            if equal {
                prop_assert_eq!(fv, gv);
            } else if fv != gv {
                prop_assert!(!equal);
            }
        }
    }
}

#[test]
fn signs_compose_like_parities() {
    assert_eq!(Sign::Minus * Sign::Minus, Sign::Plus);
    assert_eq!(-Sign::Plus, Sign::Minus);
}
