//! Random expressions and configurations for property checks.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{Configuration, Provenance};
use crate::cayley::CayleyExpr;
use crate::exterior::HomogeneousPoint;
use crate::{Rational, Step};

/// Smallest tree depth (atoms have depth 1) producing a value of `step`.
pub fn min_depth(step: Step) -> usize {
    match step {
        Step::Point => 1,
        Step::Line | Step::Top => 2,
        Step::Scalar => 3,
    }
}

fn atom<R: Rng + ?Sized>(rng: &mut R, names: &[&str]) -> CayleyExpr {
    CayleyExpr::atom(*names.choose(rng).expect("non-empty name list"))
}

/// Well-stepped expression of the given step with depth at most `depth`.
///
/// # Panics
/// If `depth < min_depth(step)` or `names` is empty.
pub fn random_expression<R: Rng + ?Sized>(rng: &mut R, names: &[&str], step: Step, depth: usize) -> CayleyExpr {
    assert!(depth >= min_depth(step), "depth {depth} too small for {step}");
    let d = depth - 1;
    let fits = |s: Step| d >= min_depth(s);
    let sub = |rng: &mut R, s: Step| random_expression(rng, names, s, d);
    let mut options: Vec<u8> = Vec::new();
    match step {
        Step::Point => {
            options.push(0);
            if fits(Step::Line) {
                options.extend([1, 1, 2]);
            }
            if fits(Step::Scalar) {
                options.push(3);
            }
            match *options.choose(rng).expect("options") {
                0 => atom(rng, names),
                1 => CayleyExpr::meet(sub(rng, Step::Line), sub(rng, Step::Line)),
                2 => CayleyExpr::meet(sub(rng, Step::Top), sub(rng, Step::Point)),
                _ => CayleyExpr::join(vec![sub(rng, Step::Scalar), sub(rng, Step::Point)]),
            }
        }
        Step::Line => {
            options.extend([0, 0]);
            if fits(Step::Line) {
                options.push(1);
            }
            if fits(Step::Scalar) {
                options.push(2);
            }
            match *options.choose(rng).expect("options") {
                0 => CayleyExpr::join(vec![sub(rng, Step::Point), sub(rng, Step::Point)]),
                1 => CayleyExpr::meet(sub(rng, Step::Top), sub(rng, Step::Line)),
                _ => CayleyExpr::join(vec![sub(rng, Step::Line), sub(rng, Step::Scalar)]),
            }
        }
        Step::Top => {
            options.push(0);
            if fits(Step::Line) {
                options.extend([1, 2, 3]);
            }
            match *options.choose(rng).expect("options") {
                0 => CayleyExpr::join(vec![
                    sub(rng, Step::Point),
                    sub(rng, Step::Point),
                    sub(rng, Step::Point),
                ]),
                1 => CayleyExpr::join(vec![sub(rng, Step::Point), sub(rng, Step::Line)]),
                2 => CayleyExpr::join(vec![sub(rng, Step::Line), sub(rng, Step::Point)]),
                _ => CayleyExpr::meet(sub(rng, Step::Top), sub(rng, Step::Top)),
            }
        }
        Step::Scalar => {
            options.extend([0, 1]);
            if fits(Step::Scalar) {
                options.push(2);
            }
            match *options.choose(rng).expect("options") {
                0 => CayleyExpr::meet(sub(rng, Step::Line), sub(rng, Step::Point)),
                1 => CayleyExpr::meet(sub(rng, Step::Point), sub(rng, Step::Line)),
                _ => CayleyExpr::meet(sub(rng, Step::Top), sub(rng, Step::Scalar)),
            }
        }
    }
}

/// Arbitrary tree shape (not necessarily well-stepped), joins of arity 2 to 4.
pub fn random_untyped_expression<R: Rng + ?Sized>(rng: &mut R, names: &[&str], depth: usize) -> CayleyExpr {
    if depth <= 1 || rng.gen_bool(0.3) {
        return atom(rng, names);
    }
    if rng.gen_bool(0.5) {
        let arity = rng.gen_range(2..=4);
        CayleyExpr::join(
            (0..arity)
                .map(|_| random_untyped_expression(rng, names, depth - 1))
                .collect(),
        )
    } else {
        CayleyExpr::meet(
            random_untyped_expression(rng, names, depth - 1),
            random_untyped_expression(rng, names, depth - 1),
        )
    }
}

/// Rational points `(n0/d0, n1/d1, n2/d2)` with `|n| ≤ numerators`, `1 ≤ d ≤ denominators`.
pub fn random_rational_config<R: Rng + ?Sized>(
    rng: &mut R,
    names: &[&str],
    numerators: i64,
    denominators: i64,
) -> Configuration {
    let mut config = Configuration::new(Provenance {
        generator: "random_rational_config".into(),
        ..Provenance::default()
    });
    for name in names {
        let point = loop {
            let coords = [(); 3].map(|_| {
                Rational::new(
                    rng.gen_range(-numerators..=numerators).into(),
                    rng.gen_range(1..=denominators).into(),
                )
            });
            if let Some(p) = HomogeneousPoint::from_coords(coords) {
                break p;
            }
        };
        config.set(name, point);
    }
    config
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket_ring::{PointSet, PAPPUS_POINTS};
    use crate::cayley::eval_symbolic;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn typed_expressions_have_the_requested_step() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let points = PointSet::pappus();
        for step in [Step::Scalar, Step::Point, Step::Line, Step::Top] {
            for _ in 0..30 {
                let e = random_expression(&mut rng, &PAPPUS_POINTS, step, 4);
                assert!(e.depth() <= 4);
                let v: crate::StepValue = eval_symbolic(&e, &points).unwrap();
                assert_eq!(v.step(), step, "{e}");
            }
        }
    }
}
