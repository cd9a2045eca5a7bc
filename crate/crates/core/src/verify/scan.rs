use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::VerifyError;
use crate::bracket_ring::{PointSet, Sign};
use crate::cayley::{eval_symbolic, CayleyExpr, EvalError};
use crate::{CoordinatePolynomial, Permutation, StepValue};

#[derive(Clone, Debug, PartialEq)]
pub struct ScanRow {
    pub permutation: Permutation,
    /// `ε(σ)` with `σ(P) ≡ ε(σ)·P`; `None` if neither sign matches.
    pub sign: Option<Sign>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PermutationScan {
    /// One row per permutation of the atoms, lexicographic in image lists.
    pub rows: Vec<ScanRow>,
    /// Sampled index pairs `(σ, τ)` used for the multiplicativity check.
    pub pairs: Vec<(usize, usize)>,
    /// Pairs with `ε(στ) ≠ ε(σ)ε(τ)` (or an undefined sign).
    pub non_multiplicative: Vec<(usize, usize)>,
    /// `P` is zero, so every sign matches trivially.
    pub identically_zero: bool,
}

impl PermutationScan {
    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| r.sign.is_none()).count()
    }

    pub fn count(&self, sign: Sign) -> usize {
        self.rows.iter().filter(|r| r.sign == Some(sign)).count()
    }

    pub fn multiplicative(&self) -> bool {
        self.non_multiplicative.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0 && self.multiplicative()
    }

    pub fn sign_of(&self, sigma: &Permutation) -> Option<Sign> {
        self.rows.iter().find(|r| &r.permutation == sigma).and_then(|r| r.sign)
    }
}

fn negated(components: &[CoordinatePolynomial]) -> Vec<CoordinatePolynomial> {
    components.iter().map(|c| -c.clone()).collect()
}

/// For every permutation `σ` of the atoms of `expr`, finds `ε(σ) = ±1`
/// with `σ(P) ≡ ε(σ)·P` modulo syzygies, then checks
/// `ε(στ) = ε(σ)ε(τ)` on `pair_samples` pairs drawn with `seed`.
pub fn permutation_scan(expr: &CayleyExpr, pair_samples: usize, seed: u64) -> Result<PermutationScan, VerifyError> {
    let points = PointSet::pappus().extended_with(expr).map_err(EvalError::from)?;
    let mut domain: Vec<_> = expr
        .atoms()
        .into_iter()
        .map(|n| points.get(&n).expect("declared").clone())
        .collect();
    domain.sort();
    if domain.len() > 8 {
        return Err(VerifyError::InvalidArgument(format!(
            "permutation scan over {} points is too large",
            domain.len()
        )));
    }
    let base: StepValue = eval_symbolic(expr, &points)?;
    let base_components = base.coordinate_components();
    let base_negated = negated(&base_components);
    let identically_zero = base_components.iter().all(CoordinatePolynomial::is_zero);

    let perms = Permutation::all(domain.iter().map(|p| p.name().to_string()));
    let rows: Vec<ScanRow> = perms
        .into_par_iter()
        .map(|sigma| {
            let image: StepValue = eval_symbolic(&expr.apply_permutation(&sigma), &points)?;
            let sign = if image == base {
                Some(Sign::Plus)
            } else if image == base.neg() {
                Some(Sign::Minus)
            } else {
                let components = image.coordinate_components();
                if components == base_components {
                    Some(Sign::Plus)
                } else if components == base_negated {
                    Some(Sign::Minus)
                } else {
                    None
                }
            };
            Ok(ScanRow {
                permutation: sigma,
                sign,
            })
        })
        .collect::<Result<_, VerifyError>>()?;

    let index: HashMap<&[usize], usize> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| (r.permutation.images(), i))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(usize, usize)> = (0..pair_samples)
        .map(|_| (rng.gen_range(0..rows.len()), rng.gen_range(0..rows.len())))
        .collect();
    let non_multiplicative = pairs
        .iter()
        .copied()
        .filter(|&(i, j)| {
            let composed = rows[i].permutation.compose(&rows[j].permutation);
            let k = index[composed.images()];
            match (rows[i].sign, rows[j].sign, rows[k].sign) {
                (Some(s), Some(t), Some(u)) => s * t != u,
                _ => true,
            }
        })
        .collect();

    Ok(PermutationScan {
        rows,
        pairs,
        non_multiplicative,
        identically_zero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse;

    #[test]
    fn bracket_sign_is_the_parity() {
        let scan = permutation_scan(&parse("abc").unwrap(), 50, 1).unwrap();
        assert_eq!(scan.rows.len(), 6);
        assert!(scan.passed());
        for row in &scan.rows {
            assert_eq!(row.sign, Some(row.permutation.parity()));
        }
    }

    #[test]
    fn non_symmetric_expression_fails_rows() {
        // [abc][ab'c'] is not ± itself under a ↔ b'
        let scan = permutation_scan(&parse("(abc) ^ (ab'c')").unwrap(), 10, 1).unwrap();
        assert!(scan.failures() > 0);
        assert!(!scan.passed());
    }

    #[test]
    fn zero_expression_is_flagged() {
        let scan = permutation_scan(&parse("aab").unwrap(), 5, 0).unwrap();
        assert!(scan.identically_zero);
    }
}
