use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{json, Value};

use super::FormalPoint;
use crate::exterior::{self, PointAssignment};
use crate::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn apply<S: Scalar>(self, value: S) -> S {
        match self {
            Sign::Plus => value,
            Sign::Minus => -value,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::of_parity(self != rhs)
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// A bracket `[xyz]` with strictly increasing arguments.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bracket([FormalPoint; 3]);

impl Bracket {
    /// Sorts the arguments, returning the permutation sign, or `None` if a point repeats.
    pub fn normalize(x: &FormalPoint, y: &FormalPoint, z: &FormalPoint) -> Option<(Sign, Bracket)> {
        if x == y || y == z || x == z {
            return None;
        }
        let mut args = [x.clone(), y.clone(), z.clone()];
        let mut odd = false;
        // three-element bubble sort; each swap flips the parity
        for (i, j) in [(0, 1), (1, 2), (0, 1)] {
            if args[i] > args[j] {
                args.swap(i, j);
                odd = !odd;
            }
        }
        Some((Sign::of_parity(odd), Bracket(args)))
    }

    pub fn points(&self) -> &[FormalPoint; 3] {
        &self.0
    }

    pub fn contains(&self, p: &FormalPoint) -> bool {
        self.0.contains(p)
    }
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}{}{}]", self.0[0], self.0[1], self.0[2])
    }
}

/// A product of canonical brackets, factors kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BracketMonomial(Vec<Bracket>);

impl BracketMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_factors<I: IntoIterator<Item = Bracket>>(factors: I) -> Self {
        let mut factors: Vec<_> = factors.into_iter().collect();
        factors.sort();
        BracketMonomial(factors)
    }

    pub fn factors(&self) -> &[Bracket] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn times(&self, other: &Self) -> Self {
        Self::from_factors(self.0.iter().chain(&other.0).cloned())
    }
}

impl fmt::Display for BracketMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        self.0.iter().try_for_each(|b| write!(f, "{b}"))
    }
}

/// Linear combination of bracket monomials; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct BracketPolynomial<S> {
    terms: BTreeMap<BracketMonomial, S>,
}

impl<S: Scalar> Default for BracketPolynomial<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> BracketPolynomial<S> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::term(BracketMonomial::one(), c)
    }

    pub fn term(monomial: BracketMonomial, coefficient: S) -> Self {
        let mut p = Self::zero();
        p.add_term(monomial, coefficient);
        p
    }

    /// `[x y z]` re-signed into canonical order; zero on a repeated point.
    pub fn bracket(x: &FormalPoint, y: &FormalPoint, z: &FormalPoint) -> Self {
        match Bracket::normalize(x, y, z) {
            Some((sign, b)) => Self::term(BracketMonomial(vec![b]), sign.apply(S::one())),
            None => Self::zero(),
        }
    }

    pub fn add_term(&mut self, monomial: BracketMonomial, coefficient: S) {
        if coefficient.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coefficient;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&BracketMonomial, &S)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, monomial: &BracketMonomial) -> Option<&S> {
        self.terms.get(monomial)
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    /// Substitutes points through `f` and re-canonicalizes.
    pub fn map_points<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&FormalPoint) -> FormalPoint,
    {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut product = Self::constant(c.clone());
            for b in m.factors() {
                let [x, y, z] = b.points();
                product = &product * &Self::bracket(&f(x), &f(y), &f(z));
            }
            out = out + product;
        }
        out
    }

    /// Points mentioned anywhere in the polynomial, in canonical order.
    pub fn points(&self) -> Vec<FormalPoint> {
        let mut points: Vec<_> = self
            .terms
            .keys()
            .flat_map(|m| m.factors().iter().flat_map(|b| b.points().iter().cloned()))
            .collect();
        points.sort();
        points.dedup();
        points
    }

    /// Numeric value with each bracket replaced by the determinant of its points.
    pub fn evaluate<A>(&self, assignment: &A) -> Result<S, String>
    where
        A: PointAssignment<S> + ?Sized,
    {
        let mut total = S::zero();
        for (m, c) in &self.terms {
            let mut product = c.clone();
            for b in m.factors() {
                let [x, y, z] = b.points();
                let lookup = |p: &FormalPoint| assignment.point(p.name()).ok_or_else(|| p.name().to_string());
                product = product * exterior::bracket(lookup(x)?, lookup(y)?, lookup(z)?);
            }
            total = total + product;
        }
        Ok(total)
    }

    /// `[{"coefficient": "p/q", "factors": [["a","b","c"], ...]}, ...]` in monomial order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    let factors: Vec<Value> = m
                        .factors()
                        .iter()
                        .map(|b| json!(b.points().iter().map(|p| p.name()).collect::<Vec<_>>()))
                        .collect();
                    json!({ "coefficient": c.to_string(), "factors": factors })
                })
                .collect(),
        )
    }
}

impl<S: Scalar> fmt::Display for BracketPolynomial<S> {
    /// Terms in monomial order, each signed, e.g. `+[abc][aa'b'] -2[abb'][a'b'c']`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(if c.is_negative() { "-" } else { "+" })?;
            let magnitude = c.abs();
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{magnitude}")?;
                }
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

impl<S: Scalar> Add for &BracketPolynomial<S> {
    type Output = BracketPolynomial<S>;
    fn add(self, rhs: Self) -> BracketPolynomial<S> {
        self.clone() + rhs.clone()
    }
}

impl<S: Scalar> Add for BracketPolynomial<S> {
    type Output = BracketPolynomial<S>;
    fn add(mut self, rhs: Self) -> BracketPolynomial<S> {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<S: Scalar> Neg for BracketPolynomial<S> {
    type Output = BracketPolynomial<S>;
    fn neg(self) -> BracketPolynomial<S> {
        Self {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<S: Scalar> Neg for &BracketPolynomial<S> {
    type Output = BracketPolynomial<S>;
    fn neg(self) -> BracketPolynomial<S> {
        -self.clone()
    }
}

impl<S: Scalar> Sub for BracketPolynomial<S> {
    type Output = BracketPolynomial<S>;
    fn sub(self, rhs: Self) -> BracketPolynomial<S> {
        self + (-rhs)
    }
}

impl<S: Scalar> Sub for &BracketPolynomial<S> {
    type Output = BracketPolynomial<S>;
    fn sub(self, rhs: Self) -> BracketPolynomial<S> {
        self.clone() - rhs.clone()
    }
}

impl<S: Scalar> Mul for &BracketPolynomial<S> {
    type Output = BracketPolynomial<S>;
    fn mul(self, rhs: Self) -> BracketPolynomial<S> {
        let mut out = BracketPolynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.times(m2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<S: Scalar> Mul for BracketPolynomial<S> {
    type Output = BracketPolynomial<S>;
    fn mul(self, rhs: Self) -> BracketPolynomial<S> {
        &self * &rhs
    }
}
