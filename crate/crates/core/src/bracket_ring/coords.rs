use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{Bracket, BracketPolynomial, FormalPoint};
use crate::Scalar;

/// Indeterminate of a coordinate polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// Coordinate `axis` (0, 1 or 2) of a formal point.
    Coord(FormalPoint, u8),
    /// A free parameter, e.g. the position of a point along a line.
    Param(Arc<str>),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Coord(p, axis) => write!(f, "x[{p},{axis}]"),
            Var::Param(name) => f.write_str(name),
        }
    }
}

/// Power product of variables, sorted by variable with positive exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoordMonomial(Vec<(Var, u32)>);

impl CoordMonomial {
    pub fn powers(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    fn times(&self, other: &Self) -> Self {
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        CoordMonomial(out)
    }
}

/// Fully expanded polynomial in coordinate variables; equality is coefficient-map equality.
#[derive(Clone, Debug, PartialEq)]
pub struct CoordinatePolynomial<S> {
    terms: BTreeMap<CoordMonomial, S>,
}

impl<S: Scalar> CoordinatePolynomial<S> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn constant(c: S) -> Self {
        let mut p = Self::zero();
        p.add_term(CoordMonomial::default(), c);
        p
    }

    pub fn var(v: Var) -> Self {
        let mut p = Self::zero();
        p.add_term(CoordMonomial(vec![(v, 1)]), S::one());
        p
    }

    fn add_term(&mut self, m: CoordMonomial, c: S) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(S::zero);
        *slot = slot.clone() + c;
        // zero sums are pruned by the caller via `prune`
    }

    fn prune(mut self) -> Self {
        self.terms.retain(|_, c| !c.is_zero());
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CoordMonomial, &S)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(CoordMonomial::degree).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &S) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v.clone() * c.clone()))
                .collect(),
        }
        .prune()
    }

    /// Value at a point given by `value_of` for each variable.
    pub fn evaluate<F>(&self, mut value_of: F) -> S
    where
        F: FnMut(&Var) -> S,
    {
        let mut cache: HashMap<Var, S> = HashMap::new();
        let mut total = S::zero();
        for (m, c) in &self.terms {
            let mut product = c.clone();
            for (v, e) in &m.0 {
                let x = cache.entry(v.clone()).or_insert_with(|| value_of(v)).clone();
                for _ in 0..*e {
                    product = product * x.clone();
                }
            }
            total = total + product;
        }
        total
    }
}

impl<S: Scalar> fmt::Display for CoordinatePolynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}", if c.is_negative() { "-" } else { "+" }, c.abs())?;
            for (v, e) in &m.0 {
                write!(f, "*{v}")?;
                if *e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl<S: Scalar> Add for &CoordinatePolynomial<S> {
    type Output = CoordinatePolynomial<S>;
    fn add(self, rhs: Self) -> CoordinatePolynomial<S> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out.prune()
    }
}

impl<S: Scalar> Add for CoordinatePolynomial<S> {
    type Output = CoordinatePolynomial<S>;
    fn add(mut self, rhs: Self) -> CoordinatePolynomial<S> {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self.prune()
    }
}

impl<S: Scalar> Neg for CoordinatePolynomial<S> {
    type Output = CoordinatePolynomial<S>;
    fn neg(self) -> CoordinatePolynomial<S> {
        Self {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<S: Scalar> Sub for &CoordinatePolynomial<S> {
    type Output = CoordinatePolynomial<S>;
    fn sub(self, rhs: Self) -> CoordinatePolynomial<S> {
        self + &(-rhs.clone())
    }
}

impl<S: Scalar> Sub for CoordinatePolynomial<S> {
    type Output = CoordinatePolynomial<S>;
    fn sub(self, rhs: Self) -> CoordinatePolynomial<S> {
        self + (-rhs)
    }
}

impl<S: Scalar> Mul for &CoordinatePolynomial<S> {
    type Output = CoordinatePolynomial<S>;
    fn mul(self, rhs: Self) -> CoordinatePolynomial<S> {
        let mut out = CoordinatePolynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.times(m2), c1.clone() * c2.clone());
            }
        }
        out.prune()
    }
}

impl<S: Scalar> Mul for CoordinatePolynomial<S> {
    type Output = CoordinatePolynomial<S>;
    fn mul(self, rhs: Self) -> CoordinatePolynomial<S> {
        &self * &rhs
    }
}

/// Leibniz expansion of a 3×3 determinant with polynomial entries (rows given).
pub fn determinant<S: Scalar>(rows: [&[CoordinatePolynomial<S>; 3]; 3]) -> CoordinatePolynomial<S> {
    const PERMS: [([usize; 3], bool); 6] = [
        ([0, 1, 2], false),
        ([1, 2, 0], false),
        ([2, 0, 1], false),
        ([0, 2, 1], true),
        ([2, 1, 0], true),
        ([1, 0, 2], true),
    ];
    let mut out = CoordinatePolynomial::zero();
    for (perm, odd) in PERMS {
        let term = &(&rows[0][perm[0]] * &rows[1][perm[1]]) * &rows[2][perm[2]];
        out = if odd { out - term } else { out + term };
    }
    out
}

/// Coordinates `(x[p,0], x[p,1], x[p,2])` of a generic point.
pub fn generic_coords<S: Scalar>(p: &FormalPoint) -> [CoordinatePolynomial<S>; 3] {
    [0, 1, 2].map(|axis| CoordinatePolynomial::var(Var::Coord(p.clone(), axis)))
}

/// Replaces every bracket by the determinant of `coords` of its points, then expands.
pub fn coordinate_expand_with<S, F>(f: &BracketPolynomial<S>, mut coords: F) -> CoordinatePolynomial<S>
where
    S: Scalar,
    F: FnMut(&FormalPoint) -> [CoordinatePolynomial<S>; 3],
{
    let mut point_cache: HashMap<FormalPoint, [CoordinatePolynomial<S>; 3]> = HashMap::new();
    let mut bracket_cache: HashMap<Bracket, CoordinatePolynomial<S>> = HashMap::new();
    let mut out = CoordinatePolynomial::zero();
    for (m, c) in f.terms() {
        let mut product = CoordinatePolynomial::constant(c.clone());
        for b in m.factors() {
            if !bracket_cache.contains_key(b) {
                for p in b.points() {
                    if !point_cache.contains_key(p) {
                        point_cache.insert(p.clone(), coords(p));
                    }
                }
                let [x, y, z] = b.points();
                let det = determinant([&point_cache[x], &point_cache[y], &point_cache[z]]);
                bracket_cache.insert(b.clone(), det);
            }
            product = &product * &bracket_cache[b];
        }
        out = out + product;
    }
    out
}

/// Expansion over generic coordinates `x[p,i]`; a ring homomorphism.
pub fn coordinate_expand<S: Scalar>(f: &BracketPolynomial<S>) -> CoordinatePolynomial<S> {
    coordinate_expand_with(f, generic_coords)
}

/// Whether `f` and `g` agree as functions of generic points.
pub fn equal_mod_syzygies<S: Scalar>(f: &BracketPolynomial<S>, g: &BracketPolynomial<S>) -> bool {
    f == g || coordinate_expand(&(f - g)).is_zero()
}
