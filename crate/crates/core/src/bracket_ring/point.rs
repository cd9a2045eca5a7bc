use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use thiserror::Error;

use crate::cayley::CayleyExpr;

/// The six points of the Pappus configuration in their default order.
pub const PAPPUS_POINTS: [&str; 6] = ["a", "b", "c", "a'", "b'", "c'"];

/// A named symbol with its rank in the declared total order.
///
/// Equality and ordering go by rank first; two points from the same
/// [`PointSet`] never share a rank.
#[derive(Clone, Debug)]
pub struct FormalPoint {
    rank: u32,
    name: Arc<str>,
}

impl FormalPoint {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }
}

impl PartialEq for FormalPoint {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.name == other.name
    }
}

impl Eq for FormalPoint {}

impl Hash for FormalPoint {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rank.hash(state);
        self.name.hash(state);
    }
}

impl PartialOrd for FormalPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FormalPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank.cmp(&other.rank).then_with(|| self.name.cmp(&other.name))
    }
}

impl fmt::Display for FormalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PointSetError {
    #[error("point `{0}` declared twice")]
    Duplicate(String),
    #[error("`{0}` is not a valid point name")]
    InvalidName(String),
}

/// Declared formal points; declaration order is the canonical bracket order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<FormalPoint>,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && !name
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '[' | ']' | '(' | ')' | ',' | '"'))
}

impl PointSet {
    pub fn new<I, N>(names: I) -> Result<Self, PointSetError>
    where
        I: IntoIterator<Item = N>,
        N: AsRef<str>,
    {
        let mut set = PointSet { points: Vec::new() };
        for name in names {
            let name = name.as_ref();
            if set.get(name).is_some() {
                return Err(PointSetError::Duplicate(name.to_string()));
            }
            set.declare(name)?;
        }
        Ok(set)
    }

    /// `a < b < c < a' < b' < c'`.
    pub fn pappus() -> Self {
        Self::new(PAPPUS_POINTS).expect("fixed names are valid")
    }

    pub fn get(&self, name: &str) -> Option<&FormalPoint> {
        self.points.iter().find(|p| &*p.name == name)
    }

    /// Returns the declared point, declaring it at the end of the order if new.
    pub fn declare(&mut self, name: &str) -> Result<FormalPoint, PointSetError> {
        if let Some(p) = self.get(name) {
            return Ok(p.clone());
        }
        if !valid_name(name) {
            return Err(PointSetError::InvalidName(name.to_string()));
        }
        let point = FormalPoint {
            rank: self.points.len() as u32,
            name: name.into(),
        };
        self.points.push(point.clone());
        Ok(point)
    }

    /// This set extended by the atoms of `expr`, new names in order of first appearance.
    pub fn extended_with(&self, expr: &CayleyExpr) -> Result<Self, PointSetError> {
        let mut set = self.clone();
        for name in expr.atoms() {
            set.declare(&name)?;
        }
        Ok(set)
    }

    pub fn iter(&self) -> impl Iterator<Item = &FormalPoint> {
        self.points.iter()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_order() {
        let set = PointSet::pappus();
        let ranks: Vec<_> = PAPPUS_POINTS.iter().map(|n| set.get(n).unwrap().rank()).collect();
        assert_eq!(ranks, vec![0, 1, 2, 3, 4, 5]);
        assert!(set.get("a").unwrap() < set.get("a'").unwrap());
        assert!(set.get("c").unwrap() < set.get("a'").unwrap());
    }

    #[test]
    fn rejects_duplicates_and_bad_names() {
        assert_eq!(PointSet::new(["a", "a"]), Err(PointSetError::Duplicate("a".into())));
        assert!(matches!(PointSet::new(["a b"]), Err(PointSetError::InvalidName(_))));
        assert!(matches!(PointSet::new([""]), Err(PointSetError::InvalidName(_))));
    }

    #[test]
    fn primes_are_part_of_the_name() {
        let set = PointSet::new(["b", "b'", "b''"]).unwrap();
        assert_eq!(set.len(), 3);
        assert_ne!(set.get("b"), set.get("b'"));
    }

    #[test]
    fn extension_keeps_existing_ranks() {
        let expr = crate::parse("d a e d").unwrap();
        let set = PointSet::pappus().extended_with(&expr).unwrap();
        assert_eq!(set.get("d").unwrap().rank(), 6);
        assert_eq!(set.get("e").unwrap().rank(), 7);
        assert_eq!(set.get("a").unwrap().rank(), 0);
    }
}
