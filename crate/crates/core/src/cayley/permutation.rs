use std::fmt;
use std::sync::Arc;

use itertools::Itertools;

use crate::bracket_ring::Sign;

/// A bijection on a finite ordered set of point names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    domain: Arc<[String]>,
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity<I, N>(domain: I) -> Self
    where
        I: IntoIterator<Item = N>,
        N: Into<String>,
    {
        let domain: Arc<[String]> = domain.into_iter().map(Into::into).collect();
        let images = (0..domain.len()).collect();
        Permutation { domain, images }
    }

    /// `None` if `images` is not a bijection on `0..domain.len()`.
    pub fn from_images(domain: Arc<[String]>, images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; domain.len()];
        if images.len() != domain.len() {
            return None;
        }
        for &i in &images {
            if i >= seen.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Permutation { domain, images })
    }

    /// Swap of two names of the domain.
    pub fn transposition<I, N>(domain: I, x: &str, y: &str) -> Option<Self>
    where
        I: IntoIterator<Item = N>,
        N: Into<String>,
    {
        let mut p = Self::identity(domain);
        let i = p.index_of(x)?;
        let j = p.index_of(y)?;
        p.images.swap(i, j);
        Some(p)
    }

    /// All permutations of `domain` in lexicographic order of their image lists.
    pub fn all<I, N>(domain: I) -> Vec<Self>
    where
        I: IntoIterator<Item = N>,
        N: Into<String>,
    {
        let domain: Arc<[String]> = domain.into_iter().map(Into::into).collect();
        let n = domain.len();
        (0..n)
            .permutations(n)
            .map(|images| Permutation {
                domain: domain.clone(),
                images,
            })
            .collect()
    }

    pub fn domain(&self) -> &[String] {
        &self.domain
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    fn index_of(&self, name: &str) -> Option<usize> {
        self.domain.iter().position(|n| n == name)
    }

    /// Image of `name`; names outside the domain are fixed.
    pub fn apply<'a>(&'a self, name: &'a str) -> &'a str {
        match self.index_of(name) {
            Some(i) => &self.domain[self.images[i]],
            None => name,
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.domain, other.domain, "permutations over different domains");
        Permutation {
            domain: self.domain.clone(),
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation {
            domain: self.domain.clone(),
            images,
        }
    }

    /// Parity sign, from the cycle decomposition.
    pub fn parity(&self) -> Sign {
        let mut seen = vec![false; self.images.len()];
        let mut odd = false;
        for start in 0..self.images.len() {
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            if len > 0 && len % 2 == 0 {
                odd = !odd;
            }
        }
        Sign::of_parity(odd)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Images of the domain in order, e.g. `[c' b' a' c b a]`.
    pub fn one_line(&self) -> String {
        format!("[{}]", self.images.iter().map(|&i| self.domain[i].as_str()).join(" "))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.one_line())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket_ring::PAPPUS_POINTS;

    #[test]
    fn enumerates_symmetric_group() {
        let all = Permutation::all(PAPPUS_POINTS);
        assert_eq!(all.len(), 720);
        assert!(all[0].is_identity());
        let even = all.iter().filter(|p| p.parity() == Sign::Plus).count();
        assert_eq!(even, 360);
    }

    #[test]
    fn composition_and_inverse() {
        let all = Permutation::all(["a", "b", "c", "d"]);
        for s in &all {
            assert!(s.compose(&s.inverse()).is_identity());
            for t in &all {
                assert_eq!(s.compose(t).parity(), s.parity() * t.parity());
            }
        }
        let s = Permutation::transposition(["a", "b", "c"], "a", "b").unwrap();
        let t = Permutation::transposition(["a", "b", "c"], "b", "c").unwrap();
        // apply t first: a -> a -> b
        assert_eq!(s.compose(&t).apply("a"), "b");
        assert_eq!(s.compose(&t).apply("c"), "a");
    }

    #[test]
    fn one_line_notation() {
        let s = Permutation::transposition(PAPPUS_POINTS, "b", "c'").unwrap();
        assert_eq!(s.one_line(), "[a c' c a' b' b]");
        assert_eq!(s.parity(), Sign::Minus);
        assert_eq!(s.apply("z"), "z");
    }

    #[test]
    fn rejects_non_bijections() {
        let d: Arc<[String]> = ["a", "b"].map(String::from).into();
        assert!(Permutation::from_images(d.clone(), vec![0, 0]).is_none());
        assert!(Permutation::from_images(d.clone(), vec![0]).is_none());
        assert!(Permutation::from_images(d, vec![1, 0]).is_some());
    }
}
