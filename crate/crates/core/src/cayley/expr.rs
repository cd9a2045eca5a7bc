use super::Permutation;

/// Join/meet expression tree. Joins are n-ary (at least two children) and
/// evaluate left to right; meets are binary.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CayleyExpr {
    Atom(String),
    Join(Vec<CayleyExpr>),
    Meet(Box<CayleyExpr>, Box<CayleyExpr>),
}

impl CayleyExpr {
    pub fn atom(name: impl Into<String>) -> Self {
        CayleyExpr::Atom(name.into())
    }

    /// # Panics
    /// If fewer than two children are given.
    pub fn join(children: Vec<CayleyExpr>) -> Self {
        assert!(children.len() >= 2, "a join needs at least two children");
        CayleyExpr::Join(children)
    }

    pub fn meet(left: CayleyExpr, right: CayleyExpr) -> Self {
        CayleyExpr::Meet(Box::new(left), Box::new(right))
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, CayleyExpr::Atom(_))
    }

    /// Distinct atom names in order of first appearance.
    pub fn atoms(&self) -> Vec<String> {
        fn walk(e: &CayleyExpr, out: &mut Vec<String>) {
            match e {
                CayleyExpr::Atom(n) => {
                    if !out.contains(n) {
                        out.push(n.clone());
                    }
                }
                CayleyExpr::Join(children) => children.iter().for_each(|c| walk(c, out)),
                CayleyExpr::Meet(l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    pub fn depth(&self) -> usize {
        match self {
            CayleyExpr::Atom(_) => 1,
            CayleyExpr::Join(children) => 1 + children.iter().map(Self::depth).max().unwrap_or(0),
            CayleyExpr::Meet(l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    pub fn map_atoms<F: FnMut(&str) -> String>(&self, f: &mut F) -> Self {
        match self {
            CayleyExpr::Atom(n) => CayleyExpr::Atom(f(n)),
            CayleyExpr::Join(children) => CayleyExpr::Join(children.iter().map(|c| c.map_atoms(f)).collect()),
            CayleyExpr::Meet(l, r) => CayleyExpr::meet(l.map_atoms(f), r.map_atoms(f)),
        }
    }

    /// Relabels atoms by `sigma`; atoms outside its domain are unchanged.
    pub fn apply_permutation(&self, sigma: &Permutation) -> Self {
        self.map_atoms(&mut |n| sigma.apply(n).to_string())
    }
}

impl std::fmt::Display for CayleyExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&crate::dsl::print(self))
    }
}
