use std::fmt;

use crate::poly::VarContext;

/// A prime generated by a nonempty set of variables (0-based positions,
/// kept sorted).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarPrime {
    vars: Vec<usize>,
}

impl VarPrime {
    pub fn new(mut vars: Vec<usize>) -> Self {
        vars.sort_unstable();
        vars.dedup();
        assert!(!vars.is_empty(), "a variable prime needs at least one variable");
        VarPrime { vars }
    }

    /// `(x_1, ..., x_j)`.
    pub fn prefix(j: usize) -> Self {
        VarPrime::new((0..j).collect())
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn codim(&self) -> usize {
        self.vars.len()
    }

    /// `dim(R/P)` in a ring with `r` variables.
    pub fn dim(&self, r: usize) -> usize {
        r - self.codim()
    }

    /// True iff this is `(x_1, ..., x_j)` for some `j`.
    pub fn is_prefix(&self) -> bool {
        self.vars.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &VarPrime) -> bool {
        self.vars.iter().all(|v| other.vars.binary_search(v).is_ok())
    }

    pub fn contains_var(&self, v: usize) -> bool {
        self.vars.binary_search(&v).is_ok()
    }

    /// Renders as `(x, y, z)`.
    pub fn display<'a>(&'a self, ctx: &'a VarContext) -> impl fmt::Display + 'a {
        PrimeDisplay { prime: self, ctx }
    }
}

impl PartialOrd for VarPrime {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VarPrime {
    /// By codimension, then by variable positions.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.codim()
            .cmp(&other.codim())
            .then_with(|| self.vars.cmp(&other.vars))
    }
}

struct PrimeDisplay<'a> {
    prime: &'a VarPrime,
    ctx: &'a VarContext,
}

impl fmt::Display for PrimeDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, &v) in self.prime.vars.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.ctx.name(v))?;
        }
        write!(f, ")")
    }
}
