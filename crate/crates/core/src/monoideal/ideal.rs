use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{ExponentVector, MonomialOrder, VarContext};

/// A monomial ideal stored by its minimal generators, sorted increasingly
/// under grevlex. The zero ideal has no generators; the unit ideal is `(1)`.
#[derive(Debug, Clone)]
pub struct MonomialIdeal {
    ctx: Arc<VarContext>,
    gens: Vec<ExponentVector>,
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens && self.ctx.as_ref() == other.ctx.as_ref()
    }
}

impl Eq for MonomialIdeal {}

/// Divisibility-minimal, deduplicated, canonically sorted generators.
pub fn minimal_generators(mut monomials: Vec<ExponentVector>) -> Vec<ExponentVector> {
    monomials.sort_by(|a, b| MonomialOrder::GrevLex.cmp(a, b));
    monomials.dedup();
    let mut out: Vec<ExponentVector> = Vec::with_capacity(monomials.len());
    // a divisor has degree <= its multiple, so it is seen first in a graded order
    for m in monomials {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

impl MonomialIdeal {
    pub fn new(ctx: &Arc<VarContext>, monomials: Vec<ExponentVector>) -> Result<Self> {
        if let Some(m) = monomials.iter().find(|m| m.len() != ctx.len()) {
            return Err(Error::LengthMismatch {
                expected: ctx.len(),
                got: m.len(),
            });
        }
        Ok(MonomialIdeal {
            ctx: ctx.clone(),
            gens: minimal_generators(monomials),
        })
    }

    pub fn zero(ctx: &Arc<VarContext>) -> Self {
        MonomialIdeal {
            ctx: ctx.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ctx: &Arc<VarContext>) -> Self {
        MonomialIdeal {
            ctx: ctx.clone(),
            gens: vec![ExponentVector::one(ctx.len())],
        }
    }

    /// The ideal generated by the variables at the given positions.
    pub fn from_vars(ctx: &Arc<VarContext>, vars: &[usize]) -> Self {
        let gens = vars.iter().map(|&i| ExponentVector::var(ctx.len(), i)).collect();
        MonomialIdeal::new(ctx, gens).expect("variables fit the context")
    }

    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    pub fn num_vars(&self) -> usize {
        self.ctx.len()
    }

    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub(crate) fn require_proper(&self) -> Result<()> {
        if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    fn check(&self, m: &ExponentVector) {
        assert_eq!(m.len(), self.ctx.len(), "monomial length");
    }

    fn check_ideal(&self, other: &MonomialIdeal) -> Result<()> {
        if self.ctx.as_ref() != other.ctx.as_ref() {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    /// True iff some generator divides `m`.
    pub fn contains(&self, m: &ExponentVector) -> bool {
        self.check(m);
        self.gens.iter().any(|g| g.divides(m))
    }

    /// True iff every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// `I + (monomials)`.
    pub fn add_monomials(&self, extra: impl IntoIterator<Item = ExponentVector>) -> MonomialIdeal {
        let mut all = self.gens.clone();
        all.extend(extra);
        MonomialIdeal {
            ctx: self.ctx.clone(),
            gens: minimal_generators(all),
        }
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ideal(other)?;
        Ok(self.add_monomials(other.gens.iter().cloned()))
    }

    /// `I ∩ K`, generated by pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ideal(other)?;
        let lcms = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)))
            .collect();
        Ok(MonomialIdeal {
            ctx: self.ctx.clone(),
            gens: minimal_generators(lcms),
        })
    }

    /// `(I : m)`, generated by `g / gcd(g, m)`. This is the annihilator of
    /// the class of `m` in `R/I`.
    pub fn colon(&self, m: &ExponentVector) -> MonomialIdeal {
        self.check(m);
        let quotients = self
            .gens
            .iter()
            .map(|g| g.checked_div(&g.gcd(m)).expect("gcd divides"))
            .collect();
        MonomialIdeal {
            ctx: self.ctx.clone(),
            gens: minimal_generators(quotients),
        }
    }

    /// `m` is a nonzero socle element of `R/I`: `m ∉ I` and `x_i m ∈ I` for
    /// every variable.
    pub fn is_socle(&self, m: &ExponentVector) -> bool {
        !self.contains(m)
            && (0..self.ctx.len()).all(|i| self.contains(&m.mul(&ExponentVector::var(m.len(), i))))
    }

    /// The variable at position `v` is a non-zero divisor on `R/I`, i.e. it
    /// divides no minimal generator.
    pub fn is_nzd(&self, v: usize) -> bool {
        assert!(v < self.ctx.len(), "variable position out of range");
        self.gens.iter().all(|g| g.get(v) == 0)
    }

    /// Least common multiple of all generators (`1` for the zero ideal).
    pub fn lcm_of_gens(&self) -> ExponentVector {
        self.gens
            .iter()
            .fold(ExponentVector::one(self.ctx.len()), |acc, g| acc.lcm(g))
    }

    /// True iff the ideal is generated by variables (a monomial prime).
    pub fn is_var_prime(&self) -> bool {
        !self.gens.is_empty() && self.gens.iter().all(|g| g.degree() == 1)
    }
}

impl fmt::Display for MonomialIdeal {
    /// Comma-separated minimal generators; `0` for the zero ideal.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "0");
        }
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.display(&self.ctx))?;
        }
        Ok(())
    }
}
