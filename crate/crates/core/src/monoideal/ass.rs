use super::{irreducible_decomposition, MonomialIdeal, VarPrime};
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssPrime {
    pub prime: VarPrime,
    pub minimal: bool,
}

/// Associated primes of `R/I` with minimality flags and the dimension data
/// of `I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssReport {
    /// Number of variables `r`.
    pub num_vars: usize,
    /// Sorted by codimension, then by variables.
    pub primes: Vec<AssPrime>,
    pub codim: usize,
    pub dim: usize,
}

impl AssReport {
    pub fn contains(&self, p: &VarPrime) -> bool {
        self.primes.iter().any(|a| &a.prime == p)
    }

    pub fn minimal_primes(&self) -> impl Iterator<Item = &VarPrime> {
        self.primes.iter().filter(|a| a.minimal).map(|a| &a.prime)
    }

    pub fn embedded_primes(&self) -> impl Iterator<Item = &VarPrime> {
        self.primes.iter().filter(|a| !a.minimal).map(|a| &a.prime)
    }

    /// Builds a report from an arbitrary set of variable primes.
    pub fn from_primes(num_vars: usize, primes: impl IntoIterator<Item = VarPrime>) -> Self {
        let mut primes: Vec<VarPrime> = primes.into_iter().collect();
        primes.sort();
        primes.dedup();
        let flagged: Vec<AssPrime> = primes
            .iter()
            .map(|p| AssPrime {
                prime: p.clone(),
                minimal: !primes.iter().any(|q| q != p && q.is_subset(p)),
            })
            .collect();
        let codim = flagged
            .iter()
            .filter(|a| a.minimal)
            .map(|a| a.prime.codim())
            .min()
            .unwrap_or(0);
        AssReport {
            num_vars,
            primes: flagged,
            codim,
            dim: num_vars - codim,
        }
    }
}

/// `Ass(R/I)`: the radicals of the irredundant irreducible components. The
/// zero ideal yields no variable primes, codimension 0 and dimension `r`.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<AssReport> {
    ideal.require_proper()?;
    let r = ideal.num_vars();
    if ideal.is_zero() {
        return Ok(AssReport::from_primes(r, []));
    }
    let comps = irreducible_decomposition(ideal)?;
    Ok(AssReport::from_primes(r, comps.iter().map(|c| c.radical())))
}

/// True iff all minimal primes share one codimension.
pub fn is_equidimensional(ideal: &MonomialIdeal) -> Result<bool> {
    let ass = associated_primes(ideal)?;
    let mut codims = ass.minimal_primes().map(VarPrime::codim);
    Ok(match codims.next() {
        None => true,
        Some(c) => codims.all(|d| d == c),
    })
}
