use super::{
    associated_primes, is_borel_fixed, saturated_chain_property, AssReport, BorelReport,
    ChainReport, MonomialIdeal, VarPrime,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypotheses {
    /// Borel-fixed under the characteristic-zero elementary-move criterion.
    pub borel: bool,
    pub codim_r_minus_2: bool,
    pub equidimensional: bool,
}

impl Hypotheses {
    pub fn all(&self) -> bool {
        self.borel && self.codim_r_minus_2 && self.equidimensional
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conclusion {
    /// Every associated prime is `(x_1, ..., x_j)` for some `j`.
    pub prefix_primes: bool,
    pub chain: ChainReport,
    /// `(x_1, ..., x_r) ∈ Ass` implies `(x_1, ..., x_{r-1}) ∈ Ass`.
    pub embedded_implies_r_minus_1: bool,
}

impl Conclusion {
    pub fn all(&self) -> bool {
        self.prefix_primes && self.chain.holds && self.embedded_implies_r_minus_1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremStatus {
    /// Hypotheses and conclusion all hold.
    Holds,
    /// A hypothesis fails, so the theorem says nothing about this ideal.
    NotCovered,
    /// Hypotheses hold but a conclusion fails.
    Violated,
}

impl TheoremStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremStatus::Holds => "holds",
            TheoremStatus::NotCovered => "not covered",
            TheoremStatus::Violated => "violated",
        }
    }
}

/// Every clause of the dimension-two theorem for Borel-fixed initial ideals,
/// evaluated independently on a monomial ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub hypotheses: Hypotheses,
    pub conclusion: Conclusion,
    pub status: TheoremStatus,
    pub borel: BorelReport,
    pub ass: AssReport,
}

pub fn check_theorem(ideal: &MonomialIdeal) -> Result<TheoremReport> {
    ideal.require_proper()?;
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let r = ideal.num_vars();
    let borel = is_borel_fixed(ideal);
    let ass = associated_primes(ideal)?;
    let minimal_codims: Vec<usize> = ass.minimal_primes().map(VarPrime::codim).collect();
    let equidimensional = minimal_codims.windows(2).all(|w| w[0] == w[1]);
    let hypotheses = Hypotheses {
        borel: borel.fixed,
        codim_r_minus_2: r >= 2 && ass.codim == r - 2,
        equidimensional,
    };
    let maximal = VarPrime::prefix(r);
    let embedded_implies_r_minus_1 =
        !ass.contains(&maximal) || (r >= 2 && ass.contains(&VarPrime::prefix(r - 1)));
    let conclusion = Conclusion {
        prefix_primes: ass.primes.iter().all(|a| a.prime.is_prefix()),
        chain: saturated_chain_property(&ass),
        embedded_implies_r_minus_1,
    };
    let status = if !hypotheses.all() {
        TheoremStatus::NotCovered
    } else if conclusion.all() {
        TheoremStatus::Holds
    } else {
        TheoremStatus::Violated
    };
    Ok(TheoremReport {
        hypotheses,
        conclusion,
        status,
        borel,
        ass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{ExponentVector, VarContext};

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    #[test]
    fn square_of_first_two_variables_in_four() {
        let ctx = VarContext::indexed("x", 4).unwrap();
        let i = MonomialIdeal::new(&ctx, vec![ev(&[2, 0, 0, 0]), ev(&[1, 1, 0, 0]), ev(&[0, 2, 0, 0])])
            .unwrap();
        let report = check_theorem(&i).unwrap();
        assert!(report.hypotheses.all());
        assert!(report.conclusion.all());
        assert_eq!(report.status, TheoremStatus::Holds);
        assert_eq!(report.ass.primes.len(), 1);
        assert_eq!(report.ass.primes[0].prime, VarPrime::prefix(2));
    }

    #[test]
    fn embedded_maximal_ideal_with_r_minus_1() {
        // (x1^2, x1 x2^2, x1 x2 x3) in 3 vars: Ass = {(x1), (x1,x2), (x1,x2,x3)}
        let ctx = VarContext::indexed("x", 3).unwrap();
        let i = MonomialIdeal::new(&ctx, vec![ev(&[2, 0, 0]), ev(&[1, 2, 0]), ev(&[1, 1, 1])]).unwrap();
        let report = check_theorem(&i).unwrap();
        assert!(report.hypotheses.borel);
        assert!(report.hypotheses.codim_r_minus_2);
        assert_eq!(report.ass.primes.len(), 3);
        assert!(report.conclusion.embedded_implies_r_minus_1);
        assert!(report.conclusion.chain.holds);
        assert_eq!(report.status, TheoremStatus::Holds);
    }

    #[test]
    fn non_borel_is_not_covered() {
        let ctx = VarContext::indexed("x", 3).unwrap();
        let i = MonomialIdeal::from_vars(&ctx, &[2]);
        let report = check_theorem(&i).unwrap();
        assert!(!report.hypotheses.borel);
        assert_eq!(report.status, TheoremStatus::NotCovered);
        assert!(!report.conclusion.prefix_primes);
    }

    #[test]
    fn violation_when_hypotheses_hold() {
        // (x1^2, x1 x2, x1 x3) in 3 vars: Borel, Ass = {(x1), (x1,x2,x3)},
        // codim 1 = r - 2, chain gap of two
        let ctx = VarContext::indexed("x", 3).unwrap();
        let i = MonomialIdeal::new(&ctx, vec![ev(&[2, 0, 0]), ev(&[1, 1, 0]), ev(&[1, 0, 1])]).unwrap();
        let report = check_theorem(&i).unwrap();
        assert!(report.hypotheses.all());
        assert!(!report.conclusion.chain.holds);
        assert!(!report.conclusion.embedded_implies_r_minus_1);
        assert_eq!(report.status, TheoremStatus::Violated);
    }
}
