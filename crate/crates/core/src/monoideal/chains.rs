use super::{AssReport, VarPrime};

/// The outcome for one embedded associated prime `Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainEntry {
    /// A saturated chain `P_1 ⊂ ... ⊂ P_n = Q` of associated primes with
    /// `P_1` minimal and the dimension dropping by one at every link.
    Saturated { prime: VarPrime, chain: Vec<VarPrime> },
    /// `Q` has an associated prime one dimension up, but no chain from it
    /// reaches a minimal prime (some prime further down is a violation).
    Incomplete { prime: VarPrime, step: VarPrime },
    /// No associated prime `P ⊂ Q` with `dim(R/P) = dim(R/Q) + 1`.
    Violation { prime: VarPrime },
}

impl ChainEntry {
    pub fn prime(&self) -> &VarPrime {
        match self {
            ChainEntry::Saturated { prime, .. }
            | ChainEntry::Incomplete { prime, .. }
            | ChainEntry::Violation { prime } => prime,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub holds: bool,
    /// One entry per non-minimal associated prime, in the order of the
    /// associated-prime report.
    pub entries: Vec<ChainEntry>,
}

impl ChainReport {
    pub fn violations(&self) -> impl Iterator<Item = &VarPrime> {
        self.entries.iter().filter_map(|e| match e {
            ChainEntry::Violation { prime } => Some(prime),
            _ => None,
        })
    }
}

/// Checks the saturated chain property: every non-minimal associated prime
/// `Q` contains an associated prime `P` with `dim(R/P) = dim(R/Q) + 1`.
pub fn saturated_chain_property(ass: &AssReport) -> ChainReport {
    let primes: Vec<&VarPrime> = ass.primes.iter().map(|a| &a.prime).collect();
    let is_minimal = |p: &VarPrime| ass.primes.iter().any(|a| &a.prime == p && a.minimal);
    let steps = |q: &VarPrime| -> Vec<&VarPrime> {
        primes
            .iter()
            .copied()
            .filter(|p| p.codim() + 1 == q.codim() && p.is_subset(q))
            .collect()
    };

    // chain from a minimal prime up to `q`, searched depth-first
    fn descend<'a>(
        q: &'a VarPrime,
        steps: &dyn Fn(&VarPrime) -> Vec<&'a VarPrime>,
        is_minimal: &dyn Fn(&VarPrime) -> bool,
    ) -> Option<Vec<VarPrime>> {
        if is_minimal(q) {
            return Some(vec![q.clone()]);
        }
        for p in steps(q) {
            if let Some(mut chain) = descend(p, steps, is_minimal) {
                chain.push(q.clone());
                return Some(chain);
            }
        }
        None
    }

    let mut entries = Vec::new();
    for a in ass.primes.iter().filter(|a| !a.minimal) {
        let q = &a.prime;
        let below = steps(q);
        let entry = if below.is_empty() {
            ChainEntry::Violation { prime: q.clone() }
        } else {
            match descend(q, &steps, &is_minimal) {
                Some(chain) => ChainEntry::Saturated {
                    prime: q.clone(),
                    chain,
                },
                None => ChainEntry::Incomplete {
                    prime: q.clone(),
                    step: below[0].clone(),
                },
            }
        };
        entries.push(entry);
    }
    ChainReport {
        holds: entries
            .iter()
            .all(|e| matches!(e, ChainEntry::Saturated { .. })),
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> VarPrime {
        VarPrime::new(v.to_vec())
    }

    #[test]
    fn only_minimal_primes() {
        let report = saturated_chain_property(&AssReport::from_primes(2, [p(&[0])]));
        assert!(report.holds);
        assert!(report.entries.is_empty());
    }

    #[test]
    fn one_step_chain() {
        let report = saturated_chain_property(&AssReport::from_primes(2, [p(&[0]), p(&[0, 1])]));
        assert!(report.holds);
        assert_eq!(
            report.entries,
            vec![ChainEntry::Saturated {
                prime: p(&[0, 1]),
                chain: vec![p(&[0]), p(&[0, 1])],
            }]
        );
    }

    #[test]
    fn gap_of_two() {
        let report = saturated_chain_property(&AssReport::from_primes(3, [p(&[0]), p(&[0, 1, 2])]));
        assert!(!report.holds);
        assert_eq!(report.violations().collect::<Vec<_>>(), vec![&p(&[0, 1, 2])]);
    }

    #[test]
    fn incomplete_chain_above_a_violation() {
        // (x1) minimal; (x1,x2,x3) violates; (x1,x2,x3,x4) steps onto it
        let ass = AssReport::from_primes(4, [p(&[0]), p(&[0, 1, 2]), p(&[0, 1, 2, 3])]);
        let report = saturated_chain_property(&ass);
        assert!(!report.holds);
        assert_eq!(
            report.entries[1],
            ChainEntry::Incomplete {
                prime: p(&[0, 1, 2, 3]),
                step: p(&[0, 1, 2]),
            }
        );
    }
}
