use std::fmt;

use super::MonomialIdeal;
use crate::error::{Error, Result};
use crate::poly::{ExponentVector, VarContext};

/// The elementary move `e_k`: shifts one unit of exponent from variable
/// `k + 1` to variable `k` (1-based, `1 <= k <= r - 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ElementaryMove {
    k: usize,
}

impl ElementaryMove {
    pub fn new(k: usize, r: usize) -> Result<Self> {
        if k == 0 || k >= r {
            return Err(Error::InvalidInput(format!(
                "elementary move e_{k} needs 1 <= k <= {}",
                r.saturating_sub(1)
            )));
        }
        Ok(ElementaryMove { k })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The image of `m`, or `None` (the zero monomial) when `x_{k+1}` does
    /// not divide `m`.
    pub fn apply(&self, m: &ExponentVector) -> Option<ExponentVector> {
        let (to, from) = (self.k - 1, self.k);
        if m.get(from) == 0 {
            return None;
        }
        let mut e = m.exps().to_vec();
        e[from] -= 1;
        e[to] += 1;
        Some(ExponentVector::new(e))
    }
}

impl fmt::Display for ElementaryMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e_{}", self.k)
    }
}

/// A minimal generator whose image under an elementary move leaves the
/// ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorelWitness {
    pub generator: ExponentVector,
    pub mv: ElementaryMove,
    pub image: ExponentVector,
}

impl BorelWitness {
    pub fn describe(&self, ctx: &VarContext) -> String {
        format!(
            "{}({}) = {} is not in the ideal",
            self.mv,
            self.generator.display(ctx),
            self.image.display(ctx)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorelReport {
    pub fixed: bool,
    pub witness: Option<BorelWitness>,
}

/// Borel-fixedness by the elementary-move criterion on minimal generators
/// (the characteristic-zero criterion). On failure the first escaping
/// generator and move, in canonical generator order, are returned.
pub fn is_borel_fixed(ideal: &MonomialIdeal) -> BorelReport {
    let r = ideal.num_vars();
    for g in ideal.gens() {
        for k in 1..r {
            let mv = ElementaryMove { k };
            if let Some(image) = mv.apply(g) {
                if !ideal.contains(&image) {
                    return BorelReport {
                        fixed: false,
                        witness: Some(BorelWitness {
                            generator: g.clone(),
                            mv,
                            image,
                        }),
                    };
                }
            }
        }
    }
    BorelReport {
        fixed: true,
        witness: None,
    }
}
