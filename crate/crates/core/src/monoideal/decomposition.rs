use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use super::{minimal_generators, MonomialIdeal, VarPrime};
use crate::error::{Error, Result};
use crate::poly::{ExponentVector, VarContext};

/// An irreducible monomial ideal `(x_i^{a_i} : i in support)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrreducibleComponent {
    powers: BTreeMap<usize, u32>,
}

impl IrreducibleComponent {
    /// Positions and exponents; exponents must be at least 1.
    pub fn new(powers: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let powers: BTreeMap<usize, u32> = powers.into_iter().collect();
        assert!(!powers.is_empty(), "empty irreducible component");
        assert!(powers.values().all(|&a| a >= 1), "component exponents must be >= 1");
        IrreducibleComponent { powers }
    }

    pub fn powers(&self) -> &BTreeMap<usize, u32> {
        &self.powers
    }

    pub fn radical(&self) -> VarPrime {
        VarPrime::new(self.powers.keys().copied().collect())
    }

    pub fn to_ideal(&self, ctx: &Arc<VarContext>) -> MonomialIdeal {
        let gens = self
            .powers
            .iter()
            .map(|(&i, &a)| {
                let mut e = vec![0; ctx.len()];
                e[i] = a;
                ExponentVector::new(e)
            })
            .collect();
        MonomialIdeal::new(ctx, gens).expect("positions fit the context")
    }

    /// `self ⊆ other` as ideals.
    pub fn is_subset(&self, other: &IrreducibleComponent) -> bool {
        self.powers
            .iter()
            .all(|(i, &b)| other.powers.get(i).is_some_and(|&a| a <= b))
    }

    /// Renders as `(t, z, a^2)`.
    pub fn display<'a>(&'a self, ctx: &'a VarContext) -> impl fmt::Display + 'a {
        ComponentDisplay { comp: self, ctx }
    }

    fn sort_key(&self) -> (VarPrime, Vec<u32>) {
        (self.radical(), self.powers.values().copied().collect())
    }
}

struct ComponentDisplay<'a> {
    comp: &'a IrreducibleComponent,
    ctx: &'a VarContext,
}

impl fmt::Display for ComponentDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (n, (&i, &a)) in self.comp.powers.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.ctx.name(i))?;
            if a > 1 {
                write!(f, "^{a}")?;
            }
        }
        write!(f, ")")
    }
}

/// The unique irredundant decomposition of a proper nonzero monomial ideal
/// into irreducible components, sorted by radical (codimension first) and
/// then by exponents.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    ideal.require_proper()?;
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let mut memo = HashMap::new();
    let all = split(ideal.gens().to_vec(), &mut memo);
    let mut comps: Vec<IrreducibleComponent> = Vec::new();
    for c in &all {
        // keep only inclusion-minimal components; ties keep the first copy
        let dominated = all.iter().any(|d| d != c && d.is_subset(c));
        if !dominated && !comps.contains(c) {
            comps.push(c.clone());
        }
    }
    comps.sort_by_key(IrreducibleComponent::sort_key);
    Ok(comps)
}

/// Splits on the first generator (canonical order) whose support has at
/// least two variables: `I + (x_i^a * rest) = (I + x_i^a) ∩ (I + rest)`.
fn split(
    gens: Vec<ExponentVector>,
    memo: &mut HashMap<Vec<ExponentVector>, Vec<IrreducibleComponent>>,
) -> Vec<IrreducibleComponent> {
    if let Some(hit) = memo.get(&gens) {
        return hit.clone();
    }
    let mixed = gens.iter().find(|g| g.support().nth(1).is_some()).cloned();
    let result = match mixed {
        None => vec![IrreducibleComponent::new(gens.iter().map(|g| {
            let i = g.support().next().expect("proper ideal has no unit generator");
            (i, g.get(i))
        }))],
        Some(m) => {
            let i = m.support().next().expect("nonempty support");
            let mut pure = vec![0; m.len()];
            pure[i] = m.get(i);
            let pure = ExponentVector::new(pure);
            let rest = m.checked_div(&pure).expect("pure power divides");
            let mut left = gens.clone();
            left.push(pure);
            let mut right = gens.clone();
            right.push(rest);
            let mut out = split(minimal_generators(left), memo);
            out.extend(split(minimal_generators(right), memo));
            out
        }
    };
    memo.insert(gens, result.clone());
    result
}

/// Components grouped by radical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimaryComponent {
    pub radical: VarPrime,
    /// The irreducible components with this radical.
    pub irreducible: Vec<IrreducibleComponent>,
    /// Their intersection, present when merging was requested.
    pub merged: Option<MonomialIdeal>,
}

/// Primary decomposition obtained by grouping the irreducible components by
/// radical. With `merge`, each group is also intersected into a single
/// primary ideal.
pub fn primary_decomposition(ideal: &MonomialIdeal, merge: bool) -> Result<Vec<PrimaryComponent>> {
    let comps = irreducible_decomposition(ideal)?;
    let mut groups: BTreeMap<VarPrime, Vec<IrreducibleComponent>> = BTreeMap::new();
    for c in comps {
        groups.entry(c.radical()).or_default().push(c);
    }
    let ctx = ideal.context();
    groups
        .into_iter()
        .map(|(radical, irreducible)| {
            let merged = if merge {
                let mut acc = irreducible[0].to_ideal(ctx);
                for c in &irreducible[1..] {
                    acc = acc.intersect(&c.to_ideal(ctx))?;
                }
                Some(acc)
            } else {
                None
            };
            Ok(PrimaryComponent {
                radical,
                irreducible,
                merged,
            })
        })
        .collect()
}
