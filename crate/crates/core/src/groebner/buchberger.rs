use std::collections::HashSet;

use super::division::{reduce, s_polynomial};
use super::IdealGens;
use crate::error::{Error, ResourceLimit, Result};
use crate::monoideal::MonomialIdeal;
use crate::poly::{ExponentVector, MonomialOrder, Polynomial};

/// Safety caps for Buchberger's algorithm. `None` means unlimited.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GroebnerOptions {
    /// Maximum number of critical pairs taken off the queue.
    pub max_pairs: Option<usize>,
    /// Maximum total degree of a new basis element.
    pub max_degree: Option<u32>,
}

/// A Gröbner basis under a fixed order. Bases produced by [`buchberger`] are
/// reduced: monic, sorted by decreasing leading monomial, and no term of a
/// member is divisible by the leading monomial of another.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis {
    gens: Vec<Polynomial>,
    order: MonomialOrder,
    reduced: bool,
}

impl GroebnerBasis {
    /// Wraps polynomials already known to form a Gröbner basis; the
    /// S-pair criterion is checked.
    pub fn from_basis(gens: Vec<Polynomial>, order: MonomialOrder) -> Result<Self> {
        let gens: Vec<Polynomial> = gens.iter().map(|g| g.with_order(order)).collect();
        if !is_groebner_basis(&gens, order)? {
            return Err(Error::InvalidInput(
                "polynomials do not form a Gröbner basis".into(),
            ));
        }
        Ok(GroebnerBasis {
            gens,
            order,
            reduced: false,
        })
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Minimal generators of the initial ideal: the leading monomials.
    pub fn initial_ideal(&self) -> MonomialIdeal {
        let ctx = self.gens[0].context();
        MonomialIdeal::new(
            ctx,
            self.gens
                .iter()
                .map(|g| g.leading_monomial().expect("nonzero").clone())
                .collect(),
        )
        .expect("leading monomials share the context")
    }

    /// Ideal membership by the normal-form criterion.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.order() != self.order {
            return Err(Error::OrderMismatch);
        }
        Ok(reduce(f, &self.gens, self.order)?.is_zero())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        reduce(f, &self.gens, self.order)
    }
}

/// Checks Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner_basis(gens: &[Polynomial], order: MonomialOrder) -> Result<bool> {
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let s = s_polynomial(&gens[i], &gens[j], order)?;
            if !reduce(&s, gens, order)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: ExponentVector,
}

/// Reduced Gröbner basis of `ideal` with no resource caps.
pub fn buchberger(ideal: &IdealGens, order: MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with(ideal, order, &GroebnerOptions::default())
}

/// Buchberger's algorithm with the normal selection strategy, the coprime
/// criterion and the chain criterion, followed by full inter-reduction.
pub fn buchberger_with(
    ideal: &IdealGens,
    order: MonomialOrder,
    opts: &GroebnerOptions,
) -> Result<GroebnerBasis> {
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut lms: Vec<ExponentVector> = Vec::new();
    let mut queue: Vec<Pair> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let push = |p: Polynomial,
                    basis: &mut Vec<Polynomial>,
                    lms: &mut Vec<ExponentVector>,
                    queue: &mut Vec<Pair>,
                    pending: &mut HashSet<(usize, usize)>|
     -> Result<()> {
        let p = p.monic();
        if let (Some(cap), Some(d)) = (opts.max_degree, p.total_degree()) {
            if d > cap {
                return Err(Error::Resource(ResourceLimit::Degree(cap)));
            }
        }
        let lm = p.leading_monomial()?.clone();
        let j = basis.len();
        for (i, other) in lms.iter().enumerate() {
            queue.push(Pair {
                i,
                j,
                lcm: other.lcm(&lm),
            });
            pending.insert((i, j));
        }
        basis.push(p);
        lms.push(lm);
        Ok(())
    };

    for g in ideal.gens() {
        let g = g.with_order(order);
        let r = reduce(&g, &basis, order)?;
        if !r.is_zero() {
            push(r, &mut basis, &mut lms, &mut queue, &mut pending)?;
        }
    }

    let mut processed = 0usize;
    while let Some(pos) = select(&queue, order) {
        let Pair { i, j, lcm } = queue.swap_remove(pos);
        pending.remove(&(i, j));
        processed += 1;
        if let Some(cap) = opts.max_pairs {
            if processed > cap {
                return Err(Error::Resource(ResourceLimit::Pairs(cap)));
            }
        }
        if lms[i].is_coprime(&lms[j]) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lms[k].divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order)?;
        let r = reduce(&s, &basis, order)?;
        if !r.is_zero() {
            push(r, &mut basis, &mut lms, &mut queue, &mut pending)?;
        }
    }

    Ok(GroebnerBasis {
        gens: interreduce(basis, order)?,
        order,
        reduced: true,
    })
}

/// Normal strategy: smallest lcm first, ties broken by pair indices so the
/// run is deterministic.
fn select(queue: &[Pair], order: MonomialOrder) -> Option<usize> {
    (0..queue.len()).min_by(|&a, &b| {
        let (p, q) = (&queue[a], &queue[b]);
        order
            .cmp(&p.lcm, &q.lcm)
            .then((p.j, p.i).cmp(&(q.j, q.i)))
    })
}

fn interreduce(basis: Vec<Polynomial>, order: MonomialOrder) -> Result<Vec<Polynomial>> {
    // drop members whose leading monomial is divisible by another's
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial()?;
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            let lh = h.leading_monomial().expect("nonzero");
            k != idx && lh.divides(lm) && (lh != lm || k < idx)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != idx)
            .map(|(_, h)| h.clone())
            .collect();
        let g = &minimal[idx];
        let lt = g.leading_term()?.clone();
        let tail = g.with_sorted_terms(g.terms()[1..].to_vec());
        let tail = reduce(&tail, &others, order)?;
        let lead = Polynomial::monomial(g.context(), g.field(), order, lt.coeff, lt.exps);
        out.push((&lead + &tail).monic());
    }
    out.sort_by(|a, b| {
        order.cmp(
            b.leading_monomial().expect("nonzero"),
            a.leading_monomial().expect("nonzero"),
        )
    });
    Ok(out)
}
