use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::context::same_context;
use super::{ExponentVector, Field, MonomialOrder, Scalar, VarContext};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Scalar,
    pub exps: ExponentVector,
}

/// A multivariate polynomial in canonical form: terms strictly decreasing
/// under `order`, no zero coefficients, no repeated monomials.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ctx: Arc<VarContext>,
    field: Field,
    order: MonomialOrder,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && same_context(&self.ctx, &other.ctx)
            && if self.order == other.order {
                self.terms == other.terms
            } else {
                self.terms == other.with_order(self.order).terms
            }
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ctx: &Arc<VarContext>, field: Field, order: MonomialOrder) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            field,
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(ctx: &Arc<VarContext>, field: Field, order: MonomialOrder, c: Scalar) -> Self {
        Self::monomial(ctx, field, order, c, ExponentVector::one(ctx.len()))
    }

    /// The variable at 0-based position `i`.
    pub fn var(ctx: &Arc<VarContext>, field: Field, order: MonomialOrder, i: usize) -> Self {
        Self::monomial(ctx, field, order, field.one(), ExponentVector::var(ctx.len(), i))
    }

    pub fn monomial(
        ctx: &Arc<VarContext>,
        field: Field,
        order: MonomialOrder,
        coeff: Scalar,
        exps: ExponentVector,
    ) -> Self {
        assert_eq!(exps.len(), ctx.len(), "exponent vector length");
        assert_eq!(coeff.field(), field, "scalar field mismatch");
        let terms = if coeff.is_zero() {
            Vec::new()
        } else {
            vec![Term { coeff, exps }]
        };
        Polynomial {
            ctx: ctx.clone(),
            field,
            order,
            terms,
        }
    }

    /// Builds a canonical polynomial from arbitrary terms: sorts, merges
    /// repeated monomials and drops zero coefficients.
    pub fn from_terms(
        ctx: &Arc<VarContext>,
        field: Field,
        order: MonomialOrder,
        terms: impl IntoIterator<Item = (Scalar, ExponentVector)>,
    ) -> Result<Self> {
        let mut raw = Vec::new();
        for (coeff, exps) in terms {
            if exps.len() != ctx.len() {
                return Err(Error::LengthMismatch {
                    expected: ctx.len(),
                    got: exps.len(),
                });
            }
            if coeff.field() != field {
                return Err(Error::FieldMismatch);
            }
            raw.push(Term { coeff, exps });
        }
        Ok(Polynomial {
            ctx: ctx.clone(),
            field,
            order,
            terms: canonicalize(raw, order),
        })
    }

    pub(crate) fn with_sorted_terms(&self, terms: Vec<Term>) -> Self {
        Polynomial {
            ctx: self.ctx.clone(),
            field: self.field,
            order: self.order,
            terms,
        }
    }

    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Re-sorts the terms under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.exps, &a.exps));
        Polynomial {
            ctx: self.ctx.clone(),
            field: self.field,
            order,
            terms,
        }
    }

    /// The largest term under the polynomial's order.
    pub fn leading_term(&self) -> Result<&Term> {
        self.terms.first().ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Result<&ExponentVector> {
        self.leading_term().map(|t| &t.exps)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.exps.degree()).max()
    }

    /// True iff every term has the same total degree. The zero polynomial
    /// counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|t| t.exps.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(t) if t.coeff.is_one() => self.clone(),
            Some(t) => {
                let inv = t.coeff.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ctx, self.field, self.order);
        }
        self.with_sorted_terms(
            self.terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * c,
                    exps: t.exps.clone(),
                })
                .collect(),
        )
    }

    /// `c * x^m * self`; multiplying by a monomial preserves the term order.
    pub fn mul_term(&self, c: &Scalar, m: &ExponentVector) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ctx, self.field, self.order);
        }
        self.with_sorted_terms(
            self.terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * c,
                    exps: t.exps.mul(m),
                })
                .collect(),
        )
    }

    fn compatible(&self, other: &Polynomial) -> Result<()> {
        if !same_context(&self.ctx, &other.ctx) {
            return Err(Error::ContextMismatch);
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.compatible(other)?;
        let other = other.with_order(self.order);
        Ok(self.with_sorted_terms(merge(&self.terms, &other.terms, self.order, false)))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.compatible(other)?;
        let other = other.with_order(self.order);
        Ok(self.with_sorted_terms(merge(&self.terms, &other.terms, self.order, true)))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.compatible(other)?;
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                raw.push(Term {
                    coeff: &a.coeff * &b.coeff,
                    exps: a.exps.mul(&b.exps),
                });
            }
        }
        Ok(self.with_sorted_terms(canonicalize(raw, self.order)))
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::constant(&self.ctx, self.field, self.order, self.field.one());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self - c * x^m * other`, the basic reduction step. Both polynomials
    /// must share context, field and order.
    pub(crate) fn sub_scaled(&self, c: &Scalar, m: &ExponentVector, other: &Polynomial) -> Polynomial {
        let shifted: Vec<Term> = other
            .terms
            .iter()
            .map(|t| Term {
                coeff: &t.coeff * c,
                exps: t.exps.mul(m),
            })
            .collect();
        self.with_sorted_terms(merge(&self.terms, &shifted, self.order, true))
    }
}

/// Merges two sorted term lists; `subtract` negates the right side.
fn merge(a: &[Term], b: &[Term], order: MonomialOrder, subtract: bool) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let rhs = |t: &Term| {
        if subtract {
            Term {
                coeff: -&t.coeff,
                exps: t.exps.clone(),
            }
        } else {
            t.clone()
        }
    };
    while i < a.len() && j < b.len() {
        match order.cmp(&a[i].exps, &b[j].exps) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(rhs(&b[j]));
                j += 1;
            }
            Ordering::Equal => {
                let c = if subtract {
                    &a[i].coeff - &b[j].coeff
                } else {
                    &a[i].coeff + &b[j].coeff
                };
                if !c.is_zero() {
                    out.push(Term {
                        coeff: c,
                        exps: a[i].exps.clone(),
                    });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(rhs));
    out
}

fn canonicalize(mut raw: Vec<Term>, order: MonomialOrder) -> Vec<Term> {
    raw.sort_by(|a, b| order.cmp(&b.exps, &a.exps));
    let mut out: Vec<Term> = Vec::with_capacity(raw.len());
    for t in raw {
        match out.last_mut() {
            Some(last) if last.exps == t.exps => {
                last.coeff = &last.coeff + &t.coeff;
            }
            _ => {
                if let Some(last) = out.last() {
                    if last.coeff.is_zero() {
                        out.pop();
                    }
                }
                out.push(t);
            }
        }
    }
    if out.last().is_some_and(|t| t.coeff.is_zero()) {
        out.pop();
    }
    out
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("incompatible polynomials")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("incompatible polynomials")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("incompatible polynomials")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&-&self.field.one())
    }
}

impl fmt::Display for Polynomial {
    /// Terms in decreasing order, e.g. `z^2 - t*z - c^2` or `1/2*x + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let abs = if neg { -&t.coeff } else { t.coeff.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if t.exps.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", t.exps.display(&self.ctx))?;
            } else {
                write!(f, "{abs}*{}", t.exps.display(&self.ctx))?;
            }
        }
        Ok(())
    }
}
