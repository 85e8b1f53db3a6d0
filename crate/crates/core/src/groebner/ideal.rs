use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{Field, MonomialOrder, Polynomial, VarContext};

/// A nonempty list of nonzero generators sharing one context and field.
#[derive(Debug, Clone, PartialEq)]
pub struct IdealGens {
    ctx: Arc<VarContext>,
    field: Field,
    gens: Vec<Polynomial>,
}

impl IdealGens {
    pub fn new(gens: Vec<Polynomial>) -> Result<Self> {
        let first = gens
            .first()
            .ok_or_else(|| Error::InvalidInput("an ideal needs at least one generator".into()))?;
        let ctx = first.context().clone();
        let field = first.field();
        for g in &gens {
            if g.context().as_ref() != ctx.as_ref() {
                return Err(Error::ContextMismatch);
            }
            if g.field() != field {
                return Err(Error::FieldMismatch);
            }
            if g.is_zero() {
                return Err(Error::InvalidInput("generators must be nonzero".into()));
            }
        }
        Ok(IdealGens { ctx, field, gens })
    }

    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// True iff every generator is homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }

    /// True iff every generator is a single term.
    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.len() == 1)
    }

    pub fn with_order(&self, order: MonomialOrder) -> IdealGens {
        IdealGens {
            ctx: self.ctx.clone(),
            field: self.field,
            gens: self.gens.iter().map(|g| g.with_order(order)).collect(),
        }
    }
}
