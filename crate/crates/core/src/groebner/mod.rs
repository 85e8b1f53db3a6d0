//! Division, S-polynomials, Buchberger's algorithm, coordinate changes and
//! generic initial ideals.

mod buchberger;
mod change;
mod division;
mod gin;
mod ideal;

pub use buchberger::{
    buchberger, buchberger_with, is_groebner_basis, GroebnerBasis, GroebnerOptions,
};
pub use change::LinearChange;
pub use division::{divide, reduce, s_polynomial, Division};
pub use gin::{gin, gin_with, random_invertible, GinOptions, DEFAULT_ENTRY_BOUND};
pub use ideal::IdealGens;
