//! Monomial ideals and their associated-prime structure.

mod ass;
mod borel;
mod chains;
mod decomposition;
mod ideal;
mod prime;
mod theorem;

pub use ass::{associated_primes, is_equidimensional, AssPrime, AssReport};
pub use borel::{is_borel_fixed, BorelReport, BorelWitness, ElementaryMove};
pub use chains::{saturated_chain_property, ChainEntry, ChainReport};
pub use decomposition::{
    irreducible_decomposition, primary_decomposition, IrreducibleComponent, PrimaryComponent,
};
pub use ideal::{minimal_generators, MonomialIdeal};
pub use prime::VarPrime;
pub use theorem::{check_theorem, Conclusion, Hypotheses, TheoremReport, TheoremStatus};
