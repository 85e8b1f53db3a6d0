//! Gröbner bases, initial ideals, and the associated-prime structure of
//! monomial ideals.
//!
//! The crate is organised bottom-up:
//!
//! * [`poly`]: field scalars, exponent vectors, monomial orders and
//!   canonical multivariate polynomials.
//! * [`groebner`]: multivariate division, S-polynomials, Buchberger's
//!   algorithm, linear coordinate changes and generic initial ideals.
//! * [`monoideal`]: monomial ideals, Borel-fixedness via elementary moves,
//!   colon and socle, irreducible decomposition, associated primes, the
//!   saturated chain property and a checker for the dimension-two theorem on
//!   Borel-fixed initial ideals of primes.
//! * [`textio`]: the polynomial grammar, the ideal file format and the text
//!   and JSON renderings of every report.
//! * [`cli`]: the `monideal` command-line front end.

pub mod cli;
pub mod error;
pub mod groebner;
pub mod monoideal;
pub mod poly;
pub mod textio;

pub use error::{Error, Result};
pub use groebner::{
    buchberger, buchberger_with, gin, gin_with, reduce, s_polynomial, GinOptions, GroebnerBasis,
    GroebnerOptions, IdealGens, LinearChange,
};
pub use monoideal::{
    associated_primes, check_theorem, irreducible_decomposition, is_borel_fixed,
    is_equidimensional, saturated_chain_property, AssReport, ChainReport, ElementaryMove,
    IrreducibleComponent, MonomialIdeal, TheoremReport, VarPrime,
};
pub use poly::{ExponentVector, Field, MonomialOrder, Polynomial, Scalar, VarContext};
