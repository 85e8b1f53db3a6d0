use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::ExponentVector;
use crate::error::{Error, Result};

/// A monomial order on exponent vectors. Variable `0` is the largest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    GrLex,
    /// Graded reverse lexicographic order.
    #[default]
    GrevLex,
}

impl MonomialOrder {
    /// Compares two exponent vectors of equal length.
    pub fn cmp(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Lex => lex(a.exps(), b.exps()),
            MonomialOrder::GrLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| lex(a.exps(), b.exps())),
            MonomialOrder::GrevLex => a.degree().cmp(&b.degree()).then_with(|| {
                // a > b iff the last nonzero entry of a - b is negative
                for (x, y) in a.exps().iter().zip(b.exps()).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::GrLex => "grlex",
            MonomialOrder::GrevLex => "grevlex",
        }
    }

    pub const ALL: [MonomialOrder; 3] =
        [MonomialOrder::Lex, MonomialOrder::GrLex, MonomialOrder::GrevLex];
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return x.cmp(y);
        }
    }
    Ordering::Equal
}

/// Checked comparison: rejects exponent vectors of different lengths.
pub fn compare(order: MonomialOrder, a: &ExponentVector, b: &ExponentVector) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    Ok(order.cmp(a, b))
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "lex" => Ok(MonomialOrder::Lex),
            "grlex" => Ok(MonomialOrder::GrLex),
            "grevlex" | "revlex" => Ok(MonomialOrder::GrevLex),
            other => Err(Error::InvalidInput(format!(
                "unknown monomial order `{other}` (expected lex, grlex or grevlex)"
            ))),
        }
    }
}
