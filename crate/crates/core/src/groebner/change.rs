use std::collections::HashMap;

use super::IdealGens;
use crate::error::{Error, Result};
use crate::poly::{Field, Polynomial, Scalar};

/// An invertible linear change of coordinates acting by
/// `x_i -> sum_j g[i][j] * x_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearChange {
    field: Field,
    rows: Vec<Vec<Scalar>>,
}

impl LinearChange {
    /// Rejects non-square and singular matrices.
    pub fn new(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::MatrixShape { expected: n.max(1) });
        }
        if rows.iter().flatten().any(|c| c.field() != field) {
            return Err(Error::FieldMismatch);
        }
        if determinant(field, &rows).is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(LinearChange { field, rows })
    }

    pub fn from_i64(field: Field, rows: &[Vec<i64>]) -> Result<Self> {
        LinearChange::new(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn identity(field: Field, r: usize) -> Self {
        let rows = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| if i == j { field.one() } else { field.zero() })
                    .collect()
            })
            .collect();
        LinearChange { field, rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.rows[i][j]
    }

    /// Membership in the Borel subgroup: `g[i][j] = 0` for `j > i`.
    pub fn is_lower_triangular(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, row)| row[i + 1..].iter().all(Scalar::is_zero))
    }

    /// Matrix product `self * other`.
    pub fn compose(&self, other: &LinearChange) -> Result<LinearChange> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let n = self.dim();
        if other.dim() != n {
            return Err(Error::MatrixShape { expected: n });
        }
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(self.field.zero(), |acc, k| {
                            &acc + &(&self.rows[i][k] * &other.rows[k][j])
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(LinearChange {
            field: self.field,
            rows,
        })
    }

    fn check(&self, f: &Polynomial) -> Result<()> {
        if f.context().len() != self.dim() {
            return Err(Error::MatrixShape {
                expected: f.context().len(),
            });
        }
        if f.field() != self.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    /// Substitutes `g(x_i)` for every variable and recanonicalizes.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        self.check(f)?;
        let mut powers = PowerCache::new(self, f);
        let mut acc = Polynomial::zero(f.context(), f.field(), f.order());
        for t in f.terms() {
            let mut image = Polynomial::constant(f.context(), f.field(), f.order(), t.coeff.clone());
            for (i, &e) in t.exps.exps().iter().enumerate() {
                if e > 0 {
                    image = &image * powers.get(i, e);
                }
            }
            acc = &acc + &image;
        }
        Ok(acc)
    }

    pub fn apply_ideal(&self, ideal: &IdealGens) -> Result<IdealGens> {
        IdealGens::new(
            ideal
                .gens()
                .iter()
                .map(|g| self.apply(g))
                .collect::<Result<_>>()?,
        )
    }
}

struct PowerCache<'a> {
    change: &'a LinearChange,
    template: &'a Polynomial,
    cache: HashMap<(usize, u32), Polynomial>,
}

impl<'a> PowerCache<'a> {
    fn new(change: &'a LinearChange, template: &'a Polynomial) -> Self {
        PowerCache {
            change,
            template,
            cache: HashMap::new(),
        }
    }

    fn get(&mut self, i: usize, e: u32) -> &Polynomial {
        if !self.cache.contains_key(&(i, e)) {
            let p = if e == 1 {
                self.linear_form(i)
            } else {
                let prev = self.get(i, e - 1).clone();
                let lin = self.get(i, 1).clone();
                &prev * &lin
            };
            self.cache.insert((i, e), p);
        }
        &self.cache[&(i, e)]
    }

    fn linear_form(&self, i: usize) -> Polynomial {
        let f = self.template;
        let terms = self.change.rows[i]
            .iter()
            .enumerate()
            .map(|(j, c)| (c.clone(), crate::poly::ExponentVector::var(f.context().len(), j)));
        Polynomial::from_terms(f.context(), f.field(), f.order(), terms).expect("valid linear form")
    }
}

fn determinant(field: Field, rows: &[Vec<Scalar>]) -> Scalar {
    let n = rows.len();
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let mut det = field.one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return field.zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -&det;
        }
        det = &det * &m[col][col];
        let inv = m[col][col].inv().expect("nonzero pivot");
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] * &inv;
            let (top, bottom) = m.split_at_mut(r);
            for (dst, src) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *dst = &*dst - &(&factor * src);
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{MonomialOrder, VarContext};
    use crate::textio::parse_polynomial;

    #[test]
    fn substitution_from_the_toric_ideal() {
        let ctx = VarContext::new(&["x", "y", "z", "t", "a", "b", "c"]).unwrap();
        let k = Field::Rational;
        let o = MonomialOrder::GrevLex;
        let mut rows: Vec<Vec<i64>> = (0..7)
            .map(|i| (0..7).map(|j| i64::from(i == j)).collect())
            .collect();
        // t -> z - t
        rows[3][2] = 1;
        rows[3][3] = -1;
        let g = LinearChange::from_i64(k, &rows).unwrap();
        let f = parse_polynomial("t*z - c^2", &ctx, k, o).unwrap();
        let expected = parse_polynomial("z^2 - t*z - c^2", &ctx, k, o).unwrap();
        assert_eq!(g.apply(&f).unwrap(), expected);
        // z is larger than t, so the change is lower triangular
        assert!(g.is_lower_triangular());
    }

    #[test]
    fn identity_and_permutation() {
        let ctx = VarContext::new(&["x", "y"]).unwrap();
        let k = Field::Rational;
        let o = MonomialOrder::Lex;
        let f = parse_polynomial("x^2*y - 3*y + 1", &ctx, k, o).unwrap();
        assert_eq!(LinearChange::identity(k, 2).apply(&f).unwrap(), f);
        let swap = LinearChange::from_i64(k, &[vec![0, 1], vec![1, 0]]).unwrap();
        let x = parse_polynomial("x", &ctx, k, o).unwrap();
        assert_eq!(swap.apply(&x).unwrap().to_string(), "y");
    }

    #[test]
    fn singular_and_misshapen_rejected() {
        let k = Field::Rational;
        assert!(matches!(
            LinearChange::from_i64(k, &[vec![1, 2], vec![2, 4]]),
            Err(Error::SingularMatrix)
        ));
        assert!(matches!(
            LinearChange::from_i64(k, &[vec![1, 2]]),
            Err(Error::MatrixShape { .. })
        ));
        let fp = Field::prime(3).unwrap();
        // det = 3 = 0 mod 3
        assert!(LinearChange::from_i64(fp, &[vec![1, 1], vec![1, 4]]).is_err());
    }

    #[test]
    fn lower_triangular_predicate() {
        let k = Field::Rational;
        let g = LinearChange::from_i64(k, &[vec![1, 0], vec![5, 1]]).unwrap();
        assert!(g.is_lower_triangular());
    }
}
