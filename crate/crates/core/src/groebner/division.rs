use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, Polynomial};

/// Quotients and remainder of multivariate division:
/// `f = sum(quotients[i] * divisors[i]) + remainder`.
#[derive(Debug, Clone)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

fn prepare(f: &Polynomial, divisors: &[Polynomial], order: MonomialOrder) -> Result<Vec<Polynomial>> {
    divisors
        .iter()
        .map(|g| {
            if g.context().as_ref() != f.context().as_ref() {
                return Err(Error::ContextMismatch);
            }
            if g.field() != f.field() {
                return Err(Error::FieldMismatch);
            }
            if g.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
            Ok(g.with_order(order))
        })
        .collect()
}

fn run(
    f: &Polynomial,
    divisors: &[Polynomial],
    order: MonomialOrder,
    track: bool,
) -> Result<Division> {
    let divisors = prepare(f, divisors, order)?;
    let zero = Polynomial::zero(f.context(), f.field(), order);
    let mut quotients = if track {
        vec![zero.clone(); divisors.len()]
    } else {
        Vec::new()
    };
    let mut p = f.with_order(order);
    let mut remainder = Vec::new();
    while let Some(lt) = p.terms().first() {
        let hit = divisors.iter().enumerate().find_map(|(i, g)| {
            let lg = g.leading_term().expect("nonzero divisor");
            lt.exps.checked_div(&lg.exps).map(|m| (i, m, lg))
        });
        match hit {
            Some((i, m, lg)) => {
                let c = &lt.coeff * &lg.coeff.inv().expect("nonzero leading coefficient");
                if track {
                    let q = Polynomial::monomial(f.context(), f.field(), order, c.clone(), m.clone());
                    quotients[i] = &quotients[i] + &q;
                }
                p = p.sub_scaled(&c, &m, &divisors[i]);
            }
            None => {
                // the leading term is irreducible: move it to the remainder
                remainder.push(lt.clone());
                p = p.with_sorted_terms(p.terms()[1..].to_vec());
            }
        }
    }
    Ok(Division {
        quotients,
        remainder: zero.with_sorted_terms(remainder),
    })
}

/// Full multivariate division of `f` by `divisors`, recording quotients.
pub fn divide(f: &Polynomial, divisors: &[Polynomial], order: MonomialOrder) -> Result<Division> {
    run(f, divisors, order, true)
}

/// Normal form of `f`: no term of the result is divisible by a leading
/// monomial of `divisors`, and `f - result` lies in the ideal they generate.
pub fn reduce(f: &Polynomial, divisors: &[Polynomial], order: MonomialOrder) -> Result<Polynomial> {
    run(f, divisors, order, false).map(|d| d.remainder)
}

/// `(L / lt(f)) * f - (L / lt(g)) * g` with `L` the lcm of the leading
/// monomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: MonomialOrder) -> Result<Polynomial> {
    if f.context().as_ref() != g.context().as_ref() {
        return Err(Error::ContextMismatch);
    }
    if f.field() != g.field() {
        return Err(Error::FieldMismatch);
    }
    let f = f.with_order(order);
    let g = g.with_order(order);
    let lf = f.leading_term()?;
    let lg = g.leading_term()?;
    let lcm = lf.exps.lcm(&lg.exps);
    let mf = lcm.checked_div(&lf.exps).expect("lcm divisible");
    let mg = lcm.checked_div(&lg.exps).expect("lcm divisible");
    let cf = lf.coeff.inv().expect("nonzero");
    let cg = lg.coeff.inv().expect("nonzero");
    let left = f.mul_term(&cf, &mf);
    Ok(left.sub_scaled(&cg, &mg, &g))
}
