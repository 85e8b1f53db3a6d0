#![allow(dead_code)]

use std::sync::Arc;

use monideal::poly::{ExponentVector, Field, MonomialOrder, Polynomial, VarContext};
use monideal::textio::{parse_monomial, parse_polynomial};
use monideal::{IdealGens, MonomialIdeal};
use rand::Rng;

pub const COUNTEREXAMPLE_VARS: [&str; 7] = ["x", "y", "z", "t", "a", "b", "c"];

pub fn ctx(vars: &[&str]) -> Arc<VarContext> {
    VarContext::new(vars).unwrap()
}

pub fn poly(ctx: &Arc<VarContext>, s: &str, order: MonomialOrder) -> Polynomial {
    parse_polynomial(s, ctx, Field::Rational, order).unwrap()
}

pub fn ideal(ctx: &Arc<VarContext>, gens: &[&str], field: Field, order: MonomialOrder) -> IdealGens {
    IdealGens::new(
        gens.iter()
            .map(|g| parse_polynomial(g, ctx, field, order).unwrap())
            .collect(),
    )
    .unwrap()
}

pub fn monomial_ideal(ctx: &Arc<VarContext>, gens: &[&str]) -> MonomialIdeal {
    MonomialIdeal::new(ctx, gens.iter().map(|g| parse_monomial(g, ctx).unwrap()).collect()).unwrap()
}

/// The substituted toric ideal `<xz - a^2, yz - b^2, z^2 - tz - c^2>`.
pub fn counterexample() -> IdealGens {
    let c = ctx(&COUNTEREXAMPLE_VARS);
    ideal(
        &c,
        &["x*z - a^2", "y*z - b^2", "z^2 - t*z - c^2"],
        Field::Rational,
        MonomialOrder::GrevLex,
    )
}

/// 2x2 minors of the 2 x (r-1) catalecticant
/// `[[x1, ..., x_{r-1}], [x2, ..., x_r]]`: the cone over the rational normal
/// curve of degree r - 1.
pub fn rational_normal_cone(r: usize) -> IdealGens {
    let c = VarContext::indexed("x", r).unwrap();
    let v = |i: usize| Polynomial::var(&c, Field::Rational, MonomialOrder::GrevLex, i);
    let cols = r - 1;
    let mut gens = Vec::new();
    for i in 0..cols {
        for j in i + 1..cols {
            // | v(i)   v(j)   |
            // | v(i+1) v(j+1) |
            gens.push(&(&v(i) * &v(j + 1)) - &(&v(j) * &v(i + 1)));
        }
    }
    IdealGens::new(gens).unwrap()
}

pub fn random_monomial<R: Rng>(rng: &mut R, r: usize, max_exp: u32) -> ExponentVector {
    ExponentVector::new((0..r).map(|_| rng.random_range(0..=max_exp)).collect())
}

/// Random monomial ideal with at most `max_gens` generators, never the unit
/// ideal.
pub fn random_monomial_ideal<R: Rng>(rng: &mut R, max_vars: usize, max_exp: u32, max_gens: usize) -> MonomialIdeal {
    let r = rng.random_range(1..=max_vars);
    let c = VarContext::indexed("x", r).unwrap();
    loop {
        let n = rng.random_range(1..=max_gens);
        let gens: Vec<ExponentVector> = (0..n).map(|_| random_monomial(rng, r, max_exp)).collect();
        if gens.iter().all(|g| !g.is_one()) {
            return MonomialIdeal::new(&c, gens).unwrap();
        }
    }
}

/// Random polynomial of total degree at most `max_deg` with up to
/// `max_terms` terms.
pub fn random_poly<R: Rng>(
    rng: &mut R,
    c: &Arc<VarContext>,
    field: Field,
    order: MonomialOrder,
    max_deg: u32,
    max_terms: usize,
) -> Polynomial {
    let n = rng.random_range(1..=max_terms);
    let terms = (0..n).map(|_| {
        let mut left = rng.random_range(0..=max_deg);
        let exps: Vec<u32> = (0..c.len())
            .map(|_| {
                let e = rng.random_range(0..=left);
                left -= e;
                e
            })
            .collect();
        let coeff = match field {
            Field::Rational => field.from_i64(rng.random_range(-9..=9)),
            Field::Prime(p) => field.from_i64(rng.random_range(0..p) as i64),
        };
        (coeff, ExponentVector::new(exps))
    });
    Polynomial::from_terms(c, field, order, terms).unwrap()
}

/// Associated primes by brute force: `P` is associated iff `(I : m) = P`
/// for some monomial `m` dividing the lcm of the generators.
pub fn ass_oracle(i: &MonomialIdeal) -> Vec<Vec<usize>> {
    let bound = i.lcm_of_gens();
    let r = i.num_vars();
    let mut found = Vec::new();
    let mut m = vec![0u32; r];
    loop {
        let q = i.colon(&ExponentVector::new(m.clone()));
        if q.is_var_prime() {
            let mut vars: Vec<usize> = q.gens().iter().map(|g| g.support().next().unwrap()).collect();
            vars.sort();
            if !found.contains(&vars) {
                found.push(vars);
            }
        }
        // odometer over divisors of the lcm
        let mut k = 0;
        while k < r {
            if m[k] < bound.get(k) {
                m[k] += 1;
                break;
            }
            m[k] = 0;
            k += 1;
        }
        if k == r {
            break;
        }
    }
    found.sort();
    found
}
