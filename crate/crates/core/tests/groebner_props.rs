mod common;

use common::*;
use monideal::groebner::is_groebner_basis;
use monideal::poly::{Field, MonomialOrder, Polynomial};
use monideal::{buchberger, is_borel_fixed, reduce, s_polynomial, IdealGens, LinearChange, VarContext};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const P: u64 = 32003;

fn random_gens(rng: &mut ChaCha8Rng, r: usize, field: Field, order: MonomialOrder) -> Vec<Polynomial> {
    let c = VarContext::indexed("x", r).unwrap();
    let n = rng.random_range(1..=3);
    (0..n)
        .map(|_| loop {
            let p = random_poly(rng, &c, field, order, 3, 4);
            if !p.is_zero() {
                break p;
            }
        })
        .collect()
}

fn order_strategy() -> impl Strategy<Value = MonomialOrder> {
    prop::sample::select(MonomialOrder::ALL.to_vec())
}

fn random_change(rng: &mut ChaCha8Rng, field: Field, r: usize, lower_unit: bool) -> LinearChange {
    loop {
        let rows: Vec<Vec<i64>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| match (lower_unit, i.cmp(&j)) {
                        (true, std::cmp::Ordering::Less) => 0,
                        (true, std::cmp::Ordering::Equal) => 1,
                        _ => rng.random_range(-5..=5),
                    })
                    .collect()
            })
            .collect();
        if let Ok(g) = LinearChange::from_i64(field, &rows) {
            return g;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reduced_basis_is_independent_of_generator_order(seed in any::<u64>(), r in 1usize..=3, order in order_strategy()) {
        let field = Field::prime(P).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gens = random_gens(&mut rng, r, field, order);
        let mut shuffled = gens.clone();
        shuffled.reverse();
        shuffled.rotate_left(seed as usize % gens.len());
        let a = buchberger(&IdealGens::new(gens).unwrap(), order).unwrap();
        let b = buchberger(&IdealGens::new(shuffled).unwrap(), order).unwrap();
        prop_assert_eq!(a.gens(), b.gens());
    }

    #[test]
    fn basis_is_reduced_monic_and_closed_under_s_pairs(seed in any::<u64>(), r in 1usize..=3, order in order_strategy()) {
        let field = Field::prime(P).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gens = random_gens(&mut rng, r, field, order);
        let gb = buchberger(&IdealGens::new(gens.clone()).unwrap(), order).unwrap();
        let basis = gb.gens();
        for (i, f) in basis.iter().enumerate() {
            prop_assert!(f.leading_term().unwrap().coeff.is_one());
            for g in &basis[i + 1..] {
                let s = s_polynomial(f, g, order).unwrap();
                prop_assert!(reduce(&s, basis, order).unwrap().is_zero());
            }
            // no term of f is divisible by another leading monomial
            for (k, g) in basis.iter().enumerate() {
                if k != i {
                    let lm = g.leading_monomial().unwrap();
                    prop_assert!(f.terms().iter().all(|t| !lm.divides(&t.exps)));
                }
            }
        }
        for w in basis.windows(2) {
            prop_assert_eq!(
                order.cmp(w[0].leading_monomial().unwrap(), w[1].leading_monomial().unwrap()),
                std::cmp::Ordering::Greater
            );
        }
        prop_assert!(is_groebner_basis(basis, order).unwrap());
        let initial = gb.initial_ideal();
        for g in &gens {
            prop_assert!(gb.contains(g).unwrap());
            prop_assert!(initial.contains(g.leading_monomial().unwrap()));
        }
    }

    #[test]
    fn rational_bases_are_monic(seed in any::<u64>(), order in order_strategy()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = VarContext::indexed("x", 2).unwrap();
        let q = Field::Rational;
        let gens: Vec<Polynomial> = (0..2)
            .map(|_| loop {
                let terms = (0..3).map(|_| (q.from_i64(rng.random_range(-1..=1)), random_monomial(&mut rng, 2, 2)));
                let p = Polynomial::from_terms(&c, q, order, terms).unwrap();
                if !p.is_zero() {
                    break p;
                }
            })
            .collect();
        let a = buchberger(&IdealGens::new(gens).unwrap(), order).unwrap();
        for g in a.gens() {
            prop_assert!(g.leading_term().unwrap().coeff.is_one());
        }
    }

    #[test]
    fn linear_changes_compose_in_row_convention(seed in any::<u64>(), r in 1usize..=3) {
        let field = Field::prime(P).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_change(&mut rng, field, r, false);
        let h = random_change(&mut rng, field, r, false);
        let c = VarContext::indexed("x", r).unwrap();
        let f = random_poly(&mut rng, &c, field, MonomialOrder::GrevLex, 3, 4);
        let lhs = g.apply(&h.apply(&f).unwrap()).unwrap();
        let rhs = h.compose(&g).unwrap().apply(&f).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lower_unitriangular_changes_fix_borel_initial_ideals(seed in any::<u64>()) {
        let field = Field::Rational;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let i = loop {
            let cand = random_monomial_ideal(&mut rng, 3, 2, 3);
            if !cand.is_zero() && is_borel_fixed(&cand).fixed {
                break cand;
            }
        };
        let c = i.context().clone();
        let order = MonomialOrder::GrevLex;
        let gens: Vec<Polynomial> = i
            .gens()
            .iter()
            .map(|m| Polynomial::monomial(&c, field, order, field.one(), m.clone()))
            .collect();
        let g = random_change(&mut rng, field, c.len(), true);
        prop_assert!(g.is_lower_triangular());
        let moved = g.apply_ideal(&IdealGens::new(gens).unwrap()).unwrap();
        let gb = buchberger(&moved, order).unwrap();
        prop_assert_eq!(gb.initial_ideal(), i);
    }
}

#[test]
fn known_bases() {
    let c = ctx(&["x", "y"]);
    let i = ideal(&c, &["x^2 - y", "x*y - 1"], Field::Rational, MonomialOrder::Lex);
    let gb = buchberger(&i, MonomialOrder::Lex).unwrap();
    let shown: Vec<String> = gb.gens().iter().map(|g| g.to_string()).collect();
    assert_eq!(shown, ["x - y^2", "y^3 - 1"]);

    let c = ctx(&["x", "y", "z"]);
    let twisted = ideal(&c, &["y - x^2", "z - x^3"], Field::Rational, MonomialOrder::GrevLex);
    let gb = buchberger(&twisted, MonomialOrder::GrevLex).unwrap();
    let shown: Vec<String> = gb.gens().iter().map(|g| g.to_string()).collect();
    assert_eq!(shown, ["x^2 - y", "x*y - z", "y^2 - x*z"]);
}

#[test]
fn rational_normal_cone_initial_ideals() {
    for r in 3..=5 {
        let gb = buchberger(&rational_normal_cone(r), MonomialOrder::GrevLex).unwrap();
        let n = r - 1;
        // number of 2x2 minors of a 2 x (n) catalecticant
        assert_eq!(gb.gens().len(), n * (n - 1) / 2, "r = {r}");
    }
}
